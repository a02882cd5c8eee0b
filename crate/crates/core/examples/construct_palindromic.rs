// Palindromic fractions of every degree 2 … 5, each with a certificate.

use palin_cf::palindrome::construct_palindromic;

pub fn run_example() {
    for n in 2..=5 {
        let cert = construct_palindromic(n, Some(4)).unwrap();
        cert.verify().unwrap();
        let a = cert.a.as_ref().map(|a| a.charpoly().unwrap().to_string());
        println!(
            "n = {n}: p = {}, shift permutation {:?}, Π μ = {}, witness χ_A = {}",
            cert.p,
            cert.report.permutation(),
            cert.report.mu_product,
            a.unwrap_or_else(|| "none within bound".into())
        );
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
