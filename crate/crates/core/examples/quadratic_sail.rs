// Periods of quadratic irrationals and the trace criterion for palindromes.

use palin_cf::sail2d::{check_trace_criterion, expand, find_nonpalindromic, QuadraticSurd};

pub fn run_example() {
    for (p, d, q) in [(0, 2, 1), (1, 5, 2), (0, 3, 1), (1, 13, 2), (0, 19, 1)] {
        let s = QuadraticSurd::new(p, d, q).unwrap();
        let cf = expand(&s);
        let r = check_trace_criterion(&s);
        assert!(!r.trace_in_01 || r.palindromic);
        println!(
            "({p} + √{d})/{q}: preperiod {:?}, period {:?}, Tr = {}, palindromic {}",
            cf.preperiod, cf.period, r.trace, r.palindromic
        );
    }
    let s = find_nonpalindromic(200, 12).unwrap();
    let cf = expand(&s);
    println!(
        "first non-palindromic period: ({} + √{})/{} with period {:?}, Tr = {}",
        s.p,
        s.d,
        s.q,
        cf.period,
        s.trace()
    );
}

#[allow(dead_code)]
fn main() {
    run_example();
}
