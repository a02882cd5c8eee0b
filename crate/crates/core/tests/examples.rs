//! Every runnable example doubles as a test.

mod exact_linear_algebra {
    include!("../examples/exact_linear_algebra.rs");

    #[test]
    fn runs() {
        run_example();
    }
}

mod lattice_points {
    include!("../examples/lattice_points.rs");

    #[test]
    fn runs() {
        run_example();
    }
}

mod period_field {
    include!("../examples/period_field.rs");

    #[test]
    fn runs() {
        run_example();
    }
}

mod symmetry_check {
    include!("../examples/symmetry_check.rs");

    #[test]
    fn runs() {
        run_example();
    }
}

mod construct_palindromic {
    include!("../examples/construct_palindromic.rs");

    #[test]
    fn runs() {
        run_example();
    }
}

mod class_examples {
    include!("../examples/class_examples.rs");

    #[test]
    fn runs() {
        run_example();
    }
}

mod classify_quartic {
    include!("../examples/classify_quartic.rs");

    #[test]
    fn runs() {
        run_example();
    }
}

mod quadratic_sail {
    include!("../examples/quadratic_sail.rs");

    #[test]
    fn runs() {
        run_example();
    }
}
