mod common;

use cyclic_motion::jets::{parse_expr, Jet};
use proptest::prelude::*;
use rand::{rngs::StdRng, Rng, SeedableRng};

use common::{derivative_fd, rel_err};

const EXPRESSIONS: [&str; 6] = [
    "t",
    "1 - t",
    "t^2 - t",
    "(1 + t)/(1 + t + t^2)",
    "-t/(1 + t + t^2)",
    "(t^2 + t)/(1 + t + t^2)",
];

fn worst_fd_error(src: &str, t: f64) -> f64 {
    let expr = parse_expr(src).unwrap();
    let jet = expr.jet(t, 4).unwrap();
    let f = |x: f64| expr.eval(x).unwrap();
    (1..=4)
        .map(|k| rel_err(jet.derivative(k).unwrap(), derivative_fd(&f, t, k, 1.0)))
        .fold(0.0, f64::max)
}

#[test]
fn example_expressions_match_finite_differences() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..50 {
        let t = rng.gen_range(-4.0..4.0);
        for src in EXPRESSIONS {
            let err = worst_fd_error(src, t);
            assert!(err <= 1e-6, "{src} at {t}: {err:e}");
        }
    }
}

#[test]
fn transcendental_expressions_match_finite_differences() {
    let mut rng = StdRng::seed_from_u64(11);
    for src in [
        "sin(t)*sqrt(2 + t^2)",
        "cos(3*t)/(2 + sin(t))",
        "(1 + t^2)^-2",
        "sqrt(1 + cos(t)^2)",
    ] {
        for _ in 0..20 {
            let t = rng.gen_range(-2.0..2.0);
            let err = worst_fd_error(src, t);
            assert!(err <= 1e-6, "{src} at {t}: {err:e}");
        }
    }
}

#[test]
fn plain_evaluator_agrees_with_jet_values() {
    for src in EXPRESSIONS {
        let e = parse_expr(src).unwrap();
        for i in 0..21 {
            let t = -2.0 + 0.2 * i as f64;
            assert!((e.jet(t, 3).unwrap().value() - e.eval(t).unwrap()).abs() <= 1e-15);
        }
    }
}

fn coeffs(order: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-3.0..3.0f64, order + 1)
}

proptest! {
    #[test]
    fn product_is_the_cauchy_product(x in coeffs(4), y in coeffs(4)) {
        let p = Jet::from_coeffs(x.clone()) * Jet::from_coeffs(y.clone());
        for k in 0..=4 {
            let want: f64 = (0..=k).map(|j| x[j] * y[k - j]).sum();
            prop_assert!((p.coeffs()[k] - want).abs() <= 1e-12);
        }
    }

    #[test]
    fn division_inverts_multiplication(x in coeffs(4), y in coeffs(4), shift in 0.5..2.0f64) {
        let mut y = y;
        y[0] = shift;
        let (jx, jy) = (Jet::from_coeffs(x), Jet::from_coeffs(y));
        let back = (&jx * &jy).try_div(&jy).unwrap();
        for (a, b) in back.coeffs().iter().zip(jx.coeffs()) {
            prop_assert!((a - b).abs() <= 1e-9 * (1.0 + b.abs()));
        }
    }

    #[test]
    fn sqrt_squares_back(x in coeffs(4), c0 in 0.2..5.0f64) {
        let mut x = x;
        x[0] = c0;
        let j = Jet::from_coeffs(x);
        let s = j.sqrt().unwrap();
        let sq = &s * &s;
        for (a, b) in sq.coeffs().iter().zip(j.coeffs()) {
            prop_assert!((a - b).abs() <= 1e-10 * (1.0 + b.abs()));
        }
    }

    #[test]
    fn truncation_commutes_with_evaluation(t in -3.0..3.0f64, lo in 0usize..4) {
        let e = parse_expr("sin(t)/(2 + t^2) + sqrt(1 + t^2)").unwrap();
        let high = e.jet(t, 5).unwrap();
        let low = e.jet(t, lo).unwrap();
        prop_assert_eq!(high.truncate(lo), low);
    }

    #[test]
    fn pythagorean_identity(x in coeffs(5)) {
        let j = Jet::from_coeffs(x);
        let (s, c) = j.sin_cos();
        let one = &s * &s + &c * &c;
        prop_assert!((one.coeffs()[0] - 1.0).abs() <= 1e-12);
        for k in 1..=5 {
            prop_assert!(one.coeffs()[k].abs() <= 1e-9);
        }
    }

    #[test]
    fn integer_powers_match_repeated_products(x in coeffs(3), n in 0i32..6) {
        let j = Jet::from_coeffs(x);
        let mut want = Jet::constant(1.0, 3);
        for _ in 0..n {
            want = &want * &j;
        }
        let got = j.powi(n).unwrap();
        for (a, b) in got.coeffs().iter().zip(want.coeffs()) {
            prop_assert!((a - b).abs() <= 1e-9 * (1.0 + b.abs()));
        }
    }
}
