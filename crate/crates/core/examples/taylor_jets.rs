// Derivatives of a parsed expression through truncated Taylor arithmetic.
//
//     cargo run --example taylor_jets

use cyclic_motion::jets::{jet_eval, parse_expr, Jet};

fn run() -> Result<(), Box<dyn std::error::Error>> {
    let expr = parse_expr("(1 + t)/(1 + t + t^2)")?;
    println!("f(t) = {expr}");
    for t0 in [-1.0, 0.0, 0.5, 2.0] {
        let jet = jet_eval(&expr, t0, 4)?;
        let ds: Vec<String> = jet
            .derivatives()
            .iter()
            .map(|d| format!("{d:+.6}"))
            .collect();
        println!("t = {t0:>4}: f, f', f'', f''', f'''' = {}", ds.join(", "));
    }

    // Jets compose like numbers: sin²(t) + cos²(t) = 1 to every order.
    let t = Jet::variable(0.7, 5);
    let (s, c) = t.sin_cos();
    let one = &s * &s + &c * &c;
    println!("\nsin^2 + cos^2 at 0.7 as a jet: {:?}", one.coeffs());

    let err = parse_expr("t^2.5").unwrap_err();
    println!("\nrejected: {err}");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
