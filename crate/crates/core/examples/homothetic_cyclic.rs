// The homothetic motion generated by α(t) = (t, 1 − t, t² − t).
//
//     cargo run --example homothetic_cyclic

use cyclic_motion::curve::{builtin, sample_points, validate};
use cyclic_motion::motion::MotionFrame;

fn run() -> Result<(), Box<dyn std::error::Error>> {
    let curve = builtin("ex41")?;
    println!("{}\n", validate(&curve, 401)?);

    println!(
        "{:>6} {:>10} {:>12} {:>12} {:>12}",
        "t", "h", "t^2-t+1", "|AtA - I|", "det B'"
    );
    for t in sample_points(-2.0, 3.0, 11) {
        let f = MotionFrame::evaluate(&curve, t, 1)?;
        println!(
            "{t:>6.2} {:>10.6} {:>12.6} {:>12.2e} {:>12.6}",
            f.h,
            t * t - t + 1.0,
            f.a.orthogonality_residual(),
            f.regularity()
        );
    }

    let f = MotionFrame::evaluate(&curve, 1.0, 1)?;
    println!(
        "\nat t = 1: det B' = {}, h^3 det A det(psi + lambda I) = {}",
        f.regularity(),
        f.regularity_factorization()
    );
    println!("psi = A^T A' = {}", f.psi);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
