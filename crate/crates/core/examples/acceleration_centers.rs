// Acceleration centers B⁽ʳ⁾X + C⁽ʳ⁾ = 0 of several orders.
//
//     cargo run --example acceleration_centers

use cyclic_motion::curve::{builtin, Curve};
use cyclic_motion::motion::MotionFrame;

fn run() -> Result<(), Box<dyn std::error::Error>> {
    // B'' and C'' of ex41 are constant, so the second-order center is fixed.
    let ex41 = builtin("ex41")?;
    for t in [-1.0, 0.0, 1.5, 3.0] {
        let x = MotionFrame::evaluate(&ex41, t, 2)?.acceleration_center(2)?;
        println!(
            "ex41, r = 2, t = {t:>4}: X = {:?}",
            x.map(|v| v + 0.0).as_slice()
        );
    }

    // A circle scaled by 2 + sin(t): admissible, with B⁽ʳ⁾ regular at most t.
    let curve = Curve::from_strs(
        [
            "(2 + sin(t))*(1/3 + cos(t)/sqrt(3) + sin(t)/3)",
            "(2 + sin(t))*(1/3 - cos(t)/sqrt(3) + sin(t)/3)",
            "(2 + sin(t))*(1/3 - 2*sin(t)/3)",
        ],
        (-3.0, 3.0),
    )?
    .with_translation(["sin(t)", "cos(2*t)", "t^3"])?;
    let f = MotionFrame::evaluate(&curve, 0.8, 4)?;
    for r in 1..=4 {
        match f.acceleration_center(r) {
            Ok(x) => {
                let (residual, _) = f.center_residual(r, &x)?;
                println!(
                    "scaled circle, r = {r}, t = 0.8: X = {:?}, residual {residual:.1e}",
                    x.as_slice()
                );
            }
            Err(e) => println!("scaled circle, r = {r}, t = 0.8: {e}"),
        }
    }
    println!("pole point = {:?}", f.pole_point()?.p.as_slice());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
