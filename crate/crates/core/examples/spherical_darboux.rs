// Darboux matrix and rotation axis of spherical cyclic motions.
//
//     cargo run --example spherical_darboux

use cyclic_motion::curve::{builtin, circle, sample_points, Branch};
use cyclic_motion::spherical::{darboux, helical_axis, singularity};

fn run() -> Result<(), Box<dyn std::error::Error>> {
    let curve = builtin("ex51")?;
    let at_zero = darboux(&curve, 0.0)?;
    println!("Omega(0) = {}", at_zero.omega);
    println!("Darboux vector at 0 = {:?}", at_zero.omega_vec.as_slice());

    println!(
        "\n{:>6} {:>14} {:>14} {:>12}",
        "t", "omega", "-1/(t^2+t+1)", "det S'"
    );
    for t in sample_points(-3.0, 3.0, 7) {
        let d = darboux(&curve, t)?;
        println!(
            "{t:>6.2} {:>14.10} {:>14.10} {:>12.2e}",
            d.omega_scalar,
            -1.0 / (t * t + t + 1.0),
            d.s_dot.det()
        );
    }

    for (name, c) in [
        ("ex51", curve),
        ("circle_plus", circle(Branch::Plus, 0.4)),
        ("circle_minus", circle(Branch::Minus, 0.4)),
    ] {
        let frames = sample_points(-3.0, 3.0, 101)
            .into_iter()
            .map(|t| darboux(&c, t))
            .collect::<Result<Vec<_>, _>>()?;
        let axis = helical_axis(&frames);
        println!(
            "{name:>12}: axis {:?}, max deviation {:.1e} rad, det S'(1) = {:.1e}, S (1,1,1) = {:+} (1,1,1)",
            axis.direction.as_slice(),
            axis.max_deviation,
            singularity(&c, 1.0)?,
            frames[0].s.row_sum()
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
