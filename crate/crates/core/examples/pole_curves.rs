// Moving and fixed pole curves of ex41 translated by C(t) = (t, 0, 0).
//
//     cargo run --example pole_curves

use cyclic_motion::curve::{builtin, sample_points};
use cyclic_motion::motion::pole_curves;

fn run() -> Result<(), Box<dyn std::error::Error>> {
    let curve = builtin("ex41")?.with_translation(["t", "0", "0"])?;
    let mut ts = sample_points(0.3, 0.7, 5);
    ts.extend(sample_points(0.8, 1.4, 4));

    println!(
        "{:>5} {:>34} {:>34} {:>9} {:>9}",
        "t", "p", "q", "det B'", "q'-Bp'"
    );
    for s in pole_curves(&curve, &ts) {
        let check = s
            .sliding_check
            .map_or("-".to_string(), |c| format!("{c:.1e}"));
        match s.pole {
            Ok(pole) => println!(
                "{:>5.2} {:>34} {:>34} {:>9.4} {:>9}",
                s.t,
                format!("({:+.5}, {:+.5}, {:+.5})", pole.p.x, pole.p.y, pole.p.z),
                format!("({:+.5}, {:+.5}, {:+.5})", pole.q.x, pole.q.y, pole.q.z),
                s.det_b_dot,
                check
            ),
            Err(e) => println!("{:>5.2} {e}", s.t),
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
