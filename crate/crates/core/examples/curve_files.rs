// Reading, validating and sweeping a JSON curve file.
//
//     cargo run --example curve_files

use cyclic_motion::cli::{sweep, Mode, SweepConfig};
use cyclic_motion::curve::{parse_curve, validate};

const DOCUMENT: &str = r#"{
  "components": ["t", "1 - t", "t^2 - t"],
  "translation": ["t", "0", "0"],
  "domain": [-2, 3]
}"#;

fn run() -> Result<(), Box<dyn std::error::Error>> {
    let curve = parse_curve(DOCUMENT)?;
    println!("{}\n", validate(&curve, 401)?);

    let swapped = parse_curve(r#"{"components": ["t", "t - 1", "t^2 - t"], "domain": [-2, 3]}"#)?;
    println!("{}\n", validate(&swapped, 401)?);

    let config = SweepConfig {
        t0: 0.3,
        t1: 0.7,
        n: 5,
        order: 1,
        out: None,
    };
    let table = sweep(&curve, &config, Mode::Pole)?;
    print!("{}", table.to_csv_string());
    println!("{} of {} rows not ok", table.not_ok, table.rows.len());

    println!("\n{}", curve.to_json());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
