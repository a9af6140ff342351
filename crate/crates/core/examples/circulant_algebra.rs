// Closed-form circulant algebra checked against nalgebra's dense routines.
//
//     cargo run --example circulant_algebra

use cyclic_motion::{Circulant3, Vector3};

fn run() -> Result<(), Box<dyn std::error::Error>> {
    let b = Circulant3::from_components(1.0, -1.0, 1.0);
    let c = Circulant3::from_components(0.5, 2.0, -1.5);
    println!("B = {}", b.to_dense());
    println!(
        "det B = {} (dense: {})",
        b.det(),
        b.to_dense().determinant()
    );

    let inv = b.inverse()?;
    println!("B^-1 first row = {:?}", inv.first_row());
    println!(
        "B^-1 (1, 0, 0) = {:?}",
        (inv * Vector3::new(1.0, 0.0, 0.0)).as_slice()
    );

    let bc = b * c;
    println!("BC first row = {:?}", bc.first_row());
    println!(
        "det(BC) = {}, det B det C = {}",
        bc.det(),
        b.det() * c.det()
    );
    println!(
        "(1,1,1) is an eigenvector: B (1,1,1) = {:?}",
        (b * Vector3::repeat(1.0)).as_slice()
    );

    // (2, −1, 2) has a vanishing cross sum, so it splits as h·A.
    let d = Circulant3::from_components(2.0, -1.0, 2.0).decompose()?;
    println!(
        "\n(2, -1, 2) = {} * {:?}, |A^T A - I| = {:e}",
        d.h,
        d.a.first_row(),
        d.a.orthogonality_residual()
    );
    match Circulant3::from_components(1.0, 1.0, 0.0).decompose() {
        Err(e) => println!("(1, 1, 0): {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
