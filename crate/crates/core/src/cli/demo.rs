use std::io::Write;

use nalgebra::Matrix3;

use super::{fail, io_fail, CmdResult, EXIT_OK};
use crate::circulant::Circulant3;
use crate::curve::builtin;
use crate::error::Error;
use crate::spherical::{darboux, darboux_pattern};

fn fmt_matrix(m: &Matrix3<f64>) -> String {
    let rows: Vec<String> = m
        .row_iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|x| format!("{}", x + 0.0)).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

pub(super) fn run(name: &str, out: &mut dyn Write) -> CmdResult {
    let text = match name {
        "ex41" => homothetic()?,
        "ex51" => spherical()?,
        other => return Err(fail(Error::UnknownName(other.to_string()))),
    };
    out.write_all(text.as_bytes()).map_err(io_fail)?;
    Ok(EXIT_OK)
}

fn homothetic() -> Result<String, (i32, String)> {
    let curve = builtin("ex41").map_err(fail)?;
    let mut s = String::new();
    s.push_str("alpha(t) = (t, 1 - t, t^2 - t), B = circulant(alpha) = h A\n");
    s.push_str("h(t) = |alpha(t)| = t^2 - t + 1\n\n");
    for i in -2..=3 {
        let t = f64::from(i);
        let p = curve.point(t).map_err(fail)?;
        let d = Circulant3::from_components(p.x, p.y, p.z)
            .decompose()
            .map_err(fail)?;
        s.push_str(&format!(
            "h({t}) = {}    t^2 - t + 1 = {}    |A^T A - I| = {:e}\n",
            d.h,
            t * t - t + 1.0,
            d.a.orthogonality_residual()
        ));
    }
    Ok(s)
}

fn spherical() -> Result<String, (i32, String)> {
    let curve = builtin("ex51").map_err(fail)?;
    let mut s = String::new();
    s.push_str("beta(t) = (1 + t, -t, t^2 + t) / (1 + t + t^2), S = circulant(beta)\n\n");
    for i in -2..=2 {
        let t = f64::from(i);
        let p = curve.point(t).map_err(fail)?;
        let sm = Circulant3::from_components(p.x, p.y, p.z);
        s.push_str(&format!(
            "t = {t}: h = {}    |S^T S - I| = {:e}    S (1,1,1) = {} (1,1,1)\n",
            p.norm(),
            sm.orthogonality_residual(),
            sm.row_sum()
        ));
    }
    let d = darboux(&curve, 0.0).map_err(fail)?;
    let omega = d.omega_scalar;
    s.push('\n');
    s.push_str(&format!(
        "Omega(0) = S'(0) S(0)^T = {}\n",
        fmt_matrix(&d.omega)
    ));
    s.push_str(&format!(
        "         = {omega} * {}\n",
        fmt_matrix(&darboux_pattern())
    ));
    s.push_str(&format!(
        "Darboux vector (wx, wy, wz) = ({}, {}, {}) = {omega} * (1, 1, 1)\n",
        d.omega_vec.x + 0.0,
        d.omega_vec.y + 0.0,
        d.omega_vec.z + 0.0
    ));
    s.push_str("omega(t) = -1 / (t^2 + t + 1)\n");
    Ok(s)
}
