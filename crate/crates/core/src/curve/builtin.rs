use std::f64::consts::TAU;

use super::Curve;
use crate::error::{Error, Result};

pub const BUILTIN_NAMES: [&str; 4] = ["ex41", "ex51", "circle_plus", "circle_minus"];

/// The two circles making up `S² ∩ {xy + yz + zx = 0}`.
///
/// Since `2(xy + yz + zx) = (x + y + z)² − (x² + y² + z²)`, a unit vector has
/// vanishing cross sum exactly when `x + y + z = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Center `(1, 1, 1)/3`, plane `x + y + z = 1`.
    Plus,
    /// Center `−(1, 1, 1)/3`, plane `x + y + z = −1`.
    Minus,
}

/// Circle `c + ρ(u cos θ + v sin θ)` with `θ = t + phase`, `ρ = √(2/3)`,
/// `u = (1, −1, 0)/√2`, `v = (1, 1, −2)/√6`.
///
/// The `Minus` branch is the point reflection of the `Plus` branch.
pub fn circle(branch: Branch, phase: f64) -> Curve {
    let arg = if phase == 0.0 {
        "t".to_string()
    } else {
        format!("t + {phase}")
    };
    // ρu = (1, −1, 0)/√3, ρv = (1, 1, −2)/3
    let plus = [
        format!("1/3 + cos({arg})/sqrt(3) + sin({arg})/3"),
        format!("1/3 - cos({arg})/sqrt(3) + sin({arg})/3"),
        format!("1/3 - 2*sin({arg})/3"),
    ];
    let srcs = match branch {
        Branch::Plus => plus,
        Branch::Minus => plus.map(|s| format!("-({s})")),
    };
    Curve::from_strs([&srcs[0], &srcs[1], &srcs[2]], (0.0, TAU)).expect("built-in circle parses")
}

/// Looks up a built-in curve.
///
/// - `ex41`: `(t, 1 − t, t² − t)` on `[−2, 3]` with translation `(t², 0, 0)`.
/// - `ex51`: `(1 + t, −t, t² + t)/(1 + t + t²)` on `[−5, 5]`, no translation.
/// - `circle_plus`, `circle_minus`: see [`circle`], on `[0, 2π]`.
pub fn builtin(name: &str) -> Result<Curve> {
    match name {
        "ex41" => Curve::from_strs(["t", "1 - t", "t^2 - t"], (-2.0, 3.0))?
            .with_translation(["t^2", "0", "0"]),
        "ex51" => Curve::from_strs(
            [
                "(1 + t)/(1 + t + t^2)",
                "-t/(1 + t + t^2)",
                "(t^2 + t)/(1 + t + t^2)",
            ],
            (-5.0, 5.0),
        ),
        "circle_plus" => Ok(circle(Branch::Plus, 0.0)),
        "circle_minus" => Ok(circle(Branch::Minus, 0.0)),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}
