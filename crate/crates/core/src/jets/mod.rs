//! Taylor-jet arithmetic and the expression language used for curve components.
//!
//! A [`Jet`] of order `R` carries the Taylor coefficients `f⁽ᵏ⁾(t₀)/k!` for
//! `k = 0..=R`. Evaluating an [`Expr`] on jets gives every derivative of a
//! curve component up to `R` in a single pass, exact up to rounding.
//!
//! ```
//! use cyclic_motion::jets::{jet_eval, Expr};
//!
//! let h: Expr = "t^2 - t + 1".parse().unwrap();
//! let jet = jet_eval(&h, 2.0, 2).unwrap();
//! assert_eq!(jet.coeffs(), &[3.0, 3.0, 1.0]);
//! assert_eq!(jet.derivative(2).unwrap(), 2.0);
//! ```

mod expr;
mod jet;
mod parser;

pub use expr::{jet_eval, parse_expr, Expr, Func};
pub use jet::Jet;

/// `k!`-scaled coefficient of `jet`; see [`Jet::derivative`].
pub fn derivative(jet: &Jet, k: usize) -> crate::Result<f64> {
    jet.derivative(k)
}
