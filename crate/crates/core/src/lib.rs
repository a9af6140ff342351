//! Kinematics of motions generated by 3×3 circulant matrices.
//!
//! A space curve `α(t) = (a₁, a₂, a₃)` whose components satisfy
//! `a₁a₂ + a₂a₃ + a₃a₁ = 0` yields a circulant matrix `B(t)` with first row
//! `α(t)`. Such a `B` factors as `h·A` with `h = ‖α‖` and `A` orthogonal, so
//! `Y = BX + C` is a homothetic motion of space. When `α` lies on the unit
//! sphere the motion is spherical and its Darboux vector stays parallel to
//! `(1, 1, 1)`.
//!
//! Modules, bottom up:
//!
//! - [`jets`]: truncated Taylor arithmetic and the component expression language.
//! - [`circulant`]: closed-form algebra of 3×3 circulants.
//! - [`curve`]: curve files, built-in curves and admissibility checks.
//! - [`motion`]: frames, velocities, pole points and acceleration centers.
//! - [`spherical`]: Darboux frames and the fixed helical axis.
//! - [`cli`]: the `cyclic` command-line front end.

pub mod circulant;
pub mod cli;
pub mod curve;
mod error;
pub mod jets;
pub mod motion;
pub mod spherical;

pub use circulant::{Circulant3, Decomposition};
pub use curve::{AdmissibilityReport, CrossSumStatus, Curve};
pub use error::{Error, Result};
pub use jets::{Expr, Jet};
pub use motion::{MotionFrame, PolePair, VelocityTriple};
pub use spherical::{DarbouxFrame, SphericalFrame};

pub use nalgebra::{Matrix3, Vector3};
