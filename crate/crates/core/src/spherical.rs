//! Spherical cyclic motions: the circulant `S` of an admissible curve on the
//! unit sphere.
//!
//! `S` is orthogonal, `det Ṡ = 0` (the derivative components sum to zero on
//! the admissible locus), and the Darboux matrix `Ω = ṠSᵀ` is the circulant
//! `ω·K` with
//!
//! ```text
//!     |  0  1 -1 |
//! K = | -1  0  1 |      ω = ȧ₁a₃ + ȧ₂a₁ + ȧ₃a₂.
//!     |  1 -1  0 |
//! ```
//!
//! The Darboux vector `(Ω_x, Ω_y, Ω_z)` is read with the layout
//! `Ω₁₂ = Ω_z`, `Ω₁₃ = −Ω_y`, `Ω₂₃ = Ω_x`, which gives `ω·(1, 1, 1)`: the motion
//! turns about a fixed axis along `(1, 1, 1)`.

use nalgebra::{Matrix3, Vector3};

use crate::circulant::Circulant3;
use crate::curve::{Curve, SPHERE_TOLERANCE};
use crate::error::{Error, Result};

/// `S` and `Ṡ` at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalFrame {
    pub t: f64,
    pub s: Circulant3,
    pub s_dot: Circulant3,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DarbouxFrame {
    pub t: f64,
    pub s: Circulant3,
    pub s_dot: Circulant3,
    /// `ṠSᵀ`
    pub omega: Matrix3<f64>,
    /// `(Ω_x, Ω_y, Ω_z)`
    pub omega_vec: Vector3<f64>,
    /// `ȧ₁a₃ + ȧ₂a₁ + ȧ₃a₂`
    pub omega_scalar: f64,
}

/// The fixed rotation axis of a spherical cyclic motion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HelicalAxis {
    /// `(1, 1, 1)/√3`
    pub direction: Vector3<f64>,
    /// Largest angle, in radians, between a frame's Darboux vector and the
    /// axis line. Frames with a zero Darboux vector count as 0.
    pub max_deviation: f64,
}

pub fn spherical_frame(curve: &Curve, t: f64) -> Result<SphericalFrame> {
    let [a1, a2, a3] = curve.component_jets(t, 1)?;
    let s = Circulant3::from_components(a1.value(), a2.value(), a3.value());
    let norm = s.row_norm_sq().sqrt();
    if (norm - 1.0).abs() > SPHERE_TOLERANCE {
        return Err(Error::NotSpherical { t, norm });
    }
    let s_dot =
        Circulant3::from_components(a1.derivative(1)?, a2.derivative(1)?, a3.derivative(1)?);
    Ok(SphericalFrame { t, s, s_dot })
}

/// `det Ṡ`, which vanishes for every spherical cyclic motion.
pub fn singularity(curve: &Curve, t: f64) -> Result<f64> {
    Ok(spherical_frame(curve, t)?.s_dot.det())
}

pub fn darboux(curve: &Curve, t: f64) -> Result<DarbouxFrame> {
    Ok(spherical_frame(curve, t)?.darboux())
}

/// Angle between `w` and the line spanned by `(1, 1, 1)`.
pub fn axis_deviation(w: &Vector3<f64>) -> f64 {
    if *w == Vector3::zeros() {
        return 0.0;
    }
    let e = Vector3::repeat(1.0);
    w.cross(&e).norm().atan2(w.dot(&e).abs())
}

pub fn helical_axis(frames: &[DarbouxFrame]) -> HelicalAxis {
    HelicalAxis {
        direction: Vector3::repeat(1.0 / 3f64.sqrt()),
        max_deviation: frames
            .iter()
            .map(|f| axis_deviation(&f.omega_vec))
            .fold(0.0, f64::max),
    }
}

impl SphericalFrame {
    pub fn darboux(&self) -> DarbouxFrame {
        let omega = (self.s_dot * self.s.transpose()).to_dense();
        let omega_vec = Vector3::new(
            (omega[(1, 2)] - omega[(2, 1)]) / 2.0,
            (omega[(2, 0)] - omega[(0, 2)]) / 2.0,
            (omega[(0, 1)] - omega[(1, 0)]) / 2.0,
        );
        let [a1, a2, a3] = *self.s.first_row();
        let [d1, d2, d3] = *self.s_dot.first_row();
        DarbouxFrame {
            t: self.t,
            s: self.s,
            s_dot: self.s_dot,
            omega,
            omega_vec,
            omega_scalar: d1 * a3 + d2 * a1 + d3 * a2,
        }
    }
}

impl DarbouxFrame {
    /// `−(ȧ₁a₂ + ȧ₂a₃ + ȧ₃a₁)`, equal to `omega_scalar` on admissible curves
    /// since the derivative of the cross sum vanishes.
    pub fn omega_scalar_alt(&self) -> f64 {
        let [a1, a2, a3] = *self.s.first_row();
        let [d1, d2, d3] = *self.s_dot.first_row();
        -(d1 * a2 + d2 * a3 + d3 * a1)
    }

    pub fn axis_deviation(&self) -> f64 {
        axis_deviation(&self.omega_vec)
    }
}

/// The skew pattern `K` with `Ω = ω·K`.
pub fn darboux_pattern() -> Matrix3<f64> {
    Matrix3::new(0.0, 1.0, -1.0, -1.0, 0.0, 1.0, 1.0, -1.0, 0.0)
}
