//! Homothetic motion `Y = B(t)X + C(t)` with `B = hA` the circulant of an
//! admissible curve.
//!
//! A [`MotionFrame`] is the motion at one instant together with every
//! derivative of `B` and `C` up to a chosen order, all taken from a single
//! jet evaluation. Pole points solve `ḂX + Ċ = 0`, the zero of the sliding
//! velocity; acceleration centers of order `r − 1` solve
//! `B⁽ʳ⁾X + C⁽ʳ⁾ = 0`, so order 1 is the pole itself.
//!
//! Vector norms are max-norms and matrix norms the induced ∞-norm.

use nalgebra::{Matrix3, Vector3};

use crate::circulant::{matrix_norm_inf, Circulant3};
use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::jets::Jet;

const ORIGIN_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct MotionFrame {
    pub t: f64,
    /// Highest derivative order carried by the jets.
    pub order: usize,
    /// `B` with each entry expanded to `order`.
    pub b_jets: Circulant3<Jet>,
    pub c_jets: [Jet; 3],
    pub h: f64,
    pub h_dot: f64,
    pub a: Circulant3,
    pub a_dot: Circulant3,
    /// `ḣ / h`
    pub lambda: f64,
    /// `AᵀȦ`, skew-symmetric.
    pub psi: Matrix3<f64>,
}

/// Decomposition `Ẏ = (ḂX + Ċ) + BẊ` of a point's velocity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VelocityTriple {
    pub absolute: Vector3<f64>,
    pub sliding: Vector3<f64>,
    pub relative: Vector3<f64>,
}

/// Pole point in the moving frame (`p`) and its image in the fixed frame (`q`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolePair {
    pub p: Vector3<f64>,
    pub q: Vector3<f64>,
}

impl MotionFrame {
    /// Evaluates the motion of `curve` at `t` with derivatives up to `order`
    /// (at least 1).
    ///
    /// The cross-sum condition is not re-checked here; run
    /// [`crate::curve::validate`] first.
    pub fn evaluate(curve: &Curve, t: f64, order: usize) -> Result<Self> {
        let order = order.max(1);
        let comps = curve.component_jets(t, order)?;
        let c_jets = curve.translation_jets(t, order)?;

        let h_sq = comps
            .iter()
            .fold(Jet::constant(0.0, order), |acc, a| &acc + &(a * a));
        if h_sq.value().sqrt() <= ORIGIN_TOLERANCE {
            return Err(Error::Origin {
                norm: h_sq.value().sqrt(),
            });
        }
        let h_jet = h_sq.sqrt()?;
        let b_jets = Circulant3::new(comps);
        let a_jets = b_jets.try_map(|x| x.try_div(&h_jet))?;

        let a = a_jets.map(Jet::value);
        let a_dot = a_jets.try_map(|x| x.derivative(1))?;
        let (h, h_dot) = (h_jet.value(), h_jet.derivative(1)?);
        let psi = (a.transpose() * a_dot).to_dense();

        Ok(Self {
            t,
            order,
            b_jets,
            c_jets,
            h,
            h_dot,
            a,
            a_dot,
            lambda: h_dot / h,
            psi,
        })
    }

    pub fn b(&self) -> Circulant3 {
        self.b_jets.map(Jet::value)
    }

    pub fn c(&self) -> Vector3<f64> {
        Vector3::from_fn(|i, _| self.c_jets[i].value())
    }

    /// `dʳB/dtʳ`
    pub fn b_derivative(&self, r: usize) -> Result<Circulant3> {
        self.b_jets.try_map(|x| x.derivative(r))
    }

    /// `dʳC/dtʳ`
    pub fn c_derivative(&self, r: usize) -> Result<Vector3<f64>> {
        let [x, y, z] = &self.c_jets;
        Ok(Vector3::new(
            x.derivative(r)?,
            y.derivative(r)?,
            z.derivative(r)?,
        ))
    }

    /// `Y = BX + C`
    pub fn transform_point(&self, x: &Vector3<f64>) -> Vector3<f64> {
        self.b() * x + self.c()
    }

    /// `X = B⁻¹(Y − C)`
    pub fn inverse_transform(&self, y: &Vector3<f64>) -> Result<Vector3<f64>> {
        self.b().solve(&(y - self.c()))
    }

    /// `C′ = −B⁻¹C`, so that `X = B⁻¹Y + C′`.
    pub fn inverse_translation(&self) -> Result<Vector3<f64>> {
        Ok(-self.b().solve(&self.c())?)
    }

    /// `ḂX + Ċ`
    pub fn sliding_velocity(&self, x: &Vector3<f64>) -> Vector3<f64> {
        let b_dot = self.b_jets.map(|j| j.coeffs()[1]);
        let c_dot = Vector3::from_fn(|i, _| self.c_jets[i].coeffs()[1]);
        b_dot * x + c_dot
    }

    pub fn velocities(&self, x: &Vector3<f64>, x_dot: &Vector3<f64>) -> VelocityTriple {
        let sliding = self.sliding_velocity(x);
        let relative = self.b() * x_dot;
        VelocityTriple {
            absolute: sliding + relative,
            sliding,
            relative,
        }
    }

    /// `det Ḃ`; the motion is regular where it is nonzero.
    pub fn regularity(&self) -> f64 {
        self.b_jets.map(|j| j.coeffs()[1]).det()
    }

    /// `h³ · det A · det(ψ + λI)`, which equals `det Ḃ` because
    /// `Ḃ = ḣA + hȦ = B(ψ + λI)`.
    pub fn regularity_factorization(&self) -> f64 {
        self.h.powi(3) * self.a.det() * (self.psi + Matrix3::identity() * self.lambda).determinant()
    }

    /// Solves `B⁽ʳ⁾X + C⁽ʳ⁾ = 0`, the acceleration center of order `r − 1`.
    pub fn acceleration_center(&self, r: usize) -> Result<Vector3<f64>> {
        let b_r = self.b_derivative(r)?;
        let c_r = self.c_derivative(r)?;
        Ok(-b_r.solve(&c_r)?)
    }

    /// `‖B⁽ʳ⁾X + C⁽ʳ⁾‖` together with the scale `‖B⁽ʳ⁾‖‖X‖ + ‖C⁽ʳ⁾‖` it
    /// should be compared against.
    pub fn center_residual(&self, r: usize, x: &Vector3<f64>) -> Result<(f64, f64)> {
        let b_r = self.b_derivative(r)?;
        let c_r = self.c_derivative(r)?;
        let residual = (b_r * x + c_r).amax();
        Ok((residual, b_r.norm_inf() * x.amax() + c_r.amax()))
    }

    /// The unique zero `p` of the sliding velocity and `q = Bp + C`.
    pub fn pole_point(&self) -> Result<PolePair> {
        let p = self.acceleration_center(1).map_err(|e| match e {
            Error::Singular { det } => Error::SingularPole { det },
            other => other,
        })?;
        Ok(PolePair {
            p,
            q: self.transform_point(&p),
        })
    }

    /// `ȦAᵀ`, the Darboux matrix of the orthogonal part.
    pub fn darboux_matrix(&self) -> Matrix3<f64> {
        self.a_dot.to_dense() * self.a.to_dense().transpose()
    }

    /// `‖ψ + ψᵀ‖∞`
    pub fn psi_skew_residual(&self) -> f64 {
        matrix_norm_inf(&(self.psi + self.psi.transpose()))
    }
}

/// One sample of a pole-curve sweep.
#[derive(Debug, Clone)]
pub struct PoleSample {
    pub t: f64,
    pub pole: Result<PolePair>,
    /// `det Ḃ` at `t`, or NaN if the frame could not be evaluated.
    pub det_b_dot: f64,
    /// Relative mismatch between a central-difference `q̇` and `B·ṗ` with `ṗ`
    /// also differenced. Only set at interior samples whose pole and both
    /// stencil neighbours exist.
    pub sliding_check: Option<f64>,
}

fn pole_at(curve: &Curve, t: f64) -> Result<(MotionFrame, PolePair)> {
    let frame = MotionFrame::evaluate(curve, t, 1)?;
    let pole = frame.pole_point()?;
    Ok((frame, pole))
}

/// Samples the moving pole curve `p(t)` and fixed pole curve `q(t)`.
///
/// At interior samples the relation `q̇ = Bṗ` is checked with central
/// differences of step `∛ε · max(1, |t|)` around the sample.
pub fn pole_curves(curve: &Curve, ts: &[f64]) -> Vec<PoleSample> {
    let n = ts.len();
    ts.iter()
        .enumerate()
        .map(|(i, &t)| {
            let frame = MotionFrame::evaluate(curve, t, 1);
            let det_b_dot = frame.as_ref().map_or(f64::NAN, MotionFrame::regularity);
            let (pole, sliding_check) = match frame.and_then(|f| f.pole_point().map(|p| (f, p))) {
                Ok((frame, pole)) => {
                    let check = if i > 0 && i + 1 < n {
                        sliding_check(curve, &frame, t)
                    } else {
                        None
                    };
                    (Ok(pole), check)
                }
                Err(e) => (Err(e), None),
            };
            PoleSample {
                t,
                pole,
                det_b_dot,
                sliding_check,
            }
        })
        .collect()
}

fn sliding_check(curve: &Curve, frame: &MotionFrame, t: f64) -> Option<f64> {
    let step = f64::EPSILON.cbrt() * t.abs().max(1.0);
    let (_, plus) = pole_at(curve, t + step).ok()?;
    let (_, minus) = pole_at(curve, t - step).ok()?;
    let q_dot = (plus.q - minus.q) / (2.0 * step);
    let p_dot = (plus.p - minus.p) / (2.0 * step);
    let predicted = frame.b() * p_dot;
    let scale = q_dot.amax().max(predicted.amax()).max(f64::MIN_POSITIVE);
    Some((q_dot - predicted).amax() / scale)
}
