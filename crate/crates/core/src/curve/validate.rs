use std::fmt;

use super::poly::{Polynomial, RationalFunction};
use super::Curve;
use crate::circulant::CROSS_SUM_TOLERANCE;
use crate::error::{Error, Result};

/// `|h − 1|` bound for a curve to count as spherical.
pub const SPHERE_TOLERANCE: f64 = 1e-9;

/// Smallest `h` not treated as passing through the origin.
const ORIGIN_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum CrossSumStatus {
    /// The cross sum expands to the zero rational function.
    ExactlyZero,
    /// Sampled cross sum within `1e-9 · max(1, h²)` at every sample.
    NumericallyZero { max_abs: f64 },
    /// The condition fails. `numerator` is the expanded cross-sum numerator
    /// when the components are rational.
    Violated {
        worst_t: f64,
        value: f64,
        numerator: Option<Polynomial>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibilityReport {
    pub cross_sum: CrossSumStatus,
    /// Smallest sampled `h = ‖α(t)‖`.
    pub norm_min: f64,
    /// `h ≡ 1` within [`SPHERE_TOLERANCE`] at every sample.
    pub spherical: bool,
}

impl AdmissibilityReport {
    pub fn is_admissible(&self) -> bool {
        !matches!(self.cross_sum, CrossSumStatus::Violated { .. })
    }
}

impl fmt::Display for CrossSumStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrossSumStatus::ExactlyZero => write!(f, "exactly zero"),
            CrossSumStatus::NumericallyZero { max_abs } => {
                write!(
                    f,
                    "numerically zero (max |a1a2 + a2a3 + a3a1| = {max_abs:e})"
                )
            }
            CrossSumStatus::Violated {
                worst_t,
                value,
                numerator,
            } => {
                write!(f, "violated (value {value:e} at t = {worst_t})")?;
                if let Some(p) = numerator {
                    write!(f, ", numerator {p}")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for AdmissibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "cross_sum: {}, spherical: {}",
            self.cross_sum, self.spherical
        )?;
        write!(f, "norm_min: {}", self.norm_min)
    }
}

/// `n` evenly spaced points covering `[lo, hi]`, endpoints included.
pub fn sample_points(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|i| {
                if i == n - 1 {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

/// Symbolic cross sum `a₁a₂ + a₂a₃ + a₃a₁`, or `None` if a component is not
/// a rational function of `t`.
pub fn exact_cross_sum(curve: &Curve) -> Option<RationalFunction> {
    let [a, b, c] = curve.components();
    let (a, b, c) = (
        RationalFunction::from_expr(a)?,
        RationalFunction::from_expr(b)?,
        RationalFunction::from_expr(c)?,
    );
    Some(a.mul(&b).add(&b.mul(&c)).add(&c.mul(&a)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampledCrossSum {
    pub max_abs: f64,
    /// Sample with the largest `|cross sum| / max(1, h²)`.
    pub worst_t: f64,
    pub worst_value: f64,
    pub within_tolerance: bool,
    pub norm_min: f64,
    pub norm_max_deviation_from_one: f64,
}

pub fn sampled_cross_sum(curve: &Curve, samples: usize) -> Result<SampledCrossSum> {
    let (lo, hi) = curve.domain();
    let mut out = SampledCrossSum {
        max_abs: 0.0,
        worst_t: lo,
        worst_value: 0.0,
        within_tolerance: true,
        norm_min: f64::INFINITY,
        norm_max_deviation_from_one: 0.0,
    };
    let mut worst_rel = -1.0;
    for t in sample_points(lo, hi, samples.max(2)) {
        let p = curve.point(t)?;
        let cs = p.x * p.y + p.y * p.z + p.z * p.x;
        let h2 = p.norm_squared();
        let h = h2.sqrt();
        let rel = cs.abs() / h2.max(1.0);
        if rel > worst_rel {
            worst_rel = rel;
            out.worst_t = t;
            out.worst_value = cs;
        }
        out.max_abs = out.max_abs.max(cs.abs());
        out.within_tolerance &= rel <= CROSS_SUM_TOLERANCE;
        out.norm_min = out.norm_min.min(h);
        out.norm_max_deviation_from_one = out.norm_max_deviation_from_one.max((h - 1.0).abs());
    }
    Ok(out)
}

/// Checks the cross-sum condition and the origin condition over the curve's
/// domain.
///
/// Rational components are decided symbolically; anything else falls back to
/// `samples` evenly spaced evaluations (at least two).
pub fn validate(curve: &Curve, samples: usize) -> Result<AdmissibilityReport> {
    let sampled = sampled_cross_sum(curve, samples)?;
    if sampled.norm_min <= ORIGIN_TOLERANCE {
        return Err(Error::Origin {
            norm: sampled.norm_min,
        });
    }
    let violated = |numerator| CrossSumStatus::Violated {
        worst_t: sampled.worst_t,
        value: sampled.worst_value,
        numerator,
    };
    let cross_sum = match exact_cross_sum(curve) {
        Some(r) if r.is_zero() => CrossSumStatus::ExactlyZero,
        Some(r) => violated(Some(r.normalized_numerator())),
        None if sampled.within_tolerance => CrossSumStatus::NumericallyZero {
            max_abs: sampled.max_abs,
        },
        None => violated(None),
    };
    Ok(AdmissibilityReport {
        cross_sum,
        norm_min: sampled.norm_min,
        spherical: sampled.norm_max_deviation_from_one <= SPHERE_TOLERANCE,
    })
}
