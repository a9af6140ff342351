//! Generating curves, the curve file format and admissibility checks.
//!
//! A curve file is a JSON document:
//!
//! ```json
//! {
//!   "components": ["t", "1 - t", "t^2 - t"],
//!   "translation": ["t^2", "0", "0"],
//!   "domain": [-2, 3]
//! }
//! ```
//!
//! `translation` is optional and defaults to the zero curve.

mod builtin;
pub mod poly;
mod validate;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jets::{parse_expr, Expr, Jet};

pub use builtin::{builtin, circle, Branch, BUILTIN_NAMES};
pub use validate::{
    exact_cross_sum, sample_points, sampled_cross_sum, validate, AdmissibilityReport,
    CrossSumStatus, SampledCrossSum, SPHERE_TOLERANCE,
};

#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    components: [Expr; 3],
    translation: [Expr; 3],
    domain: (f64, f64),
}

#[derive(Serialize, Deserialize)]
struct CurveFile {
    components: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    translation: Option<Vec<String>>,
    domain: Vec<f64>,
}

fn check_domain(lo: f64, hi: f64) -> Result<()> {
    if !(lo.is_finite() && hi.is_finite()) || lo > hi {
        return Err(Error::Schema(format!(
            "domain [{lo}, {hi}] is not a nonempty finite interval"
        )));
    }
    Ok(())
}

fn parse_triple(field: &str, srcs: &[String]) -> Result<[Expr; 3]> {
    let [a, b, c] = srcs else {
        return Err(Error::Schema(format!(
            "`{field}` needs exactly 3 expressions, found {}",
            srcs.len()
        )));
    };
    let parse = |i: usize, s: &str| {
        parse_expr(s).map_err(|e| match e {
            Error::Parse { position, message } => Error::Parse {
                position,
                message: format!("{field}[{i}]: {message}"),
            },
            other => other,
        })
    };
    Ok([parse(0, a)?, parse(1, b)?, parse(2, c)?])
}

impl Curve {
    pub fn new(components: [Expr; 3], translation: [Expr; 3], domain: (f64, f64)) -> Result<Self> {
        check_domain(domain.0, domain.1)?;
        Ok(Self {
            components,
            translation,
            domain,
        })
    }

    /// Parses component strings; the translation is zero.
    pub fn from_strs(components: [&str; 3], domain: (f64, f64)) -> Result<Self> {
        let srcs = components.map(String::from);
        Self::new(
            parse_triple("components", &srcs)?,
            [Expr::zero(), Expr::zero(), Expr::zero()],
            domain,
        )
    }

    pub fn components(&self) -> &[Expr; 3] {
        &self.components
    }

    pub fn translation(&self) -> &[Expr; 3] {
        &self.translation
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn with_translation(mut self, translation: [&str; 3]) -> Result<Self> {
        self.translation = parse_triple("translation", &translation.map(String::from))?;
        Ok(self)
    }

    pub fn with_domain(mut self, lo: f64, hi: f64) -> Result<Self> {
        check_domain(lo, hi)?;
        self.domain = (lo, hi);
        Ok(self)
    }

    /// `α(t)`, evaluated without jets.
    pub fn point(&self, t: f64) -> Result<Vector3<f64>> {
        let [a, b, c] = &self.components;
        Ok(Vector3::new(a.eval(t)?, b.eval(t)?, c.eval(t)?))
    }

    /// `C(t)`, evaluated without jets.
    pub fn translation_at(&self, t: f64) -> Result<Vector3<f64>> {
        let [a, b, c] = &self.translation;
        Ok(Vector3::new(a.eval(t)?, b.eval(t)?, c.eval(t)?))
    }

    pub fn component_jets(&self, t: f64, order: usize) -> Result<[Jet; 3]> {
        let [a, b, c] = &self.components;
        Ok([a.jet(t, order)?, b.jet(t, order)?, c.jet(t, order)?])
    }

    pub fn translation_jets(&self, t: f64, order: usize) -> Result<[Jet; 3]> {
        let [a, b, c] = &self.translation;
        Ok([a.jet(t, order)?, b.jet(t, order)?, c.jet(t, order)?])
    }

    /// Serializes back to the curve file format.
    pub fn to_json(&self) -> String {
        let file = CurveFile {
            components: self.components.iter().map(Expr::to_string).collect(),
            translation: Some(self.translation.iter().map(Expr::to_string).collect()),
            domain: vec![self.domain.0, self.domain.1],
        };
        serde_json::to_string_pretty(&file).expect("curve file serialization cannot fail")
    }
}

/// Byte offset of a 1-based line/column pair reported by serde_json.
fn byte_offset(src: &str, line: usize, column: usize) -> usize {
    let line_start: usize = src
        .split_inclusive('\n')
        .take(line.saturating_sub(1))
        .map(str::len)
        .sum();
    (line_start + column.saturating_sub(1)).min(src.len())
}

/// Reads a curve from its JSON file representation.
pub fn parse_curve(document: &str) -> Result<Curve> {
    let file: CurveFile = serde_json::from_str(document).map_err(|e| {
        use serde_json::error::Category;
        match e.classify() {
            Category::Data => Error::Schema(e.to_string()),
            _ => Error::Parse {
                position: byte_offset(document, e.line(), e.column()),
                message: format!("invalid JSON: {e}"),
            },
        }
    })?;
    let components = parse_triple("components", &file.components)?;
    let translation = match &file.translation {
        Some(srcs) => parse_triple("translation", srcs)?,
        None => [Expr::zero(), Expr::zero(), Expr::zero()],
    };
    let [lo, hi] = file.domain[..] else {
        return Err(Error::Schema(format!(
            "`domain` needs exactly 2 numbers, found {}",
            file.domain.len()
        )));
    };
    Curve::new(components, translation, (lo, hi))
}
