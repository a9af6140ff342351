use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Truncated Taylor expansion of a scalar function about a point.
///
/// `coeffs[k]` holds `f⁽ᵏ⁾(t₀) / k!`, so a jet of order `R` has `R + 1`
/// coefficients. Binary operations between jets of different order truncate
/// to the smaller one.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    coeffs: Vec<f64>,
}

impl Jet {
    /// Builds a jet from raw Taylor coefficients.
    ///
    /// # Panics
    ///
    /// Panics if `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<f64>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a jet needs at least the value coefficient"
        );
        Self { coeffs }
    }

    pub fn constant(value: f64, order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = value;
        Self { coeffs }
    }

    /// The identity function `t ↦ t` expanded about `t0`.
    pub fn variable(t0: f64, order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = t0;
        if order >= 1 {
            coeffs[1] = 1.0;
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    /// The `k`-th derivative at the expansion point, `k! · c_k`.
    pub fn derivative(&self, k: usize) -> Result<f64> {
        let c = self.coeffs.get(k).ok_or(Error::Order {
            requested: k,
            available: self.order(),
        })?;
        Ok(factorial(k) * c)
    }

    /// All derivatives `f, f', …, f⁽ᴿ⁾`.
    pub fn derivatives(&self) -> Vec<f64> {
        let mut fact = 1.0;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if k > 0 {
                    fact *= k as f64;
                }
                fact * c
            })
            .collect()
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Jet {
        let n = (order + 1).min(self.coeffs.len());
        Jet::from_coeffs(self.coeffs[..n].to_vec())
    }

    pub fn scale(&self, s: f64) -> Jet {
        Jet::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn try_div(&self, rhs: &Jet) -> Result<Jet> {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let (u, v) = (&self.coeffs, &rhs.coeffs);
        if v[0] == 0.0 {
            return Err(Error::Domain("division by a jet with zero value".into()));
        }
        let mut q = vec![0.0; n];
        for k in 0..n {
            let mut acc = u[k];
            for j in 1..=k {
                acc -= v[j] * q[k - j];
            }
            q[k] = acc / v[0];
        }
        Ok(Jet::from_coeffs(q))
    }

    pub fn recip(&self) -> Result<Jet> {
        Jet::constant(1.0, self.order()).try_div(self)
    }

    pub fn sqrt(&self) -> Result<Jet> {
        let u = &self.coeffs;
        let n = u.len();
        if u[0] < 0.0 {
            return Err(Error::Domain(format!("sqrt of negative value {}", u[0])));
        }
        if u[0] == 0.0 && n > 1 {
            return Err(Error::Domain("sqrt is not differentiable at zero".into()));
        }
        let mut y = vec![0.0; n];
        y[0] = u[0].sqrt();
        for k in 1..n {
            let mut acc = u[k];
            for j in 1..k {
                acc -= y[j] * y[k - j];
            }
            y[k] = acc / (2.0 * y[0]);
        }
        Ok(Jet::from_coeffs(y))
    }

    /// Sine and cosine of the jet, computed together by their coupled recurrence.
    pub fn sin_cos(&self) -> (Jet, Jet) {
        let u = &self.coeffs;
        let n = u.len();
        let mut s = vec![0.0; n];
        let mut c = vec![0.0; n];
        (s[0], c[0]) = u[0].sin_cos();
        for k in 1..n {
            let (mut ds, mut dc) = (0.0, 0.0);
            for j in 1..=k {
                let w = j as f64 * u[j];
                ds += w * c[k - j];
                dc -= w * s[k - j];
            }
            s[k] = ds / k as f64;
            c[k] = dc / k as f64;
        }
        (Jet::from_coeffs(s), Jet::from_coeffs(c))
    }

    pub fn sin(&self) -> Jet {
        self.sin_cos().0
    }

    pub fn cos(&self) -> Jet {
        self.sin_cos().1
    }

    /// Integer power. Negative exponents go through [`Jet::recip`] and fail
    /// when the value is zero.
    pub fn powi(&self, n: i32) -> Result<Jet> {
        let mut base = self.clone();
        let mut acc = Jet::constant(1.0, self.order());
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        if n < 0 {
            acc.recip()
        } else {
            Ok(acc)
        }
    }
}

fn factorial(k: usize) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * i as f64)
}

impl fmt::Display for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Add for &Jet {
    type Output = Jet;

    fn add(self, rhs: &Jet) -> Jet {
        Jet::from_coeffs(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Jet {
    type Output = Jet;

    fn sub(self, rhs: &Jet) -> Jet {
        Jet::from_coeffs(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

/// Cauchy product, truncated.
impl Mul for &Jet {
    type Output = Jet;

    fn mul(self, rhs: &Jet) -> Jet {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let out = (0..n)
            .map(|k| (0..=k).map(|j| self.coeffs[j] * rhs.coeffs[k - j]).sum())
            .collect();
        Jet::from_coeffs(out)
    }
}

impl Neg for &Jet {
    type Output = Jet;

    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$m:ident),*) => {$(
        impl $tr for Jet {
            type Output = Jet;

            fn $m(self, rhs: Jet) -> Jet {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Jet {
    type Output = Jet;

    fn neg(self) -> Jet {
        -&self
    }
}
