//! Exact polynomial and rational-function arithmetic over ℚ.
//!
//! Used to decide identities such as `a₁a₂ + a₂a₃ + a₃a₁ ≡ 0` symbolically
//! when every component is a rational function of `t`. Literals enter as the
//! exact binary value of their `f64`.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::jets::{Expr, Func};

/// Polynomial in `t`, coefficients stored lowest degree first with no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn t() -> Self {
        Self::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRational::zero();
        Self::from_coeffs(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + rhs.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let unit = mag.is_one();
            if !unit || k == 0 {
                if mag.denom() == &BigInt::one() {
                    write!(f, "{}", mag.numer())?;
                } else if k == 0 {
                    write!(f, "{}/{}", mag.numer(), mag.denom())?;
                } else {
                    write!(f, "({}/{})", mag.numer(), mag.denom())?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Quotient of two polynomials; the denominator is never the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl RationalFunction {
    pub fn from_poly(p: Polynomial) -> Self {
        Self {
            num: p,
            den: Polynomial::constant(BigRational::one()),
        }
    }

    /// Exact conversion. `None` when the expression uses `sin`, `cos` or
    /// `sqrt`, or divides by an identically zero expression.
    pub fn from_expr(expr: &Expr) -> Option<Self> {
        Some(match expr {
            Expr::Const(c) => Self::from_poly(Polynomial::constant(BigRational::from_float(*c)?)),
            Expr::Var => Self::from_poly(Polynomial::t()),
            Expr::Neg(e) => {
                let r = Self::from_expr(e)?;
                Self {
                    num: r.num.neg(),
                    den: r.den,
                }
            }
            Expr::Add(a, b) => Self::from_expr(a)?.add(&Self::from_expr(b)?),
            Expr::Sub(a, b) => Self::from_expr(a)?.sub(&Self::from_expr(b)?),
            Expr::Mul(a, b) => Self::from_expr(a)?.mul(&Self::from_expr(b)?),
            Expr::Div(a, b) => Self::from_expr(a)?.div(&Self::from_expr(b)?)?,
            Expr::Pow(b, n) => Self::from_expr(b)?.powi(*n)?,
            Expr::Call(Func::Sin | Func::Cos | Func::Sqrt, _) => return None,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self {
                num: self.num.add(&rhs.num),
                den: self.den.clone(),
            };
        }
        Self {
            num: self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            den: self.den.mul(&rhs.den),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&Self {
            num: rhs.num.neg(),
            den: rhs.den.clone(),
        })
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            num: self.num.mul(&rhs.num),
            den: self.den.mul(&rhs.den),
        }
    }

    pub fn div(&self, rhs: &Self) -> Option<Self> {
        if rhs.num.is_zero() {
            return None;
        }
        Some(Self {
            num: self.num.mul(&rhs.den),
            den: self.den.mul(&rhs.num),
        })
    }

    pub fn powi(&self, n: i32) -> Option<Self> {
        let mut acc = Self::from_poly(Polynomial::constant(BigRational::one()));
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(self);
        }
        if n < 0 {
            Self::from_poly(Polynomial::constant(BigRational::one())).div(&acc)
        } else {
            Some(acc)
        }
    }

    /// Numerator rescaled so that a constant denominator becomes 1.
    pub fn normalized_numerator(&self) -> Polynomial {
        match self.den.coeffs() {
            [d] => self.num.scale(&d.recip()),
            _ => self.num.clone(),
        }
    }
}
