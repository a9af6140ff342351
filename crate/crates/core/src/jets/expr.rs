use std::fmt;
use std::str::FromStr;

use super::jet::Jet;
use super::parser;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Sqrt,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Sqrt => "sqrt",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        match name {
            "sin" => Some(Func::Sin),
            "cos" => Some(Func::Cos),
            "sqrt" => Some(Func::Sqrt),
            _ => None,
        }
    }
}

/// Expression tree in the single variable `t`.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    /// Integer power; the exponent is part of the tree, not a sub-expression.
    Pow(Box<Expr>, i32),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn zero() -> Expr {
        Expr::Const(0.0)
    }

    /// Taylor expansion about `t0` truncated to `order`.
    pub fn jet(&self, t0: f64, order: usize) -> Result<Jet> {
        Ok(match self {
            Expr::Const(c) => Jet::constant(*c, order),
            Expr::Var => Jet::variable(t0, order),
            Expr::Neg(e) => -e.jet(t0, order)?,
            Expr::Add(a, b) => a.jet(t0, order)? + b.jet(t0, order)?,
            Expr::Sub(a, b) => a.jet(t0, order)? - b.jet(t0, order)?,
            Expr::Mul(a, b) => a.jet(t0, order)? * b.jet(t0, order)?,
            Expr::Div(a, b) => a.jet(t0, order)?.try_div(&b.jet(t0, order)?)?,
            Expr::Pow(b, n) => b.jet(t0, order)?.powi(*n)?,
            Expr::Call(Func::Sin, e) => e.jet(t0, order)?.sin(),
            Expr::Call(Func::Cos, e) => e.jet(t0, order)?.cos(),
            Expr::Call(Func::Sqrt, e) => e.jet(t0, order)?.sqrt()?,
        })
    }

    /// Plain floating-point evaluation. Does not go through [`Jet`].
    pub fn eval(&self, t: f64) -> Result<f64> {
        Ok(match self {
            Expr::Const(c) => *c,
            Expr::Var => t,
            Expr::Neg(e) => -e.eval(t)?,
            Expr::Add(a, b) => a.eval(t)? + b.eval(t)?,
            Expr::Sub(a, b) => a.eval(t)? - b.eval(t)?,
            Expr::Mul(a, b) => a.eval(t)? * b.eval(t)?,
            Expr::Div(a, b) => {
                let d = b.eval(t)?;
                if d == 0.0 {
                    return Err(Error::Domain(format!("division by zero at t = {t}")));
                }
                a.eval(t)? / d
            }
            Expr::Pow(b, n) => {
                let v = b.eval(t)?;
                if v == 0.0 && *n < 0 {
                    return Err(Error::Domain(format!(
                        "zero to a negative power at t = {t}"
                    )));
                }
                v.powi(*n)
            }
            Expr::Call(Func::Sin, e) => e.eval(t)?.sin(),
            Expr::Call(Func::Cos, e) => e.eval(t)?.cos(),
            Expr::Call(Func::Sqrt, e) => {
                let v = e.eval(t)?;
                if v < 0.0 {
                    return Err(Error::Domain(format!("sqrt of {v} at t = {t}")));
                }
                v.sqrt()
            }
        })
    }

    /// Whether the tree uses only field operations and integer powers.
    pub fn is_rational(&self) -> bool {
        match self {
            Expr::Const(_) | Expr::Var => true,
            Expr::Neg(e) | Expr::Pow(e, _) => e.is_rational(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.is_rational() && b.is_rational()
            }
            Expr::Call(..) => false,
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Const(c) if *c < 0.0 || c.is_sign_negative() => 3,
            Expr::Const(_) | Expr::Var | Expr::Call(..) => 5,
        }
    }
}

/// Parses the expression mini-language; see [`parser`] for the grammar.
pub fn parse_expr(src: &str) -> Result<Expr> {
    parser::parse(src)
}

impl FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Expr> {
        parse_expr(s)
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, child: &Expr, paren: bool) -> fmt::Result {
    if paren {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.precedence();
        match self {
            Expr::Const(c) => write!(f, "{c}"),
            Expr::Var => write!(f, "t"),
            Expr::Neg(e) => {
                write!(f, "-")?;
                write_child(f, e, e.precedence() < p)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                let op = match self {
                    Expr::Add(..) => " + ",
                    Expr::Sub(..) => " - ",
                    Expr::Mul(..) => " * ",
                    _ => " / ",
                };
                write_child(f, a, a.precedence() < p)?;
                write!(f, "{op}")?;
                write_child(f, b, b.precedence() <= p)
            }
            Expr::Pow(b, n) => {
                write_child(f, b, b.precedence() < 5)?;
                if *n < 0 {
                    write!(f, "^({n})")
                } else {
                    write!(f, "^{n}")
                }
            }
            Expr::Call(func, e) => write!(f, "{}({e})", func.name()),
        }
    }
}

/// Taylor coefficients of `expr` about `t0`, truncated to `order`.
pub fn jet_eval(expr: &Expr, t0: f64, order: usize) -> Result<Jet> {
    expr.jet(t0, order)
}
