//! Recursive-descent parser for curve component expressions.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' exponent)?
//! exponent:= '-'? INT | '(' '-'? INT ')'
//! primary := NUMBER | 't' | FUNC '(' expr ')' | '(' expr ')'
//! FUNC    := 'sin' | 'cos' | 'sqrt'
//! ```
//!
//! `-t^2` parses as `-(t^2)`. Exponents must be integer literals, so chains
//! like `t^2^3` are rejected; write `(t^2)^3`.

use super::expr::{Expr, Func};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64, bool),
    Ident(String),
    Op(char),
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn err(&self, position: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    /// Returns the next token and its starting byte offset.
    fn next(&mut self) -> Result<(Tok, usize)> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&b) = bytes.get(start) else {
            return Ok((Tok::End, start));
        };
        let tok = match b {
            b'0'..=b'9' | b'.' => return self.number(start),
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while self.pos < bytes.len()
                    && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                return Ok((Tok::Ident(self.src[start..self.pos].to_string()), start));
            }
            b'+' | b'-' | b'*' | b'/' | b'^' => Tok::Op(b as char),
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = self.src[start..].chars().next().unwrap_or('?');
                return Err(self.err(start, format!("unexpected character `{ch}`")));
            }
        };
        self.pos += 1;
        Ok((tok, start))
    }

    fn number(&mut self, start: usize) -> Result<(Tok, usize)> {
        let bytes = self.src.as_bytes();
        let digits = |pos: &mut usize| {
            let s = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            *pos - s
        };
        let mut integral = true;
        let mut n = digits(&mut self.pos);
        if bytes.get(self.pos) == Some(&b'.') {
            integral = false;
            self.pos += 1;
            n += digits(&mut self.pos);
        }
        if n == 0 {
            return Err(self.err(start, "malformed number"));
        }
        if matches!(bytes.get(self.pos), Some(b'e' | b'E')) {
            let mark = self.pos;
            self.pos += 1;
            if matches!(bytes.get(self.pos), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            if digits(&mut self.pos) == 0 {
                return Err(self.err(mark, "malformed exponent in number"));
            }
            integral = false;
        }
        let text = &self.src[start..self.pos];
        let value: f64 = text
            .parse()
            .map_err(|_| self.err(start, format!("malformed number `{text}`")))?;
        if !value.is_finite() {
            return Err(self.err(start, format!("number `{text}` is out of range")));
        }
        Ok((Tok::Num(value, integral), start))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    at: usize,
}

pub(crate) fn parse(src: &str) -> Result<Expr> {
    let mut lexer = Lexer { src, pos: 0 };
    let (tok, at) = lexer.next()?;
    let mut p = Parser { lexer, tok, at };
    let e = p.expr()?;
    match p.tok {
        Tok::End => Ok(e),
        _ => Err(p.unexpected()),
    }
}

impl Parser<'_> {
    fn bump(&mut self) -> Result<()> {
        (self.tok, self.at) = self.lexer.next()?;
        Ok(())
    }

    fn unexpected(&self) -> Error {
        let what = match &self.tok {
            Tok::End => "unexpected end of input".to_string(),
            Tok::Num(v, _) => format!("unexpected number {v}"),
            Tok::Ident(s) => format!("unexpected identifier `{s}`"),
            Tok::Op(c) => format!("unexpected `{c}`"),
            Tok::LParen => "unexpected `(`".to_string(),
            Tok::RParen => "unexpected `)`".to_string(),
        };
        self.lexer.err(self.at, what)
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if self.tok == tok {
            self.bump()
        } else {
            Err(self.unexpected())
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Tok::Op(op @ ('+' | '-')) = self.tok {
            self.bump()?;
            let rhs = Box::new(self.term()?);
            lhs = if op == '+' {
                Expr::Add(Box::new(lhs), rhs)
            } else {
                Expr::Sub(Box::new(lhs), rhs)
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Tok::Op(op @ ('*' | '/')) = self.tok {
            self.bump()?;
            let rhs = Box::new(self.unary()?);
            lhs = if op == '*' {
                Expr::Mul(Box::new(lhs), rhs)
            } else {
                Expr::Div(Box::new(lhs), rhs)
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.tok == Tok::Op('-') {
            self.bump()?;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.tok != Tok::Op('^') {
            return Ok(base);
        }
        self.bump()?;
        let paren = self.tok == Tok::LParen;
        if paren {
            self.bump()?;
        }
        let negative = self.tok == Tok::Op('-');
        if negative {
            self.bump()?;
        }
        let n = match self.tok {
            Tok::Num(v, true) if v <= i32::MAX as f64 => v as i32,
            Tok::Num(..) => {
                return Err(self
                    .lexer
                    .err(self.at, "exponent must be an integer literal"))
            }
            _ => return Err(self.unexpected()),
        };
        self.bump()?;
        if paren {
            self.expect(Tok::RParen)?;
        }
        Ok(Expr::Pow(Box::new(base), if negative { -n } else { n }))
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.tok.clone() {
            Tok::Num(v, _) => {
                self.bump()?;
                Ok(Expr::Const(v))
            }
            Tok::Ident(name) if name == "t" => {
                self.bump()?;
                Ok(Expr::Var)
            }
            Tok::Ident(name) => {
                let Some(func) = Func::from_name(&name) else {
                    return Err(self
                        .lexer
                        .err(self.at, format!("unknown identifier `{name}`")));
                };
                self.bump()?;
                self.expect(Tok::LParen)?;
                let arg = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::Call(func, Box::new(arg)))
            }
            Tok::LParen => {
                self.bump()?;
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => Err(self.unexpected()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err_pos(src: &str) -> usize {
        match parse(src) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("{src}: expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn precedence_and_associativity() {
        let e = parse("1 - t - 2").unwrap();
        assert_eq!(e.eval(5.0).unwrap(), -6.0);
        assert_eq!(parse("2 * t ^ 3").unwrap().eval(2.0).unwrap(), 16.0);
        assert_eq!(parse("-t^2").unwrap().eval(3.0).unwrap(), -9.0);
        assert_eq!(parse("8 / 2 / 2").unwrap().eval(0.0).unwrap(), 2.0);
        assert_eq!(parse("t^-2").unwrap().eval(2.0).unwrap(), 0.25);
        assert_eq!(parse(" t ^ ( -1 ) ").unwrap().eval(4.0).unwrap(), 0.25);
    }

    #[test]
    fn literals() {
        assert_eq!(parse("1.5e2").unwrap(), Expr::Const(150.0));
        assert_eq!(parse(".5").unwrap(), Expr::Const(0.5));
        assert_eq!(parse("3.").unwrap(), Expr::Const(3.0));
    }

    #[test]
    fn error_positions() {
        assert_eq!(err_pos("t +"), 3);
        assert_eq!(err_pos("t + x"), 4);
        assert_eq!(err_pos("t ^ 1.5"), 4);
        assert_eq!(err_pos("t ^ t"), 4);
        assert_eq!(err_pos("t^2^3"), 3);
        assert_eq!(err_pos("(t + 1"), 6);
        assert_eq!(err_pos("sin t"), 4);
        assert_eq!(err_pos("t $ 1"), 2);
        assert_eq!(err_pos("1e"), 1);
        assert_eq!(err_pos("1e999"), 0);
        assert_eq!(err_pos(""), 0);
    }
}
