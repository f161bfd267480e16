//! Text form of polynomials.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' integer]
//! atom   := integer | variable | '(' expr ')' | '[' expr ',' expr ']'
//! variable := 'x' [digits] | 'y' | 'z'
//! ```
//!
//! `x` followed by digits is an indexed variable, so `x2` is `y`.

use crate::error::{Error, Result};

use super::NcPoly;

/// Intermediate value that may still carry a constant.
#[derive(Clone)]
struct Expr {
    constant: i64,
    poly: NcPoly,
}

impl Expr {
    fn constant(c: i64) -> Expr {
        Expr {
            constant: c,
            poly: NcPoly::zero(),
        }
    }

    fn add(&self, other: &Expr, pos: usize) -> Result<Expr> {
        Ok(Expr {
            constant: self.constant.checked_add(other.constant).ok_or_else(|| overflow(pos))?,
            poly: self.poly.add(&other.poly),
        })
    }

    fn neg(&self) -> Expr {
        Expr {
            constant: -self.constant,
            poly: self.poly.neg(),
        }
    }

    fn mul(&self, other: &Expr, pos: usize) -> Result<Expr> {
        Ok(Expr {
            constant: self.constant.checked_mul(other.constant).ok_or_else(|| overflow(pos))?,
            poly: self
                .poly
                .mul(&other.poly)
                .add(&other.poly.scale(self.constant))
                .add(&self.poly.scale(other.constant)),
        })
    }
}

fn overflow(pos: usize) -> Error {
    Error::Parse {
        pos,
        msg: "integer overflow".into(),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().map_err(|_| overflow(start))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            let pos = self.pos;
            if self.eat(b'+') {
                acc = acc.add(&self.term()?, pos)?;
            } else if self.eat(b'-') {
                acc = acc.add(&self.term()?.neg(), pos)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            let pos = self.pos;
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?, pos)?;
                }
                Some(c) if c.is_ascii_digit() || matches!(c, b'x' | b'y' | b'z' | b'(' | b'[') => {
                    acc = acc.mul(&self.factor()?, pos)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let pos = self.pos;
        if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            return self.err("expected exponent");
        }
        let k = self.digits()?;
        if k == 0 {
            return Err(Error::Parse {
                pos,
                msg: "exponent must be positive".into(),
            });
        }
        let mut out = base.clone();
        for _ in 1..k {
            out = out.mul(&base, pos)?;
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Expr> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return self.err("unexpected end of input"),
        };
        match self.src[start] {
            c if c.is_ascii_digit() => {
                let v = self.digits()?;
                i64::try_from(v).map(Expr::constant).map_err(|_| overflow(start))
            }
            b'x' => {
                self.pos += 1;
                let index = if self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    let i = self.digits()?;
                    match u32::try_from(i) {
                        Ok(i) if i >= 1 => i,
                        _ => {
                            return Err(Error::Parse {
                                pos: start,
                                msg: "variable index must be at least 1".into(),
                            })
                        }
                    }
                } else {
                    1
                };
                Ok(var(index))
            }
            b'y' => {
                self.pos += 1;
                Ok(var(2))
            }
            b'z' => {
                self.pos += 1;
                Ok(var(3))
            }
            b'(' => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            b'[' => {
                self.pos += 1;
                let a = self.expr()?;
                if !self.eat(b',') {
                    return self.err("expected `,`");
                }
                let b = self.expr()?;
                if !self.eat(b']') {
                    return self.err("expected `]`");
                }
                Ok(a.mul(&b, start)?.add(&b.mul(&a, start)?.neg(), start)?)
            }
            _ => self.err("unexpected character"),
        }
    }
}

fn var(i: u32) -> Expr {
    Expr {
        constant: 0,
        poly: NcPoly::var(i),
    }
}

pub(super) fn parse(text: &str) -> Result<NcPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    if e.constant != 0 {
        return Err(Error::Parse {
            pos: 0,
            msg: "polynomial has a nonzero constant term".into(),
        });
    }
    Ok(e.poly)
}

fn var_name(i: u32) -> String {
    match i {
        1 => "x".into(),
        2 => "y".into(),
        3 => "z".into(),
        _ => format!("x{i}"),
    }
}

fn render_word(letters: &[u32]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < letters.len() {
        let mut j = i;
        while j < letters.len() && letters[j] == letters[i] {
            j += 1;
        }
        out.push_str(&var_name(letters[i]));
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

pub(super) fn render(p: &NcPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (w, c)) in p.terms().enumerate() {
        let sign = if c < 0 { "-" } else { "+" };
        if k == 0 {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let m = c.unsigned_abs();
        if m != 1 {
            out.push_str(&m.to_string());
        }
        out.push_str(&render_word(w.letters()));
    }
    out
}
