//! Human text syntax: `x^8 + 14x^4y^4 + y^8`, `x^6 + 5/2 x^3y^3 - 1/8 y^6`.

use std::fmt;

use num_bigint::BigInt;

use super::HomoPoly;
use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn exponent(&mut self) -> Result<usize> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            usize::try_from(e).map_err(|_| self.err("exponent too large"))
        } else {
            Ok(1)
        }
    }

    /// One signed term: returns (coefficient, x-exponent, y-exponent, text).
    fn term(&mut self, negative: bool) -> Result<(Rational, usize, usize, String)> {
        self.skip_ws();
        let start = self.pos;
        let mut coeff: Option<Rational> = None;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num = self.integer()?;
            let den = if self.peek() == Some(b'/') {
                self.pos += 1;
                let d = self.integer()?;
                if d == BigInt::from(0) {
                    return Err(self.err("zero denominator"));
                }
                d
            } else {
                BigInt::from(1)
            };
            coeff = Some(Rational::new(num, den));
            if self.peek() == Some(b'*') {
                self.pos += 1;
            }
        }
        let (mut ex, mut ey) = (0usize, 0usize);
        let mut saw_var = false;
        loop {
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    ex += self.exponent()?;
                }
                Some(b'y') => {
                    self.pos += 1;
                    ey += self.exponent()?;
                }
                Some(b'*') if saw_var => {
                    self.pos += 1;
                    continue;
                }
                _ => break,
            }
            saw_var = true;
        }
        if coeff.is_none() && !saw_var {
            return Err(self.err("expected a term"));
        }
        let mut c = coeff.unwrap_or_else(|| Rational::from_integer(1.into()));
        if negative {
            c = -c;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .trim()
            .to_string();
        Ok((c, ex, ey, text))
    }
}

/// Parses the text syntax into a form. Rejects non-homogeneous input,
/// naming the offending term.
pub fn parse_poly<S: Scalar>(input: &str) -> Result<HomoPoly<S>> {
    let mut lx = Lexer {
        src: input.as_bytes(),
        pos: 0,
    };
    let mut terms: Vec<(Rational, usize, usize, String)> = Vec::new();
    let mut negative = match lx.peek() {
        Some(b'-') => {
            lx.pos += 1;
            true
        }
        Some(b'+') => {
            lx.pos += 1;
            false
        }
        None => return Err(lx.err("empty polynomial")),
        _ => false,
    };
    loop {
        terms.push(lx.term(negative)?);
        match lx.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(c) => return Err(lx.err(format!("unexpected character {:?}", c as char))),
        }
        lx.pos += 1;
    }
    let degree = terms[0].1 + terms[0].2;
    let mut out = HomoPoly::zero(degree);
    for (c, ex, ey, text) in terms {
        if ex + ey != degree {
            return Err(Error::NonHomogeneous {
                term: text,
                expected: degree,
                found: ex + ey,
            });
        }
        out.add_term(ey, S::from_rational(&c));
    }
    Ok(out)
}

fn monomial_text(ex: usize, ey: usize) -> String {
    let part = |v: char, e: usize| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    };
    format!("{}{}", part('x', ex), part('y', ey))
}

impl<S: Scalar + fmt::Display> fmt::Display for HomoPoly<S> {
    /// Ascending y-exponent, e.g. `x^6 + 5/2 x^3y^3 - 1/8 y^6`; the zero
    /// polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.degree();
        for (k, (i, c)) in self.terms().enumerate() {
            let neg = c.is_negative_display();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = monomial_text(n - i, i);
            let body = if mag.is_compound() {
                format!("({mag})")
            } else {
                mag.to_string()
            };
            if mono.is_empty() {
                write!(f, "{body}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{body} {mono}")?;
            }
        }
        Ok(())
    }
}
