//! Recursive-descent reader for the polynomial text form.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*        -- '/' only by constants
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' int)?
//! atom   := int | name | zetaM | '[' rat (',' rat)* ']' '@' int | '(' expr ')'
//! ```

use super::cyclotomic::CycNum;
use super::poly::Poly;
use super::rat::Rat;
use crate::error::{Error, Result};

pub fn parse_poly(src: &str, names: &[String]) -> Result<Poly> {
    let mut p = Parser { s: src.as_bytes(), pos: 0, names };
    let r = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(r)
}

/// Parses with the default variable names `x1..xn`.
pub fn parse_poly_n(src: &str, n: usize) -> Result<Poly> {
    let names: Vec<String> = (1..=n).map(|i| format!("x{}", i)).collect();
    parse_poly(src, &names)
}

/// Parses a scalar: a rational, `zetaM`, `[c0,...]@m`, or an expression in those.
pub fn parse_cyc(src: &str) -> Result<CycNum> {
    let p = parse_poly(src, &[])?;
    if p.is_zero() {
        return Ok(CycNum::zero());
    }
    Ok(p.coeff(&super::poly::Monomial::one(0)))
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{} at offset {}", msg, self.pos))
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn n(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat(b'/') {
                let d = self.unary()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(self.err("division only by nonzero constants"));
                }
                let c = d.coeff(&super::poly::Monomial::one(self.n()));
                acc = acc.scale(&c.inv()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.uint()?;
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<u64> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn rat(&mut self) -> Result<Rat> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_digit() || b"-+/ ".contains(&self.s[self.pos])) {
            self.pos += 1;
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap().replace(' ', "");
        txt.parse::<Rat>().map_err(|e| self.err(&e))
    }

    fn atom(&mut self) -> Result<Poly> {
        let n = self.n();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(b'[') => {
                self.pos += 1;
                let mut cs = vec![self.rat()?];
                while self.eat(b',') {
                    cs.push(self.rat()?);
                }
                if !self.eat(b']') || !self.eat(b'@') {
                    return Err(self.err("expected ']@m'"));
                }
                let m = self.uint()?;
                let c = CycNum::from_coeffs(m as u32, cs)?;
                Ok(Poly::constant(n, c))
            }
            Some(c) if c.is_ascii_digit() => {
                self.ws();
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                let r: Rat = txt.parse().map_err(|e: String| self.err(&e))?;
                Ok(Poly::constant(n, CycNum::rational(r)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.s.len()
                    && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let id = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                if let Some(i) = self.names.iter().position(|v| v == id) {
                    return Ok(Poly::var(n, i));
                }
                if let Some(m) = id.strip_prefix("zeta").and_then(|d| d.parse::<u32>().ok()) {
                    if m == 0 {
                        return Err(self.err("zeta0 is undefined"));
                    }
                    return Ok(Poly::constant(n, CycNum::zeta(m)));
                }
                Err(Error::Parse(format!("unknown variable '{}'", id)))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn round_trip_text() {
        for s in ["x1^2 - x2^2", "3*x1*x2^2 - 1/2*x3 + 7", "[0,1]@3*x1 + x2"] {
            let p = parse_poly_n(s, 3).unwrap();
            assert_eq!(p.to_text(), s);
            assert_eq!(parse_poly_n(&p.to_text(), 3).unwrap(), p);
        }
    }

    #[test]
    fn named_variables_and_zeta() {
        let v = names(&["x", "y"]);
        let p = parse_poly("(x - y)*(x + y)", &v).unwrap();
        assert_eq!(p.to_string_with(&v), "x^2 - y^2");
        let z = parse_poly("zeta4^2", &v).unwrap();
        assert_eq!(z, Poly::constant(2, CycNum::int(-1)));
        assert!(parse_poly("x + z", &v).is_err());
        assert!(parse_poly("x / y", &v).is_err());
        assert_eq!(parse_cyc("1/2").unwrap(), CycNum::rational(Rat::new(1, 2)));
        assert_eq!(parse_cyc("zeta3").unwrap(), CycNum::zeta(3));
    }
}
