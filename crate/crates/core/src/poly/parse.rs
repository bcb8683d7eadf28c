//! Polynomial text grammar.
//!
//! Terms joined by `+`/`-`; a term is an optional rational coefficient
//! (`a` or `a/b`) and factors `xK` or `xK^E` joined by `*`. Whitespace is
//! insignificant. Besides the coordinates `x0..x{n}`, extra named variables
//! (parameters like `t`) may be declared; they occupy the trailing slots of
//! the ring.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, Scalar};

/// Parse in the ring `Q[x0..x{nvars-1}]`.
pub fn parse_poly(s: &str, nvars: usize) -> Result<Poly> {
    parse_poly_with_params(s, nvars, &[])
}

/// Parse with `params` occupying variable slots `nvars..nvars+params.len()`.
pub fn parse_poly_with_params(s: &str, ncoords: usize, params: &[&str]) -> Result<Poly> {
    Parser {
        bytes: s.as_bytes(),
        pos: 0,
        ncoords,
        params,
    }
    .parse()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    ncoords: usize,
    params: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn nvars(&self) -> usize {
        self.ncoords + self.params.len()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Poly> {
        let mut out = Poly::zero(self.nvars());
        let mut sign = BigInt::one();
        match self.peek() {
            Some(b'+') => self.pos += 1,
            Some(b'-') => {
                self.pos += 1;
                sign = -sign;
            }
            Some(_) => {}
            None => return Err(self.err("empty input")),
        }
        loop {
            let term = self.parse_term()?;
            out = out
                .checked_add(&term.scale(&Scalar::from_integer(sign.clone())))
                .expect("same ring");
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => {
                    self.pos += 1;
                    sign = BigInt::one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -BigInt::one();
                }
                Some(c) => return Err(self.err(format!("unexpected byte {:?}", c as char))),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Poly> {
        let mut coeff = Scalar::one();
        let mut exps = vec![0u32; self.nvars()];
        let mut any = false;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff = coeff * self.parse_rational()?;
                    any = true;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let (var, e) = self.parse_factor()?;
                    exps[var] = exps[var]
                        .checked_add(e)
                        .ok_or_else(|| self.err("exponent overflow"))?;
                    any = true;
                }
                _ if !any => return Err(self.err("expected a term")),
                _ => return Err(self.err("expected a factor")),
            }
            match self.peek() {
                Some(b'*') => self.pos += 1,
                _ => break,
            }
        }
        Ok(Poly::from_terms(
            self.nvars(),
            [(Monomial(exps), coeff)],
        ))
    }

    fn parse_rational(&mut self) -> Result<Scalar> {
        let num = self.parse_uint()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.parse_uint()?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(Scalar::new(num, den))
        } else {
            Ok(Scalar::from_integer(num))
        }
    }

    fn parse_uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn parse_factor(&mut self) -> Result<(usize, u32)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let var = self.resolve(name).ok_or_else(|| Error::Parse {
            pos: start,
            msg: format!("unknown variable {name:?}"),
        })?;
        let mut e = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let v = self.parse_uint()?;
            e = u32::try_from(&v).map_err(|_| self.err("exponent too large"))?;
        }
        Ok((var, e))
    }

    fn resolve(&self, name: &str) -> Option<usize> {
        if let Some(rest) = name.strip_prefix('x') {
            if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                // reject leading zeros other than "0" itself
                if rest.len() > 1 && rest.starts_with('0') {
                    return None;
                }
                let k: usize = rest.parse().ok()?;
                if k < self.ncoords {
                    return Some(k);
                }
                return None;
            }
        }
        self.params
            .iter()
            .position(|p| *p == name)
            .map(|i| self.ncoords + i)
    }
}

/// Canonical text: terms in descending grevlex order.
pub fn format_poly(p: &Poly) -> String {
    let names: Vec<String> = (0..p.nvars()).map(|i| format!("x{i}")).collect();
    format_poly_with_names(p, &names.iter().map(|s| s.as_str()).collect::<Vec<_>>())
}

pub fn format_poly_with_names(p: &Poly, names: &[&str]) -> String {
    assert_eq!(names.len(), p.nvars());
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (m, c) in p.terms().collect::<Vec<_>>().into_iter().rev() {
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let mut parts: Vec<String> = Vec::new();
        if !a.is_one() || m.is_one() {
            if a.denom().is_one() {
                parts.push(a.numer().to_string());
            } else {
                parts.push(format!("{}/{}", a.numer(), a.denom()));
            }
        }
        for (i, &e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].to_string()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        out.push_str(&parts.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_term_example() {
        let p = parse_poly("3/2*x0^2*x1 - x2^3", 3).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(format_poly(&p), "3/2*x0^2*x1 - x2^3");
    }

    #[test]
    fn whitespace_and_signs() {
        let a = parse_poly("  - x0 +  2 * x1 ", 2).unwrap();
        let b = parse_poly("2*x1-x0", 2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn constants_and_cancellation() {
        assert_eq!(format_poly(&parse_poly("x0 - x0 + 5", 1).unwrap()), "5");
        assert_eq!(format_poly(&parse_poly("0", 1).unwrap()), "0");
    }

    #[test]
    fn params_take_trailing_slots() {
        let p = parse_poly_with_params("x0^2 - t*x1^2", 2, &["t"]).unwrap();
        assert_eq!(p.nvars(), 3);
        assert_eq!(p.degree_in(2), 1);
        // the parameter counts toward total degree, so t*x1^2 leads
        assert_eq!(format_poly_with_names(&p, &["x0", "x1", "t"]), "-x1^2*t + x0^2");
    }

    #[test]
    fn round_trip_is_identity() {
        for s in [
            "x0^2 + 2*x0*x1 + x1^2",
            "-x0^3 + 1/3*x1*x2 - 7",
            "x2^5",
            "1",
        ] {
            let p = parse_poly(s, 3).unwrap();
            assert_eq!(parse_poly(&format_poly(&p), 3).unwrap(), p);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("", 1).is_err());
        assert!(parse_poly("x1", 1).is_err());
        assert!(parse_poly("x0 +", 1).is_err());
        assert!(parse_poly("1/0", 1).is_err());
        assert!(parse_poly("y", 1).is_err());
    }
}
