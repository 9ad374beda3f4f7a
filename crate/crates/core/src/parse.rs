//! Parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant, no implicit multiplication):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*        division only by constants
//! unary := ('+' | '-') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | identifier | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

/// Parse `src` into canonical form over `ring`.
pub fn parse_poly<K: Field>(src: &str, ring: &PolyRing<K>) -> Result<Polynomial<K>> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        ring,
    };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(p.err("empty expression"));
    }
    let f = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err(&format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(f)
}

struct Parser<'a, K: Field> {
    src: &'a [u8],
    pos: usize,
    ring: &'a PolyRing<K>,
}

impl<K: Field> Parser<'_, K> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial<K>> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' {
                acc.add(self.ring, &rhs)
            } else {
                acc.sub(self.ring, &rhs)
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<K>> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            if c == b'*' {
                acc = acc.mul(self.ring, &rhs);
            } else {
                if !rhs.is_constant() {
                    return Err(Error::Syntax {
                        pos: at,
                        msg: "division is only allowed by nonzero constants".into(),
                    });
                }
                let k = self.ring.field();
                let c = rhs
                    .leading_term()
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(|| k.zero());
                let inv = k
                    .inv(&c)
                    .ok_or_else(|| Error::NotInvertible(k.format(&c)))?;
                acc = acc.scale(self.ring, &inv);
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial<K>> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg(self.ring))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial<K>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.err("expected a nonnegative integer exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| Error::Syntax {
                pos: start,
                msg: "exponent too large".into(),
            })?;
            return Ok(base.pow(self.ring, e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Polynomial<K>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                if let Some(&c) = self.src.get(self.pos) {
                    if c.is_ascii_alphabetic() || c == b'_' {
                        return Err(self.err("implicit multiplication is not allowed"));
                    }
                }
                let v: BigInt = digits.parse().expect("digit string");
                let k = self.ring.field();
                let c = k.from_bigint(&v);
                if k.is_zero(&c) && !v.is_zero() {
                    return Err(Error::NotInvertible(digits));
                }
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.ring.var_index(name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => Err(Error::UnknownVariable(name.to_string())),
                }
            }
            Some(c) => Err(self.err(&format!("unexpected `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn ring4() -> crate::ring::Ring<PrimeField> {
        PolyRing::with_vars(PrimeField::default(), "x", 4).unwrap()
    }

    #[test]
    fn binomial() {
        let r = ring4();
        let f = parse_poly("x0*x2 - x1^2", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.degree(), Some(2));
        assert!(f.is_homogeneous());
    }

    #[test]
    fn linear_form() {
        let r = ring4();
        let f = parse_poly("x0+x3", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.degree(), Some(1));
    }

    #[test]
    fn identity_is_zero() {
        let r = ring4();
        let f = parse_poly("(x0+x1)^2 - x0^2 - 2*x0*x1 - x1^2", &r).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn errors() {
        let r = ring4();
        assert!(matches!(
            parse_poly("x0x1", &r),
            Err(Error::UnknownVariable(_))
        ));
        assert!(matches!(parse_poly("x9", &r), Err(Error::UnknownVariable(_))));
        assert!(matches!(parse_poly("x0 +", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("2x0", &r), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_poly("32003*x0", &r),
            Err(Error::NotInvertible(_))
        ));
        assert!(matches!(
            parse_poly("x0/32003", &r),
            Err(Error::NotInvertible(_))
        ));
        assert!(matches!(parse_poly("x0/x1", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("(x0", &r), Err(Error::Syntax { pos: 3, .. })));
    }

    #[test]
    fn rational_fractions() {
        let r = PolyRing::with_vars(Rationals, "x", 2).unwrap();
        let f = parse_poly("x0/2 + 1/3*x1", &r).unwrap();
        assert_eq!(f.display(&r), "1/2*x0 + 1/3*x1");
        assert_eq!(parse_poly(&f.display(&r), &r).unwrap(), f);
    }
}
