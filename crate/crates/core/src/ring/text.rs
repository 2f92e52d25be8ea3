//! Text form of scalars: a sum of `c*q^(a/b)` terms, exponents in lowest terms.
//!
//! `0`, `1`, `-2/3*q^(1/2)`, `1*q^(1) + 1*q^(-1)`. A term with exponent zero is
//! written as its bare coefficient. Terms appear in increasing exponent order.

use alloc::string::ToString;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{Laurent, QExponent, RingError, RootConfig};

fn write_rational(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

pub(super) fn write_scalar(f: &mut fmt::Formatter<'_>, p: &Laurent) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    for (n, (e, c)) in p.q_terms().enumerate() {
        let magnitude = if n == 0 {
            c.clone()
        } else {
            f.write_str(if c.is_negative() { " - " } else { " + " })?;
            c.abs()
        };
        write_rational(f, &magnitude)?;
        if !e.is_zero() {
            write!(f, "*q^({})", e)?;
        }
    }
    Ok(())
}

struct Cursor<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, reason: &'static str) -> RingError {
        RingError::Parse { input: self.input.to_string(), reason }
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8, reason: &'static str) -> Result<(), RingError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(reason))
        }
    }

    fn digits(&mut self) -> Result<BigInt, RingError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        self.input[start..self.pos].parse().map_err(|_| self.err("bad integer"))
    }

    fn rational(&mut self) -> Result<BigRational, RingError> {
        let negative = self.eat(b'-');
        let num = self.digits()?;
        let den = if self.eat(b'/') { self.digits()? } else { BigInt::from(1) };
        if den.is_zero() {
            return Err(self.err("zero denominator"));
        }
        let r = BigRational::new(num, den);
        Ok(if negative { -r } else { r })
    }

    fn exponent(&mut self) -> Result<QExponent, RingError> {
        let r = self.rational()?;
        let num = i64::try_from(r.numer()).map_err(|_| self.err("exponent too large"))?;
        let den = i64::try_from(r.denom()).map_err(|_| self.err("exponent too large"))?;
        Ok(QExponent::new(num, den))
    }

    /// `[coef] ['*'] ['q^(' exp ')']`, at least one of the two parts present.
    fn term(&mut self) -> Result<(BigRational, QExponent), RingError> {
        let coef = match self.peek() {
            Some(b'q') => BigRational::from_integer(1.into()),
            _ => self.rational()?,
        };
        let has_power = if self.eat(b'*') { true } else { self.peek() == Some(b'q') };
        let exp = if has_power {
            self.expect(b'q', "expected 'q'")?;
            self.expect(b'^', "expected '^'")?;
            self.expect(b'(', "expected '('")?;
            let e = self.exponent()?;
            self.expect(b')', "expected ')'")?;
            e
        } else {
            QExponent::ZERO
        };
        Ok((coef, exp))
    }
}

/// Parses the text form back into a scalar over `root`.
pub fn parse_scalar(input: &str, root: RootConfig) -> Result<Laurent, RingError> {
    let mut cur = Cursor { input, bytes: input.as_bytes(), pos: 0 };
    let mut out = Laurent::zero(root);
    let mut sign = BigRational::from_integer(1.into());
    loop {
        let (c, e) = cur.term()?;
        let t = root.t_exponent(e)?;
        out += &Laurent::monomial(root, t, c * &sign);
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.pos += 1;
                sign = BigRational::from_integer(1.into());
            }
            Some(b'-') => {
                cur.pos += 1;
                sign = BigRational::from_integer((-1).into());
            }
            Some(_) => return Err(cur.err("unexpected character")),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{q_integer, q_power};
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn renders_in_lowest_terms() {
        let root = RootConfig::new(4).unwrap();
        assert_eq!(Laurent::zero(root).to_string(), "0");
        assert_eq!(Laurent::one(root).to_string(), "1");
        assert_eq!(q_power(root, QExponent::HALF).unwrap().to_string(), "1*q^(1/2)");
        assert_eq!(q_integer(root, 2).to_string(), "1*q^(-1) + 1*q^(1)");
        let p = Laurent::monomial(root, -3, BigRational::new((-2).into(), 3.into()));
        assert_eq!(p.to_string(), "-2/3*q^(-3/4)");
        let mixed = &Laurent::one(root) - &q_power(root, 2.into()).unwrap();
        assert_eq!(mixed.to_string(), "1 - 1*q^(2)");
    }

    #[test]
    fn parses_variants() {
        let root = RootConfig::HALF;
        assert_eq!(parse_scalar("0", root).unwrap(), Laurent::zero(root));
        assert_eq!(parse_scalar("q^(1) + q^(-1)", root).unwrap(), q_integer(root, 2));
        assert_eq!(parse_scalar("-1*q^(1/2)", root).unwrap(), -q_power(root, QExponent::HALF).unwrap());
        assert!(parse_scalar("1*q^(1/3)", root).is_err());
        assert!(parse_scalar("1 +", root).is_err());
        assert!(parse_scalar("abc", root).is_err());
        assert!(parse_scalar("1/0", root).is_err());
    }

    proptest! {
        #[test]
        fn text_round_trip(terms in prop::collection::vec((-9i64..=9, -20i64..=20, 1i64..=5), 0..6)) {
            let root = RootConfig::new(6).unwrap();
            let p = Laurent::from_terms(root, terms.into_iter().map(|(e, n, d)| (e, BigRational::new(n.into(), d.into()))));
            prop_assert_eq!(parse_scalar(&p.to_string(), root).unwrap(), p);
        }
    }
}
