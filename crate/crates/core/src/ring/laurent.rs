use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{QExponent, RingError, RootConfig};

/// A Laurent polynomial in `t = q^(1/D)` with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality. Arithmetic through the `std::ops` traits panics when the operands
/// carry different roots; the `try_*` methods report it instead.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Laurent {
    root: RootConfig,
    terms: BTreeMap<i64, BigRational>,
}

impl Laurent {
    pub fn zero(root: RootConfig) -> Self {
        Laurent { root, terms: BTreeMap::new() }
    }

    pub fn one(root: RootConfig) -> Self {
        Laurent::constant(root, BigRational::one())
    }

    pub fn constant(root: RootConfig, c: BigRational) -> Self {
        Laurent::monomial(root, 0, c)
    }

    pub fn from_integer(root: RootConfig, c: i64) -> Self {
        Laurent::constant(root, BigRational::from_integer(BigInt::from(c)))
    }

    /// `c · t^exponent`.
    pub fn monomial(root: RootConfig, exponent: i64, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Laurent { root, terms }
    }

    pub fn from_terms<I>(root: RootConfig, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        let mut out = Laurent::zero(root);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn root(&self) -> RootConfig {
        self.root
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// The value if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Terms as `(exponent of t, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Terms as `(exponent of q, coefficient)`.
    pub fn q_terms(&self) -> impl Iterator<Item = (QExponent, &BigRational)> + '_ {
        self.terms.iter().map(move |(e, c)| (self.root.q_exponent(*e), c))
    }

    pub fn coefficient(&self, t_exponent: i64) -> BigRational {
        self.terms.get(&t_exponent).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, e: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, rhs: &Laurent) -> Result<Laurent, RingError> {
        self.root.check(rhs.root)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Laurent) -> Result<Laurent, RingError> {
        self.root.check(rhs.root)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &Laurent) -> Result<Laurent, RingError> {
        self.root.check(rhs.root)?;
        let mut out = Laurent::zero(self.root);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Laurent {
        if c.is_zero() {
            return Laurent::zero(self.root);
        }
        Laurent { root: self.root, terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Laurent {
        Laurent { root: self.root, terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect() }
    }

    /// The bar involution `t ↦ t⁻¹`.
    pub fn bar(&self) -> Laurent {
        Laurent { root: self.root, terms: self.terms.iter().map(|(e, v)| (-e, v.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Laurent {
        let mut acc = Laurent::one(self.root);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Laurent) -> Option<Laurent> {
        if divisor.is_zero() || self.root != divisor.root {
            return None;
        }
        if self.is_zero() {
            return Some(Laurent::zero(self.root));
        }
        let a_low = self.min_exponent()?;
        let b_low = divisor.min_exponent()?;
        let b_high = divisor.max_exponent()? - b_low;
        let b_lead = divisor.terms.get(&(b_high + b_low))?.clone();
        // long division on the polynomials self·t^-a_low and divisor·t^-b_low
        let mut rem: BTreeMap<i64, BigRational> = self.terms.iter().map(|(e, c)| (e - a_low, c.clone())).collect();
        let mut quotient = Laurent::zero(self.root);
        while let Some((&deg, lead)) = rem.iter().next_back() {
            if deg < b_high {
                return None;
            }
            let coef = lead / &b_lead;
            let shift = deg - b_high;
            for (e, c) in &divisor.terms {
                let target = e - b_low + shift;
                let updated = rem.get(&target).cloned().unwrap_or_else(BigRational::zero) - c * &coef;
                if updated.is_zero() {
                    rem.remove(&target);
                } else {
                    rem.insert(target, updated);
                }
            }
            quotient.add_term(shift, coef);
        }
        Some(quotient.shift(a_low - b_low))
    }

    /// Exact value at `t = t0`.
    pub fn eval_at(&self, t0: &BigRational) -> Result<BigRational, RingError> {
        if t0.is_zero() {
            if self.min_exponent().is_some_and(|e| e < 0) {
                return Err(RingError::DivisionByZero);
            }
            return Ok(self.coefficient(0));
        }
        let inv = t0.recip();
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let base = if *e < 0 { &inv } else { t0 };
            total += c * rational_pow(base, e.unsigned_abs());
        }
        Ok(total)
    }

    /// Value at `q = 1`.
    pub fn classical(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |acc, c| acc + c)
    }
}

fn rational_pow(base: &BigRational, mut k: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut b = base.clone();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        k >>= 1;
    }
    acc
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Laurent> for &Laurent {
            type Output = Laurent;
            fn $method(self, rhs: &Laurent) -> Laurent {
                self.$try(rhs).unwrap_or_else(|e| panic!("{}", e))
            }
        }
        impl $trait<Laurent> for Laurent {
            type Output = Laurent;
            fn $method(self, rhs: Laurent) -> Laurent {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Laurent> for Laurent {
            type Output = Laurent;
            fn $method(self, rhs: &Laurent) -> Laurent {
                (&self).$method(rhs)
            }
        }
        impl $trait<Laurent> for &Laurent {
            type Output = Laurent;
            fn $method(self, rhs: Laurent) -> Laurent {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        self.root.check(rhs.root).unwrap_or_else(|e| panic!("{}", e));
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        self.root.check(rhs.root).unwrap_or_else(|e| panic!("{}", e));
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { root: self.root, terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_scalar(f, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q_power;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn canonical_form_drops_cancelled_terms() {
        let root = RootConfig::HALF;
        let a = Laurent::from_terms(root, [(1, r(1, 1)), (-1, r(2, 3))]);
        let b = Laurent::from_terms(root, [(1, r(-1, 1))]);
        let s = &a + &b;
        assert_eq!(s, Laurent::monomial(root, -1, r(2, 3)));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn mixing_roots_is_an_error() {
        let a = Laurent::one(RootConfig::HALF);
        let b = Laurent::one(RootConfig::new(4).unwrap());
        assert_eq!(a.try_add(&b), Err(RingError::RootMismatch { left: 2, right: 4 }));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    #[should_panic(expected = "different roots")]
    fn operator_mixing_roots_panics() {
        let _ = Laurent::one(RootConfig::HALF) + Laurent::one(RootConfig::new(6).unwrap());
    }

    #[test]
    fn exact_division() {
        let root = RootConfig::HALF;
        let delta = q_power(root, 1.into()).unwrap() - q_power(root, (-1).into()).unwrap();
        let p = &delta * &Laurent::from_terms(root, [(3, r(2, 1)), (-5, r(1, 7))]);
        assert_eq!(p.div_exact(&delta).unwrap(), Laurent::from_terms(root, [(3, r(2, 1)), (-5, r(1, 7))]));
        assert!(Laurent::one(root).div_exact(&delta).is_none());
        assert!(delta.div_exact(&Laurent::zero(root)).is_none());
        assert!(Laurent::zero(root).div_exact(&delta).unwrap().is_zero());
    }

    #[test]
    fn evaluation() {
        let root = RootConfig::HALF;
        let p = Laurent::from_terms(root, [(2, r(1, 1)), (-2, r(1, 1))]);
        assert_eq!(p.eval_at(&r(1, 1)).unwrap(), r(2, 1));
        assert_eq!(Laurent::zero(root).eval_at(&r(5, 1)).unwrap(), r(0, 1));
        assert_eq!(p.eval_at(&r(0, 1)), Err(RingError::DivisionByZero));
        let pos = Laurent::from_terms(root, [(0, r(3, 1)), (2, r(1, 1))]);
        assert_eq!(pos.eval_at(&r(0, 1)).unwrap(), r(3, 1));
    }
}
