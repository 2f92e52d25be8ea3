use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::{q_power, Laurent, QExponent, RingError, RootConfig};

/// A Laurent polynomial divided by a power of `q − q⁻¹`.
///
/// Holds the scalars that leave the polynomial ring: the diagonal values
/// `Y_ii^± = ∓q^(∓1/2)/(q − q⁻¹)`, the counit, and half-integer q-numbers.
/// Kept reduced: the numerator is not divisible by `q − q⁻¹` unless the pole
/// order is zero, so structural equality is equality of fractions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Localized {
    numerator: Laurent,
    pole: u32,
}

/// `q − q⁻¹`.
pub fn q_delta(root: RootConfig) -> Laurent {
    let d = root.denominator() as i64;
    Laurent::from_terms(root, [(d, BigRational::from_integer(1.into())), (-d, BigRational::from_integer((-1).into()))])
}

impl Localized {
    pub fn new(numerator: Laurent, pole: u32) -> Self {
        let mut out = Localized { numerator, pole };
        out.reduce();
        out
    }

    pub fn zero(root: RootConfig) -> Self {
        Localized::from(Laurent::zero(root))
    }

    pub fn one(root: RootConfig) -> Self {
        Localized::from(Laurent::one(root))
    }

    /// `1 / (q − q⁻¹)^k`.
    pub fn inverse_delta_power(root: RootConfig, k: u32) -> Self {
        Localized::new(Laurent::one(root), k)
    }

    pub fn q_power(root: RootConfig, e: QExponent) -> Result<Self, RingError> {
        Ok(Localized::from(q_power(root, e)?))
    }

    fn reduce(&mut self) {
        if self.numerator.is_zero() {
            self.pole = 0;
            return;
        }
        let delta = q_delta(self.numerator.root());
        while self.pole > 0 {
            match self.numerator.div_exact(&delta) {
                Some(q) => {
                    self.numerator = q;
                    self.pole -= 1;
                }
                None => break,
            }
        }
    }

    pub fn root(&self) -> RootConfig {
        self.numerator.root()
    }

    pub fn numerator(&self) -> &Laurent {
        &self.numerator
    }

    pub fn pole(&self) -> u32 {
        self.pole
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// The polynomial this fraction equals, if it has no pole.
    pub fn to_laurent(&self) -> Option<Laurent> {
        (self.pole == 0).then(|| self.numerator.clone())
    }

    /// Numerator after raising the pole order to `pole`.
    pub fn numerator_at_pole(&self, pole: u32) -> Laurent {
        debug_assert!(pole >= self.pole);
        &self.numerator * &q_delta(self.root()).pow(pole - self.pole)
    }

    pub fn try_add(&self, rhs: &Localized) -> Result<Localized, RingError> {
        self.root().check(rhs.root())?;
        let pole = self.pole.max(rhs.pole);
        Ok(Localized::new(self.numerator_at_pole(pole) + rhs.numerator_at_pole(pole), pole))
    }

    pub fn try_mul(&self, rhs: &Localized) -> Result<Localized, RingError> {
        Ok(Localized::new(self.numerator.try_mul(&rhs.numerator)?, self.pole + rhs.pole))
    }

    pub fn scale_laurent(&self, c: &Laurent) -> Localized {
        Localized::new(&self.numerator * c, self.pole)
    }
}

impl From<Laurent> for Localized {
    fn from(numerator: Laurent) -> Self {
        Localized { numerator, pole: 0 }
    }
}

impl Add<&Localized> for &Localized {
    type Output = Localized;
    fn add(self, rhs: &Localized) -> Localized {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{}", e))
    }
}

impl Sub<&Localized> for &Localized {
    type Output = Localized;
    fn sub(self, rhs: &Localized) -> Localized {
        self + &(-rhs)
    }
}

impl Mul<&Localized> for &Localized {
    type Output = Localized;
    fn mul(self, rhs: &Localized) -> Localized {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{}", e))
    }
}

impl Mul for Localized {
    type Output = Localized;
    fn mul(self, rhs: Localized) -> Localized {
        &self * &rhs
    }
}

impl Neg for &Localized {
    type Output = Localized;
    fn neg(self) -> Localized {
        Localized { numerator: -&self.numerator, pole: self.pole }
    }
}

impl fmt::Display for Localized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pole == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({})/(q - q^(-1))^{}", self.numerator, self.pole)
        }
    }
}
