//! Exact scalars: Laurent polynomials in `t = q^(1/D)` over the rationals.

mod laurent;
mod localized;
mod qnum;
mod text;

pub use laurent::Laurent;
pub use localized::{q_delta, Localized};
pub use qnum::{q_factorial, q_integer, q_number, q_power};
pub use text::parse_scalar;

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("root denominator must be at least 2, got {0}")]
    InvalidRoot(u32),
    #[error("scalars over different roots: D={left} and D={right}")]
    RootMismatch { left: u32, right: u32 },
    #[error("exponent {exponent} is not a multiple of 1/{denominator}")]
    Unrepresentable { exponent: QExponent, denominator: u32 },
    #[error("evaluation at t = 0 of a polynomial with negative exponents")]
    DivisionByZero,
    #[error("exponent overflow")]
    Overflow,
    #[error("cannot parse scalar {input:?}: {reason}")]
    Parse { input: alloc::string::String, reason: &'static str },
}

/// The root `t = q^(1/D)` all scalars of a session are expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootConfig {
    denominator: u32,
}

impl RootConfig {
    /// `t = q^(1/2)`, enough for every construction except the Λ-corrected embedding.
    pub const HALF: RootConfig = RootConfig { denominator: 2 };

    pub fn new(denominator: u32) -> Result<Self, RingError> {
        if denominator < 2 {
            return Err(RingError::InvalidRoot(denominator));
        }
        Ok(RootConfig { denominator })
    }

    /// `D = 2·k1·k2`, which represents every exponent of the Weyl-route embedding.
    pub fn for_embedding(k1: usize, k2: usize) -> Result<Self, RingError> {
        let d = 2u64 * k1 as u64 * k2 as u64;
        let d = u32::try_from(d).map_err(|_| RingError::Overflow)?;
        RootConfig::new(d)
    }

    pub fn denominator(self) -> u32 {
        self.denominator
    }

    /// Whether `q^e` is a monomial in `t`.
    pub fn supports(self, e: QExponent) -> bool {
        (e.0 * self.denominator as i64).is_integer()
    }

    /// Exponent of `t` realizing `q^e`.
    pub fn t_exponent(self, e: QExponent) -> Result<i64, RingError> {
        let scaled = e.0 * self.denominator as i64;
        if scaled.is_integer() {
            Ok(scaled.to_integer())
        } else {
            Err(RingError::Unrepresentable { exponent: e, denominator: self.denominator })
        }
    }

    pub fn q_exponent(self, t_exponent: i64) -> QExponent {
        QExponent(Ratio::new(t_exponent, self.denominator as i64))
    }

    pub(crate) fn check(self, other: RootConfig) -> Result<(), RingError> {
        if self == other {
            Ok(())
        } else {
            Err(RingError::RootMismatch { left: self.denominator, right: other.denominator })
        }
    }
}

/// An exact rational exponent of `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QExponent(Ratio<i64>);

impl QExponent {
    pub const ZERO: QExponent = QExponent(Ratio::new_raw(0, 1));
    pub const HALF: QExponent = QExponent(Ratio::new_raw(1, 2));

    pub fn new(numerator: i64, denominator: i64) -> Self {
        QExponent(Ratio::new(numerator, denominator))
    }

    pub fn integer(k: i64) -> Self {
        QExponent(Ratio::from_integer(k))
    }

    pub fn ratio(self) -> Ratio<i64> {
        self.0
    }

    pub fn numerator(self) -> i64 {
        *self.0.numer()
    }

    pub fn denominator(self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(self) -> bool {
        self.0.is_integer()
    }
}

impl From<i64> for QExponent {
    fn from(k: i64) -> Self {
        QExponent::integer(k)
    }
}

impl From<Ratio<i64>> for QExponent {
    fn from(r: Ratio<i64>) -> Self {
        QExponent(r)
    }
}

impl Add for QExponent {
    type Output = QExponent;
    fn add(self, rhs: QExponent) -> QExponent {
        QExponent(self.0 + rhs.0)
    }
}

impl Sub for QExponent {
    type Output = QExponent;
    fn sub(self, rhs: QExponent) -> QExponent {
        QExponent(self.0 - rhs.0)
    }
}

impl Neg for QExponent {
    type Output = QExponent;
    fn neg(self) -> QExponent {
        QExponent(-self.0)
    }
}

impl Mul<i64> for QExponent {
    type Output = QExponent;
    fn mul(self, rhs: i64) -> QExponent {
        QExponent(self.0 * rhs)
    }
}

impl Mul for QExponent {
    type Output = QExponent;
    fn mul(self, rhs: QExponent) -> QExponent {
        QExponent(self.0 * rhs.0)
    }
}

impl fmt::Display for QExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}
