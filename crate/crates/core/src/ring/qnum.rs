use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{Laurent, Localized, QExponent, RingError, RootConfig};

/// `q^e` as a monomial in `t`.
pub fn q_power(root: RootConfig, e: QExponent) -> Result<Laurent, RingError> {
    Ok(Laurent::monomial(root, root.t_exponent(e)?, BigRational::one()))
}

/// The q-integer `[k]_q = (q^k − q^-k)/(q − q⁻¹) = Σ_{j<k} q^(k−1−2j)`.
pub fn q_integer(root: RootConfig, k: i64) -> Laurent {
    let d = root.denominator() as i64;
    let n = k.unsigned_abs() as i64;
    let sign = BigRational::from_integer(BigInt::from(k.signum()));
    Laurent::from_terms(root, (0..n).map(|j| ((n - 1 - 2 * j) * d, sign.clone())))
}

/// `[k]_q! = [1]_q ⋯ [k]_q`.
pub fn q_factorial(root: RootConfig, k: u32) -> Laurent {
    (1..=k as i64).fold(Laurent::one(root), |acc, j| &acc * &q_integer(root, j))
}

/// `[x]_q` for a rational `x`; leaves the polynomial ring when `x` is not an integer.
pub fn q_number(root: RootConfig, x: QExponent) -> Result<Localized, RingError> {
    if x.is_integer() {
        return Ok(Localized::from(q_integer(root, x.numerator())));
    }
    let num = q_power(root, x)? - q_power(root, -x)?;
    Ok(Localized::new(num, 1))
}
