use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

pub use num_rational::BigRational;

/// Exact non-negative square root of `q`, if `q` is the square of a rational.
pub fn is_square_rational(q: &BigRational) -> Option<BigRational> {
    if q.is_zero() {
        return Some(BigRational::zero());
    }
    if q.numer().sign() == Sign::Minus {
        return None;
    }
    // lowest terms, so numerator and denominator must both be squares
    let n = exact_sqrt(q.numer())?;
    let d = exact_sqrt(q.denom())?;
    Some(BigRational::new(n, d))
}

pub(crate) fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// `num / 2^exp`.
pub fn dyadic(num: BigInt, exp: u32) -> BigRational {
    BigRational::new(num, BigInt::one() << exp)
}

pub(crate) fn from_int(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}
