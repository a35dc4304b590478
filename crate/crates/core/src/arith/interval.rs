use core::fmt;

use num_traits::{Signed, Zero};

use super::rational::BigRational;
use crate::{Error, Result};

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::Precondition("interval with lo > hi"));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(x: BigRational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn overlaps(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Interval product; exact since the endpoints are rational.
    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().cloned().unwrap_or_default();
        let hi = products.iter().max().cloned().unwrap_or_default();
        Self { lo, hi }
    }

    /// Square of an interval with non-negative lower end.
    pub fn square_nonneg(&self) -> Self {
        debug_assert!(!self.lo.is_negative());
        Self {
            lo: &self.lo * &self.lo,
            hi: &self.hi * &self.hi,
        }
    }

    /// `[max(1, lo), max(1, hi)]`
    pub fn max_one(&self) -> Self {
        let one = BigRational::from_integer(1.into());
        Self {
            lo: self.lo.clone().max(one.clone()),
            hi: self.hi.clone().max(one),
        }
    }

    pub fn is_nonneg(&self) -> bool {
        !self.lo.is_negative() || self.lo.is_zero()
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
