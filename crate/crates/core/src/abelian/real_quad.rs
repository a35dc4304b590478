use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{BigRational, IntPolynomial};
use crate::behavior::{classify_char_poly, BehaviorReport, Verdict};
use crate::eigen::CharPolyQuartic;
use crate::endo::is_squarefree;
use crate::{Error, Result};

/// `a + b·ω` in the maximal order of `ℚ(√d)`, with `ω = √d` for
/// `d ≡ 2, 3 (mod 4)` and `ω = (1 + √d)/2` for `d ≡ 1 (mod 4)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealQuadElement {
    d: i64,
    a: BigInt,
    b: BigInt,
}

/// `u + v·√radicand`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealQuadValue {
    pub u: BigRational,
    pub v: BigRational,
    pub radicand: i64,
}

impl RealQuadElement {
    pub fn new(d: i64, a: BigInt, b: BigInt) -> Result<Self> {
        if d <= 1 || !is_squarefree(d) {
            return Err(Error::InvalidDescriptor(alloc::format!(
                "real quadratic radicand must be square-free and > 1, got {d}"
            )));
        }
        Ok(Self { d, a, b })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn omega_is_half(&self) -> bool {
        self.d.mod_floor(&4) == 1
    }

    /// The two real embeddings, `+√d` first.
    pub fn eigenvalues(&self) -> (RealQuadValue, RealQuadValue) {
        let (a, b) = (
            BigRational::from_integer(self.a.clone()),
            BigRational::from_integer(self.b.clone()),
        );
        let (u, v) = if self.omega_is_half() {
            let half = BigRational::new(BigInt::one(), 2.into());
            (a + &b * &half, b * half)
        } else {
            (a, b)
        };
        let plus = RealQuadValue {
            u: u.clone(),
            v: v.clone(),
            radicand: self.d,
        };
        let minus = RealQuadValue {
            u,
            v: -v,
            radicand: self.d,
        };
        (plus, minus)
    }

    /// `t² − tr·t + N`, the characteristic polynomial of the analytic representation.
    pub fn char_poly(&self) -> IntPolynomial {
        let (a, b, d) = (&self.a, &self.b, BigInt::from(self.d));
        let (trace, norm) = if self.omega_is_half() {
            // ω² = ω + (d − 1)/4
            let c = (&d - 1) / 4;
            (BigInt::from(2) * a + b, a * a + a * b - &c * b * b)
        } else {
            (BigInt::from(2) * a, a * a - &d * b * b)
        };
        IntPolynomial::new(alloc::vec![norm, -trace, BigInt::one()])
    }

    /// `(t² − tr·t + N)²`
    pub fn rational_char_poly(&self) -> CharPolyQuartic {
        CharPolyQuartic::new(self.char_poly().pow(2)).expect("monic quartic")
    }

    /// B2 exactly for `±1`, B1 otherwise.
    pub fn classify(&self) -> Result<BehaviorReport> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let report = classify_char_poly(&self.rational_char_poly())?;
        let unit = self.b.is_zero() && self.a.abs().is_one();
        debug_assert_eq!(report.verdict == Verdict::B2, unit);
        debug_assert_ne!(report.verdict, Verdict::B3);
        Ok(report)
    }
}
