use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{BigRational, IntPolynomial};
use crate::eigen::CharPolyQuartic;
use crate::{Error, Result};

/// `u + v·√m` for a radicand `m` fixed by context.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QuadNumber {
    pub u: BigRational,
    pub v: BigRational,
}

impl QuadNumber {
    pub fn new(u: BigRational, v: BigRational) -> Self {
        Self { u, v }
    }

    pub fn rational(u: BigRational) -> Self {
        Self {
            u,
            v: BigRational::zero(),
        }
    }

    pub fn from_ints(u: i64, v: i64) -> Self {
        Self::new(
            BigRational::from_integer(u.into()),
            BigRational::from_integer(v.into()),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// `u − v√m`: Galois conjugate for `m > 0`, complex conjugate for `m < 0`.
    pub fn conj(&self) -> Self {
        Self {
            u: self.u.clone(),
            v: -&self.v,
        }
    }

    pub fn mul_in(&self, other: &Self, m: i64) -> Self {
        let m = BigRational::from_integer(m.into());
        Self {
            u: &self.u * &other.u + &self.v * &other.v * m,
            v: &self.u * &other.v + &self.v * &other.u,
        }
    }
}

impl Add for &QuadNumber {
    type Output = QuadNumber;

    fn add(self, rhs: &QuadNumber) -> QuadNumber {
        QuadNumber {
            u: &self.u + &rhs.u,
            v: &self.v + &rhs.v,
        }
    }
}

impl Sub for &QuadNumber {
    type Output = QuadNumber;

    fn sub(self, rhs: &QuadNumber) -> QuadNumber {
        QuadNumber {
            u: &self.u - &rhs.u,
            v: &self.v - &rhs.v,
        }
    }
}

impl Neg for &QuadNumber {
    type Output = QuadNumber;

    fn neg(self) -> QuadNumber {
        QuadNumber {
            u: -&self.u,
            v: -&self.v,
        }
    }
}

impl Neg for QuadNumber {
    type Output = QuadNumber;

    fn neg(self) -> QuadNumber {
        -&self
    }
}

impl Mul<&BigRational> for &QuadNumber {
    type Output = QuadNumber;

    fn mul(self, rhs: &BigRational) -> QuadNumber {
        QuadNumber {
            u: &self.u * rhs,
            v: &self.v * rhs,
        }
    }
}

pub fn is_squarefree(m: i64) -> bool {
    if m == 0 {
        return false;
    }
    let mut n = m.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        if n.is_multiple_of(p) {
            n /= p;
        }
        p += 1;
    }
    true
}

/// The 2×2 matrix by which an endomorphism acts on `ℂ²`, with entries in
/// `ℚ(√m)`. For `m = 1` the field is `ℚ` and `√m` parts are folded in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AnalyticRep {
    m: i64,
    entries: [[QuadNumber; 2]; 2],
}

impl AnalyticRep {
    pub fn new(m: i64, entries: [[QuadNumber; 2]; 2]) -> Result<Self> {
        if !is_squarefree(m) {
            return Err(Error::Precondition(
                "field parameter must be square-free and non-zero",
            ));
        }
        let entries = if m == 1 {
            entries.map(|row| row.map(|x| QuadNumber::rational(&x.u + &x.v)))
        } else {
            entries
        };
        Ok(Self { m, entries })
    }

    /// Matrix over `ℚ` with integer entries.
    pub fn rational_i64s(rows: [[i64; 2]; 2]) -> Self {
        let entries = rows.map(|r| r.map(|x| QuadNumber::from_ints(x, 0)));
        Self { m: 1, entries }
    }

    pub fn field_param(&self) -> i64 {
        self.m
    }

    pub fn entries(&self) -> &[[QuadNumber; 2]; 2] {
        &self.entries
    }

    pub fn trace(&self) -> QuadNumber {
        &self.entries[0][0] + &self.entries[1][1]
    }

    pub fn det(&self) -> QuadNumber {
        let [[a, b], [c, d]] = &self.entries;
        &a.mul_in(d, self.m) - &b.mul_in(c, self.m)
    }

    /// `P^a·conj(P^a)` with `P^a = t² − T·t + D`.
    pub fn rational_char_poly(&self) -> Result<CharPolyQuartic> {
        let m = self.m;
        let (t, d) = (self.trace(), self.det());
        let (tc, dc) = (t.conj(), d.conj());
        let c3 = -(&t + &tc);
        let c2 = &(&d + &dc) + &t.mul_in(&tc, m);
        let c1 = -(&t.mul_in(&dc, m) + &tc.mul_in(&d, m));
        let c0 = d.mul_in(&dc, m);
        let mut coeffs = alloc::vec::Vec::with_capacity(5);
        for c in [c0, c1, c2, c3] {
            debug_assert!(c.v.is_zero());
            if !c.u.is_integer() {
                return Err(Error::NonIntegral("analytic representation"));
            }
            coeffs.push(c.u.to_integer());
        }
        coeffs.push(BigInt::one());
        CharPolyQuartic::new(IntPolynomial::new(coeffs))
    }
}
