use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use super::rational::BigRational;
use crate::{Error, Result};

/// Dense polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending order of degree and the leading
/// coefficient is never zero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `t - r`
    pub fn linear_root(r: BigInt) -> Self {
        Self::new(vec![-r, BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplicity of `0` as a root (number of vanishing low-order coefficients).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides by `t^valuation`.
    pub fn strip_zero_roots(&self) -> Self {
        Self::new(self.coeffs[self.valuation()..].to_vec())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    /// Sign of `p(x)`, computed on the homogenized integer form to avoid
    /// rational normalization.
    pub fn sign_at(&self, x: &BigRational) -> Sign {
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc.sign()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `t^deg · p(1/t)`. Trailing zero coefficients of `p` disappear, so the
    /// degree drops by [`valuation`](Self::valuation).
    pub fn reverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::new(self.coeffs.iter().rev().cloned().collect()))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub(crate) fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|x| {
                    debug_assert!((x % c).is_zero());
                    x / c
                })
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides by the content, keeping the sign of every coefficient.
    pub fn reduce_content(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.div_scalar_exact(&c)
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let p = self.reduce_content();
        match p.leading() {
            Some(lc) if lc.is_negative() => -p,
            _ => p,
        }
    }

    /// `lc(d)^(deg p - deg d + 1) · p mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-division by the zero polynomial");
        let Some(dp) = self.degree() else {
            return Self::zero();
        };
        if dp < dd {
            return self.clone();
        }
        let lc = &d.coeffs[dd];
        let mut r = self.coeffs.clone();
        for k in (0..=dp - dd).rev() {
            let c = r[dd + k].clone();
            for x in r.iter_mut() {
                *x *= lc;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dj;
            }
        }
        Self::new(r)
    }

    /// Pseudo-remainder scaled by a positive constant only, so that its sign
    /// pattern matches the true remainder over the rationals.
    pub(crate) fn positive_pseudo_rem(&self, d: &Self) -> Self {
        let r = self.pseudo_rem(d);
        let (dp, dd) = (self.degree().unwrap_or(0), d.degree().unwrap_or(0));
        let odd_power = dp >= dd && (dp - dd + 1) % 2 == 1;
        if odd_power && d.leading().is_some_and(Signed::is_negative) {
            -r
        } else {
            r
        }
    }

    /// Quotient and remainder by a divisor with leading coefficient `±1`.
    pub fn div_rem_unit(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = &d.coeffs[dd];
        assert!(
            lc.abs().is_one(),
            "divisor must have unit leading coefficient"
        );
        let Some(dp) = self.degree().filter(|&dp| dp >= dd) else {
            return (Self::zero(), self.clone());
        };
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); dp - dd + 1];
        for k in (0..=dp - dd).rev() {
            let c = &r[dd + k] * lc;
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dj;
            }
            q[k] = c;
        }
        (Self::new(q), Self::new(r))
    }

    /// `self / d` when the quotient exists in `Z[t]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let Some(dp) = self.degree() else {
            return Some(Self::zero());
        };
        if dp < dd {
            return None;
        }
        let lc = &d.coeffs[dd];
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); dp - dd + 1];
        for k in (0..=dp - dd).rev() {
            let (c, rem) = r[dd + k].div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dj;
            }
            q[k] = c;
        }
        r.iter().all(Zero::is_zero).then(|| Self::new(q))
    }

    /// Divides out `d` as often as it goes; returns the cofactor and the count.
    pub fn divide_out(&self, d: &Self) -> (Self, usize) {
        let mut p = self.clone();
        let mut k = 0;
        if d.is_constant() || p.is_zero() {
            return (p, 0);
        }
        while let Some(q) = p.div_exact(d) {
            p = q;
            k += 1;
        }
        (p, k)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner(t))`
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// `den^deg · p(num·t / den)`: the integer polynomial whose roots are the
    /// roots of `p` divided by `num/den`.
    pub fn scale_variable(&self, num: &BigInt, den: &BigInt) -> Self {
        let Some(n) = self.degree() else {
            return Self::zero();
        };
        let mut num_pow = BigInt::one();
        let mut den_pows = Vec::with_capacity(n + 1);
        let mut d = BigInt::one();
        for _ in 0..=n {
            den_pows.push(d.clone());
            d *= den;
        }
        let mut out = Vec::with_capacity(n + 1);
        for (k, c) in self.coeffs.iter().enumerate() {
            out.push(c * &num_pow * &den_pows[n - k]);
            num_pow *= num;
        }
        Self::new(out)
    }

    /// `t^n mod self` for a divisor with unit leading coefficient.
    pub fn t_pow_mod(&self, n: u64) -> Self {
        let mut acc = Self::one();
        let mut base = Self::t().div_rem_unit(self).1;
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).div_rem_unit(self).1;
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).div_rem_unit(self).1;
            }
        }
        acc.div_rem_unit(self).1
    }

    /// Greatest common divisor over the rationals, returned primitive with
    /// positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Yun's square-free decomposition of the primitive part:
    /// `p = c · ∏ s_i^i` with each `s_i` square-free, pairwise coprime,
    /// primitive and non-constant. Returns `(s_i, i)` pairs.
    pub fn square_free_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.primitive_part();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_exact(&a0).expect("gcd divides f");
        let c = fp.div_exact(&a0).expect("gcd divides f'");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            let b_next = b.div_exact(&a).expect("gcd divides b");
            let c_next = d.div_exact(&a).expect("gcd divides d");
            if !a.is_constant() {
                out.push((a, i));
            }
            d = &c_next - &b_next.derivative();
            b = b_next;
            i += 1;
        }
        out
    }

    pub fn square_free_part(&self) -> Self {
        if self.is_constant() {
            return self.primitive_part();
        }
        let f = self.primitive_part();
        f.div_exact(&f.gcd(&f.derivative())).expect("gcd divides f")
    }

    /// An integer `B` with every complex root strictly inside `|z| < B`.
    pub fn cauchy_bound(&self) -> BigInt {
        let Some(n) = self.degree() else {
            return BigInt::one();
        };
        let lc = self.coeffs[n].abs();
        let max = self.coeffs[..n]
            .iter()
            .map(|c| c.abs().div_ceil(&lc))
            .max()
            .unwrap_or_default();
        max + 2
    }

    /// Human-readable form, e.g. `t^4 - 2t^3 + 3t^2 - 2t + 1`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if !a.is_one() || k == 0 {
                let _ = write!(s, "{a}");
            }
            match k {
                0 => {}
                1 => s.push('t'),
                _ => {
                    let _ = write!(s, "t^{k}");
                }
            }
        }
        s
    }
}

/// Product of two polynomials.
pub fn poly_mul(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    p * q
}

/// `t^deg p · p(1/t)`.
pub fn poly_reverse(p: &IntPolynomial) -> Result<IntPolynomial> {
    p.reverse()
}

/// Primitive gcd over the rationals with positive leading coefficient.
pub fn poly_gcd(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    p.gcd(q)
}

/// Resultant `Res(p, q) = lc(p)^deg q · ∏ q(α)` over the roots `α` of `p`,
/// by the subresultant algorithm.
pub fn resultant(p: &IntPolynomial, q: &IntPolynomial) -> BigInt {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return BigInt::zero();
    };
    if dp == 0 {
        return Pow::pow(&p.coeffs[0], dq);
    }
    if dq == 0 {
        return Pow::pow(&q.coeffs[0], dp);
    }
    let (ca, cb) = (p.content(), q.content());
    let mut a = p.div_scalar_exact(&ca);
    let mut b = q.div_scalar_exact(&cb);
    let t = Pow::pow(&ca, dq) * Pow::pow(&cb, dp);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    let mut s = BigInt::one();
    if dp < dq {
        core::mem::swap(&mut a, &mut b);
        if dp % 2 == 1 && dq % 2 == 1 {
            s = -s;
        }
    }
    loop {
        let da = a.degree().expect("non-zero");
        let db = b.degree().expect("non-zero");
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let divisor = &g * Pow::pow(&h, delta);
        b = r.div_scalar_exact(&divisor);
        g = a.leading().expect("non-zero").clone();
        if delta > 0 {
            h = Pow::pow(&g, delta) / Pow::pow(&h, delta - 1);
        }
        match b.degree() {
            None => return BigInt::zero(),
            Some(0) => break,
            Some(_) => {}
        }
    }
    let da = a.degree().expect("non-zero");
    let h = Pow::pow(&b.coeffs[0], da) / Pow::pow(&h, da - 1);
    s * t * h
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self.pretty())
    }
}

/// Comma-separated ascending coefficients, e.g. `1,-1,1` for `t^2 - t + 1`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed polynomial {0:?}: expected comma-separated integer coefficients")]
pub struct ParsePolynomialError(pub String);

impl FromStr for IntPolynomial {
    type Err = ParsePolynomialError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let err = || ParsePolynomialError(String::from(s));
        if s.trim().is_empty() {
            return Err(err());
        }
        s.split(',')
            .map(|c| BigInt::from_str(c.trim()).map_err(|_| err()))
            .collect::<core::result::Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}
