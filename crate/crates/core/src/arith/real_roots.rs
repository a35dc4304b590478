//! Sturm sequences, Cauchy indices and real root isolation.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_traits::One;

use super::interval::RationalInterval;
use super::poly::IntPolynomial;
use super::rational::{dyadic, from_int, BigRational};
use crate::{Error, Result};

/// Default isolation width is `2^-DEFAULT_ROOT_WIDTH_BITS`.
pub const DEFAULT_ROOT_WIDTH_BITS: u32 = 32;

/// Signed remainder sequence `a, b, -rem(a, b), ...`, each term scaled by a
/// positive constant only.
fn signed_remainder_sequence(a: &IntPolynomial, b: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut seq = vec![a.clone()];
    if b.is_zero() {
        return seq;
    }
    seq.push(b.clone());
    loop {
        let n = seq.len();
        let r = seq[n - 2].positive_pseudo_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push((-r).reduce_content());
    }
    seq
}

/// Sturm sequence `p, p', ...`. Also valid when `p` has repeated roots: the
/// variation count then still counts distinct roots.
pub fn sturm_sequence(p: &IntPolynomial) -> Vec<IntPolynomial> {
    signed_remainder_sequence(&p.reduce_content(), &p.derivative().reduce_content())
}

/// Number of sign changes, ignoring zeros.
pub fn sign_variations<I: IntoIterator<Item = Sign>>(signs: I) -> usize {
    let mut last = Sign::NoSign;
    let mut count = 0;
    for s in signs {
        if s == Sign::NoSign {
            continue;
        }
        if last != Sign::NoSign && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_at_infinity(p: &IntPolynomial, positive: bool) -> Sign {
    let Some(lc) = p.leading() else {
        return Sign::NoSign;
    };
    let odd = p.degree().unwrap_or(0) % 2 == 1;
    if positive || !odd {
        lc.sign()
    } else {
        -lc.sign()
    }
}

fn variations_at(seq: &[IntPolynomial], x: &BigRational) -> usize {
    sign_variations(seq.iter().map(|q| q.sign_at(x)))
}

fn variations_at_infinity(seq: &[IntPolynomial], positive: bool) -> usize {
    sign_variations(seq.iter().map(|q| sign_at_infinity(q, positive)))
}

/// Number of distinct real roots of `p` in the half-open interval `(lo, hi]`.
pub fn sturm_count(p: &IntPolynomial, interval: &RationalInterval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (lo, hi) = (interval.lo(), interval.hi());
    if p.sign_at(lo) == Sign::NoSign || p.sign_at(hi) == Sign::NoSign {
        return Err(Error::EndpointIsRoot);
    }
    let seq = sturm_sequence(p);
    Ok(variations_at(&seq, lo) - variations_at(&seq, hi))
}

/// Number of distinct real roots of `p`.
pub fn real_root_count(p: &IntPolynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let seq = sturm_sequence(p);
    Ok(variations_at_infinity(&seq, false) - variations_at_infinity(&seq, true))
}

/// Cauchy index of `b/a` over the whole real line: the number of jumps from
/// −∞ to +∞ minus the number of jumps from +∞ to −∞.
pub fn cauchy_index(b: &IntPolynomial, a: &IntPolynomial) -> Result<i64> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let seq = signed_remainder_sequence(a, b);
    let minus = variations_at_infinity(&seq, false) as i64;
    let plus = variations_at_infinity(&seq, true) as i64;
    Ok(minus - plus)
}

/// A point strictly between `lo` and `hi` that is not a root of `p`.
fn split_point(p: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> BigRational {
    let w = hi - lo;
    let mut den = 2i64;
    loop {
        for num in 1..den {
            let x = lo + &w * BigRational::new(num.into(), den.into());
            if p.sign_at(&x) != Sign::NoSign {
                return x;
            }
        }
        den += 1;
    }
}

/// Shrinks an isolating interval `(lo, hi]` with non-root endpoints, known to
/// hold exactly one root of the square-free `p`, to width at most `width`.
fn refine_simple(
    p: &IntPolynomial,
    mut lo: BigRational,
    mut hi: BigRational,
    width: &BigRational,
) -> RationalInterval {
    let s_lo = p.sign_at(&lo);
    let two = from_int(BigInt::from(2));
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / &two;
        match p.sign_at(&mid) {
            Sign::NoSign => return RationalInterval::point(mid),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    RationalInterval::new(lo, hi).expect("lo < hi")
}

/// Disjoint closed intervals, each holding exactly one distinct real root of
/// `p`, sorted increasingly, each of width at most `width`.
pub fn isolate_real_roots(p: &IntPolynomial, width: &BigRational) -> Result<Vec<RationalInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sqf = p.square_free_part();
    if sqf.is_constant() {
        return Ok(Vec::new());
    }
    let seq = sturm_sequence(&sqf);
    let b = from_int(sqf.cauchy_bound());
    let mut stack = vec![(-b.clone(), b)];
    let mut out = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        let count = variations_at(&seq, &lo) - variations_at(&seq, &hi);
        match count {
            0 => {}
            1 => out.push(refine_simple(&sqf, lo, hi, width)),
            _ => {
                let mid = split_point(&sqf, &lo, &hi);
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort_by(|x, y| x.lo().cmp(y.lo()));
    Ok(out)
}

/// [`isolate_real_roots`] at the default width `2^-32`.
pub fn real_root_isolation(p: &IntPolynomial) -> Result<Vec<RationalInterval>> {
    isolate_real_roots(p, &dyadic(BigInt::one(), DEFAULT_ROOT_WIDTH_BITS))
}

/// Refines an interval holding exactly one distinct real root of `p` (and
/// whose endpoints are either that root or non-roots) to width `width`.
pub fn refine_root(
    p: &IntPolynomial,
    interval: &RationalInterval,
    width: &BigRational,
) -> Result<RationalInterval> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if interval.is_point() || interval.width() <= *width {
        return Ok(interval.clone());
    }
    let sqf = p.square_free_part();
    for end in [interval.lo(), interval.hi()] {
        if sqf.sign_at(end) == Sign::NoSign {
            return Ok(RationalInterval::point(end.clone()));
        }
    }
    if sqf.sign_at(interval.lo()) == sqf.sign_at(interval.hi()) {
        return Err(Error::Precondition(
            "interval does not bracket a simple sign change",
        ));
    }
    Ok(refine_simple(
        &sqf,
        interval.lo().clone(),
        interval.hi().clone(),
        width,
    ))
}
