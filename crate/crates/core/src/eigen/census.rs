//! Exact root counts relative to circles `|z| = ρ` with rational `ρ`.
//!
//! Roots on the circle are found structurally from `gcd(S, rev S)` after
//! scaling the circle to the unit circle. The remaining roots are counted by
//! a Cayley transform to the left half-plane and a Cauchy index, which has no
//! degenerate cases.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_bigint::Sign;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{
    cauchy_index, dyadic, sturm_count, BigRational, IntPolynomial, RationalInterval,
};
use crate::{Error, Result};

/// Root counts with multiplicity relative to a circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiskCensus {
    pub inside: usize,
    pub on: usize,
    pub outside: usize,
}

/// `h` with `t^m · h(t + 1/t) = g(t)` for a palindromic `g` of degree `2m`.
pub(crate) fn trace_polynomial(g: &IntPolynomial) -> IntPolynomial {
    let n = g.degree().unwrap_or(0);
    debug_assert!(n.is_multiple_of(2));
    let m = n / 2;
    let u = IntPolynomial::t();
    let mut v_prev = IntPolynomial::constant(BigInt::from(2));
    let mut v = u.clone();
    let mut h = IntPolynomial::constant(g.coeff(m));
    for j in 1..=m {
        h = &h + &v.scale(&g.coeff(m + j));
        let next = &(&u * &v) - &v_prev;
        v_prev = v;
        v = next;
    }
    h
}

/// `t^J · k(t + 1/t)` for `J = deg k`.
pub(crate) fn untrace_polynomial(k: &IntPolynomial) -> IntPolynomial {
    let j = k.degree().unwrap_or(0);
    let t2p1 = IntPolynomial::from_i64s(&[1, 0, 1]);
    let mut out = IntPolynomial::zero();
    let mut pw = IntPolynomial::one();
    for (i, c) in k.coeffs().iter().enumerate() {
        let term = &IntPolynomial::monomial(c.clone(), j - i) * &pw;
        out = &out + &term;
        pw = &pw * &t2p1;
    }
    out
}

/// Roots of `h` in the open interval `(-2, 2)`, with multiplicity. Requires
/// `h(±2) != 0`.
fn trace_roots_inside(h: &IntPolynomial) -> Result<usize> {
    let window = RationalInterval::new(
        BigRational::from_integer((-2).into()),
        BigRational::from_integer(2.into()),
    )?;
    let mut total = 0;
    for (s, mult) in h.square_free_decomposition() {
        total += mult * sturm_count(&s, &window)?;
    }
    Ok(total)
}

/// Number of roots on the unit circle, with multiplicity, of the
/// self-inversive `g` (roots closed under `z ↦ 1/z̄`).
fn unit_circle_roots_of_self_inversive(g: &IntPolynomial) -> Result<usize> {
    let (g, a) = g.divide_out(&IntPolynomial::from_i64s(&[-1, 1]));
    let (g, b) = g.divide_out(&IntPolynomial::from_i64s(&[1, 1]));
    let g = if g.leading().is_some_and(Signed::is_negative) {
        -g
    } else {
        g
    };
    Ok(a + b + 2 * trace_roots_inside(&trace_polynomial(&g))?)
}

/// Roots of `r` strictly inside the unit disk, assuming none lie on the unit
/// circle.
fn roots_inside_unit_disk(r: &IntPolynomial) -> Result<usize> {
    let n = r.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Ok(0);
    }
    // F(w) = (1-w)^n r((1+w)/(1-w)); |z| < 1 iff Re w < 0
    let one_plus = IntPolynomial::from_i64s(&[1, 1]);
    let one_minus = IntPolynomial::from_i64s(&[1, -1]);
    let mut plus_pows = vec![IntPolynomial::one()];
    let mut minus_pows = vec![IntPolynomial::one()];
    for k in 1..=n {
        plus_pows.push(&plus_pows[k - 1] * &one_plus);
        minus_pows.push(&minus_pows[k - 1] * &one_minus);
    }
    let mut f = IntPolynomial::zero();
    for (k, c) in r.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        f = &f + &(&plus_pows[k] * &minus_pows[n - k]).scale(c);
    }
    debug_assert_eq!(f.degree(), Some(n));
    // F(iy) = A(y) + i B(y)
    let mut a = vec![BigInt::zero(); n + 1];
    let mut b = vec![BigInt::zero(); n + 1];
    for (k, c) in f.coeffs().iter().enumerate() {
        let neg = (k / 2) % 2 == 1;
        let v = if neg { -c } else { c.clone() };
        if k % 2 == 0 {
            a[k] = v;
        } else {
            b[k] = v;
        }
    }
    let (a, b) = (IntPolynomial::new(a), IntPolynomial::new(b));
    // A is even and B is odd, and A(0) = F(0) != 0, so their degrees differ
    // in parity; when deg B > deg A the ratio B/A tends to ±∞ with opposite
    // signs at the two ends
    let limit = match (a.degree(), b.degree()) {
        (Some(da), Some(db)) if db > da => {
            if a.leading().unwrap().is_positive() == b.leading().unwrap().is_positive() {
                1
            } else {
                -1
            }
        }
        _ => 0,
    };
    let diff = limit - cauchy_index(&b, &a)?;
    let left = (n as i64 + diff) / 2;
    debug_assert!((n as i64 + diff) % 2 == 0 && (0..=n as i64).contains(&left));
    Ok(left as usize)
}

/// Root census of `p` relative to `|z| = radius`, with multiplicity.
pub fn disk_census(p: &IntPolynomial, radius: &BigRational) -> Result<DiskCensus> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if !radius.is_positive() {
        return Err(Error::Precondition("radius must be positive"));
    }
    let s = p.scale_variable(radius.numer(), radius.denom());
    let zeros = s.valuation();
    let s = s.strip_zero_roots();
    if s.is_constant() {
        return Ok(DiskCensus {
            inside: zeros,
            on: 0,
            outside: 0,
        });
    }
    let g = s.gcd(&s.reverse()?);
    let on = unit_circle_roots_of_self_inversive(&g)?;
    let dg = g.degree().unwrap_or(0);
    let rest = s.div_exact(&g).expect("gcd divides");
    let inside = zeros + roots_inside_unit_disk(&rest)? + (dg - on) / 2;
    Ok(DiskCensus {
        inside,
        on,
        outside: n - inside - on,
    })
}

/// Roots with modulus `<= radius`.
fn count_le(p: &IntPolynomial, radius: &BigRational) -> Result<(usize, DiskCensus)> {
    let c = disk_census(p, radius)?;
    Ok((c.inside + c.on, c))
}

/// Enclosures of `|μ|` for the roots `μ` of `p` with `|μ| > lower`, one per
/// root with multiplicity, in increasing order, each of width at most
/// `width`. Exact moduli come back as point intervals.
pub fn modulus_enclosures_above(
    p: &IntPolynomial,
    lower: &BigRational,
    width: &BigRational,
) -> Result<Vec<RationalInterval>> {
    if !width.is_positive() {
        return Err(Error::Precondition("width must be positive"));
    }
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    let mut hi = BigRational::from_integer(p.cauchy_bound());
    if &hi <= lower {
        hi = lower + BigRational::one();
    }
    let (c_lo, _) = if lower.is_positive() {
        count_le(p, lower)?
    } else {
        (
            p.valuation(),
            DiskCensus {
                inside: 0,
                on: 0,
                outside: 0,
            },
        )
    };
    let candidates = squared_modulus_candidates(p);
    let mut out = Vec::new();
    let mut stack = vec![(lower.clone(), hi, c_lo, n)];
    let two = BigRational::from_integer(2.into());
    while let Some((lo, hi, c_lo, c_hi)) = stack.pop() {
        let k = c_hi - c_lo;
        if k == 0 {
            continue;
        }
        if let Some(h) = candidates.as_ref().filter(|_| &(&hi - &lo) > width) {
            if let Some(m) = refine_single_modulus(h, &lo, &hi, width)? {
                out.extend(core::iter::repeat_n(m, k));
                continue;
            }
        }
        if &(&hi - &lo) <= width {
            for _ in 0..k {
                out.push(RationalInterval::new(lo.clone(), hi.clone())?);
            }
            continue;
        }
        let mid = (&lo + &hi) / &two;
        let (c_mid, census) = count_le(p, &mid)?;
        for _ in 0..census.on {
            out.push(RationalInterval::point(mid.clone()));
        }
        stack.push((lo, mid.clone(), c_lo, census.inside));
        stack.push((mid, hi, c_mid, c_hi));
    }
    out.sort_by(|x, y| x.lo().cmp(y.lo()));
    Ok(out)
}

/// Square-free polynomial whose real roots include `|μ|²` for every root `μ`
/// of `p`: its roots are the `μᵢ²` and the `μᵢμⱼ` with `i < j`, recovered
/// from power sums. `None` for degrees where this gets too large.
fn squared_modulus_candidates(p: &IntPolynomial) -> Option<IntPolynomial> {
    let n = p.degree().filter(|&n| (1..=8).contains(&n))?;
    let lc = BigRational::from_integer(p.leading()?.clone());
    let e: Vec<BigRational> = (0..=n)
        .map(|k| {
            let c = BigRational::from_integer(p.coeff(n - k)) / &lc;
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    let m = n * (n - 1) / 2;
    let top = 2 * m.max(n);
    let mut s = vec![BigRational::from_integer(n.into())];
    for k in 1..=top {
        let mut acc = BigRational::zero();
        for i in 1..=(k - 1).min(n) {
            let term = &e[i] * &s[k - i];
            if i % 2 == 1 {
                acc += term
            } else {
                acc -= term
            }
        }
        if k <= n {
            let term = &e[k] * BigRational::from_integer(k.into());
            if k % 2 == 1 {
                acc += term
            } else {
                acc -= term
            }
        }
        s.push(acc);
    }
    let graeffe: Vec<BigRational> = (1..=n).map(|k| s[2 * k].clone()).collect();
    let two = BigRational::from_integer(2.into());
    let pairs: Vec<BigRational> = (1..=m)
        .map(|k| (&s[k] * &s[k] - &s[2 * k]) / &two)
        .collect();
    let h = &from_power_sums(&graeffe) * &from_power_sums(&pairs);
    Some(h.square_free_part())
}

/// The monic polynomial of degree `sums.len()` with power sums `sums[k - 1]`,
/// scaled to integer coefficients.
fn from_power_sums(sums: &[BigRational]) -> IntPolynomial {
    let d = sums.len();
    let mut e = vec![BigRational::one()];
    for k in 1..=d {
        let mut acc = BigRational::zero();
        for i in 1..=k {
            let term = &e[k - i] * &sums[i - 1];
            if i % 2 == 1 {
                acc += term
            } else {
                acc -= term
            }
        }
        e.push(acc / BigRational::from_integer(k.into()));
    }
    let coeffs: Vec<BigRational> = (0..=d)
        .map(|j| {
            let k = d - j;
            if k % 2 == 1 {
                -e[k].clone()
            } else {
                e[k].clone()
            }
        })
        .collect();
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    IntPolynomial::new(
        coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect(),
    )
}

/// When `(lo², hi²]` holds exactly one root of the candidate polynomial `h`,
/// every modulus counted in `(lo, hi]` equals its square root; it is then
/// refined by sign bisection alone.
fn refine_single_modulus(
    h: &IntPolynomial,
    lo: &BigRational,
    hi: &BigRational,
    width: &BigRational,
) -> Result<Option<RationalInterval>> {
    let square = RationalInterval::new(lo * lo, hi * hi)?;
    match sturm_count(h, &square) {
        Ok(1) => {}
        Ok(_) | Err(Error::EndpointIsRoot) => return Ok(None),
        Err(e) => return Err(e),
    }
    let lo_sign = h.sign_at(square.lo());
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    let two = BigRational::from_integer(2.into());
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / &two;
        match h.sign_at(&(&mid * &mid)) {
            Sign::NoSign => return Ok(Some(RationalInterval::point(mid))),
            s if s == lo_sign => lo = mid,
            _ => hi = mid,
        }
    }
    Ok(Some(RationalInterval::new(lo, hi)?))
}

/// Enclosures of `|μ|` for all non-zero roots of `p`, with multiplicity.
pub fn modulus_enclosures(p: &IntPolynomial, width: &BigRational) -> Result<Vec<RationalInterval>> {
    modulus_enclosures_above(p, &BigRational::zero(), width)
}

/// `2^-bits` as a rational.
pub(crate) fn pow2_neg(bits: u32) -> BigRational {
    dyadic(BigInt::one(), bits)
}
