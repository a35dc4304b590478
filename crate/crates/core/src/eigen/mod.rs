//! Root census of characteristic quartics relative to the unit circle.

mod census;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{
    cyclotomic_factorization, sturm_count, BigRational, IntPolynomial, RationalInterval,
    ALLOWED_ORDERS,
};
use crate::{Error, Result};

pub use crate::arith::root_of_unity_order;
pub(crate) use census::pow2_neg;
pub use census::{disk_census, modulus_enclosures, modulus_enclosures_above, DiskCensus};

/// Monic integer quartic: the characteristic polynomial of a rational
/// representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPolyQuartic {
    poly: IntPolynomial,
}

impl CharPolyQuartic {
    pub fn new(poly: IntPolynomial) -> Result<Self> {
        if poly.degree() != Some(4) || !poly.is_monic() {
            return Err(Error::NotMonicQuartic);
        }
        Ok(Self { poly })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(IntPolynomial::from_i64s(coeffs))
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn into_poly(self) -> IntPolynomial {
        self.poly
    }
}

impl fmt::Display for CharPolyQuartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Counts of the four roots of a characteristic quartic by modulus, with
/// multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenvalueClassification {
    pub n_zero: usize,
    /// `0 < |μ| < 1`
    pub n_less: usize,
    pub n_on: usize,
    pub n_more: usize,
    /// Order of each unit-circle root, one entry per root.
    pub unity_orders: Vec<u32>,
    /// Enclosures of `|μ|²` for each root with `|μ| > 1`, increasing.
    pub outside_moduli: Vec<RationalInterval>,
}

/// True iff every real root of `p` has even multiplicity, i.e. the roots can be
/// written `λ₁, λ₂, λ̄₁, λ̄₂`.
pub fn validate_conjugate_pair_structure(p: &CharPolyQuartic) -> bool {
    has_conjugate_pair_structure(p.poly())
}

pub(crate) fn has_conjugate_pair_structure(p: &IntPolynomial) -> bool {
    p.square_free_decomposition()
        .iter()
        .filter(|(_, mult)| mult % 2 == 1)
        .all(|(s, _)| crate::arith::real_root_count(s).is_ok_and(|n| n == 0))
}

/// The monic factor of `p` collecting exactly its roots on the unit circle,
/// with multiplicity.
///
/// Fails with `InvalidEndomorphism` when a unit-circle root shares an
/// irreducible factor with a root off the circle (a Salem-type factor).
pub fn unit_circle_factor(p: &CharPolyQuartic) -> Result<IntPolynomial> {
    unit_circle_part(p.poly())
}

pub(crate) fn unit_circle_part(p: &IntPolynomial) -> Result<IntPolynomial> {
    if !p.is_monic() {
        return Err(Error::Precondition(
            "unit_circle_part needs a monic polynomial",
        ));
    }
    let p = p.strip_zero_roots();
    let g = p.gcd(&p.reverse()?);
    let t_minus_one = IntPolynomial::from_i64s(&[-1, 1]);
    let t_plus_one = IntPolynomial::from_i64s(&[1, 1]);
    let (g, a) = g.divide_out(&t_minus_one);
    let (g, b) = g.divide_out(&t_plus_one);
    let h = census_trace(&g);
    let window = RationalInterval::new(
        BigRational::from_integer((-2).into()),
        BigRational::from_integer(2.into()),
    )?;
    let mut kept = IntPolynomial::one();
    for (s, mult) in h.square_free_decomposition() {
        let mut s = s;
        // the only integers in (-2, 2); h is monic so rational roots are integral
        for r in [-1i64, 0, 1] {
            let lin = IntPolynomial::linear_root(BigInt::from(r));
            let (rest, k) = s.divide_out(&lin);
            if k > 0 {
                kept = &kept * &lin.pow(mult as u32);
                s = rest;
            }
        }
        let Some(deg) = s.degree().filter(|&d| d > 0) else {
            continue;
        };
        let inside = sturm_count(&s, &window)?;
        if inside == deg {
            kept = &kept * &s.pow(mult as u32);
        } else if inside != 0 {
            return Err(Error::InvalidEndomorphism(
                "unit-circle root that is not a root of unity",
            ));
        }
    }
    let circle = census::untrace_polynomial(&kept);
    let circle = &(&circle * &t_minus_one.pow(a as u32)) * &t_plus_one.pow(b as u32);
    Ok(circle.primitive_part())
}

fn census_trace(g: &IntPolynomial) -> IntPolynomial {
    census::trace_polynomial(&g.primitive_part())
}

/// Per-root orders of a product of cyclotomic polynomials: `Φ_k^e`
/// contributes `φ(k)·e` entries equal to `k`.
pub(crate) fn unity_orders_of(q: &IntPolynomial) -> Option<Vec<u32>> {
    if q.is_one() {
        return Some(Vec::new());
    }
    let factors = cyclotomic_factorization(q)?;
    let mut out = Vec::new();
    for (k, e) in factors {
        let deg = crate::arith::euler_phi(k) as usize;
        out.extend(core::iter::repeat_n(k, deg * e));
    }
    Some(out)
}

/// Exact census of the roots of `p` by modulus, with enclosures of `|μ|²` of
/// width derived from `width` for the roots outside the unit circle.
pub fn count_roots_by_modulus(
    p: &CharPolyQuartic,
    width: &BigRational,
) -> Result<EigenvalueClassification> {
    let poly = p.poly();
    let n_zero = poly.valuation();
    let circle = unit_circle_factor(p)?;
    let n_on = circle.degree().unwrap_or(0);
    let unity_orders = unity_orders_of(&circle)
        .filter(|o| o.iter().all(|k| ALLOWED_ORDERS.contains(k)))
        .ok_or(Error::InvalidEndomorphism(
            "unit-circle root that is not a root of unity",
        ))?;
    let one = BigRational::one();
    let census = disk_census(poly, &one)?;
    debug_assert_eq!(census.on, n_on);
    let outside_moduli = modulus_enclosures_above(poly, &one, width)?
        .iter()
        .map(RationalInterval::square_nonneg)
        .collect();
    Ok(EigenvalueClassification {
        n_zero,
        n_less: census.inside - n_zero,
        n_on,
        n_more: census.outside,
        unity_orders,
        outside_moduli,
    })
}

/// True iff `h` has even degree and is palindromic.
pub fn assert_self_reciprocal_minpoly(h: &IntPolynomial) -> bool {
    h.degree().is_some_and(|d| d % 2 == 0) && h.reverse().is_ok_and(|r| &r == h)
}
