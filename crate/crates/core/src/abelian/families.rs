//! Example families, periodic eigenvalue tables and built-in examples.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraElement, RealQuadElement};
use crate::arith::{cyclotomic, euler_phi, BigRational, IntPolynomial, ALLOWED_ORDERS};
use crate::eigen::{disk_census, CharPolyQuartic};
use crate::endo::{AnalyticRep, EndomorphismInput, QuadNumber, RationalRep};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PeriodicTableKind {
    Quaternion,
    Cm,
}

/// Orders `k` of the roots of unity that can be eigenvalues of a periodic
/// element: `φ(k) <= 2` for quaternion multiplication, `φ(k) <= 4` for CM.
pub fn periodic_eigenvalue_orders(kind: PeriodicTableKind) -> Vec<u32> {
    let max_degree = match kind {
        PeriodicTableKind::Quaternion => 2,
        PeriodicTableKind::Cm => 4,
    };
    ALLOWED_ORDERS
        .iter()
        .copied()
        .filter(|&k| euler_phi(k) <= max_degree)
        .collect()
}

/// Minimal polynomials `Φ_k` of those roots of unity.
pub fn periodic_eigenvalue_table(kind: PeriodicTableKind) -> Vec<IntPolynomial> {
    periodic_eigenvalue_orders(kind)
        .into_iter()
        .map(|k| cyclotomic(k).expect("allowed order"))
        .collect()
}

/// `t⁴ + a·t² + t + 1`
pub fn mcmullen_poly(a: u64) -> CharPolyQuartic {
    let p = IntPolynomial::new(alloc::vec![
        BigInt::one(),
        BigInt::one(),
        BigInt::from(a),
        BigInt::zero(),
        BigInt::one(),
    ]);
    CharPolyQuartic::new(p).expect("monic quartic")
}

pub fn mcmullen_family(a: u64) -> EndomorphismInput {
    EndomorphismInput::CharPoly(mcmullen_poly(a))
}

/// Least `a >= 0` such that `t⁴ + a·t² + t + 1` has a root of modulus `< eps`.
///
/// `eps = 1` is accepted and asks for any root strictly inside the unit disk.
pub fn find_small_eigenvalue_parameter(eps: &BigRational) -> Result<u64> {
    if !eps.is_positive() || eps > &BigRational::one() {
        return Err(Error::Precondition("eps must lie in (0, 1]"));
    }
    let mut a = 0u64;
    loop {
        // the constant term is 1, so every root counted inside is non-zero
        if disk_census(mcmullen_poly(a).poly(), eps)?.inside > 0 {
            return Ok(a);
        }
        a += 1;
    }
}

/// The analytic representation `[[a, b], [c, d]]` on `E × E`, requiring
/// `ad − bc = 1`.
pub fn sl2_family(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<EndomorphismInput> {
    let det = &a * &d - &b * &c;
    if !det.is_one() {
        return Err(Error::NotUnimodular(det.to_string()));
    }
    let q = |x: BigInt| QuadNumber::rational(BigRational::from_integer(x));
    Ok(AnalyticRep::new(1, [[q(a), q(b)], [q(c), q(d)]])?.into())
}

pub const BUILTIN_EXAMPLE_NAMES: [&str; 6] = [
    "rotation_e_times_e",
    "gaussian_i_2i",
    "rm_sqrt2",
    "mcmullen_0",
    "neg_identity",
    "mult_2",
];

pub fn builtin_example(name: &str) -> Option<EndomorphismInput> {
    let z = QuadNumber::default;
    Some(match name {
        // (x, y) ↦ (x − y, x)
        "rotation_e_times_e" => AnalyticRep::rational_i64s([[1, -1], [1, 0]]).into(),
        // (x, y) ↦ (ix, 2iy)
        "gaussian_i_2i" => AnalyticRep::new(
            -1,
            [
                [QuadNumber::from_ints(0, 1), z()],
                [z(), QuadNumber::from_ints(0, 2)],
            ],
        )
        .expect("square-free field")
        .into(),
        // −1 + √2
        "rm_sqrt2" => AlgebraElement::RealQuad(
            RealQuadElement::new(2, BigInt::from(-1), BigInt::one()).expect("valid radicand"),
        )
        .into(),
        "mcmullen_0" => mcmullen_family(0),
        "neg_identity" => RationalRep::scalar(BigInt::from(-1)).into(),
        "mult_2" => RationalRep::scalar(BigInt::from(2)).into(),
        _ => return None,
    })
}

pub fn builtin_examples() -> Vec<(&'static str, EndomorphismInput)> {
    BUILTIN_EXAMPLE_NAMES
        .iter()
        .map(|&name| (name, builtin_example(name).expect("listed example")))
        .collect()
}
