//! Endomorphism algebras of simple abelian surfaces.
//!
//! Four algebra types occur: `ℤ`, a real quadratic field, an indefinite
//! quaternion algebra over `ℚ`, and a quartic CM field. For each, the number of
//! fixed points is `N(1 − f)^(4/de)` where `N` is the reduced norm, `e` the
//! degree of the centre and `d² = [D : K]`.

mod cm;
mod families;
mod quaternion;
mod real_quad;

use num_bigint::BigInt;

use crate::arith::{resultant, IntPolynomial};
use crate::behavior::{classify_char_poly, BehaviorReport};
use crate::eigen::CharPolyQuartic;
use crate::{Error, Result};

pub use cm::{CmElement, CmField};
pub use families::{
    builtin_example, builtin_examples, find_small_eigenvalue_parameter, mcmullen_family,
    mcmullen_poly, periodic_eigenvalue_orders, periodic_eigenvalue_table, sl2_family,
    PeriodicTableKind, BUILTIN_EXAMPLE_NAMES,
};
pub use quaternion::{QuatRootData, QuatRoots, QuaternionAlgebra, QuaternionElement};
pub use real_quad::{RealQuadElement, RealQuadValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Z,
    RealQuad,
    Quaternion,
    Cm,
}

/// Degree data of an endomorphism algebra `D` with centre `K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraDescriptor {
    pub kind: AlgebraKind,
    /// `[K : ℚ]`
    pub e: u32,
    /// `d² = [D : K]`
    pub d: u32,
}

impl AlgebraDescriptor {
    pub fn of(kind: AlgebraKind) -> Self {
        let (e, d) = match kind {
            AlgebraKind::Z => (1, 1),
            AlgebraKind::RealQuad => (2, 1),
            AlgebraKind::Quaternion => (1, 2),
            AlgebraKind::Cm => (4, 1),
        };
        Self { kind, e, d }
    }

    /// `4 / (d·e)`
    pub fn norm_exponent(&self) -> u32 {
        4 / (self.d * self.e)
    }
}

/// An endomorphism given as an element of its endomorphism algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraElement {
    Integer(BigInt),
    RealQuad(RealQuadElement),
    Quaternion(QuaternionElement),
    Cm(CmElement),
}

impl AlgebraElement {
    pub fn kind(&self) -> AlgebraKind {
        match self {
            AlgebraElement::Integer(_) => AlgebraKind::Z,
            AlgebraElement::RealQuad(_) => AlgebraKind::RealQuad,
            AlgebraElement::Quaternion(_) => AlgebraKind::Quaternion,
            AlgebraElement::Cm(_) => AlgebraKind::Cm,
        }
    }

    pub fn descriptor(&self) -> AlgebraDescriptor {
        AlgebraDescriptor::of(self.kind())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            AlgebraElement::Integer(m) => m == &BigInt::from(0),
            AlgebraElement::RealQuad(x) => x.is_zero(),
            AlgebraElement::Quaternion(x) => x.is_zero(),
            AlgebraElement::Cm(x) => x.is_zero(),
        }
    }

    /// Reduced characteristic polynomial, of degree `4 / norm_exponent`.
    pub fn reduced_char_poly(&self) -> Result<IntPolynomial> {
        match self {
            AlgebraElement::Integer(m) => Ok(IntPolynomial::linear_root(m.clone())),
            AlgebraElement::RealQuad(x) => Ok(x.char_poly()),
            AlgebraElement::Quaternion(x) => x.reduced_charpoly(),
            AlgebraElement::Cm(x) => Ok(x.char_poly()?.into_poly()),
        }
    }

    /// Characteristic polynomial of the rational representation.
    pub fn char_poly(&self) -> Result<CharPolyQuartic> {
        let exp = self.descriptor().norm_exponent();
        CharPolyQuartic::new(self.reduced_char_poly()?.pow(exp))
    }

    /// `N(1 − fⁿ)^(4/de)`
    pub fn fix(&self, n: u64) -> Result<BigInt> {
        if n == 0 {
            return Err(Error::Precondition("iterate index must be at least 1"));
        }
        let chi = self.reduced_char_poly()?;
        let norm = resultant(&chi, &(&IntPolynomial::one() - &chi.t_pow_mod(n)));
        Ok(num_traits::Pow::pow(
            norm,
            self.descriptor().norm_exponent(),
        ))
    }

    /// Type-specific classification; never returns B3.
    pub fn classify(&self) -> Result<BehaviorReport> {
        match self {
            AlgebraElement::Integer(m) => {
                if self.is_zero() {
                    return Err(Error::ZeroElement);
                }
                classify_char_poly(&CharPolyQuartic::new(
                    IntPolynomial::linear_root(m.clone()).pow(4),
                )?)
            }
            AlgebraElement::RealQuad(x) => x.classify(),
            AlgebraElement::Quaternion(x) => x.classify(),
            AlgebraElement::Cm(x) => x.classify(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::behavior::Verdict;

    #[test]
    fn descriptors() {
        let exps: [u32; 4] = [
            AlgebraKind::Z,
            AlgebraKind::RealQuad,
            AlgebraKind::Quaternion,
            AlgebraKind::Cm,
        ]
        .map(|k| AlgebraDescriptor::of(k).norm_exponent());
        assert_eq!(exps, [4, 2, 2, 1]);
    }

    #[test]
    fn integer_multiplication() {
        let x = AlgebraElement::Integer(3.into());
        assert_eq!(x.fix(1).unwrap(), BigInt::from(16));
        assert_eq!(x.fix(2).unwrap(), BigInt::from(4096));
        assert_eq!(x.classify().unwrap().verdict, Verdict::B1);
        assert_eq!(
            AlgebraElement::Integer(0.into()).classify(),
            Err(Error::ZeroElement)
        );
    }
}
