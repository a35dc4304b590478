use alloc::format;

use num_traits::{One, Signed, Zero};

use crate::arith::{is_square_rational, BigRational, IntPolynomial};
use crate::behavior::{classify_char_poly, BehaviorReport, Verdict};
use crate::eigen::CharPolyQuartic;
use crate::{Error, Result};

/// The quaternion algebra `(α, β)_ℚ` with `i² = α`, `j² = β`, `ij = −ji`,
/// stored with `α > 0` and `α ≥ β`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuaternionAlgebra {
    alpha: BigRational,
    beta: BigRational,
    /// The caller's labels were `(β, α)`; `i` and `j` are exchanged.
    swapped: bool,
}

impl QuaternionAlgebra {
    /// Normalizes `(α, β)` by exchanging the generators when needed. Definite
    /// algebras (`α, β < 0`) are rejected.
    pub fn new(alpha: BigRational, beta: BigRational) -> Result<Self> {
        if alpha.is_zero() || beta.is_zero() {
            return Err(Error::InvalidDescriptor(format!(
                "quaternion structure constants must be non-zero, got ({alpha}, {beta})"
            )));
        }
        if alpha.is_negative() && beta.is_negative() {
            return Err(Error::InvalidDescriptor(format!(
                "({alpha}, {beta}) is definite; simple abelian surfaces need an indefinite algebra"
            )));
        }
        if alpha >= beta {
            Ok(Self {
                alpha,
                beta,
                swapped: false,
            })
        } else {
            Ok(Self {
                alpha: beta,
                beta: alpha,
                swapped: true,
            })
        }
    }

    pub fn from_i64s(alpha: i64, beta: i64) -> Result<Self> {
        Self::new(int(alpha), int(beta))
    }

    pub fn alpha(&self) -> &BigRational {
        &self.alpha
    }

    pub fn beta(&self) -> &BigRational {
        &self.beta
    }

    pub fn swapped(&self) -> bool {
        self.swapped
    }

    /// The constants in the caller's original order.
    pub fn original(&self) -> (BigRational, BigRational) {
        if self.swapped {
            (self.beta.clone(), self.alpha.clone())
        } else {
            (self.alpha.clone(), self.beta.clone())
        }
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `a + b·i + c·j + d·ij`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuaternionElement {
    algebra: QuaternionAlgebra,
    coords: [BigRational; 4],
}

/// Exact description of the roots `t = a ± √disc` of the reduced
/// characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuatRoots {
    Rational(BigRational, BigRational),
    /// `center ± √disc` with `disc > 0` not a square.
    RealQuadratic {
        center: BigRational,
        disc: BigRational,
    },
    /// `center ± i·√(−disc)`.
    ComplexPair {
        center: BigRational,
        disc: BigRational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuatRootData {
    /// `b²α + c²β − d²αβ`
    pub disc: BigRational,
    pub roots: QuatRoots,
}

impl QuaternionElement {
    /// Builds the element from coordinates relative to the caller's `(α, β)`
    /// basis, in the order `(1, i, j, ij)`.
    pub fn new(alpha: BigRational, beta: BigRational, coords: [BigRational; 4]) -> Result<Self> {
        let algebra = QuaternionAlgebra::new(alpha, beta)?;
        Ok(Self::in_algebra(algebra, coords))
    }

    pub fn from_i64s(alpha: i64, beta: i64, coords: [i64; 4]) -> Result<Self> {
        Self::new(int(alpha), int(beta), coords.map(int))
    }

    /// `coords` are relative to the caller's original labels of `algebra`.
    pub fn in_algebra(algebra: QuaternionAlgebra, coords: [BigRational; 4]) -> Self {
        let coords = if algebra.swapped {
            // i' = j, j' = i, i'j' = −ij
            let [a, b, c, d] = coords;
            [a, c, b, -d]
        } else {
            coords
        };
        Self { algebra, coords }
    }

    pub fn algebra(&self) -> &QuaternionAlgebra {
        &self.algebra
    }

    /// Coordinates in the normalized basis.
    pub fn coords(&self) -> &[BigRational; 4] {
        &self.coords
    }

    /// Coordinates in the caller's original basis.
    pub fn original_coords(&self) -> [BigRational; 4] {
        let [a, b, c, d] = self.coords.clone();
        if self.algebra.swapped {
            [a, c, b, -d]
        } else {
            [a, b, c, d]
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn is_central(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    /// `a² − b²α − c²β + d²αβ`
    pub fn reduced_norm(&self) -> BigRational {
        let [a, b, c, d] = &self.coords;
        let (al, be) = (&self.algebra.alpha, &self.algebra.beta);
        a * a - b * b * al - c * c * be + d * d * al * be
    }

    pub fn reduced_trace(&self) -> BigRational {
        &self.coords[0] * int(2)
    }

    pub fn root_data(&self) -> QuatRootData {
        let [a, b, c, d] = &self.coords;
        let (al, be) = (&self.algebra.alpha, &self.algebra.beta);
        let disc = b * b * al + c * c * be - d * d * al * be;
        let roots = if let Some(s) = is_square_rational(&disc) {
            QuatRoots::Rational(a + &s, a - &s)
        } else if disc.is_positive() {
            QuatRoots::RealQuadratic {
                center: a.clone(),
                disc: disc.clone(),
            }
        } else {
            QuatRoots::ComplexPair {
                center: a.clone(),
                disc: disc.clone(),
            }
        };
        QuatRootData { disc, roots }
    }

    /// `t² − tr·t + N`; the element must be integral.
    pub fn reduced_charpoly(&self) -> Result<IntPolynomial> {
        let (tr, n) = (self.reduced_trace(), self.reduced_norm());
        if !tr.is_integer() || !n.is_integer() {
            return Err(Error::NonIntegral("quaternion element"));
        }
        Ok(IntPolynomial::new(alloc::vec![
            n.to_integer(),
            -tr.to_integer(),
            One::one()
        ]))
    }

    /// `χ²`
    pub fn rational_char_poly(&self) -> Result<CharPolyQuartic> {
        CharPolyQuartic::new(self.reduced_charpoly()?.pow(2))
    }

    /// Whether `|a + √disc| = 1` holds for the root taken with the `+` sign.
    pub fn one_root_criterion(&self) -> bool {
        let data = self.root_data();
        let a = &self.coords[0];
        if data.disc.is_negative() {
            return self.reduced_norm().is_one();
        }
        [int(1), int(-1)].iter().any(|target| {
            let s = target - a;
            !s.is_negative() && &s * &s == data.disc
        })
    }

    /// B2 when both roots of `χ` lie on the unit circle, B1 otherwise.
    ///
    /// A non-central element with a rational root, or a non-zero element of
    /// norm zero, cannot live in a division algebra; these are reported as
    /// `NotDivisionAlgebra` and `ZeroNorm`.
    pub fn classify(&self) -> Result<BehaviorReport> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        if self.reduced_norm().is_zero() {
            return Err(Error::ZeroNorm);
        }
        let data = self.root_data();
        if !self.is_central() && matches!(data.roots, QuatRoots::Rational(..)) {
            return Err(Error::NotDivisionAlgebra);
        }
        let report = classify_char_poly(&self.rational_char_poly()?)?;
        let periodic = (data.disc.is_negative() && self.reduced_norm().is_one())
            || (self.is_central() && self.coords[0].abs().is_one());
        debug_assert_eq!(report.verdict == Verdict::B2, periodic);
        debug_assert_ne!(report.verdict, Verdict::B3);
        Ok(report)
    }
}
