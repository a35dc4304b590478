//! Endomorphism presentations and Lefschetz fixed-point counts.

mod analytic;

use alloc::vec::Vec;

use crate::abelian::AlgebraElement;
use crate::arith::matrix::{self, IntMatrix};
use crate::arith::{resultant, IntPolynomial};
use crate::eigen::{validate_conjugate_pair_structure, CharPolyQuartic};
use crate::{Error, Result};
use num_bigint::BigInt;

pub use analytic::{is_squarefree, AnalyticRep, QuadNumber};

/// The 4×4 integer matrix of an endomorphism acting on the lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalRep {
    matrix: IntMatrix,
}

impl RationalRep {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if matrix.len() != 4 || matrix.iter().any(|row| row.len() != 4) {
            return Err(Error::Precondition("rational representation must be 4x4"));
        }
        Ok(Self { matrix })
    }

    pub fn from_i64s(rows: [[i64; 4]; 4]) -> Self {
        let matrix = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self { matrix }
    }

    pub fn scalar(m: BigInt) -> Self {
        let mut id = matrix::identity(4);
        for (i, row) in id.iter_mut().enumerate() {
            row[i] = m.clone();
        }
        Self { matrix: id }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn char_poly(&self) -> IntPolynomial {
        matrix::char_poly(&self.matrix)
    }

    /// `det(I − Mⁿ)`
    pub fn lefschetz_det(&self, n: u64) -> BigInt {
        lefschetz_det_of_power(&matrix::mat_pow(&self.matrix, n))
    }
}

fn lefschetz_det_of_power(mn: &IntMatrix) -> BigInt {
    let mut a = matrix::identity(mn.len());
    for (i, row) in a.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x -= &mn[i][j];
        }
    }
    matrix::determinant(&a)
}

/// One of the accepted presentations of an endomorphism of a 2-torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndomorphismInput {
    RationalRep(RationalRep),
    AnalyticRep(AnalyticRep),
    CharPoly(CharPolyQuartic),
    Algebra(AlgebraElement),
}

/// Characteristic polynomial of the rational representation, checked for the
/// conjugate-pair root structure.
pub fn char_poly_rational(e: &EndomorphismInput) -> Result<CharPolyQuartic> {
    let p = match e {
        EndomorphismInput::RationalRep(m) => CharPolyQuartic::new(m.char_poly())?,
        EndomorphismInput::AnalyticRep(a) => a.rational_char_poly()?,
        EndomorphismInput::CharPoly(p) => p.clone(),
        EndomorphismInput::Algebra(x) => x.char_poly()?,
    };
    if !validate_conjugate_pair_structure(&p) {
        return Err(Error::InvalidStructure);
    }
    Ok(p)
}

/// A validated input together with its characteristic quartic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism {
    input: EndomorphismInput,
    char_poly: CharPolyQuartic,
}

impl Endomorphism {
    pub fn new(input: EndomorphismInput) -> Result<Self> {
        let char_poly = char_poly_rational(&input)?;
        Ok(Self { input, char_poly })
    }

    pub fn input(&self) -> &EndomorphismInput {
        &self.input
    }

    pub fn char_poly(&self) -> &CharPolyQuartic {
        &self.char_poly
    }

    /// Number of fixed points of the `n`-th iterate, `0` when the fixed
    /// locus is infinite.
    pub fn fix_count(&self, n: u64) -> Result<BigInt> {
        if n == 0 {
            return Err(Error::Precondition("iterate index must be at least 1"));
        }
        Ok(match &self.input {
            EndomorphismInput::RationalRep(m) => m.lefschetz_det(n),
            _ => lefschetz_resultant(self.char_poly.poly(), n),
        })
    }

    /// `[fix(f), fix(f²), ..., fix(f^n_max)]`
    pub fn fix_sequence(&self, n_max: u64) -> Result<Vec<BigInt>> {
        if n_max == 0 {
            return Err(Error::Precondition("sequence length must be at least 1"));
        }
        Ok(match &self.input {
            EndomorphismInput::RationalRep(m) => {
                let mut power = m.matrix().clone();
                let mut out = Vec::with_capacity(n_max as usize);
                out.push(lefschetz_det_of_power(&power));
                for _ in 1..n_max {
                    power = matrix::mat_mul(&power, m.matrix());
                    out.push(lefschetz_det_of_power(&power));
                }
                out
            }
            _ => lefschetz_resultant_sequence(self.char_poly.poly(), n_max),
        })
    }
}

/// `Res(P, 1 − tⁿ) = ∏ (1 − μⁿ)` for monic `P`.
pub(crate) fn lefschetz_resultant(p: &IntPolynomial, n: u64) -> BigInt {
    let r = p.t_pow_mod(n);
    resultant(p, &(&IntPolynomial::one() - &r))
}

pub(crate) fn lefschetz_resultant_sequence(p: &IntPolynomial, n_max: u64) -> Vec<BigInt> {
    let t = IntPolynomial::t();
    let mut r = IntPolynomial::one();
    let mut out = Vec::with_capacity(n_max as usize);
    for _ in 0..n_max {
        r = (&r * &t).div_rem_unit(p).1;
        out.push(resultant(p, &(&IntPolynomial::one() - &r)));
    }
    out
}

pub fn fix_count(e: &EndomorphismInput, n: u64) -> Result<BigInt> {
    Endomorphism::new(e.clone())?.fix_count(n)
}

pub fn fix_sequence(e: &EndomorphismInput, n_max: u64) -> Result<Vec<BigInt>> {
    Endomorphism::new(e.clone())?.fix_sequence(n_max)
}

impl From<RationalRep> for EndomorphismInput {
    fn from(m: RationalRep) -> Self {
        Self::RationalRep(m)
    }
}

impl From<AnalyticRep> for EndomorphismInput {
    fn from(a: AnalyticRep) -> Self {
        Self::AnalyticRep(a)
    }
}

impl From<CharPolyQuartic> for EndomorphismInput {
    fn from(p: CharPolyQuartic) -> Self {
        Self::CharPoly(p)
    }
}

impl From<AlgebraElement> for EndomorphismInput {
    fn from(x: AlgebraElement) -> Self {
        Self::Algebra(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn scalar_maps() {
        let two = EndomorphismInput::from(RationalRep::scalar(2.into()));
        assert_eq!(
            char_poly_rational(&two).unwrap().poly(),
            &IntPolynomial::from_i64s(&[16, -32, 24, -8, 1])
        );
        assert_eq!(fix_count(&two, 2).unwrap(), BigInt::from(81));
        assert_eq!(fix_sequence(&two, 3).unwrap(), ints(&[1, 81, 2401]));
        let neg = EndomorphismInput::from(RationalRep::scalar((-1).into()));
        assert_eq!(fix_sequence(&neg, 4).unwrap(), ints(&[16, 0, 16, 0]));
    }

    #[test]
    fn resultant_route_matches_determinant() {
        let two = RationalRep::scalar(3.into());
        let p = two.char_poly();
        assert_eq!(
            lefschetz_resultant_sequence(&p, 5),
            (1..=5).map(|n| two.lefschetz_det(n)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn invalid_structure_is_rejected() {
        let salem = CharPolyQuartic::from_i64s(&[1, -1, -1, -1, 1]).unwrap();
        assert_eq!(
            Endomorphism::new(salem.into()),
            Err(Error::InvalidStructure)
        );
        let m = RationalRep::from_i64s([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert_eq!(Endomorphism::new(m.into()), Err(Error::InvalidStructure));
        assert!(RationalRep::new(vec![ints(&[1, 0]), ints(&[0, 1])]).is_err());
    }

    #[test]
    fn iterate_index_starts_at_one() {
        let e = Endomorphism::new(RationalRep::scalar(2.into()).into()).unwrap();
        assert!(e.fix_count(0).is_err());
        assert!(e.fix_sequence(0).is_err());
    }
}
