//! Exponential / periodic / mixed classification of `n ↦ fix(fⁿ)`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{BigRational, RationalInterval};
use crate::eigen::{
    count_roots_by_modulus, modulus_enclosures_above, pow2_neg, CharPolyQuartic,
    EigenvalueClassification,
};
use crate::endo::{lefschetz_resultant_sequence, Endomorphism, EndomorphismInput};
use crate::{Error, Result};

/// Width of the default growth-base enclosure, as a power of two.
pub const GROWTH_BASE_WIDTH_BITS: u32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Exponential growth.
    B1,
    /// Periodic.
    B2,
    /// Zero exactly on a residue class, exponential growth elsewhere.
    B3,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::B1 => "B1",
            Verdict::B2 => "B2",
            Verdict::B3 => "B3",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Exponential {
        growth_base: RationalInterval,
    },
    Periodic {
        period: u32,
        cycle: Vec<BigInt>,
    },
    Mixed {
        r: u32,
        growth_base: RationalInterval,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BehaviorReport {
    pub verdict: Verdict,
    pub certificate: Certificate,
    pub eigen: EigenvalueClassification,
}

impl BehaviorReport {
    /// Enclosure of the Mahler measure of the characteristic quartic (B1, B3).
    pub fn growth_base(&self) -> Option<&RationalInterval> {
        match &self.certificate {
            Certificate::Exponential { growth_base } | Certificate::Mixed { growth_base, .. } => {
                Some(growth_base)
            }
            Certificate::Periodic { .. } => None,
        }
    }

    pub fn period(&self) -> Option<u32> {
        match &self.certificate {
            Certificate::Periodic { period, .. } => Some(*period),
            _ => None,
        }
    }

    pub fn cycle(&self) -> Option<&[BigInt]> {
        match &self.certificate {
            Certificate::Periodic { cycle, .. } => Some(cycle),
            _ => None,
        }
    }

    pub fn r(&self) -> Option<u32> {
        match &self.certificate {
            Certificate::Mixed { r, .. } => Some(*r),
            _ => None,
        }
    }
}

/// Enclosure of `∏ max(1, |μ|)` over the roots of `p`, of width at most
/// `width`.
pub fn mahler_measure_interval(
    p: &CharPolyQuartic,
    width: &BigRational,
) -> Result<RationalInterval> {
    Ok(mahler_with_moduli(p, width)?.0)
}

/// The Mahler measure enclosure together with the enclosures of `|μ|` for the
/// roots outside the unit circle it was built from.
fn mahler_with_moduli(
    p: &CharPolyQuartic,
    width: &BigRational,
) -> Result<(RationalInterval, Vec<RationalInterval>)> {
    if width <= &BigRational::zero() {
        return Err(Error::Precondition("width must be positive"));
    }
    let one = BigRational::one();
    let mut step = width.clone();
    loop {
        let moduli = modulus_enclosures_above(p.poly(), &one, &step)?;
        let product = moduli
            .iter()
            .fold(RationalInterval::point(one.clone()), |acc, m| acc.mul(m));
        if &product.width() <= width {
            return Ok((product, moduli));
        }
        step /= BigRational::from_integer(16.into());
    }
}

/// Classifies a validated endomorphism.
pub fn classify(e: &EndomorphismInput) -> Result<BehaviorReport> {
    classify_endomorphism(&Endomorphism::new(e.clone())?)
}

pub fn classify_endomorphism(e: &Endomorphism) -> Result<BehaviorReport> {
    classify_char_poly(e.char_poly())
}

/// Classification from the characteristic quartic alone; every count involved
/// depends only on it.
pub fn classify_char_poly(p: &CharPolyQuartic) -> Result<BehaviorReport> {
    let width = pow2_neg(GROWTH_BASE_WIDTH_BITS);
    // moduli are refined below together with the growth base
    let mut eigen = count_roots_by_modulus(p, &BigRational::one())?;
    if eigen.n_zero == 4 {
        return Err(Error::ZeroEndomorphism);
    }
    let periodic =
        |eigen: EigenvalueClassification, period: u32, cycle: Vec<BigInt>| BehaviorReport {
            verdict: Verdict::B2,
            certificate: Certificate::Periodic { period, cycle },
            eigen,
        };
    if eigen.unity_orders.contains(&1) {
        // eigenvalue 1: the fixed locus is a positive-dimensional subgroup
        return Ok(periodic(eigen, 1, alloc::vec![BigInt::zero()]));
    }
    let lcm = eigen.unity_orders.iter().fold(1u32, |acc, k| acc.lcm(k));
    let growth = |eigen: &mut EigenvalueClassification| -> Result<RationalInterval> {
        let (growth_base, moduli) = mahler_with_moduli(p, &width)?;
        eigen.outside_moduli = moduli.iter().map(RationalInterval::square_nonneg).collect();
        Ok(growth_base)
    };
    match (eigen.n_less, eigen.n_on, eigen.n_more) {
        (_, 0, more) if more > 0 => {
            let growth_base = growth(&mut eigen)?;
            Ok(BehaviorReport {
                verdict: Verdict::B1,
                certificate: Certificate::Exponential { growth_base },
                eigen,
            })
        }
        (_, _, more) if more > 0 => {
            if eigen
                .unity_orders
                .iter()
                .any(|&k| k != eigen.unity_orders[0])
            {
                return Err(Error::InvalidEndomorphism(
                    "unit-circle eigenvalues of different orders in the mixed case",
                ));
            }
            let growth_base = growth(&mut eigen)?;
            Ok(BehaviorReport {
                verdict: Verdict::B3,
                certificate: Certificate::Mixed {
                    r: lcm,
                    growth_base,
                },
                eigen,
            })
        }
        (0, _, 0) => {
            let values = lefschetz_resultant_sequence(p.poly(), u64::from(lcm));
            let period = (1..=lcm)
                .filter(|d| lcm % d == 0)
                .find(|&d| {
                    values
                        .iter()
                        .enumerate()
                        .all(|(i, v)| *v == values[i % d as usize])
                })
                .unwrap_or(lcm);
            let cycle = values[..period as usize].to_vec();
            Ok(periodic(eigen, period, cycle))
        }
        _ => Err(Error::InvalidEndomorphism(
            "eigenvalues inside the unit disk but none outside",
        )),
    }
}

/// Checks `fix(fⁿ) = 0 ⇔ r | n` for `1 <= n <= n_max`.
pub fn verify_b3_pattern(
    e: &EndomorphismInput,
    report: &BehaviorReport,
    n_max: u64,
) -> Result<bool> {
    let Some(r) = report.r() else {
        return Err(Error::Precondition("report is not a B3 report"));
    };
    let values = Endomorphism::new(e.clone())?.fix_sequence(n_max)?;
    Ok(values
        .iter()
        .zip(1u64..)
        .all(|(v, n)| v.is_zero() == (n % u64::from(r) == 0)))
}
