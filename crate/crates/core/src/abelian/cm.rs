use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{
    cyclotomic_factorization, isolate_real_roots, real_root_count, resultant, BigRational,
    IntPolynomial, ALLOWED_ORDERS,
};
use crate::behavior::{classify_char_poly, BehaviorReport, Verdict};
use crate::eigen::CharPolyQuartic;
use crate::{Error, Result};

/// A quartic CM field `ℚ[y]/(g)`: totally imaginary, containing the real
/// quadratic field `ℚ(√d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CmField {
    g: IntPolynomial,
    d: BigInt,
    e: Option<BigInt>,
}

fn invalid(g: &IntPolynomial, why: &str) -> Error {
    Error::InvalidDescriptor(format!("{} is not a quartic CM field: {why}", g.pretty()))
}

fn squarefree_part(n: &BigInt) -> BigInt {
    let mut n = n.clone();
    let mut out = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut k = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            k += 1;
        }
        if k % 2 == 1 {
            out *= &p;
        }
        p += 1;
    }
    out * n
}

fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

/// Positive divisors of `n != 0`.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = BigInt::one();
    while &k * &k <= n {
        if (&n % &k).is_zero() {
            let q = &n / &k;
            if q != k {
                large.push(q);
            }
            small.push(k.clone());
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Integer roots of `p`, found by isolating its real roots.
fn integer_roots(p: &IntPolynomial) -> Result<Vec<BigInt>> {
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let mut out = Vec::new();
    for iv in isolate_real_roots(p, &quarter)? {
        let mut k = iv.lo().floor().to_integer();
        while BigRational::from_integer(k.clone()) <= *iv.hi() {
            if p.eval(&k).is_zero() {
                out.push(k.clone());
            }
            k += 1;
        }
    }
    Ok(out)
}

/// Whether the monic quartic `g` without real roots splits into two integer
/// quadratics.
fn splits_into_quadratics(g: &IntPolynomial) -> bool {
    let [g0, g1, g2, g3] = [0, 1, 2, 3].map(|i| g.coeff(i));
    for p1 in divisors(&g0).into_iter().flat_map(|k| [k.clone(), -k]) {
        let p2 = &g0 / &p1;
        let candidates: Vec<BigInt> = if p1 == p2 {
            if g1 != &p1 * &g3 {
                continue;
            }
            // s1 + s2 = g3, s1·s2 = g2 − 2p1
            let disc = &g3 * &g3 - BigInt::from(4) * (&g2 - BigInt::from(2) * &p1);
            if !is_square(&disc) {
                continue;
            }
            let r = disc.sqrt();
            if (&g3 + &r).is_odd() {
                continue;
            }
            alloc::vec![(&g3 + &r) / 2]
        } else {
            let (q, rem) = (&g1 - &g3 * &p1).div_rem(&(&p2 - &p1));
            if !rem.is_zero() {
                continue;
            }
            alloc::vec![q]
        };
        for s1 in candidates {
            let s2 = &g3 - &s1;
            if &p1 + &p2 + &s1 * &s2 == g2 && &s1 * &p2 + &s2 * &p1 == g1 {
                return true;
            }
        }
    }
    false
}

impl CmField {
    /// Checks that `g` is monic of degree 4, has no real roots, is irreducible
    /// and that its field has a real quadratic subfield.
    pub fn new(g: IntPolynomial, e: Option<BigInt>) -> Result<Self> {
        if g.degree() != Some(4) || !g.is_monic() {
            return Err(invalid(&g, "defining polynomial must be a monic quartic"));
        }
        if real_root_count(&g)? != 0 {
            return Err(invalid(&g, "it has a real embedding"));
        }
        if splits_into_quadratics(&g) {
            return Err(invalid(&g, "defining polynomial is reducible"));
        }
        let d = real_quadratic_subfield(&g)?
            .ok_or_else(|| invalid(&g, "no real quadratic subfield"))?;
        if let Some(e) = &e {
            if !e.is_positive() || squarefree_part(e) != *e {
                return Err(invalid(&g, "e must be a positive square-free integer"));
            }
        }
        Ok(Self { g, d, e })
    }

    pub fn from_i64s(g: &[i64]) -> Result<Self> {
        Self::new(IntPolynomial::from_i64s(g), None)
    }

    pub fn defining_poly(&self) -> &IntPolynomial {
        &self.g
    }

    /// Radicand of the real quadratic subfield.
    pub fn real_subfield_radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn e(&self) -> Option<&BigInt> {
        self.e.as_ref()
    }
}

/// Square-free `d > 0` with `ℚ(√d)` inside `ℚ[y]/(g)`, if one exists.
///
/// A quadratic subfield corresponds to a pairing of the roots into two
/// conjugate quadratic factors `(y² + s₁y + p₁)(y² + s₂y + p₂)`; the sum
/// `p₁ + p₂` is then a rational root of the resolvent cubic.
fn real_quadratic_subfield(g: &IntPolynomial) -> Result<Option<BigInt>> {
    let [g0, g1, g2, g3] = [0, 1, 2, 3].map(|i| g.coeff(i));
    let four = BigInt::from(4);
    let resolvent = IntPolynomial::new(alloc::vec![
        -(&g3 * &g3 * &g0 - &four * &g2 * &g0 + &g1 * &g1),
        &g1 * &g3 - &four * &g0,
        -g2.clone(),
        BigInt::one(),
    ]);
    for r in integer_roots(&resolvent)? {
        let dp = &r * &r - &four * &g0;
        let ds = &g3 * &g3 - &four * (&g2 - &r);
        let cross = BigInt::from(2) * &g1 - &g3 * &r;
        if &ds * &dp != &cross * &cross {
            continue;
        }
        let gen = if is_square(&ds) { dp } else { ds };
        if gen.is_positive() && !is_square(&gen) {
            return Ok(Some(squarefree_part(&gen)));
        }
    }
    Ok(None)
}

/// `x(y) = c₀ + c₁y + c₂y² + c₃y³` in a CM field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CmElement {
    field: CmField,
    coords: [BigRational; 4],
}

impl CmElement {
    pub fn new(field: CmField, coords: [BigRational; 4]) -> Self {
        Self { field, coords }
    }

    pub fn from_i64s(field: CmField, coords: [i64; 4]) -> Self {
        Self::new(field, coords.map(|c| BigRational::from_integer(c.into())))
    }

    pub fn field(&self) -> &CmField {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational; 4] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// `N(t − x) = Res_y(g(y), t − x(y))`, by interpolation at `t = 0, …, 4`.
    pub fn char_poly(&self) -> Result<CharPolyQuartic> {
        let den = self
            .coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let x_scaled = IntPolynomial::new(
            self.coords
                .iter()
                .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
                .collect(),
        );
        let den4 = BigRational::from_integer(num_traits::Pow::pow(&den, 4u32));
        let g = self.field.defining_poly();
        let values: Vec<BigRational> = (0..=4)
            .map(|m| {
                let md = IntPolynomial::constant(BigInt::from(m) * &den);
                BigRational::from_integer(resultant(g, &(&md - &x_scaled))) / &den4
            })
            .collect();
        let coeffs = interpolate(&values);
        if coeffs.iter().any(|c| !c.is_integer()) {
            return Err(Error::NonIntegral("CM field element"));
        }
        CharPolyQuartic::new(IntPolynomial::new(
            coeffs.iter().map(BigRational::to_integer).collect(),
        ))
    }

    /// `Res(N(t − x), 1 − tⁿ)`
    pub fn fix(&self, n: u64) -> Result<BigInt> {
        if n == 0 {
            return Err(Error::Precondition("iterate index must be at least 1"));
        }
        let p = self.char_poly()?;
        Ok(crate::endo::lefschetz_resultant(p.poly(), n))
    }

    /// B2 exactly when the eigenvalues are roots of unity, B1 otherwise.
    pub fn classify(&self) -> Result<BehaviorReport> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let p = self.char_poly()?;
        let report = classify_char_poly(&p)?;
        let cyclotomic = cyclotomic_factorization(p.poly())
            .is_some_and(|f| f.iter().all(|(k, _)| ALLOWED_ORDERS.contains(k)));
        debug_assert_eq!(report.verdict == Verdict::B2, cyclotomic);
        debug_assert_ne!(report.verdict, Verdict::B3);
        Ok(report)
    }
}

/// Coefficients of the polynomial of degree `< values.len()` through
/// `(m, values[m])`, by Newton divided differences.
fn interpolate(values: &[BigRational]) -> Vec<BigRational> {
    let n = values.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(BigInt::from(level));
        }
    }
    // expand Σ dd[k] ∏_{j<k} (t − j), Horner from the top
    let mut coeffs = alloc::vec![BigRational::zero(); n];
    for k in (0..n).rev() {
        // coeffs ← coeffs·(t − k) + dd[k]
        let mut next = alloc::vec![BigRational::zero(); n];
        for i in 0..n {
            if i + 1 < n {
                next[i + 1] += &coeffs[i];
            }
            next[i] -= &coeffs[i] * BigRational::from_integer(BigInt::from(k));
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    coeffs
}
