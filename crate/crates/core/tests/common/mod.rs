//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use nalgebra::{Complex, DMatrix, Schur};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use torfix_core::{
    AlgebraElement, AnalyticRep, BigRational, CharPolyQuartic, CmElement, CmField, Endomorphism,
    EndomorphismInput, IntPolynomial, QuadNumber, QuaternionElement, RationalRep, RealQuadElement,
};

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn ri(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

/// Determinant by Gaussian elimination over ℚ.
pub fn det_rational(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..n {
                let v = &f * &a[col][c];
                a[r][c] -= v;
            }
        }
    }
    det
}

pub fn det_int(a: &[Vec<BigInt>]) -> BigInt {
    let m = a
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let d = det_rational(m);
    assert!(d.is_integer());
    d.to_integer()
}

/// Resultant as the determinant of the Sylvester matrix.
pub fn sylvester_resultant(p: &IntPolynomial, q: &IntPolynomial) -> BigInt {
    let (Some(m), Some(n)) = (p.degree(), q.degree()) else {
        return BigInt::zero();
    };
    if m == 0 && n == 0 {
        return BigInt::one();
    }
    let size = m + n;
    let mut s = vec![vec![BigInt::zero(); size]; size];
    for r in 0..n {
        for (k, c) in p.coeffs().iter().enumerate() {
            s[r][r + m - k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in q.coeffs().iter().enumerate() {
            s[n + r][r + n - k] = c.clone();
        }
    }
    det_int(&s)
}

pub fn mat_pow_naive(m: &[Vec<BigInt>], n: u64) -> Vec<Vec<BigInt>> {
    let size = m.len();
    let mut acc: Vec<Vec<BigInt>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    for _ in 0..n {
        let mut next = vec![vec![BigInt::zero(); size]; size];
        for i in 0..size {
            for j in 0..size {
                for k in 0..size {
                    next[i][j] += &acc[i][k] * &m[k][j];
                }
            }
        }
        acc = next;
    }
    acc
}

/// `det(I − Mⁿ)` by naive powering and rational elimination.
pub fn lefschetz_det_oracle(m: &[Vec<BigInt>], n: u64) -> BigInt {
    let p = mat_pow_naive(m, n);
    let a: Vec<Vec<BigInt>> = p
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| if i == j { BigInt::one() - x } else { -x })
                .collect()
        })
        .collect();
    det_int(&a)
}

/// Polynomial through `(xs[i], ys[i])`, by Lagrange interpolation over ℚ.
pub fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let mut out = vec![BigRational::zero(); n];
    for i in 0..n {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &xs[j];
            }
            basis = next;
            denom *= &xs[i] - &xs[j];
        }
        let scale = &ys[i] / &denom;
        for (k, c) in basis.iter().enumerate() {
            out[k] += c * &scale;
        }
    }
    out
}

/// Characteristic polynomial `det(tI − M)` of a rational matrix via
/// determinants at `dim + 1` points.
pub fn char_poly_rational_matrix(m: &[Vec<BigRational>]) -> Vec<BigRational> {
    let n = m.len();
    let xs: Vec<BigRational> = (0..=n as i64).map(ri).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|x| {
            let a = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                x - &m[i][j]
                            } else {
                                -m[i][j].clone()
                            }
                        })
                        .collect()
                })
                .collect();
            det_rational(a)
        })
        .collect();
    interpolate(&xs, &ys)
}

pub fn to_int_poly(c: &[BigRational]) -> Option<IntPolynomial> {
    c.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect::<Option<Vec<_>>>()
        .map(IntPolynomial::new)
}

/// Matrix of left multiplication by `a + bi + cj + dij` in `(α, β)_ℚ`, in the
/// basis `1, i, j, ij`.
pub fn quaternion_left_mult(
    alpha: &BigRational,
    beta: &BigRational,
    x: &[BigRational; 4],
) -> Vec<Vec<BigRational>> {
    let [a, b, c, d] = x;
    let ab = alpha * beta;
    let cols = [
        [a.clone(), b.clone(), c.clone(), d.clone()],
        [b * alpha, a.clone(), -(d * alpha), -c.clone()],
        [c * beta, d * beta, a.clone(), b.clone()],
        [-(d * &ab), -(c * beta), b * alpha, a.clone()],
    ];
    (0..4)
        .map(|i| (0..4).map(|j| cols[j][i].clone()).collect())
        .collect()
}

/// Matrix of multiplication by `Σ c_k θᵏ` on `ℚ[θ]/(g)`, basis `1, θ, θ², θ³`.
pub fn field_mult_matrix(g: &IntPolynomial, x: &[BigRational; 4]) -> Vec<Vec<BigRational>> {
    let g: Vec<BigRational> = g
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let reduce = |mut v: Vec<BigRational>| {
        while v.len() > 4 {
            let top = v.pop().unwrap();
            let k = v.len() - 4;
            for i in 0..4 {
                v[k + i] -= &top * &g[i];
            }
        }
        v.resize(4, BigRational::zero());
        v
    };
    let mut cols = Vec::new();
    for k in 0..4 {
        let mut v = vec![BigRational::zero(); k];
        v.extend(x.iter().cloned());
        cols.push(reduce(v));
    }
    (0..4)
        .map(|i| (0..4).map(|j| cols[j][i].clone()).collect())
        .collect()
}

pub fn to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap()
}

pub fn rat_f64(x: &BigRational) -> f64 {
    x.numer().to_f64().unwrap() / x.denom().to_f64().unwrap()
}

/// Complex roots of `p` as eigenvalues of its companion matrix.
pub fn float_roots(p: &IntPolynomial) -> Vec<Complex<f64>> {
    let n = p.degree().unwrap();
    if n == 0 {
        return Vec::new();
    }
    let lc = to_f64(p.leading().unwrap());
    let mut c = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        c[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        c[(i, n - 1)] = -to_f64(&p.coeff(i)) / lc;
    }
    // the QR iteration can stall when all eigenvalues share one modulus;
    // shifting the spectrum breaks the tie
    for shift in [0.0, 0.37, -0.61, 1.13] {
        let shifted = &c + DMatrix::<f64>::identity(n, n) * shift;
        if let Some(schur) = Schur::try_new(shifted, f64::EPSILON, 10_000) {
            return schur
                .complex_eigenvalues()
                .iter()
                .map(|z| z - shift)
                .collect();
        }
    }
    panic!("no convergence for {p}")
}

/// Roots with multiplicity, computed on the square-free parts so every float
/// root is simple.
pub fn float_roots_with_multiplicity(p: &IntPolynomial) -> Vec<Complex<f64>> {
    let mut out = Vec::new();
    for (s, mult) in p.square_free_decomposition() {
        for z in float_roots(&s) {
            out.extend(std::iter::repeat_n(z, mult));
        }
    }
    out
}

pub struct FloatCensus {
    pub zero: usize,
    pub less: usize,
    pub on: usize,
    pub more: usize,
}

/// Census by modulus; `None` when some root sits in the ambiguous band
/// `1e-9 < ||μ| − 1| <= 1e-6`.
pub fn float_census(p: &IntPolynomial) -> Option<FloatCensus> {
    let mut c = FloatCensus {
        zero: p.valuation(),
        less: 0,
        on: 0,
        more: 0,
    };
    for z in float_roots_with_multiplicity(&p.strip_zero_roots()) {
        let d = z.norm() - 1.0;
        if d.abs() <= 1e-9 {
            c.on += 1;
        } else if d.abs() <= 1e-6 {
            return None;
        } else if d < 0.0 {
            c.less += 1;
        } else {
            c.more += 1;
        }
    }
    Some(c)
}

pub const FIELD_PARAMS: [i64; 10] = [1, -1, -2, -3, -5, -7, 2, 3, 5, 6];

pub fn random_quad(rng: &mut ChaCha8Rng, m: i64, bound: i64) -> QuadNumber {
    let v = if m == 1 {
        0
    } else {
        rng.gen_range(-bound..=bound)
    };
    QuadNumber::from_ints(rng.gen_range(-bound..=bound), v)
}

pub fn random_analytic(rng: &mut ChaCha8Rng, bound: i64) -> AnalyticRep {
    let m = FIELD_PARAMS[rng.gen_range(0..FIELD_PARAMS.len())];
    let mut e = || random_quad(rng, m, bound);
    let entries = [[e(), e()], [e(), e()]];
    AnalyticRep::new(m, entries).unwrap()
}

pub const QUATERNION_ALGEBRAS: [(i64, i64); 5] = [(3, 2), (2, -3), (2, 5), (3, 5), (7, 3)];
pub const RM_RADICANDS: [i64; 6] = [2, 3, 5, 6, 7, 13];
/// `(g, real subfield radicand)`
pub const CM_FIELDS: [(&[i64], i64); 5] = [
    (&[1, 0, 0, 0, 1], 2),
    (&[1, 1, 1, 1, 1], 5),
    (&[1, 0, -1, 0, 1], 3),
    (&[1, 0, 3, 0, 1], 5),
    (&[2, 0, 4, 0, 1], 2),
];

pub fn random_rm(rng: &mut ChaCha8Rng, bound: i64) -> RealQuadElement {
    let d = RM_RADICANDS[rng.gen_range(0..RM_RADICANDS.len())];
    RealQuadElement::new(
        d,
        int(rng.gen_range(-bound..=bound)),
        int(rng.gen_range(-bound..=bound)),
    )
    .unwrap()
}

pub fn random_quaternion(rng: &mut ChaCha8Rng, bound: i64) -> QuaternionElement {
    let (a, b) = QUATERNION_ALGEBRAS[rng.gen_range(0..QUATERNION_ALGEBRAS.len())];
    let coords = [(); 4].map(|_| rng.gen_range(-bound..=bound));
    QuaternionElement::from_i64s(a, b, coords).unwrap()
}

pub fn cm_field(i: usize) -> CmField {
    CmField::from_i64s(CM_FIELDS[i].0).unwrap()
}

pub fn random_cm(rng: &mut ChaCha8Rng, fields: &[CmField], bound: i64) -> CmElement {
    let f = fields[rng.gen_range(0..fields.len())].clone();
    let coords = [(); 4].map(|_| rng.gen_range(-bound..=bound));
    CmElement::from_i64s(f, coords)
}

pub fn random_algebra_element(
    rng: &mut ChaCha8Rng,
    fields: &[CmField],
    bound: i64,
) -> AlgebraElement {
    match rng.gen_range(0..4) {
        0 => AlgebraElement::Integer(int(rng.gen_range(-bound..=bound))),
        1 => AlgebraElement::RealQuad(random_rm(rng, bound)),
        2 => AlgebraElement::Quaternion(random_quaternion(rng, bound)),
        _ => AlgebraElement::Cm(random_cm(rng, fields, bound)),
    }
}

/// A random input whose quartic passes validation: analytic representations
/// over quadratic fields or algebra elements, in equal proportion.
pub fn random_valid_input(
    rng: &mut ChaCha8Rng,
    fields: &[CmField],
) -> (EndomorphismInput, CharPolyQuartic) {
    loop {
        let input: EndomorphismInput = if rng.gen_bool(0.5) {
            random_analytic(rng, 2).into()
        } else {
            random_algebra_element(rng, fields, 3).into()
        };
        if let Ok(e) = Endomorphism::new(input.clone()) {
            return (input, e.char_poly().clone());
        }
    }
}

pub fn random_matrix(rng: &mut ChaCha8Rng, bound: i64) -> Vec<Vec<BigInt>> {
    (0..4)
        .map(|_| (0..4).map(|_| int(rng.gen_range(-bound..=bound))).collect())
        .collect()
}

pub fn random_valid_matrix(rng: &mut ChaCha8Rng, bound: i64) -> RationalRep {
    loop {
        let m = RationalRep::new(random_matrix(rng, bound)).unwrap();
        if Endomorphism::new(m.clone().into()).is_ok() {
            return m;
        }
    }
}

pub fn is_nonneg(x: &BigInt) -> bool {
    !x.is_negative()
}
