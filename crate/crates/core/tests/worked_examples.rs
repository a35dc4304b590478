//! Worked examples, each recomputed by an oracle independent of the library.

mod common;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use common::*;
use torfix_core::abelian::{builtin_example, mcmullen_poly, sl2_family, QuatRoots};
use torfix_core::arith::{isolate_real_roots, poly_gcd, poly_mul, sturm_count};
use torfix_core::behavior::verify_b3_pattern;
use torfix_core::eigen::{
    count_roots_by_modulus, unit_circle_factor, validate_conjugate_pair_structure,
};
use torfix_core::endo::{char_poly_rational, fix_count, fix_sequence};
use torfix_core::{
    classify, AlgebraElement, AnalyticRep, BigRational, CharPolyQuartic, CmElement, CmField,
    EndomorphismInput, IntPolynomial, QuadNumber, QuaternionElement, RationalInterval, RationalRep,
    Verdict,
};

fn quartic(c: &[i64]) -> CharPolyQuartic {
    CharPolyQuartic::from_i64s(c).unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| int(x)).collect()
}

/// Realification of a 2×2 matrix over `ℚ` or `ℚ(i)`: the 4×4 rational matrix
/// of the same map on `ℝ⁴`.
fn realify(a: &AnalyticRep) -> Vec<Vec<BigRational>> {
    let m = a.field_param();
    assert!(m == 1 || m == -1);
    let e = a.entries();
    let mut out = vec![vec![ri(0); 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            let (re, im) = (e[i][j].u.clone(), e[i][j].v.clone());
            out[i][j] = re.clone();
            out[i + 2][j + 2] = re;
            out[i + 2][j] = im.clone();
            out[i][j + 2] = -im;
        }
    }
    out
}

/// Integer polynomial with the given float roots, rounding coefficients.
fn poly_from_float_roots(roots: &[nalgebra::Complex<f64>]) -> IntPolynomial {
    let mut c = vec![nalgebra::Complex::new(1.0, 0.0)];
    for z in roots {
        let mut next = vec![nalgebra::Complex::new(0.0, 0.0); c.len() + 1];
        for (k, x) in c.iter().enumerate() {
            next[k + 1] += x;
            next[k] -= x * z;
        }
        c = next;
    }
    IntPolynomial::new(c.iter().map(|x| int(x.re.round() as i64)).collect())
}

fn gaussian(k: i64) -> EndomorphismInput {
    let z = QuadNumber::default();
    AnalyticRep::new(
        -1,
        [
            [QuadNumber::from_ints(0, 1), z.clone()],
            [z, QuadNumber::from_ints(0, k)],
        ],
    )
    .unwrap()
    .into()
}

#[test]
fn product_of_sixth_cyclotomics() {
    let p = poly(&[1, -1, 1]);
    let sq = poly_mul(&p, &p);
    assert_eq!(sq, poly(&[1, -2, 3, -2, 1]));
    for x in -5..=5 {
        let v = p.eval(&int(x));
        assert_eq!(sq.eval(&int(x)), &v * &v);
    }
}

#[test]
fn coprime_pair() {
    let (a, b) = (poly(&[1, 1, 0, 0, 1]), poly(&[1, 0, 1]));
    assert_eq!(poly_gcd(&a, &b).degree(), Some(0));
    assert!(!sylvester_resultant(&a, &b).is_zero());
}

#[test]
fn salem_real_roots() {
    let p = poly(&[1, -1, -1, -1, 1]);
    let window = RationalInterval::new(ri(-2), ri(2)).unwrap();
    let float_count = float_roots(&p)
        .iter()
        .filter(|z| z.im.abs() < 1e-9 && z.re > -2.0 && z.re <= 2.0)
        .count();
    assert_eq!(sturm_count(&p, &window).unwrap(), float_count);
    assert_eq!(float_count, 2);
    assert!(!validate_conjugate_pair_structure(&quartic(&[
        1, -1, -1, -1, 1
    ])));
}

#[test]
fn quadratic_isolation() {
    let roots = isolate_real_roots(&poly(&[-1, 2, 1]), &rat(1, 1 << 20)).unwrap();
    let expect = [-1.0 - 2f64.sqrt(), -1.0 + 2f64.sqrt()];
    assert_eq!(roots.len(), 2);
    for (r, x) in roots.iter().zip(expect) {
        assert!(rat_f64(r.lo()) <= x + 1e-12 && x - 1e-12 <= rat_f64(r.hi()));
    }
}

#[test]
fn unit_circle_factors() {
    for c in [
        [1, -2, 3, -2, 1],
        [1, -6, 11, -6, 1],
        [1, 1, 0, 0, 1],
        [4, 0, 5, 0, 1],
    ] {
        let p = quartic(&c);
        let on: Vec<_> = float_roots_with_multiplicity(p.poly())
            .into_iter()
            .filter(|z| (z.norm() - 1.0).abs() < 1e-9)
            .collect();
        assert_eq!(
            unit_circle_factor(&p).unwrap(),
            poly_from_float_roots(&on),
            "{c:?}"
        );
    }
}

#[test]
fn censuses() {
    for (c, orders) in [
        ([4, 0, 5, 0, 1], vec![4, 4]),
        ([1, -2, 3, -2, 1], vec![6; 4]),
        ([1, 1, 0, 0, 1], vec![]),
    ] {
        let p = quartic(&c);
        let got = count_roots_by_modulus(&p, &rat(1, 1 << 10)).unwrap();
        let f = float_census(p.poly()).unwrap();
        assert_eq!(
            (got.n_zero, got.n_less, got.n_on, got.n_more),
            (f.zero, f.less, f.on, f.more)
        );
        assert_eq!(got.unity_orders, orders);
    }
}

#[test]
fn analytic_quartics_match_realification() {
    for e in [builtin_example("rotation_e_times_e").unwrap(), gaussian(2)] {
        let EndomorphismInput::AnalyticRep(a) = &e else {
            unreachable!()
        };
        let oracle = to_int_poly(&char_poly_rational_matrix(&realify(a))).unwrap();
        assert_eq!(char_poly_rational(&e).unwrap().poly(), &oracle);
    }
    assert_eq!(
        char_poly_rational(&builtin_example("rotation_e_times_e").unwrap())
            .unwrap()
            .poly(),
        &poly(&[1, -2, 3, -2, 1])
    );
    assert_eq!(
        char_poly_rational(&gaussian(2)).unwrap().poly(),
        &poly(&[4, 0, 5, 0, 1])
    );
}

#[test]
fn small_fixed_point_counts() {
    let EndomorphismInput::AnalyticRep(a) = gaussian(2) else {
        unreachable!()
    };
    let real = realify(&a);
    let as_int: Vec<Vec<BigInt>> = real
        .iter()
        .map(|r| r.iter().map(|x| x.to_integer()).collect())
        .collect();
    assert_eq!(
        fix_count(&gaussian(2), 1).unwrap(),
        lefschetz_det_oracle(&as_int, 1)
    );
    assert_eq!(fix_count(&gaussian(2), 1).unwrap(), int(10));
    let neg = RationalRep::scalar(int(-1));
    let oracle: Vec<BigInt> = (1..=4)
        .map(|n| lefschetz_det_oracle(neg.matrix(), n))
        .collect();
    assert_eq!(fix_sequence(&neg.into(), 4).unwrap(), oracle);
    assert_eq!(oracle, ints(&[16, 0, 16, 0]));
}

#[test]
fn growth_bases() {
    let mahler =
        |p: &IntPolynomial| -> f64 { float_roots(p).iter().map(|z| z.norm().max(1.0)).product() };
    for (e, expect) in [
        (EndomorphismInput::from(RationalRep::scalar(int(2))), 16.0),
        (AlgebraElement::Integer(int(3)).into(), 81.0),
    ] {
        let r = classify(&e).unwrap();
        assert_eq!(r.verdict, Verdict::B1);
        let p = char_poly_rational(&e).unwrap();
        let m = mahler(p.poly());
        assert!((m - expect).abs() < 1e-6);
        let g = r.growth_base().unwrap();
        assert!(g.contains(&ri(expect as i64)));
    }
    let r = classify(&gaussian(2)).unwrap();
    assert!(r.growth_base().unwrap().contains(&ri(4)));
    assert!((mahler(&poly(&[4, 0, 5, 0, 1])) - 4.0).abs() < 1e-9);
}

#[test]
fn mixed_pattern_with_three() {
    let e = gaussian(3);
    let r = classify(&e).unwrap();
    assert_eq!((r.verdict, r.r()), (Verdict::B3, Some(4)));
    assert!(verify_b3_pattern(&e, &r, 20).unwrap());
    let EndomorphismInput::AnalyticRep(a) = &e else {
        unreachable!()
    };
    let as_int: Vec<Vec<BigInt>> = realify(a)
        .iter()
        .map(|r| r.iter().map(|x| x.to_integer()).collect())
        .collect();
    for n in 1..=20 {
        assert_eq!(lefschetz_det_oracle(&as_int, n).is_zero(), n % 4 == 0);
    }
}

fn f1() -> QuaternionElement {
    QuaternionElement::from_i64s(3, 2, [0, 1, 1, 1]).unwrap()
}

#[test]
fn quaternion_examples() {
    assert_eq!(f1().reduced_norm(), ri(1));
    let d = f1().root_data();
    assert_eq!(d.disc, ri(-1));
    assert!(matches!(d.roots, QuatRoots::ComplexPair { .. }));
    let x = QuaternionElement::from_i64s(3, 2, [1, 1, 0, 0]).unwrap();
    let d = x.root_data();
    assert_eq!(d.disc, ri(3));
    assert!(matches!(d.roots, QuatRoots::RealQuadratic { .. }));
    assert_eq!(x.classify().unwrap().verdict, Verdict::B1);

    let chi = f1().reduced_charpoly().unwrap();
    let norm = |n: usize| {
        let r = sylvester_resultant(
            &chi,
            &(&IntPolynomial::one() - &IntPolynomial::monomial(BigInt::one(), n)),
        );
        &r * &r
    };
    let f1e = AlgebraElement::Quaternion(f1());
    assert_eq!(f1e.fix(1).unwrap(), norm(1));
    assert_eq!(norm(1), int(4));
    assert_eq!(f1e.fix(4).unwrap(), int(0));
    let r = f1e.classify().unwrap();
    assert_eq!((r.verdict, r.period()), (Verdict::B2, Some(4)));
    let cycle: Vec<BigInt> = (1..=4).map(norm).collect();
    assert_eq!(r.cycle().unwrap(), &cycle[..]);
    assert_eq!(cycle, ints(&[4, 16, 4, 0]));

    let f2 = QuaternionElement::new(ri(-3), ri(2), [rat(1, 2), rat(1, 2), ri(0), ri(0)]).unwrap();
    assert_eq!(AlgebraElement::Quaternion(f2).fix(3).unwrap(), int(16));

    let minus = AlgebraElement::Integer(int(-1)).classify().unwrap();
    assert_eq!(
        (minus.period(), minus.cycle()),
        (Some(2), Some(&ints(&[16, 0])[..]))
    );
}

#[test]
fn cm_examples() {
    let field = CmField::from_i64s(&[1, 1, 1, 1, 1]).unwrap();
    let g = field.defining_poly().clone();
    let one_plus = CmElement::from_i64s(field.clone(), [1, 1, 0, 0]);
    let oracle = to_int_poly(&char_poly_rational_matrix(&field_mult_matrix(
        &g,
        &[ri(1), ri(1), ri(0), ri(0)],
    )))
    .unwrap();
    assert_eq!(one_plus.char_poly().unwrap().poly(), &oracle);
    assert_eq!(oracle, poly(&[1, -2, 4, -3, 1]));
    assert_eq!(one_plus.classify().unwrap().verdict, Verdict::B1);

    let zeta = CmElement::from_i64s(field, [0, 1, 0, 0]);
    assert_eq!(
        zeta.fix(1).unwrap(),
        sylvester_resultant(&g, &poly(&[1, -1]))
    );
    assert_eq!(zeta.fix(1).unwrap(), int(5));
    let r = zeta.classify().unwrap();
    assert_eq!((r.verdict, r.period()), (Verdict::B2, Some(5)));
}

#[test]
fn family_examples() {
    let p = mcmullen_poly(0);
    let c = count_roots_by_modulus(&p, &rat(1, 1 << 10)).unwrap();
    let f = float_census(p.poly()).unwrap();
    assert_eq!((c.n_zero, c.n_less, c.n_on, c.n_more), (0, 2, 0, 2));
    assert_eq!((f.less, f.more), (2, 2));
    assert_eq!(classify(&p.into()).unwrap().verdict, Verdict::B1);

    let cat = sl2_family(int(2), int(1), int(1), int(1)).unwrap();
    let q = char_poly_rational(&cat).unwrap();
    assert_eq!(q.poly(), &poly(&[1, -3, 1]).pow(2));
    assert_eq!(classify(&cat).unwrap().verdict, Verdict::B1);
}
