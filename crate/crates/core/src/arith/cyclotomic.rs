use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::poly::IntPolynomial;
use crate::{Error, Result};

/// Orders of roots of unity of algebraic degree at most 4.
pub const ALLOWED_ORDERS: [u32; 9] = [1, 2, 3, 4, 5, 6, 8, 10, 12];

const MAX_ORDER: u32 = 12;

pub fn euler_phi(k: u32) -> u32 {
    let mut n = k;
    let mut phi = k;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// The `k`-th cyclotomic polynomial, `1 <= k <= 12`.
pub fn cyclotomic(k: u32) -> Result<IntPolynomial> {
    if !(1..=MAX_ORDER).contains(&k) {
        return Err(Error::CyclotomicOutOfRange(k));
    }
    // t^k - 1 = ∏_{d | k} Φ_d
    let mut p = &IntPolynomial::monomial(BigInt::one(), k as usize) - &IntPolynomial::one();
    for d in (1..k).filter(|d| k.is_multiple_of(*d)) {
        p = p.div_exact(&cyclotomic(d)?).expect("Φ_d divides t^k - 1");
    }
    Ok(p)
}

/// Writes a monic `q` as `∏ Φ_k^e` with `k <= 12`; returns the `(k, e)` pairs
/// in increasing `k`, or `None` if `q` has another factor.
pub fn cyclotomic_factorization(q: &IntPolynomial) -> Option<Vec<(u32, usize)>> {
    if !q.is_monic() {
        return None;
    }
    let mut rest = q.clone();
    let mut out = Vec::new();
    for k in 1..=MAX_ORDER {
        if rest.is_one() {
            break;
        }
        let (r, e) = rest.divide_out(&cyclotomic(k).expect("k in range"));
        if e > 0 {
            out.push((k, e));
        }
        rest = r;
    }
    rest.is_one().then_some(out)
}

/// If `q` is a product of cyclotomic polynomials `Φ_k` with `k <= 12`, the
/// lcm of the orders of its roots.
pub fn root_of_unity_order(q: &IntPolynomial) -> Option<u32> {
    if q.degree().unwrap_or(0) == 0 {
        return None;
    }
    let factors = cyclotomic_factorization(q)?;
    Some(factors.iter().fold(1, |acc, &(k, _)| acc.lcm(&k)))
}
