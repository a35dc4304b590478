//! Exact integer-polynomial and rational arithmetic.

mod cyclotomic;
mod interval;
pub mod matrix;
mod poly;
mod rational;
mod real_roots;

pub use cyclotomic::{
    cyclotomic, cyclotomic_factorization, euler_phi, root_of_unity_order, ALLOWED_ORDERS,
};
pub use interval::RationalInterval;
pub use poly::{poly_gcd, poly_mul, poly_reverse, resultant, IntPolynomial, ParsePolynomialError};
pub use rational::{dyadic, is_square_rational, BigRational};
pub use real_roots::{
    cauchy_index, isolate_real_roots, real_root_count, real_root_isolation, refine_root,
    sign_variations, sturm_count, sturm_sequence, DEFAULT_ROOT_WIDTH_BITS,
};
