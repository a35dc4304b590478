//! Exact fixed-point counting for endomorphisms of two-dimensional complex tori.
//!
//! Everything here is exact: integers and rationals are arbitrary precision,
//! roots of integer polynomials are located by Sturm sequences and Cauchy
//! indices, and irrational quantities (moduli, Mahler measures) are reported as
//! rational enclosures.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! Layout:
//!
//! * [`arith`]: integer polynomials, rationals, intervals, resultants, real roots.
//! * [`eigen`]: root census of characteristic quartics relative to the unit circle.
//! * [`endo`]: endomorphism presentations and Lefschetz fixed-point counts.
//! * [`behavior`]: the exponential / periodic / mixed classification.
//! * [`abelian`]: endomorphism algebras of simple abelian surfaces.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod abelian;
pub mod arith;
pub mod behavior;
pub mod eigen;
pub mod endo;
mod error;

pub use abelian::{
    builtin_examples, find_small_eigenvalue_parameter, mcmullen_family, periodic_eigenvalue_table,
    sl2_family, AlgebraDescriptor, AlgebraElement, AlgebraKind, CmElement, CmField,
    PeriodicTableKind, QuaternionAlgebra, QuaternionElement, RealQuadElement,
};
pub use arith::{BigRational, IntPolynomial, RationalInterval};
pub use behavior::{classify, BehaviorReport, Certificate, Verdict};
pub use eigen::{CharPolyQuartic, EigenvalueClassification};
pub use endo::{AnalyticRep, Endomorphism, EndomorphismInput, QuadNumber, RationalRep};
pub use error::{Error, Result};
