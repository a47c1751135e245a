//! Exact computer algebra for the negative half of the elliptic Hall algebra
//! (Ding–Iohara–Miki type), together with a finite-field point-counting
//! laboratory for commuting-matrix varieties and punctual Quot schemes.
//!
//! The symbolic half works in the word basis `E_{(d_1,...,d_n)}`: products
//! close under a two-term rewriting rule, commutators with the degree-one
//! generators `E_k` have an explicit reduced form, and equality modulo the
//! defining relations is decided by a sound (but deliberately one-sided)
//! relation-closure oracle over the exact coefficient field `Q(q1,q2)`.
//!
//! The counting half enumerates matrix models over prime fields: pairs of
//! commuting strictly lower-triangular matrices, nilpotent commuting pairs
//! with a cyclic framing vector, and flagged variants. Counting polynomials
//! are interpolated exactly, so dimensions and top-component counts can be
//! read off as degrees and leading coefficients.
//!
//! Entry points:
//! - [`coeff`]: the coefficient field (rational functions in `q1`, `q2`).
//! - [`lattice`]: clockwise slope order, convexity, area, empty triangles.
//! - [`words`]: the word basis, products, reduced brackets.
//! - [`relations`]: relation generators, the zero oracle, identity checks,
//!   straightening into the convex-path spanning set.
//! - [`cartan`]: Cartan-sector series identities and structure constants.
//! - [`counting`]: point counts over prime fields and polynomial fits.

pub mod cartan;
pub mod coeff;
pub mod counting;
pub mod lattice;
pub mod relations;
pub mod words;

pub use coeff::{Coeff, LaurentPoly};
pub use lattice::{clockwise_cmp, cross, triangle_is_empty, LatticeVec, Path};
pub use relations::{
    gary_check, is_zero_mod_relations, relation_r1, straighten, verify_empty_triangle,
    verify_quadratic, verify_quadratic_with, verify_serre, Verdict, Window, ZeroOracle,
};
pub use words::{enk_tuple, Word, WordSum};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("quantum integer [n] requires n >= 1, got {0}")]
    BadQuantumInteger(i64),
    #[error("the zero vector is not a valid lattice vector")]
    ZeroVector,
    #[error("E_{{-n,k}} requires n >= 1, got {0}")]
    BadEnkIndex(i64),
    #[error("window {{maxlen {maxlen}, entries {dmin}..{dmax}}} does not contain the element")]
    WindowTooSmall { maxlen: usize, dmin: i64, dmax: i64 },
    #[error("path must consist of vectors with negative first component")]
    NotNegativeSector,
    #[error("the triangle spanned by the two vectors is not empty")]
    TriangleNotEmpty,
    #[error("heisenberg bracket requires collinear lattice vectors")]
    NotCollinear,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("parameters out of the supported enumeration range: {0}")]
    Infeasible(String),
    #[error("raw count {raw} is not divisible by the group order {group}")]
    NonIntegerQuotient { raw: u128, group: u128 },
    #[error("polynomial fit needs at least two samples with distinct q values")]
    BadFitInput,
    #[error("duplicate sample point q = {0}")]
    DuplicateSample(u64),
    #[error("holdout sample at q = {0} does not match the interpolant")]
    HoldoutFailed(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
