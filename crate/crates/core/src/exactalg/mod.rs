//! Exact commutative algebra over `Q` and `GF(p)`.
//!
//! Polynomials carry a shared [`PolyRing`] (field plus variable names). All
//! Gröbner computations go through [`groebner`], which works on an internal
//! representation with the variables permuted into the term order's
//! reverse-lexicographic order.

pub mod fano;
mod field;
pub mod groebner;
pub mod hilbert;
mod ideal;
mod monomial;
mod order;
pub mod plucker;
mod poly;
pub mod tpoly;

use thiserror::Error;

pub use field::{Field, Scalar};
pub use groebner::{leading_monomials, normal_form, reduced_groebner_basis, DEFAULT_BUDGET};
pub use hilbert::{degree_of, hilbert_data, monomial_hilbert, HilbertData};
pub use ideal::{
    intersect_ideals, toric_kernel, toric_kernel_with_budget, IdealHandle, MonomialFreeness,
};
pub use monomial::{Monomial, MAX_VARS};
pub use order::TermOrder;
pub use plucker::{
    expand_on_generic_matrix, minimal_plucker_generators, plucker_generators, plucker_ideal,
    plucker_ring,
};
pub use poly::{MultiPoly, PolyRing};
pub use tpoly::{plucker_valuations, vanishing_minors, TField, TPoly, TPolyMatrix};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExactAlgError {
    #[error("characteristic {0} is neither 0 nor a prime below 2^31")]
    BadCharacteristic(u32),
    #[error("denominator of {0} vanishes modulo {1}")]
    DenominatorVanishes(String, u32),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("{0} variables requested, at most {max} supported", max = MAX_VARS)]
    TooManyVariables(usize),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("weight vector has length {got}, ring has {expected} variables")]
    WeightLength { expected: usize, got: usize },
    #[error("invalid variable order: {0}")]
    VariableOrder(String),
    #[error("negative weights need homogeneous generators")]
    NegativeWeightInhomogeneous,
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("weights too large for exact comparison")]
    WeightOverflow,
    #[error("exponent exceeds 255")]
    ExponentOverflow,
    #[error("Gröbner computation exceeded its budget of {0} reduction steps")]
    BudgetExceeded(u64),
    #[error("need 2 <= d < n, got d = {d}, n = {n}")]
    PluckerShape { d: usize, n: usize },
    #[error("matrix shape: {0}")]
    MatrixShape(String),
    #[error("minor on columns {0} vanishes identically")]
    VanishingMinor(String),
    #[error("invalid ideal JSON: {0}")]
    Json(String),
}
