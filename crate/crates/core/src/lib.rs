//! Tropical Grassmannians, end to end.
//!
//! The crate is organised by subsystem:
//!
//! * [`minplus`]: min-plus arithmetic, tropical polynomials, hypersurfaces and
//!   tropical determinants.
//! * [`exactalg`]: exact commutative algebra over `Q` and `GF(p)`: weighted term
//!   orders, Buchberger, initial ideals, monomial-freeness, elimination, Hilbert
//!   degrees, Plücker relations and `t`-adic valuations.
//! * [`treespace`]: the space of phylogenetic trees (splits, the complex `T_n`,
//!   the four-point condition, Additive Linkage, tree binomial ideals).
//! * [`g36`]: the explicit simplicial complex of the tropical Grassmannian
//!   `G(3,6)`.
//! * [`troplin`]: tropical linear spaces `L_w`, their types, duality and
//!   reconstruction of Plücker vectors.
//!
//! All scalars are exact: rationals are [`Rat`] (arbitrary precision) and prime
//! field elements are reduced residues.

pub mod complex;
pub mod exactalg;
pub mod g36;
pub mod minplus;
pub mod plucker_vector;
pub mod rat;
pub mod subsets;
pub mod treespace;
pub mod troplin;

pub use plucker_vector::PlueckerVector;
pub use rat::Rat;
