//! Ideal-level data attached to `G(3,6)`: the binomial initial ideal of an
//! FFGG cone, its two prime components, and the initial minors at the weight
//! matrix of the bipyramid centroid.

use std::sync::Arc;

use crate::exactalg::plucker::generic_minor;
use crate::exactalg::{
    minimal_plucker_generators, plucker_ring, toric_kernel, ExactAlgError, Field, IdealHandle,
    MultiPoly, PolyRing,
};
use crate::minplus::TropMatrix;
use crate::rat::{rat, Rat};
use crate::subsets::subsets;

/// Generators of `in_w(I_{3,6})` for `w = f_1256 + f_3456 + g_123456 + g_125634`.
pub const FFGG_INITIAL_BINOMIALS: [&str; 35] = [
    "p_124*p_135 - p_123*p_145",
    "p_123*p_146 - p_124*p_136",
    "p_125*p_136 - p_126*p_135",
    "p_125*p_146 - p_126*p_145",
    "p_135*p_146 - p_136*p_145",
    "p_123*p_245 - p_124*p_235",
    "p_123*p_246 - p_124*p_236",
    "p_126*p_235 - p_125*p_236",
    "p_125*p_246 - p_126*p_245",
    "p_134*p_235 - p_135*p_234",
    "p_136*p_234 - p_134*p_236",
    "p_136*p_235 - p_135*p_236",
    "p_134*p_245 - p_145*p_234",
    "p_134*p_246 - p_146*p_234",
    "p_146*p_245 - p_145*p_246",
    "p_135*p_346 - p_136*p_345",
    "p_146*p_345 - p_145*p_346",
    "p_135*p_245 - p_145*p_235",
    "p_135*p_256 - p_156*p_235",
    "p_156*p_245 - p_145*p_256",
    "p_135*p_456 - p_145*p_356",
    "p_136*p_246 - p_146*p_236",
    "p_136*p_256 - p_156*p_236",
    "p_146*p_256 - p_156*p_246",
    "p_136*p_456 - p_146*p_356",
    "p_235*p_246 - p_236*p_245",
    "p_235*p_346 - p_236*p_345",
    "p_245*p_346 - p_246*p_345",
    "p_235*p_456 - p_245*p_356",
    "p_246*p_356 - p_236*p_456",
    "p_136*p_245 - p_135*p_246",
    "p_145*p_236 - p_135*p_246",
    "p_146*p_235 - p_135*p_246",
    "p_123*p_456 - p_124*p_356",
    "p_134*p_256 - p_156*p_234",
];

/// The extra binomial of the component `P`.
pub const P_EXTRA: &str = "p_125*p_346 - p_126*p_345";

/// The extra variables of the component `Q`.
pub const Q_EXTRA: [&str; 8] = [
    "p_135", "p_136", "p_145", "p_146", "p_235", "p_236", "p_245", "p_246",
];

/// `I_{3,6}` with its 35 minimal quadrics.
pub fn plucker_ideal_36(field: Field) -> Result<IdealHandle, ExactAlgError> {
    let ring = plucker_ring(3, 6, field)?;
    IdealHandle::new(&ring, minimal_plucker_generators(3, 6, field)?)
}

/// The ideal generated by [`FFGG_INITIAL_BINOMIALS`].
pub fn ffgg_binomial_ideal(field: Field) -> Result<IdealHandle, ExactAlgError> {
    let ring = plucker_ring(3, 6, field)?;
    IdealHandle::parse(&ring, &FFGG_INITIAL_BINOMIALS)
}

/// The components `(P, Q)` of the FFGG initial ideal.
pub fn ffgg_components(field: Field) -> Result<(IdealHandle, IdealHandle), ExactAlgError> {
    let ring = plucker_ring(3, 6, field)?;
    let mut p: Vec<&str> = FFGG_INITIAL_BINOMIALS.to_vec();
    p.push(P_EXTRA);
    let mut q: Vec<&str> = FFGG_INITIAL_BINOMIALS.to_vec();
    q.extend(Q_EXTRA);
    Ok((
        IdealHandle::parse(&ring, &p)?,
        IdealHandle::parse(&ring, &q)?,
    ))
}

/// The `3 x 6` weight matrix whose tropical minors are `g_123456 + g_125634`.
pub fn sagbi_weight_matrix() -> TropMatrix {
    TropMatrix::from_ints(&[
        &[2, 1, 2, 1, 0, 0],
        &[1, 2, 0, 0, 2, 1],
        &[0, 0, 1, 2, 1, 2],
    ])
    .expect("3 x 6")
}

/// Expected initial forms of the minors `p_123, .., p_456` under the weights of
/// [`sagbi_weight_matrix`] on the entries `x_i, y_i, z_i` of the three rows.
pub const SAGBI_INITIAL_MINORS: [&str; 20] = [
    "z1*x2*y3",
    "z1*x2*y4",
    "y1*z2*x5",
    "y1*z2*x6",
    "-z1*y3*x4",
    "-z1*y3*x5",
    "-z1*y3*x6",
    "-z1*y4*x5",
    "-z1*y4*x6",
    "z1*x5*y6",
    "-z2*y3*x4",
    "-z2*y3*x5",
    "-z2*y3*x6",
    "-z2*y4*x5",
    "-z2*y4*x6",
    "z2*x5*y6",
    "-z3*y4*x5",
    "-z3*y4*x6",
    "y3*z5*x6",
    "y4*z5*x6",
];

/// `k[x1..x6, y1..y6, z1..z6]`.
pub fn sagbi_ring(field: Field) -> Result<Arc<PolyRing>, ExactAlgError> {
    let names = ["x", "y", "z"]
        .iter()
        .flat_map(|r| (1..=6).map(move |c| format!("{r}{c}")))
        .collect();
    PolyRing::new(field, names)
}

/// Entry weights of [`sagbi_weight_matrix`] in the variable order of
/// [`sagbi_ring`].
pub fn sagbi_entry_weights() -> Vec<Rat> {
    let m = sagbi_weight_matrix();
    (0..3)
        .flat_map(|r| (0..6).map(move |c| (r, c)))
        .map(|(r, c)| m.get(r, c).finite().cloned().unwrap_or_else(|| rat(0)))
        .collect()
}

/// Minimal-weight initial forms of the twenty maximal minors of the generic
/// matrix.
pub fn sagbi_initial_minors(field: Field) -> Result<Vec<MultiPoly>, ExactAlgError> {
    let ring = sagbi_ring(field)?;
    let w = sagbi_entry_weights();
    subsets(6, 3)
        .iter()
        .map(|s| generic_minor(&ring, 3, 6, s).initial_form(&w))
        .collect()
}

/// The toric ideal of the initial minors, in `plucker_ring(3, 6)`.
pub fn sagbi_toric_ideal(field: Field) -> Result<IdealHandle, ExactAlgError> {
    toric_kernel(&plucker_ring(3, 6, field)?, &sagbi_initial_minors(field)?)
}
