//! Binomial initial ideals of `I_{2,n}` attached to trees, and the circular
//! straightening order whose initial ideal is generated by crossings.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use itertools::Itertools;

use super::{SemiLabeledTree, TreeError};
use crate::exactalg::{
    plucker::three_term_relation, plucker_ring, Field, Monomial, MultiPoly, TermOrder,
};
use crate::rat::Rat;
use crate::subsets::rank;

/// The tree's point as a weight vector on the variables `p_ij` of
/// `plucker_ring(2, n)`.
pub fn tree_weight(t: &SemiLabeledTree) -> Vec<Rat> {
    t.to_dissimilarity().values().to_vec()
}

/// One binomial per quadruple: the three-term relation without the term of the
/// pairing the tree separates. These are the initial forms at any `w` in the
/// interior of the tree's cone.
pub fn j_sigma(t: &SemiLabeledTree, field: Field) -> Result<Vec<MultiPoly>, TreeError> {
    t.require_trivalent()?;
    let n = t.n();
    let ring = plucker_ring(2, n, field)?;
    let mut out = Vec::new();
    for q in (0..n).combinations(4) {
        let q = [q[0], q[1], q[2], q[3]];
        let (p, r) = t.quartet(q).expect("trivalent trees resolve every quartet");
        let separated = Monomial::var(rank(n, &p)).mul(&Monomial::var(rank(n, &r)));
        let rel = three_term_relation(&ring, n, q);
        let terms: Vec<_> = rel
            .terms()
            .iter()
            .filter(|(m, _)| *m != separated)
            .cloned()
            .collect();
        let mut b = MultiPoly::from_terms(&ring, terms);
        if b.leading_is_negative() {
            b = b.neg();
        }
        out.push(b);
    }
    Ok(out)
}

/// `p_ik * p_jl` for all `i < j < k < l`: the crossing diagonals of the
/// `n`-gon.
pub fn kempe_crossing_generators(n: usize) -> Vec<Monomial> {
    (0..n)
        .combinations(4)
        .map(|q| Monomial::var(rank(n, &[q[0], q[2]])).mul(&Monomial::var(rank(n, &[q[1], q[3]]))))
        .collect()
}

/// Weight of the caterpillar `12 | 123 | .. ` with unit lengths, a tree drawn
/// in the plane with leaves in circular order `1..n`.
pub fn circular_weight(n: usize) -> Result<Vec<Rat>, TreeError> {
    Ok(tree_weight(&SemiLabeledTree::caterpillar(n)?))
}

/// The circular weight refined by reverse lexicographic order with wide chords
/// largest (`p_1n` first, `p_i,i+1` last).
pub fn circular_order(n: usize) -> Result<TermOrder, TreeError> {
    let pairs: Vec<Vec<usize>> = (0..n).combinations(2).collect();
    let var_order: Vec<usize> = pairs
        .iter()
        .sorted_by_key(|p| (Reverse(p[1] - p[0]), p[0]))
        .map(|p| rank(n, p))
        .collect();
    Ok(TermOrder::refining_min_weight(&circular_weight(n)?).with_var_order(var_order)?)
}

/// True if `leads` generates the same monomial ideal as the crossings.
pub fn is_crossing_ideal(leads: &[Monomial], n: usize) -> bool {
    let minimal = |gens: &[Monomial]| -> BTreeSet<Vec<u32>> {
        gens.iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
            .map(|g| g.exponents(n * (n - 1) / 2))
            .collect()
    };
    minimal(leads) == minimal(&kempe_crossing_generators(n))
}
