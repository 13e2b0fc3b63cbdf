//! Plücker coordinates: the ring `k[p_S]`, quadratic relations and the
//! substitution of generic minors.

use std::collections::HashMap;
use std::sync::Arc;

use super::{ExactAlgError, Field, IdealHandle, Monomial, MultiPoly, PolyRing, Scalar};
use crate::subsets::{
    binomial, insert_signed, label, permutation_sign, permutations, rank, subsets,
};

/// Variable name of the coordinate indexed by a 0-based sorted subset.
pub fn plucker_var_name(n: usize, subset: &[usize]) -> String {
    format!("p_{}", label(n, subset))
}

/// `k[p_S : S a d-subset of [n]]`, variables in lexicographic order of `S`.
pub fn plucker_ring(d: usize, n: usize, field: Field) -> Result<Arc<PolyRing>, ExactAlgError> {
    PolyRing::new(
        field,
        subsets(n, d)
            .iter()
            .map(|s| plucker_var_name(n, s))
            .collect(),
    )
}

fn check_shape(d: usize, n: usize) -> Result<(), ExactAlgError> {
    if d < 2 || d >= n {
        return Err(ExactAlgError::PluckerShape { d, n });
    }
    Ok(())
}

fn product(n: usize, a: &[usize], b: &[usize]) -> Monomial {
    Monomial::var(rank(n, a)).mul(&Monomial::var(rank(n, b)))
}

/// The three-term relation for `i < j < k < l`:
/// `p_ij p_kl - p_ik p_jl + p_il p_jk`.
pub fn three_term_relation(ring: &Arc<PolyRing>, n: usize, q: [usize; 4]) -> MultiPoly {
    let [i, j, k, l] = q;
    MultiPoly::from_int_terms(
        ring,
        &[
            (1, product(n, &[i, j], &[k, l])),
            (-1, product(n, &[i, k], &[j, l])),
            (1, product(n, &[i, l], &[j, k])),
        ],
    )
}

/// `sum_k (-1)^k p_{I+j_k} p_{J-j_k}` for `|I| = d-1`, `|J| = d+1`.
pub fn exchange_relation(
    ring: &Arc<PolyRing>,
    n: usize,
    i_set: &[usize],
    j_set: &[usize],
) -> MultiPoly {
    let mut terms = Vec::new();
    for (k, &j) in j_set.iter().enumerate() {
        let Some((left, sign)) = insert_signed(i_set, j) else {
            continue;
        };
        let right: Vec<usize> = j_set.iter().copied().filter(|&x| x != j).collect();
        let s = if k % 2 == 0 { sign } else { -sign };
        terms.push((s as i64, product(n, &left, &right)));
    }
    MultiPoly::from_int_terms(ring, &terms)
}

/// Quadratic relations generating `I_{d,n}`.
///
/// For `d = 2` these are the `C(n,4)` three-term relations. Otherwise they are
/// all nonzero exchange relations, deduplicated up to sign.
pub fn plucker_generators(
    d: usize,
    n: usize,
    field: Field,
) -> Result<Vec<MultiPoly>, ExactAlgError> {
    check_shape(d, n)?;
    let ring = plucker_ring(d, n, field)?;
    if d == 2 {
        return Ok(subsets(n, 4)
            .into_iter()
            .map(|q| three_term_relation(&ring, n, [q[0], q[1], q[2], q[3]]))
            .collect());
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for i_set in subsets(n, d - 1) {
        for j_set in subsets(n, d + 1) {
            let mut f = exchange_relation(&ring, n, &i_set, &j_set);
            if f.is_zero() {
                continue;
            }
            if f.leading_is_negative()
                || matches!(f.terms().first(), Some((_, Scalar::Mod(v))) if *v != 1)
            {
                let c = field.inv(&f.terms()[0].1).expect("nonzero");
                f = f.scale(&c);
            }
            if seen.insert(f.to_string()) {
                out.push(f);
            }
        }
    }
    Ok(out)
}

/// A basis of the degree-2 part of `I_{d,n}` picked greedily from
/// [`plucker_generators`], shortest relations first. Since the ideal has no
/// linear forms this is a minimal generating set.
pub fn minimal_plucker_generators(
    d: usize,
    n: usize,
    field: Field,
) -> Result<Vec<MultiPoly>, ExactAlgError> {
    let mut gens = plucker_generators(d, n, field)?;
    if d == 2 {
        return Ok(gens);
    }
    gens.sort_by_key(|g| g.len());
    let mut echelon = Echelon::new(field);
    Ok(gens.into_iter().filter(|g| echelon.insert(g)).collect())
}

/// `I_{d,n}` generated by [`minimal_plucker_generators`].
pub fn plucker_ideal(d: usize, n: usize, field: Field) -> Result<IdealHandle, ExactAlgError> {
    IdealHandle::new(
        &plucker_ring(d, n, field)?,
        minimal_plucker_generators(d, n, field)?,
    )
}

/// Incremental row echelon form over sparse vectors indexed by monomials.
struct Echelon {
    field: Field,
    rows: HashMap<Monomial, Vec<(Monomial, Scalar)>>,
}

impl Echelon {
    fn new(field: Field) -> Self {
        Echelon {
            field,
            rows: HashMap::new(),
        }
    }

    /// Adds `g`; returns false if it was already in the span.
    fn insert(&mut self, g: &MultiPoly) -> bool {
        let f = self.field;
        let mut v: HashMap<Monomial, Scalar> = g.terms().iter().cloned().collect();
        loop {
            let pivot = v
                .keys()
                .filter(|m| self.rows.contains_key(*m))
                .max_by(|a, b| a.graded_cmp(b))
                .copied();
            let Some(p) = pivot else { break };
            let c = v[&p].clone();
            for (m, x) in &self.rows[&p] {
                let e = v.entry(*m).or_insert_with(|| f.zero());
                *e = f.sub(e, &f.mul(&c, x));
            }
            v.retain(|_, x| !f.is_zero(x));
        }
        let Some(lead) = v.keys().max_by(|a, b| a.graded_cmp(b)).copied() else {
            return false;
        };
        let inv = f.inv(&v[&lead]).expect("nonzero");
        let row: Vec<(Monomial, Scalar)> =
            v.into_iter().map(|(m, x)| (m, f.mul(&x, &inv))).collect();
        // keep rows fully reduced with respect to the new pivot
        for other in self.rows.values_mut() {
            if let Some(pos) = other.iter().position(|(m, _)| *m == lead) {
                let c = other[pos].1.clone();
                let mut acc: HashMap<Monomial, Scalar> = other.drain(..).collect();
                for (m, x) in &row {
                    let e = acc.entry(*m).or_insert_with(|| f.zero());
                    *e = f.sub(e, &f.mul(&c, x));
                }
                *other = acc.into_iter().filter(|(_, x)| !f.is_zero(x)).collect();
            }
        }
        self.rows.insert(lead, row);
        true
    }
}

/// Ring of the entries `x_r_c` of a generic `d x n` matrix.
pub fn generic_matrix_ring(
    d: usize,
    n: usize,
    field: Field,
) -> Result<Arc<PolyRing>, ExactAlgError> {
    let names = (1..=d)
        .flat_map(|r| (1..=n).map(move |c| format!("x_{r}_{c}")))
        .collect();
    PolyRing::new(field, names)
}

/// The maximal minor on columns `cols` of the generic matrix.
pub fn generic_minor(ring: &Arc<PolyRing>, d: usize, n: usize, cols: &[usize]) -> MultiPoly {
    let terms = permutations(d)
        .into_iter()
        .map(|p| {
            let mut e = vec![0u32; d * n];
            for (r, &k) in p.iter().enumerate() {
                e[r * n + cols[k]] += 1;
            }
            (
                ring.field().from_i64(permutation_sign(&p) as i64),
                Monomial::from_exponents(&e),
            )
        })
        .map(|(c, m)| (m, c))
        .collect();
    MultiPoly::from_terms(ring, terms)
}

/// Substitutes each `p_S` by the minor on columns `S` of a generic `d x n`
/// matrix. The result is zero exactly when `f` vanishes on the Grassmannian.
pub fn expand_on_generic_matrix(
    f: &MultiPoly,
    d: usize,
    n: usize,
) -> Result<MultiPoly, ExactAlgError> {
    if f.ring().nvars() != binomial(n, d) {
        return Err(ExactAlgError::RingMismatch);
    }
    let target = generic_matrix_ring(d, n, f.field())?;
    let images: Vec<MultiPoly> = subsets(n, d)
        .iter()
        .map(|s| generic_minor(&target, d, n, s))
        .collect();
    f.substitute(&target, &images)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_case() {
        let g = plucker_generators(2, 4, Field::Rational).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].to_string(), "p_12*p_34 - p_13*p_24 + p_14*p_23");
        assert!(expand_on_generic_matrix(&g[0], 2, 4).unwrap().is_zero());
    }

    #[test]
    fn generators_vanish_on_minors() {
        for (d, n) in [(2, 5), (2, 6), (3, 5), (3, 6)] {
            for g in plucker_generators(d, n, Field::Rational).unwrap() {
                assert!(expand_on_generic_matrix(&g, d, n).unwrap().is_zero(), "{g}");
            }
        }
    }

    #[test]
    fn minimal_counts() {
        assert_eq!(
            minimal_plucker_generators(2, 6, Field::Rational)
                .unwrap()
                .len(),
            15
        );
        assert_eq!(
            minimal_plucker_generators(3, 6, Field::Rational)
                .unwrap()
                .len(),
            35
        );
        assert_eq!(
            minimal_plucker_generators(3, 6, Field::Prime(2))
                .unwrap()
                .len(),
            35
        );
    }

    #[test]
    fn rejects_bad_shape() {
        assert!(plucker_generators(1, 4, Field::Rational).is_err());
        assert!(plucker_generators(4, 4, Field::Rational).is_err());
    }
}
