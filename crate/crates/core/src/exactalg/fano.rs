//! The Fano-plane weight on `G(3,7)` and the data that shows its membership
//! depends on the characteristic.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::tpoly::TField;
use super::{plucker_ring, ExactAlgError, Field, MultiPoly, Scalar, TPoly, TPolyMatrix, TermOrder};
use crate::rat::{rat, Rat};
use crate::subsets::{parse_label, rank, subsets};

/// The seven lines `{i, i+1, i+3}` (mod 7) of the Fano plane.
pub const FANO_LINES: [&str; 7] = ["124", "235", "346", "457", "156", "267", "137"];

/// Indicator vector of the Fano lines, indexed like the variables of
/// `plucker_ring(3, 7, _)`.
pub fn fano_weight() -> Vec<Rat> {
    let mut w = vec![rat(0); 35];
    for l in FANO_LINES {
        w[rank(7, &parse_label(l).expect("valid label"))] = rat(1);
    }
    w
}

/// The Fano weight with the line `124` removed.
pub fn fano_weight_prime() -> Vec<Rat> {
    let mut w = fano_weight();
    w[rank(7, &[0, 1, 3])] = rat(0);
    w
}

/// Variables of `plucker_ring(d, n, _)` sorted colexicographically
/// (`p_123 > p_124 > p_134 > p_234 > p_125 > ...`).
pub fn colex_var_order(d: usize, n: usize) -> Vec<usize> {
    let mut s = subsets(n, d);
    s.sort_by_key(|x| x.iter().rev().copied().collect::<Vec<_>>());
    s.iter().map(|x| rank(n, x)).collect()
}

/// The order used for `in_w(I_{3,7})`: minimal `w`-weight first, ties broken
/// reverse lexicographically over the colexicographic variable order.
pub fn fano_order(w: &[Rat]) -> TermOrder {
    TermOrder::refining_min_weight(w)
        .with_var_order(colex_var_order(3, 7))
        .expect("permutation")
}

pub const SPECIAL_CUBIC: &str = "2*p_123*p_467*p_567 - p_367*p_567*p_124 - p_167*p_467*p_235 \
     - p_127*p_567*p_346 - p_126*p_367*p_457 - p_237*p_467*p_156 + p_134*p_567*p_267 \
     + p_246*p_567*p_137 + p_136*p_267*p_457";

/// The cubic of `I_{3,7}` whose `w`-initial form is a monomial exactly when
/// the characteristic is not 2.
pub fn special_cubic(field: Field) -> Result<MultiPoly, ExactAlgError> {
    MultiPoly::parse(&plucker_ring(3, 7, field)?, SPECIAL_CUBIC)
}

/// Columns of a Fano-plane realization over `GF(2)`: column `j` is `a^j` in
/// `GF(8) = GF(2)[a]/(a^3 + a + 1)`, written in the basis `1, a, a^2`.
pub fn fano_matrix_gf2() -> Vec<Vec<i64>> {
    let mut cols = Vec::with_capacity(7);
    let mut x = [1i64, 0, 0];
    for _ in 0..7 {
        cols.push(x);
        // multiply by a: shift up, reduce a^3 = a + 1
        let carry = x[2];
        x = [carry, x[0] ^ carry, x[1]];
    }
    (0..3)
        .map(|r| cols.iter().map(|c| c[r]).collect())
        .collect()
}

/// First-order coefficients of the line minors of `A + t B` over `GF(2)`,
/// as a `7 x 21` matrix acting on the entries of `B`.
fn line_derivative_system() -> Vec<Vec<u8>> {
    let a = fano_matrix_gf2();
    let lines: Vec<Vec<usize>> = FANO_LINES
        .iter()
        .map(|l| parse_label(l).expect("label"))
        .collect();
    let mut rows = vec![vec![0u8; 21]; 7];
    for e in 0..21 {
        let mut b = vec![vec![0i64; 7]; 3];
        b[e / 7][e % 7] = 1;
        let m = TPolyMatrix::linear(Field::Prime(2), &a, &b).expect("shape");
        for (k, l) in lines.iter().enumerate() {
            let minor = m.minor(l);
            rows[k][e] = u8::from(minor.coeffs().get(1).is_some_and(|c| *c == Scalar::Mod(1)));
        }
    }
    rows
}

/// Whether some `B` over `GF(2)` gives all seven line minors of `A + t B`
/// a nonzero `t`-coefficient. It does not: the seven coefficients are linear
/// forms in `B` summing to zero, so they cannot all equal 1. Since every
/// realization of the Fano matroid over `GF(2)` is equivalent to `A`, no
/// matrix over `GF(2)[[t]]` has valuation vector `w`; the certificate has to
/// use a larger field of characteristic 2.
pub fn gf2_perturbation_exists() -> bool {
    let mut rows: Vec<(Vec<u8>, u8)> = line_derivative_system()
        .into_iter()
        .map(|r| (r, 1))
        .collect();
    // Gaussian elimination over GF(2) on the augmented system
    let mut rank = 0;
    for col in 0..21 {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i].0[col] == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row.0[col] == 1 {
                for c in 0..21 {
                    row.0[c] ^= pivot.0[c];
                }
                row.1 ^= pivot.1;
            }
        }
        rank += 1;
    }
    rows.iter()
        .all(|(r, rhs)| r.iter().any(|&x| x == 1) || *rhs == 0)
}

/// Searches perturbations `A + t B` of the Fano matrix with `B` over
/// `GF(4)` for one whose seven line minors all have valuation exactly 1
/// (the remaining minors are units because `A` realizes the Fano matroid).
/// Candidates for `B` are drawn from a ChaCha stream seeded with `seed`.
pub fn fano_certificate(seed: u64) -> Option<TPolyMatrix> {
    fano_certificate_over(TField::GF4, seed, 100_000)
}

/// [`fano_certificate`] over any finite coefficient field of characteristic
/// 2 with at most `tries` random candidates.
pub fn fano_certificate_over(field: TField, seed: u64, tries: usize) -> Option<TPolyMatrix> {
    let size: i64 = match field {
        TField::Binary { k, .. } => 1 << k,
        TField::Base(f) => f.characteristic().into(),
    };
    if size < 2 {
        return None;
    }
    let a = fano_matrix_gf2();
    let lines: Vec<Vec<usize>> = FANO_LINES
        .iter()
        .map(|l| parse_label(l).expect("label"))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..tries {
        let b: Vec<Vec<i64>> = (0..3)
            .map(|_| (0..7).map(|_| rng.gen_range(0..size)).collect())
            .collect();
        let m = TPolyMatrix::linear(field, &a, &b).expect("shape");
        if lines.iter().all(|l| m.minor(l).valuation() == Some(1)) {
            return Some(m);
        }
    }
    None
}

/// Entry display helper for certificates.
pub fn format_matrix(m: &TPolyMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| TPoly::to_string(m.get(r, c)))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::plucker_valuations;
    use crate::minplus::ExtReal;

    #[test]
    fn realization_has_fano_matroid() {
        let a = fano_matrix_gf2();
        let zero = vec![vec![0; 7]; 3];
        let m = TPolyMatrix::linear(Field::Prime(2), &a, &zero).unwrap();
        for s in subsets(7, 3) {
            let is_line = FANO_LINES.iter().any(|l| parse_label(l).unwrap() == s);
            assert_eq!(m.minor(&s).is_zero(), is_line, "{s:?}");
        }
    }

    #[test]
    fn no_certificate_over_gf2() {
        assert!(!gf2_perturbation_exists());
        assert!(fano_certificate_over(Field::Prime(2).into(), 7, 2_000).is_none());
    }

    #[test]
    fn certificate_valuations_are_fano_weight() {
        let m = fano_certificate(0).expect("certificate exists");
        assert_eq!(m.field().characteristic(), 2);
        let v = plucker_valuations(&m);
        let w: Vec<ExtReal> = fano_weight().into_iter().map(ExtReal::Finite).collect();
        assert_eq!(v.coords(), &w[..]);
    }

    #[test]
    fn special_cubic_initial_forms() {
        let w = fano_weight();
        let f0 = special_cubic(Field::Rational).unwrap();
        assert_eq!(
            f0.initial_form(&w).unwrap().to_string(),
            "2*p_123*p_467*p_567"
        );
        let f2 = special_cubic(Field::Prime(2)).unwrap();
        assert_eq!(f2.initial_form(&w).unwrap().len(), 7);
        let wp = fano_weight_prime();
        assert_eq!(f0.initial_form(&wp).unwrap().len(), 2);
        assert!(f2.initial_form(&wp).unwrap().is_monomial());
    }

    #[test]
    fn colex_order_starts_as_expected() {
        let o = colex_var_order(3, 7);
        let names: Vec<usize> = o[..5].to_vec();
        assert_eq!(
            names,
            vec![
                rank(7, &[0, 1, 2]),
                rank(7, &[0, 1, 3]),
                rank(7, &[0, 2, 3]),
                rank(7, &[1, 2, 3]),
                rank(7, &[0, 1, 4])
            ]
        );
    }
}
