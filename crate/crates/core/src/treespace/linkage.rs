//! Additive Linkage: recovering a tree from a point satisfying the four-point
//! condition.
//!
//! With leaf 0 as root, the Gromov products
//! `s(i, j) = (w_ij - w_0i - w_0j) / 2` are the depths of the meeting points of
//! `i` and `j` (up to a common shift), so the clusters below internal nodes are
//! the sets `{k : s(i, k) >= s(i, j)}`. Depth differences give the internal
//! lengths, and the remaining pair sums give the leaf offsets.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{full_mask, PairDissimilarity, SemiLabeledTree, Split, TreeError};
use crate::rat::{rat, Rat};

/// The tree `T` with `tree_to_plucker(T) = w`, computed exactly.
pub fn additive_linkage(w: &PairDissimilarity) -> Result<SemiLabeledTree, TreeError> {
    let n = w.n();
    if !(3..=super::MAX_LEAVES).contains(&n) {
        return Err(TreeError::LeafCount(n));
    }
    w.four_point_check()?;
    let two = rat(2);
    let gromov = |i: usize, j: usize| (w.get(i, j) - w.get(0, i) - w.get(0, j)) / &two;

    // cluster mask -> depth of the node above it
    let mut clusters: BTreeMap<u64, Rat> = BTreeMap::new();
    for i in 1..n {
        for j in i + 1..n {
            let h = gromov(i, j);
            let mut mask = 1u64 << i;
            for k in (1..n).filter(|&k| k != i) {
                if gromov(i, k) >= h {
                    mask |= 1 << k;
                }
            }
            clusters.insert(mask, h);
        }
    }
    let top = full_mask(n) & !1;
    let mut splits = Vec::new();
    for (&mask, depth) in &clusters {
        if mask == top {
            continue;
        }
        // parent: the smallest cluster strictly containing this one
        let parent = clusters
            .iter()
            .filter(|(&m, _)| m != mask && mask & !m == 0)
            .min_by_key(|(&m, _)| m.count_ones())
            .map(|(_, h)| h.clone())
            .ok_or(TreeError::Reconstruction)?;
        splits.push((Split::from_mask(n, mask)?, depth - parent));
    }
    let internal = |i: usize, j: usize| -> Rat {
        splits
            .iter()
            .filter(|(s, _)| s.separates(i, j))
            .map(|(_, l)| l.clone())
            .sum()
    };
    // r(i, j) = a_i + a_j
    let r = |i: usize, j: usize| -w.get(i, j) - internal(i, j);
    let offsets: Vec<Rat> = (0..n)
        .map(|i| {
            let mut others = (0..n).filter(|&k| k != i);
            let j = others.next().expect("n >= 3");
            let k = others.next().expect("n >= 3");
            (r(i, j) + r(i, k) - r(j, k)) / &two
        })
        .collect();
    let tree = SemiLabeledTree::new(n, splits, offsets)?;
    let back = tree.to_dissimilarity();
    if back
        .values()
        .iter()
        .zip(w.values())
        .any(|(a, b)| !(a - b).is_zero())
    {
        return Err(TreeError::Reconstruction);
    }
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treespace::{random_trivalent_tree, tree_to_plucker, trivalent_topologies};
    use itertools::Itertools;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Splits read off by brute force: `A|B` is a split iff every quartet
    /// `aa'|bb'` has strictly the largest pairing sum on `aa' + bb'`.
    fn quartet_splits(w: &PairDissimilarity) -> Vec<Split> {
        let n = w.n();
        (1..full_mask(n))
            .filter(|m| m & 1 == 0)
            .filter_map(|m| Split::from_mask(n, m).ok())
            .filter(|s| {
                let (a, b) = s.sides();
                a.iter().tuple_combinations().all(|(&x, &y)| {
                    b.iter().tuple_combinations().all(|(&u, &v)| {
                        let own = w.get(x, y) + w.get(u, v);
                        own > w.get(x, u) + w.get(y, v) && own > w.get(x, v) + w.get(y, u)
                    })
                })
            })
            .collect()
    }

    #[test]
    fn three_cherry_round_trip() {
        let t = SemiLabeledTree::from_labels(6, &["12|3456", "34|1256", "56|1234"]).unwrap();
        let back = additive_linkage(&t.to_dissimilarity()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn star_from_phi() {
        let w = PairDissimilarity::from_fn(5, |i, j| rat((i * i + j * j) as i64));
        let t = additive_linkage(&w).unwrap();
        assert!(t.splits().is_empty());
    }

    #[test]
    fn rejects_four_point_violation() {
        let w =
            PairDissimilarity::from_fn(4, |i, j| rat((i * 10 + j * j) as i64) * rat(i as i64 + 1));
        assert!(w.four_point_violation().is_some());
        assert!(matches!(additive_linkage(&w), Err(TreeError::FourPoint(_))));
    }

    #[test]
    fn random_trees_match_quartet_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 4..=8 {
            for _ in 0..10 {
                let t = random_trivalent_tree(n, &mut rng).unwrap();
                let w = t.to_dissimilarity();
                let back = additive_linkage(&w).unwrap();
                assert_eq!(
                    back.split_set(),
                    quartet_splits(&w).into_iter().sorted().collect::<Vec<_>>()
                );
                assert_eq!(back.splits(), t.splits());
                assert!(tree_to_plucker(&back)
                    .eq_mod_phi(&tree_to_plucker(&t))
                    .unwrap());
            }
        }
    }

    #[test]
    fn multifurcating_trees() {
        for t in trivalent_topologies(7).unwrap().into_iter().step_by(37) {
            let partial: Vec<Split> = t.into_iter().skip(1).collect();
            let tree = SemiLabeledTree::with_unit_lengths(7, &partial).unwrap();
            assert_eq!(additive_linkage(&tree.to_dissimilarity()).unwrap(), tree);
        }
    }

    #[test]
    fn offsets_are_recovered_up_to_phi() {
        let t = SemiLabeledTree::from_labels(5, &["12|345", "123|45"]).unwrap();
        let shifted = PairDissimilarity::from_fn(5, |i, j| {
            t.to_dissimilarity().get(i, j) + rat(i as i64) + rat(j as i64)
        });
        let back = additive_linkage(&shifted).unwrap();
        assert_eq!(back.split_set(), t.split_set());
        assert!(back
            .leaf_offsets()
            .iter()
            .enumerate()
            .all(|(i, a)| *a == rat(-(i as i64))));
        assert!(back.leaf_offsets()[0].is_zero());
    }
}
