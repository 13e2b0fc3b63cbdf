//! Enumeration and labelling of `d`-subsets of `[n]`.
//!
//! Elements are stored 0-based and displayed 1-based. For `n <= 9` a subset is
//! labelled by its concatenated digits (`"124"`); larger ground sets use `_` as
//! a separator (`"1_2_10"`).

use itertools::Itertools;

/// All `d`-subsets of `{0, .., n-1}` in lexicographic order.
pub fn subsets(n: usize, d: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(d).collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Position of a sorted subset in the lexicographic list of `subsets(n, d)`.
pub fn rank(n: usize, subset: &[usize]) -> usize {
    let d = subset.len();
    let mut r = 0;
    let mut prev: isize = -1;
    for (pos, &x) in subset.iter().enumerate() {
        for skipped in (prev + 1) as usize..x {
            r += binomial(n - 1 - skipped, d - 1 - pos);
        }
        prev = x as isize;
    }
    r
}

/// 1-based label of a 0-based subset.
pub fn label(n: usize, subset: &[usize]) -> String {
    if n <= 9 {
        subset.iter().map(|i| char::from(b'1' + *i as u8)).collect()
    } else {
        subset.iter().map(|i| (i + 1).to_string()).join("_")
    }
}

/// Inverse of [`label`]; returns the sorted 0-based subset.
pub fn parse_label(s: &str) -> Option<Vec<usize>> {
    let s = s.trim();
    let mut out: Vec<usize> = if s.contains('_') {
        s.split('_')
            .map(|t| t.parse::<usize>().ok().filter(|v| *v >= 1).map(|v| v - 1))
            .collect::<Option<_>>()?
    } else {
        s.chars()
            .map(|c| c.to_digit(10).filter(|v| *v >= 1).map(|v| v as usize - 1))
            .collect::<Option<_>>()?
    };
    let len = out.len();
    out.sort_unstable();
    out.dedup();
    (out.len() == len).then_some(out)
}

/// Sorted union of `set` and `extra`, with the sign of the permutation that
/// sorts `set ++ [extra]`. Returns `None` if `extra` already belongs to `set`.
pub fn insert_signed(set: &[usize], extra: usize) -> Option<(Vec<usize>, i32)> {
    if set.contains(&extra) {
        return None;
    }
    let larger = set.iter().filter(|&&x| x > extra).count();
    let mut v = set.to_vec();
    v.push(extra);
    v.sort_unstable();
    Some((v, if larger % 2 == 0 { 1 } else { -1 }))
}

/// All permutations of `0..n` (Heap's algorithm order is irrelevant; output is
/// lexicographic).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// Sign of a permutation given as an image vector.
pub fn permutation_sign(p: &[usize]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_matches_enumeration() {
        for n in 1..8 {
            for d in 0..=n {
                for (i, s) in subsets(n, d).iter().enumerate() {
                    assert_eq!(rank(n, s), i, "n={n} d={d} s={s:?}");
                }
                assert_eq!(subsets(n, d).len(), binomial(n, d));
            }
        }
    }

    #[test]
    fn labels() {
        assert_eq!(label(6, &[0, 1, 3]), "124");
        assert_eq!(parse_label("124"), Some(vec![0, 1, 3]));
        assert_eq!(parse_label("421"), Some(vec![0, 1, 3]));
        assert_eq!(parse_label("1_2_10"), Some(vec![0, 1, 9]));
        assert_eq!(label(10, &[0, 1, 9]), "1_2_10");
        assert_eq!(parse_label("112"), None);
        assert_eq!(parse_label("10"), None);
    }

    #[test]
    fn signs() {
        assert_eq!(insert_signed(&[0, 2], 1), Some((vec![0, 1, 2], -1)));
        assert_eq!(insert_signed(&[1, 2], 0), Some((vec![0, 1, 2], 1)));
        assert_eq!(insert_signed(&[1, 2], 2), None);
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[2, 0, 1]), 1);
    }
}
