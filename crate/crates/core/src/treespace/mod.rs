//! Phylogenetic trees as points of the tropical Grassmannian `G(2,n)`.
//!
//! A tree on leaves `0..n` (printed 1-based) is a set of pairwise compatible
//! splits with positive internal lengths plus per-leaf offsets. Its point in
//! `R^{C(n,2)}` is the negated path metric
//! `w = -sum length * E_{A,B} - phi(offsets)`.

mod ideals;
mod linkage;

use std::fmt;

use itertools::Itertools;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::plucker_vector::{PlueckerError, PlueckerVector};
use crate::rat::{format_rat, parse_rat, rat, ratio, Rat};
use crate::subsets::rank;

pub use ideals::{
    circular_order, circular_weight, is_crossing_ideal, j_sigma, kempe_crossing_generators,
    tree_weight,
};
pub use linkage::additive_linkage;

/// Largest supported leaf count (splits are stored as `u64` masks).
pub const MAX_LEAVES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("leaf count {0} out of range")]
    LeafCount(usize),
    #[error("invalid split {0}")]
    BadSplit(String),
    #[error("splits for {0} and {1} leaves")]
    Mismatch(usize, usize),
    #[error("splits {0} and {1} are incompatible")]
    Incompatible(String, String),
    #[error("duplicate split {0}")]
    DuplicateSplit(String),
    #[error("internal length of {0} must be positive")]
    NonPositiveLength(String),
    #[error("expected {expected} leaf offsets, got {got}")]
    Offsets { expected: usize, got: usize },
    #[error("tree is not trivalent")]
    NotTrivalent,
    #[error("four-point condition fails on leaves {}", fmt_quad(.0))]
    FourPoint([usize; 4]),
    #[error("distance matrix: {0}")]
    Matrix(String),
    #[error("reconstruction did not reproduce the input")]
    Reconstruction,
    #[error(transparent)]
    Plucker(#[from] PlueckerError),
    #[error(transparent)]
    Algebra(#[from] crate::exactalg::ExactAlgError),
    #[error("json: {0}")]
    Json(String),
}

fn fmt_quad(q: &[usize; 4]) -> String {
    q.iter().map(|i| (i + 1).to_string()).join(",")
}

fn leaf_name(i: usize) -> String {
    (i + 1).to_string()
}

fn side_label(n: usize, mask: u64) -> String {
    let sep = if n > 9 { "," } else { "" };
    (0..n)
        .filter(|i| mask >> i & 1 == 1)
        .map(leaf_name)
        .join(sep)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An unordered bipartition `{A, B}` of the leaves with `|A|, |B| >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Split {
    n: u8,
    /// The side not containing leaf 0.
    mask: u64,
}

impl Split {
    /// Split with one side given by the leaf set `side`.
    pub fn new(n: usize, side: &[usize]) -> Result<Self, TreeError> {
        if n > MAX_LEAVES {
            return Err(TreeError::LeafCount(n));
        }
        let mut mask = 0u64;
        for &i in side {
            if i >= n {
                return Err(TreeError::BadSplit(format!("leaf {} with n = {n}", i + 1)));
            }
            mask |= 1 << i;
        }
        Self::from_mask(n, mask)
    }

    /// Split with one side given by a bitmask.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self, TreeError> {
        let full = full_mask(n);
        if n > MAX_LEAVES || mask & !full != 0 {
            return Err(TreeError::BadSplit(format!("mask {mask:#x} with n = {n}")));
        }
        let mask = if mask & 1 == 1 { full & !mask } else { mask };
        let size = mask.count_ones() as usize;
        if size < 2 || n - size < 2 {
            return Err(TreeError::BadSplit(side_label(n, mask)));
        }
        Ok(Split { n: n as u8, mask })
    }

    /// Parses `"12|3456"` (sides may be separated by `|`, leaves by commas).
    pub fn parse(n: usize, s: &str) -> Result<Self, TreeError> {
        let bad = || TreeError::BadSplit(s.to_string());
        let (a, b) = s.split_once('|').ok_or_else(bad)?;
        let leaves = |t: &str| -> Result<Vec<usize>, TreeError> {
            let t = t.trim();
            let parts: Vec<String> = if t.contains(',') {
                t.split(',').map(str::to_string).collect()
            } else {
                t.chars().map(String::from).collect()
            };
            parts
                .iter()
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .ok()
                        .filter(|&v| v >= 1 && v <= n)
                        .map(|v| v - 1)
                        .ok_or_else(bad)
                })
                .collect()
        };
        let a = leaves(a)?;
        let b = leaves(b)?;
        let split = Self::new(n, &a)?;
        let expected = Self::new(n, &b)?;
        let covers = a.len() + b.len() == n && a.iter().chain(&b).unique().count() == n;
        if split != expected || !covers {
            return Err(bad());
        }
        Ok(split)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Bitmask of the side not containing leaf 0.
    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn sides(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.n();
        let a = (0..n).filter(|i| self.mask >> i & 1 == 1).collect();
        let b = (0..n).filter(|i| self.mask >> i & 1 == 0).collect();
        (a, b)
    }

    pub fn separates(&self, i: usize, j: usize) -> bool {
        (self.mask >> i & 1) != (self.mask >> j & 1)
    }

    pub fn smaller_side_size(&self) -> usize {
        let a = self.mask.count_ones() as usize;
        a.min(self.n() - a)
    }

    /// One of `A ⊂ A'`, `A ⊂ B'`, `B ⊂ A'`, `B ⊂ B'` holds.
    pub fn compatible(&self, other: &Split) -> Result<bool, TreeError> {
        if self.n != other.n {
            return Err(TreeError::Mismatch(self.n(), other.n()));
        }
        let full = full_mask(self.n());
        let (a, b) = (self.mask, full & !self.mask);
        let (c, d) = (other.mask, full & !other.mask);
        let sub = |x: u64, y: u64| x & !y == 0;
        Ok(sub(a, c) || sub(a, d) || sub(b, c) || sub(b, d))
    }

    /// The split on one more leaf `x`, which joins `side` (one of the two
    /// side masks of `self`).
    fn extended(&self, x: usize, side: u64) -> Split {
        let mask = if side == self.mask {
            self.mask | 1 << x
        } else {
            self.mask
        };
        Split {
            n: self.n + 1,
            mask,
        }
    }
}

impl fmt::Display for Split {
    /// Smaller side first; on ties the side with leaf 1 first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let other = full_mask(n) & !self.mask;
        let (first, second) =
            if (self.mask.count_ones() as usize) < n - self.mask.count_ones() as usize {
                (self.mask, other)
            } else {
                (other, self.mask)
            };
        write!(f, "{}|{}", side_label(n, first), side_label(n, second))
    }
}

/// A tree with leaves `0..n`, internal edges given by splits with positive
/// lengths, and leaf offsets (pendant lengths, meaningful modulo `image(phi)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiLabeledTree {
    n: usize,
    splits: Vec<(Split, Rat)>,
    leaf_offsets: Vec<Rat>,
}

#[derive(Serialize, Deserialize)]
struct TreeJson {
    n: usize,
    splits: Vec<SplitJson>,
    #[serde(with = "crate::rat::serde_rat_vec")]
    leaf_offsets: Vec<Rat>,
}

#[derive(Serialize, Deserialize)]
struct SplitJson {
    split: String,
    #[serde(with = "crate::rat::serde_rat")]
    length: Rat,
}

impl SemiLabeledTree {
    pub fn new(
        n: usize,
        splits: Vec<(Split, Rat)>,
        leaf_offsets: Vec<Rat>,
    ) -> Result<Self, TreeError> {
        if !(3..=MAX_LEAVES).contains(&n) {
            return Err(TreeError::LeafCount(n));
        }
        if leaf_offsets.len() != n {
            return Err(TreeError::Offsets {
                expected: n,
                got: leaf_offsets.len(),
            });
        }
        let mut splits = splits;
        splits.sort_by(|a, b| a.0.cmp(&b.0));
        for (s, len) in &splits {
            if s.n() != n {
                return Err(TreeError::Mismatch(n, s.n()));
            }
            if !len.is_positive() {
                return Err(TreeError::NonPositiveLength(s.to_string()));
            }
        }
        for w in splits.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(TreeError::DuplicateSplit(w[0].0.to_string()));
            }
        }
        for (a, b) in splits.iter().tuple_combinations() {
            if !a.0.compatible(&b.0)? {
                return Err(TreeError::Incompatible(a.0.to_string(), b.0.to_string()));
            }
        }
        Ok(Self {
            n,
            splits,
            leaf_offsets,
        })
    }

    /// Tree with the given splits, unit internal lengths and zero offsets.
    pub fn with_unit_lengths(n: usize, splits: &[Split]) -> Result<Self, TreeError> {
        Self::new(
            n,
            splits.iter().map(|s| (*s, rat(1))).collect(),
            vec![Rat::zero(); n],
        )
    }

    /// Tree from split labels like `"12|3456"` with unit lengths.
    pub fn from_labels(n: usize, labels: &[&str]) -> Result<Self, TreeError> {
        let splits = labels
            .iter()
            .map(|l| Split::parse(n, l))
            .collect::<Result<Vec<_>, _>>()?;
        Self::with_unit_lengths(n, &splits)
    }

    pub fn star(n: usize) -> Result<Self, TreeError> {
        Self::new(n, Vec::new(), vec![Rat::zero(); n])
    }

    /// The caterpillar `{1..i | i+1..n : i = 2..n-2}` with unit lengths.
    pub fn caterpillar(n: usize) -> Result<Self, TreeError> {
        let splits = (2..=n.saturating_sub(2))
            .map(|i| Split::new(n, &(0..i).collect::<Vec<_>>()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::with_unit_lengths(n, &splits)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(split, internal length)` pairs, sorted by split.
    pub fn splits(&self) -> &[(Split, Rat)] {
        &self.splits
    }

    pub fn split_set(&self) -> Vec<Split> {
        self.splits.iter().map(|(s, _)| *s).collect()
    }

    pub fn leaf_offsets(&self) -> &[Rat] {
        &self.leaf_offsets
    }

    pub fn is_trivalent(&self) -> bool {
        self.splits.len() + 3 == self.n
    }

    fn require_trivalent(&self) -> Result<(), TreeError> {
        if self.is_trivalent() {
            Ok(())
        } else {
            Err(TreeError::NotTrivalent)
        }
    }

    /// A trivalent tree is a caterpillar iff it has exactly two cherries.
    pub fn is_caterpillar(&self) -> Result<bool, TreeError> {
        self.require_trivalent()?;
        if self.n < 4 {
            return Ok(true);
        }
        let cherries: usize = self
            .splits
            .iter()
            .map(|(s, _)| {
                let a = s.mask().count_ones() as usize;
                usize::from(a == 2) + usize::from(self.n - a == 2)
            })
            .sum();
        Ok(cherries == 2)
    }

    /// The pairing of `{i, j, k, l}` separated by an internal edge, as
    /// `([a, b], [c, d])` with `a < b`, `c < d` and `a < c`.
    pub fn quartet(&self, q: [usize; 4]) -> Option<([usize; 2], [usize; 2])> {
        let [i, j, k, l] = q;
        for (s, _) in &self.splits {
            for (a, b, c, d) in [(i, j, k, l), (i, k, j, l), (i, l, j, k)] {
                if !s.separates(a, b) && !s.separates(c, d) && s.separates(a, c) {
                    let p = [a.min(b), a.max(b)];
                    let r = [c.min(d), c.max(d)];
                    return Some(if p[0] < r[0] { (p, r) } else { (r, p) });
                }
            }
        }
        None
    }

    /// Path length between leaves `i` and `j` including both offsets.
    pub fn distance(&self, i: usize, j: usize) -> Rat {
        if i == j {
            return Rat::zero();
        }
        let internal: Rat = self
            .splits
            .iter()
            .filter(|(s, _)| s.separates(i, j))
            .map(|(_, l)| l.clone())
            .sum();
        internal + &self.leaf_offsets[i] + &self.leaf_offsets[j]
    }

    /// The tree's point `w_ij = -distance(i, j)`.
    pub fn to_dissimilarity(&self) -> PairDissimilarity {
        PairDissimilarity::from_fn(self.n, |i, j| -self.distance(i, j))
    }

    /// Relabels leaf `i` as `perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self, TreeError> {
        let splits = self
            .splits
            .iter()
            .map(|(s, l)| {
                let side: Vec<usize> = s.sides().0.iter().map(|&i| perm[i]).collect();
                Ok((Split::new(self.n, &side)?, l.clone()))
            })
            .collect::<Result<Vec<_>, TreeError>>()?;
        let mut offsets = vec![Rat::zero(); self.n];
        for (i, a) in self.leaf_offsets.iter().enumerate() {
            offsets[perm[i]] = a.clone();
        }
        Self::new(self.n, splits, offsets)
    }

    /// Newick string rooted at the node adjacent to leaf 1; pendant branch
    /// lengths are the leaf offsets.
    pub fn to_newick(&self) -> String {
        let full = full_mask(self.n) & !1;
        let mut clusters: Vec<(u64, Rat)> = self
            .splits
            .iter()
            .map(|(s, l)| (s.mask(), l.clone()))
            .collect();
        clusters.sort_by_key(|(m, _)| m.count_ones());
        let inner = self.newick_node(full, &clusters);
        format!(
            "({}:{},{});",
            leaf_name(0),
            format_rat(&self.leaf_offsets[0]),
            &inner[1..inner.len() - 1]
        )
    }

    /// Subtree below the cluster `m` (a set of leaves not containing leaf 0).
    fn newick_node(&self, m: u64, clusters: &[(u64, Rat)]) -> String {
        let inside = |c: u64, d: u64| c != d && c & !d == 0;
        // maximal clusters strictly inside m
        let children: Vec<&(u64, Rat)> = clusters
            .iter()
            .filter(|c| inside(c.0, m))
            .filter(|c| !clusters.iter().any(|d| inside(c.0, d.0) && inside(d.0, m)))
            .collect();
        let covered = children.iter().fold(0u64, |a, c| a | c.0);
        let mut parts: Vec<(u32, String)> = children
            .iter()
            .map(|(c, len)| {
                (
                    c.trailing_zeros(),
                    format!("{}:{}", self.newick_node(*c, clusters), format_rat(len)),
                )
            })
            .collect();
        for i in (0..self.n).filter(|i| m >> i & 1 == 1 && covered >> i & 1 == 0) {
            parts.push((
                i as u32,
                format!("{}:{}", leaf_name(i), format_rat(&self.leaf_offsets[i])),
            ));
        }
        parts.sort_by_key(|p| p.0);
        format!("({})", parts.into_iter().map(|p| p.1).join(","))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = TreeJson {
            n: self.n,
            splits: self
                .splits
                .iter()
                .map(|(s, l)| SplitJson {
                    split: s.to_string(),
                    length: l.clone(),
                })
                .collect(),
            leaf_offsets: self.leaf_offsets.clone(),
        };
        serde_json::to_value(j).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, TreeError> {
        let j: TreeJson =
            serde_json::from_value(value.clone()).map_err(|e| TreeError::Json(e.to_string()))?;
        let splits = j
            .splits
            .iter()
            .map(|s| Ok((Split::parse(j.n, &s.split)?, s.length.clone())))
            .collect::<Result<Vec<_>, TreeError>>()?;
        Self::new(j.n, splits, j.leaf_offsets)
    }
}

/// A rational number per unordered pair of leaves, in lexicographic pair
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairDissimilarity {
    n: usize,
    w: Vec<Rat>,
}

impl PairDissimilarity {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let w = (0..n).tuple_combinations().map(|(i, j)| f(i, j)).collect();
        PairDissimilarity { n, w }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rat] {
        &self.w
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        &self.w[rank(self.n, &[a, b])]
    }

    pub fn to_plucker_vector(&self) -> PlueckerVector {
        PlueckerVector::from_rats(2, self.n, self.w.clone()).expect("C(n,2) coordinates")
    }

    pub fn from_plucker_vector(v: &PlueckerVector) -> Result<Self, TreeError> {
        if v.d() != 2 {
            return Err(TreeError::Matrix(format!("expected d = 2, got {}", v.d())));
        }
        Ok(PairDissimilarity {
            n: v.n(),
            w: v.finite_coords()?,
        })
    }

    pub fn eq_mod_phi(&self, other: &Self) -> Result<bool, TreeError> {
        Ok(self
            .to_plucker_vector()
            .eq_mod_phi(&other.to_plucker_vector())?)
    }

    /// The three pairing sums `(w_ij + w_kl, w_ik + w_jl, w_il + w_jk)`.
    pub fn pairing_sums(&self, q: [usize; 4]) -> [Rat; 3] {
        let [i, j, k, l] = q;
        [
            self.get(i, j) + self.get(k, l),
            self.get(i, k) + self.get(j, l),
            self.get(i, l) + self.get(j, k),
        ]
    }

    /// First quadruple (lexicographically) on which the minimum of the three
    /// pairing sums is attained only once.
    pub fn four_point_violation(&self) -> Option<[usize; 4]> {
        (0..self.n)
            .combinations(4)
            .map(|q| [q[0], q[1], q[2], q[3]])
            .find(|&q| {
                let s = self.pairing_sums(q);
                let m = s.iter().min().expect("three sums");
                s.iter().filter(|x| *x == m).count() < 2
            })
    }

    pub fn four_point_check(&self) -> Result<(), TreeError> {
        match self.four_point_violation() {
            Some(q) => Err(TreeError::FourPoint(q)),
            None => Ok(()),
        }
    }

    /// Reads a symmetric distance matrix with zero diagonal; `w = -D`.
    pub fn read_distance_csv<R: std::io::Read>(reader: R) -> Result<Self, TreeError> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for rec in rdr.records() {
            let rec = rec.map_err(|e| TreeError::Matrix(e.to_string()))?;
            let row = rec
                .iter()
                .map(|f| parse_rat(f).map_err(|e| TreeError::Matrix(e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        let n = rows.len();
        if n < 3 || n > MAX_LEAVES {
            return Err(TreeError::LeafCount(n));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(TreeError::Matrix(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            if !row[i].is_zero() {
                return Err(TreeError::Matrix(format!(
                    "nonzero diagonal entry in row {}",
                    i + 1
                )));
            }
            for j in 0..i {
                if rows[j][i] != row[j] {
                    return Err(TreeError::Matrix(format!(
                        "not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self::from_fn(n, |i, j| -rows[i][j].clone()))
    }

    pub fn write_distance_csv<W: std::io::Write>(&self, writer: W) -> Result<(), TreeError> {
        let mut wtr = csv::WriterBuilder::new()
            .has_headers(false)
            .from_writer(writer);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| {
                    if i == j {
                        "0".to_string()
                    } else {
                        format_rat(&-self.get(i, j))
                    }
                })
                .collect();
            wtr.write_record(&row)
                .map_err(|e| TreeError::Matrix(e.to_string()))?;
        }
        wtr.flush().map_err(|e| TreeError::Matrix(e.to_string()))
    }
}

impl From<&SemiLabeledTree> for PairDissimilarity {
    fn from(t: &SemiLabeledTree) -> Self {
        t.to_dissimilarity()
    }
}

/// `w = -sum length * E_{A,B} - phi(offsets)` as a Plücker vector with `d = 2`.
pub fn tree_to_plucker(t: &SemiLabeledTree) -> PlueckerVector {
    t.to_dissimilarity().to_plucker_vector()
}

/// All trivalent split systems on `n >= 3` leaves, built by inserting leaf
/// `m` into every edge of every tree on `m` leaves. Each tree arises once.
pub fn trivalent_topologies(n: usize) -> Result<Vec<Vec<Split>>, TreeError> {
    if !(3..=MAX_LEAVES).contains(&n) {
        return Err(TreeError::LeafCount(n));
    }
    let mut trees: Vec<Vec<Split>> = vec![Vec::new()];
    for m in 3..n {
        let mut next = Vec::with_capacity(trees.len() * (2 * m - 3));
        for t in &trees {
            for e in insertion_edges(m, t) {
                next.push(insert_leaf(m, t, e));
            }
        }
        trees = next;
    }
    for t in &mut trees {
        t.sort();
    }
    trees.sort();
    Ok(trees)
}

/// Edges of a tree on `m` leaves, each given by the bitmask of one side:
/// pendant edges `{i}` then internal splits.
fn insertion_edges(m: usize, splits: &[Split]) -> Vec<u64> {
    (0..m)
        .map(|i| 1u64 << i)
        .chain(splits.iter().map(|s| s.mask()))
        .collect()
}

/// Subdivides edge `e` (side mask on `m` leaves) and attaches leaf `m` there.
fn insert_leaf(m: usize, splits: &[Split], e: u64) -> Vec<Split> {
    let x = m;
    let full = full_mask(m);
    let mut out: Vec<Split> = Vec::with_capacity(splits.len() + 1);
    for s in splits {
        if s.mask() == e {
            continue;
        }
        // the new leaf joins the side of s that contains edge e, i.e. the side
        // containing whichever side of e it fully contains
        let a = s.mask();
        let side_with_e = if e & !a == 0 || (full & !e) & !a == 0 {
            a
        } else {
            full & !a
        };
        out.push(s.extended(x, side_with_e));
    }
    let n = m + 1;
    let e_with_x = e | 1 << x;
    let comp_with_x = (full & !e) | 1 << x;
    for mask in [e_with_x, comp_with_x] {
        if let Ok(s) = Split::from_mask(n, mask) {
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out
}

/// `1 * 3 * 5 * ... * (2n - 5)`.
pub fn double_factorial_count(n: usize) -> u128 {
    (1..=(2 * n).saturating_sub(5))
        .step_by(2)
        .map(|k| k as u128)
        .product()
}

/// The space of phylogenetic trees `T_n`: vertices are the `2^{n-1} - n - 1`
/// splits, facets the `(2n-5)!!` trivalent trees.
pub fn tn_complex(n: usize) -> Result<SimplicialComplex, TreeError> {
    if !(4..=9).contains(&n) {
        return Err(TreeError::LeafCount(n));
    }
    let mut splits: Vec<Split> = (1..full_mask(n))
        .filter(|m| m & 1 == 0)
        .filter_map(|m| Split::from_mask(n, m).ok())
        .collect();
    splits.sort_by_key(|s| (s.smaller_side_size(), s.to_string()));
    splits.dedup();
    let index: std::collections::HashMap<Split, usize> =
        splits.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let facets = trivalent_topologies(n)?
        .into_iter()
        .map(|t| t.iter().map(|s| index[s]).collect())
        .collect();
    let labels = splits.iter().map(Split::to_string).collect();
    let k = SimplicialComplex::from_faces(labels, facets).expect("valid indices");
    debug_assert_eq!(k.labels().len(), (1usize << (n - 1)) - n - 1);
    debug_assert_eq!(k.maximal_faces().len() as u128, double_factorial_count(n));
    Ok(k)
}

/// A uniformly random leaf labelling of a random insertion-built trivalent
/// tree, with internal lengths in `{1/4, .., 3}` and offsets in `{-2, .., 2}`.
pub fn random_trivalent_tree<R: Rng>(n: usize, rng: &mut R) -> Result<SemiLabeledTree, TreeError> {
    if !(3..=MAX_LEAVES).contains(&n) {
        return Err(TreeError::LeafCount(n));
    }
    let mut t: Vec<Split> = Vec::new();
    for m in 3..n {
        let edges = insertion_edges(m, &t);
        let e = edges[rng.gen_range(0..edges.len())];
        t = insert_leaf(m, &t, e);
    }
    let splits = t
        .into_iter()
        .map(|s| (s, ratio(rng.gen_range(1..=12), 4)))
        .collect();
    let offsets = (0..n).map(|_| rat(rng.gen_range(-2..=2))).collect();
    let tree = SemiLabeledTree::new(n, splits, offsets)?;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    tree.relabeled(&perm)
}

/// Number of vertices of `T_n`.
pub fn tn_vertex_count(n: usize) -> usize {
    (1usize << (n - 1)) - n - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn three_cherries() -> SemiLabeledTree {
        SemiLabeledTree::from_labels(6, &["12|3456", "34|1256", "56|1234"]).unwrap()
    }

    #[test]
    fn split_compatibility() {
        let s = Split::parse(6, "12|3456").unwrap();
        let t = Split::parse(6, "123|456").unwrap();
        let u = Split::parse(6, "13|2456").unwrap();
        assert!(s.compatible(&t).unwrap());
        assert!(!s.compatible(&u).unwrap());
        assert!(s.compatible(&s).unwrap());
        assert!(s.compatible(&Split::parse(5, "12|345").unwrap()).is_err());
    }

    #[test]
    fn split_parsing_and_display() {
        let s = Split::parse(6, "3456|12").unwrap();
        assert_eq!(s.to_string(), "12|3456");
        assert_eq!(Split::parse(6, "123|456").unwrap().to_string(), "123|456");
        assert!(Split::parse(6, "1|23456").is_err());
        assert!(Split::parse(6, "12|345").is_err());
        assert!(Split::parse(6, "12|2345").is_err());
        assert_eq!(
            Split::parse(10, "1,10|2,3,4,5,6,7,8,9")
                .unwrap()
                .to_string(),
            "1,10|2,3,4,5,6,7,8,9"
        );
    }

    #[test]
    fn tree_validation() {
        let s = Split::parse(6, "12|3456").unwrap();
        let u = Split::parse(6, "13|2456").unwrap();
        assert!(matches!(
            SemiLabeledTree::with_unit_lengths(6, &[s, u]),
            Err(TreeError::Incompatible(..))
        ));
        assert!(matches!(
            SemiLabeledTree::with_unit_lengths(6, &[s, s]),
            Err(TreeError::DuplicateSplit(_))
        ));
        assert!(SemiLabeledTree::new(6, vec![(s, rat(0))], vec![rat(0); 6]).is_err());
        assert!(three_cherries().is_trivalent());
    }

    #[test]
    fn quartet_metric_example() {
        let t = SemiLabeledTree::from_labels(4, &["12|34"]).unwrap();
        let w = t.to_dissimilarity();
        assert_eq!(
            w.values(),
            &[rat(0), rat(-1), rat(-1), rat(-1), rat(-1), rat(0)]
        );
        assert_eq!(t.quartet([0, 1, 2, 3]), Some(([0, 1], [2, 3])));
    }

    #[test]
    fn star_tree_lies_in_phi_image() {
        let t = SemiLabeledTree::new(5, Vec::new(), (0..5).map(rat).collect()).unwrap();
        let w = tree_to_plucker(&t);
        assert!(w.eq_mod_phi(&PlueckerVector::zero(2, 5).unwrap()).unwrap());
    }

    #[test]
    fn four_point() {
        assert!(three_cherries()
            .to_dissimilarity()
            .four_point_check()
            .is_ok());
        // pairing sums 1, 2, 3
        let w = PairDissimilarity::from_fn(4, |i, j| match (i, j) {
            (0, 1) => rat(1),
            (0, 2) => rat(2),
            (0, 3) => rat(3),
            _ => rat(0),
        });
        assert_eq!(
            w.four_point_check(),
            Err(TreeError::FourPoint([0, 1, 2, 3]))
        );
        let phi =
            PairDissimilarity::from_fn(5, |i, j| rat((i * i + j) as i64) + rat((j * j + i) as i64));
        assert!(phi.four_point_check().is_ok());
    }

    #[test]
    fn topology_counts() {
        for n in 3..=8 {
            let trees = trivalent_topologies(n).unwrap();
            assert_eq!(trees.len() as u128, double_factorial_count(n), "n = {n}");
            for t in &trees {
                assert_eq!(t.len(), n - 3);
                assert!(t
                    .iter()
                    .tuple_combinations()
                    .all(|(a, b)| a.compatible(b).unwrap()));
            }
            let distinct: std::collections::HashSet<_> = trees.iter().collect();
            assert_eq!(distinct.len(), trees.len());
        }
    }

    #[test]
    fn small_tree_spaces() {
        let t4 = tn_complex(4).unwrap();
        assert_eq!(t4.f_vector(), vec![3]);
        let t5 = tn_complex(5).unwrap();
        assert_eq!(t5.f_vector(), vec![10, 15]);
        assert_eq!(t5.betti_numbers(), vec![1, 6]);
        let t6 = tn_complex(6).unwrap();
        assert_eq!(t6.f_vector(), vec![25, 105, 105]);
        assert!(t6.is_flag());
        assert!(tn_complex(3).is_err());
        assert!(tn_complex(10).is_err());
    }

    #[test]
    fn caterpillars() {
        for n in [4, 5] {
            for t in trivalent_topologies(n).unwrap() {
                assert!(SemiLabeledTree::with_unit_lengths(n, &t)
                    .unwrap()
                    .is_caterpillar()
                    .unwrap());
            }
        }
        assert!(!three_cherries().is_caterpillar().unwrap());
        let chain = SemiLabeledTree::from_labels(6, &["12|3456", "123|456", "1234|56"]).unwrap();
        assert!(chain.is_caterpillar().unwrap());
        assert!(SemiLabeledTree::caterpillar(7)
            .unwrap()
            .is_caterpillar()
            .unwrap());
        assert_eq!(
            SemiLabeledTree::star(6).unwrap().is_caterpillar(),
            Err(TreeError::NotTrivalent)
        );
    }

    #[test]
    fn newick_and_json() {
        let t = three_cherries();
        assert_eq!(t.to_newick(), "(1:0,2:0,((3:0,4:0):1,(5:0,6:0):1):1);");
        let back = SemiLabeledTree::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let r = random_trivalent_tree(7, &mut rng).unwrap();
        assert_eq!(SemiLabeledTree::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn csv_roundtrip() {
        let w = three_cherries().to_dissimilarity();
        let mut buf = Vec::new();
        w.write_distance_csv(&mut buf).unwrap();
        let back = PairDissimilarity::read_distance_csv(buf.as_slice()).unwrap();
        assert_eq!(back, w);
        assert!(PairDissimilarity::read_distance_csv("0,1,2\n1,0,3\n2,4,0\n".as_bytes()).is_err());
    }
}
