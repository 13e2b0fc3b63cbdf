//! Finite abstract simplicial complexes stored by their maximal faces.
//!
//! Vertices are indices into a label list; a face is a sorted `Vec<usize>`.
//! Homology is computed from integer boundary matrices by sparse elimination on
//! unit pivots, with a dense Smith normal form on whatever is left.

use std::collections::{BTreeSet, HashMap, HashSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Face = Vec<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("face {0:?} is not in the complex")]
    FaceAbsent(Vec<String>),
    #[error("json: {0}")]
    Json(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<Face>,
}

/// Ranks and torsion of integral simplicial homology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Homology {
    /// `betti[k]` is the rank of `H_k` (unreduced).
    pub betti: Vec<usize>,
    /// Invariant factors greater than one of `H_k`.
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<Vec<BigInt>>,
}

fn serialize_torsion<S: serde::Serializer>(t: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    let strings: Vec<Vec<String>> = t
        .iter()
        .map(|v| v.iter().map(|x| x.to_string()).collect())
        .collect();
    strings.serialize(s)
}

impl Homology {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(|t| t.is_empty())
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    vertices: Vec<String>,
    maximal_faces: Vec<Vec<String>>,
}

/// Keeps only the inclusion-maximal faces, each sorted, in canonical order.
fn maximal_only(faces: Vec<Face>) -> Vec<Face> {
    let mut faces: Vec<Face> = faces
        .into_iter()
        .map(|mut f| {
            f.sort_unstable();
            f.dedup();
            f
        })
        .collect();
    faces.sort();
    faces.dedup();
    let max_len = faces.iter().map(Vec::len).max().unwrap_or(0);
    if faces.iter().all(|f| f.len() == max_len) {
        return faces;
    }
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut kept: Vec<Face> = Vec::new();
    let mut by_vertex: HashMap<usize, Vec<usize>> = HashMap::new();
    for f in faces {
        let covered = match f.first() {
            None => !kept.is_empty(),
            Some(v) => by_vertex
                .get(v)
                .map(|idx| idx.iter().any(|&i| is_subset(&f, &kept[i])))
                .unwrap_or(false),
        };
        if !covered {
            for &v in &f {
                by_vertex.entry(v).or_default().push(kept.len());
            }
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

impl SimplicialComplex {
    /// The complex generated by `faces`; non-maximal faces are dropped.
    pub fn from_faces(labels: Vec<String>, faces: Vec<Face>) -> Result<Self, ComplexError> {
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(ComplexError::DuplicateLabel(l.clone()));
            }
        }
        for f in &faces {
            if let Some(&v) = f.iter().find(|&&v| v >= labels.len()) {
                return Err(ComplexError::VertexOutOfRange(v));
            }
        }
        Ok(Self {
            labels,
            facets: maximal_only(faces),
        })
    }

    /// Clique complex of a graph on `labels.len()` vertices.
    pub fn flag_complex(
        labels: Vec<String>,
        edges: &[(usize, usize)],
    ) -> Result<Self, ComplexError> {
        let n = labels.len();
        let mut adj = vec![BitSet::new(n); n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(ComplexError::VertexOutOfRange(a.max(b)));
            }
            if a != b {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        let mut cliques = Vec::new();
        bron_kerbosch(
            &adj,
            &mut Vec::new(),
            BitSet::full(n),
            BitSet::new(n),
            &mut cliques,
        );
        Self::from_faces(labels, cliques)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Maps labels to a sorted face.
    pub fn face_of(&self, labels: &[&str]) -> Result<Face, ComplexError> {
        let mut f = labels
            .iter()
            .map(|l| {
                self.index_of(l)
                    .ok_or_else(|| ComplexError::UnknownLabel(l.to_string()))
            })
            .collect::<Result<Face, _>>()?;
        f.sort_unstable();
        Ok(f)
    }

    pub fn face_labels(&self, face: &[usize]) -> Vec<String> {
        face.iter().map(|&v| self.labels[v].clone()).collect()
    }

    pub fn maximal_faces(&self) -> &[Face] {
        &self.facets
    }

    /// Vertices that belong to some face.
    pub fn used_vertices(&self) -> Vec<usize> {
        self.facets
            .iter()
            .flatten()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Dimension; `-1` for the complex `{∅}` and for the void complex.
    pub fn dimension(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().map(Vec::len).all_equal()
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        self.facets.iter().any(|m| is_subset(&f, m))
    }

    /// All faces with `k + 1` vertices, sorted.
    pub fn faces(&self, k: usize) -> Vec<Face> {
        let mut set: HashSet<Face> = HashSet::new();
        for f in self.facets.iter().filter(|f| f.len() > k) {
            for c in f.iter().copied().combinations(k + 1) {
                set.insert(c);
            }
        }
        let mut out: Vec<Face> = set.into_iter().collect();
        out.sort();
        out
    }

    /// Number of faces in each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let dim = self.dimension();
        (0..=dim).map(|k| self.faces(k as usize).len()).collect()
    }

    /// `sum (-1)^k f_k`, without the empty face.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.euler_characteristic() - 1
    }

    /// `{G : G ∪ F ∈ K, G ∩ F = ∅}`, over the same vertex labels.
    pub fn link(&self, face: &[usize]) -> Result<Self, ComplexError> {
        let mut f = face.to_vec();
        f.sort_unstable();
        let faces: Vec<Face> = self
            .facets
            .iter()
            .filter(|m| is_subset(&f, m))
            .map(|m| m.iter().copied().filter(|v| !f.contains(v)).collect())
            .collect();
        if faces.is_empty() {
            return Err(ComplexError::FaceAbsent(self.face_labels(&f)));
        }
        Ok(Self {
            labels: self.labels.clone(),
            facets: maximal_only(faces),
        })
    }

    /// The subcomplex of faces containing none of `forbidden`.
    pub fn without_faces(&self, forbidden: &[Face]) -> Self {
        let forbidden: Vec<Face> = forbidden
            .iter()
            .map(|f| {
                let mut f = f.clone();
                f.sort_unstable();
                f
            })
            .collect();
        let mut out = Vec::new();
        let mut stack: Vec<Face> = self.facets.clone();
        while let Some(f) = stack.pop() {
            match forbidden.iter().find(|b| is_subset(b, &f)) {
                None => out.push(f),
                Some(b) => {
                    for v in b {
                        stack.push(f.iter().copied().filter(|x| x != v).collect());
                    }
                }
            }
        }
        Self {
            labels: self.labels.clone(),
            facets: maximal_only(out),
        }
    }

    /// Edges of the 1-skeleton.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.faces(1).into_iter().map(|e| (e[0], e[1])).collect()
    }

    /// Vertex sets of size `size` that are not faces although all their proper
    /// subsets are.
    pub fn minimal_non_faces(&self, size: usize) -> Vec<Face> {
        if size == 0 {
            return Vec::new();
        }
        let smaller: HashSet<Face> = if size >= 2 {
            self.faces(size - 2).into_iter().collect()
        } else {
            HashSet::new()
        };
        let present: HashSet<Face> = self.faces(size - 1).into_iter().collect();
        let mut out = Vec::new();
        if size == 1 {
            let used: HashSet<usize> = self.used_vertices().into_iter().collect();
            return (0..self.labels.len())
                .filter(|v| !used.contains(v))
                .map(|v| vec![v])
                .collect();
        }
        // candidates: extend each (size-1)-face by a larger vertex
        let mut candidates = BTreeSet::new();
        for f in &smaller {
            for v in self.used_vertices() {
                if v > *f.last().unwrap() {
                    let mut c = f.clone();
                    c.push(v);
                    candidates.insert(c);
                }
            }
        }
        for c in candidates {
            if present.contains(&c) {
                continue;
            }
            let all_boundary = (0..c.len()).all(|i| {
                let mut b = c.clone();
                b.remove(i);
                smaller.contains(&b)
            });
            if all_boundary {
                out.push(c);
            }
        }
        out
    }

    /// True if every minimal non-face has two vertices.
    pub fn is_flag(&self) -> bool {
        let Ok(flag) = Self::flag_complex(self.labels.clone(), &self.edges()) else {
            return false;
        };
        flag.facets == self.facets
    }

    /// Integral homology of the complex.
    pub fn homology(&self) -> Homology {
        let dim = self.dimension();
        if dim < 0 {
            return Homology {
                betti: Vec::new(),
                torsion: Vec::new(),
            };
        }
        let dim = dim as usize;
        let faces: Vec<Vec<Face>> = (0..=dim).map(|k| self.faces(k)).collect();
        // snf[k]: (rank, torsion factors) of the boundary map C_k -> C_{k-1}
        let mut snf: Vec<(usize, Vec<BigInt>)> = vec![(0, Vec::new())];
        for k in 1..=dim {
            snf.push(boundary_snf(&faces[k], &faces[k - 1]));
        }
        snf.push((0, Vec::new()));
        let betti = (0..=dim)
            .map(|k| faces[k].len() - snf[k].0 - snf[k + 1].0)
            .collect();
        let torsion = (0..=dim).map(|k| snf[k + 1].1.clone()).collect();
        Homology { betti, torsion }
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.homology().betti
    }

    /// Image of the complex under a relabelling of vertices.
    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> Vec<Face> {
        let mut out: Vec<Face> = self
            .facets
            .iter()
            .map(|m| {
                let mut g: Face = m.iter().map(|&v| f(v)).collect();
                g.sort_unstable();
                g
            })
            .collect();
        out.sort();
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = ComplexJson {
            vertices: self.labels.clone(),
            maximal_faces: self.facets.iter().map(|f| self.face_labels(f)).collect(),
        };
        serde_json::to_value(j).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, ComplexError> {
        let j: ComplexJson =
            serde_json::from_value(value.clone()).map_err(|e| ComplexError::Json(e.to_string()))?;
        let index: HashMap<&str, usize> = j
            .vertices
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let faces = j
            .maximal_faces
            .iter()
            .map(|f| {
                f.iter()
                    .map(|l| {
                        index
                            .get(l.as_str())
                            .copied()
                            .ok_or_else(|| ComplexError::UnknownLabel(l.clone()))
                    })
                    .collect::<Result<Face, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_faces(j.vertices, faces)
    }
}

#[derive(Clone, Debug)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    fn and(&self, other: &Self) -> Self {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn count_and(&self, other: &Self) -> u32 {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..64)
                .filter(move |b| w >> b & 1 == 1)
                .map(move |b| i * 64 + b)
        })
    }
}

fn bron_kerbosch(
    adj: &[BitSet],
    r: &mut Vec<usize>,
    mut p: BitSet,
    mut x: BitSet,
    out: &mut Vec<Face>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.count_and(&adj[u]))
        .expect("nonempty");
    let candidates: Vec<usize> = p.iter().filter(|&v| !adj[pivot].contains(v)).collect();
    for v in candidates {
        r.push(v);
        bron_kerbosch(adj, r, p.and(&adj[v]), x.and(&adj[v]), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Rank and non-unit invariant factors of the boundary map from `upper`
/// (k-faces) to `lower` ((k-1)-faces).
fn boundary_snf(upper: &[Face], lower: &[Face]) -> (usize, Vec<BigInt>) {
    let index: HashMap<&Face, usize> = lower.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let columns: Vec<Vec<(usize, i64)>> = upper
        .iter()
        .map(|f| {
            let mut col: Vec<(usize, i64)> = (0..f.len())
                .map(|i| {
                    let mut b = f.clone();
                    b.remove(i);
                    (index[&b], if i % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    integer_snf(lower.len(), columns)
}

/// Smith normal form data of a sparse integer matrix given by columns: the rank
/// and the invariant factors other than one.
pub fn integer_snf(nrows: usize, columns: Vec<Vec<(usize, i64)>>) -> (usize, Vec<BigInt>) {
    let mut m = SparseMatrix::new(nrows, columns);
    let mut rank = 0;
    while let Some((r, c)) = m.unit_pivot() {
        if m.eliminate(r, c).is_err() {
            break;
        }
        rank += 1;
    }
    let (dense_rank, factors) = dense_snf(m.remaining());
    (rank + dense_rank, factors)
}

struct SparseMatrix {
    rows: Vec<HashMap<usize, i64>>,
    cols: Vec<HashSet<usize>>,
}

struct Overflow;

impl SparseMatrix {
    fn new(nrows: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        let mut rows = vec![HashMap::new(); nrows];
        let mut cols = vec![HashSet::new(); columns.len()];
        for (c, col) in columns.into_iter().enumerate() {
            for (r, v) in col {
                if v != 0 {
                    rows[r].insert(c, v);
                    cols[c].insert(r);
                }
            }
        }
        SparseMatrix { rows, cols }
    }

    /// A ±1 entry minimising the Markowitz cost.
    fn unit_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            for (&c, &v) in row {
                if v.abs() != 1 {
                    continue;
                }
                let cost = (row.len() - 1) * (self.cols[c].len() - 1);
                if best.map_or(true, |b| (cost, r, c) < b) {
                    best = Some((cost, r, c));
                    if cost == 0 {
                        return Some((r, c));
                    }
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    }

    /// Clears column `c` with row `r` and then drops both.
    fn eliminate(&mut self, r: usize, c: usize) -> Result<(), Overflow> {
        let p = self.rows[r][&c];
        let pivot_row: Vec<(usize, i64)> = self.rows[r].iter().map(|(&k, &v)| (k, v)).collect();
        let others: Vec<usize> = self.cols[c].iter().copied().filter(|&x| x != r).collect();
        for o in others {
            let factor = self.rows[o][&c] * p; // p = ±1, so this is a / p
            for &(k, v) in &pivot_row {
                let delta = factor.checked_mul(v).ok_or(Overflow)?;
                let entry = self.rows[o].entry(k).or_insert(0);
                *entry = entry.checked_sub(delta).ok_or(Overflow)?;
                if *entry == 0 {
                    self.rows[o].remove(&k);
                    self.cols[k].remove(&o);
                } else {
                    self.cols[k].insert(o);
                }
            }
        }
        for &(k, _) in &pivot_row {
            self.cols[k].remove(&r);
        }
        self.rows[r].clear();
        Ok(())
    }

    fn remaining(&self) -> Vec<Vec<BigInt>> {
        let live_rows: Vec<usize> = (0..self.rows.len())
            .filter(|&r| !self.rows[r].is_empty())
            .collect();
        let live_cols: Vec<usize> = (0..self.cols.len())
            .filter(|&c| !self.cols[c].is_empty())
            .collect();
        live_rows
            .iter()
            .map(|&r| {
                live_cols
                    .iter()
                    .map(|c| BigInt::from(self.rows[r].get(c).copied().unwrap_or(0)))
                    .collect()
            })
            .collect()
    }
}

/// Rank and invariant factors `> 1` of a dense integer matrix.
fn dense_snf(mut a: Vec<Vec<BigInt>>) -> (usize, Vec<BigInt>) {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest nonzero entry in the trailing block becomes the pivot
        let pos = (t..nrows)
            .flat_map(|i| (t..ncols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
        let Some((i, j)) = pos else { break };
        a.swap(t, i);
        for row in a.iter_mut() {
            row.swap(t, j);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..ncols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // the pivot must divide the rest of the block
            let bad = (t + 1..nrows)
                .flat_map(|i| (t + 1..ncols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_multiple_of(&a[t][t]));
            match bad {
                Some((i, _)) => {
                    for j in t..ncols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    let factors = diag.iter().filter(|d| !d.is_one()).cloned().collect();
    (diag.len(), factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i}")).collect()
    }

    #[test]
    fn hollow_tetrahedron() {
        let faces: Vec<Face> = (0..4).combinations(3).collect();
        let k = SimplicialComplex::from_faces(labels(4), faces).unwrap();
        assert_eq!(k.f_vector(), vec![4, 6, 4]);
        assert_eq!(k.betti_numbers(), vec![1, 0, 1]);
        assert_eq!(k.reduced_euler_characteristic(), 1);
        assert!(!k.is_flag());
        assert_eq!(k.minimal_non_faces(4), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn drops_non_maximal_faces() {
        let k = SimplicialComplex::from_faces(
            labels(4),
            vec![vec![0, 1, 2], vec![1, 0], vec![3], vec![2, 3]],
        )
        .unwrap();
        assert_eq!(k.maximal_faces(), &[vec![0, 1, 2], vec![2, 3]]);
        assert!(k.contains_face(&[1, 2]));
        assert!(!k.contains_face(&[1, 3]));
    }

    #[test]
    fn flag_complex_of_square_with_diagonal() {
        let k =
            SimplicialComplex::flag_complex(labels(4), &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
                .unwrap();
        assert_eq!(k.maximal_faces(), &[vec![0, 1, 2], vec![0, 2, 3]]);
        assert!(k.is_flag());
        assert_eq!(k.betti_numbers(), vec![1, 0, 0]);
    }

    #[test]
    fn circle_and_links() {
        let k = SimplicialComplex::from_faces(
            labels(5),
            (0..5).map(|i| vec![i, (i + 1) % 5]).collect(),
        )
        .unwrap();
        assert_eq!(k.betti_numbers(), vec![1, 1]);
        let l = k.link(&[0]).unwrap();
        assert_eq!(l.maximal_faces(), &[vec![1], vec![4]]);
        let top = k.link(&[0, 1]).unwrap();
        assert_eq!(top.maximal_faces(), &[Vec::<usize>::new()]);
        assert_eq!(top.dimension(), -1);
        assert!(k.link(&[0, 2]).is_err());
    }

    #[test]
    fn projective_plane_has_torsion() {
        // six-vertex triangulation of RP^2
        let faces = vec![
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 5],
            vec![0, 1, 5],
            vec![1, 2, 4],
            vec![2, 3, 5],
            vec![1, 3, 4],
            vec![2, 4, 5],
            vec![1, 3, 5],
        ];
        let k = SimplicialComplex::from_faces(labels(6), faces).unwrap();
        let h = k.homology();
        assert_eq!(h.betti, vec![1, 0, 0]);
        assert_eq!(h.torsion[1], vec![BigInt::from(2)]);
        assert!(!h.is_torsion_free());
    }

    #[test]
    fn dense_snf_small() {
        let a = vec![
            vec![BigInt::from(2), BigInt::from(4), BigInt::from(4)],
            vec![BigInt::from(-6), BigInt::from(6), BigInt::from(12)],
            vec![BigInt::from(10), BigInt::from(-4), BigInt::from(-16)],
        ];
        let (rank, factors) = dense_snf(a);
        assert_eq!(rank, 3);
        assert_eq!(
            factors,
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
    }

    #[test]
    fn json_roundtrip() {
        let k = SimplicialComplex::from_faces(labels(3), vec![vec![0, 1], vec![1, 2]]).unwrap();
        let back = SimplicialComplex::from_json(&k.to_json()).unwrap();
        assert_eq!(back, k);
    }
}
