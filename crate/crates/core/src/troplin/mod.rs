//! Tropical linear spaces `L_w`.
//!
//! `L_w` is the intersection of the tropical hyperplanes of the circuit forms
//! `F_J = min_{j in J} (w_{J \ j} + x_j)` over all `(d+1)`-subsets `J`. The
//! module covers membership, the set of `d`-partitions of maximal faces,
//! duality, recovery of `w` from a membership oracle and, for `d = 2`, the
//! obstruction to the dual plane being a complete intersection.

mod reconstruct;
mod search;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::minplus::{ExtReal, MinPlusError, TropPolynomial};
use crate::plucker_vector::{PlueckerError, PlueckerVector};
use crate::rat::Rat;
use crate::subsets::{label, subsets};
use crate::treespace::{SemiLabeledTree, TreeError};

pub use reconstruct::{reconstruct_plucker, ReconstructBound};
pub use search::MaximalFace;

/// Largest `n` accepted by [`TropicalPlane::maximal_faces`].
pub const MAX_TYPE_N: usize = 7;

#[derive(Debug, Error)]
pub enum TropLinError {
    #[error("circuit {0} has fewer than two finite coefficients")]
    DegenerateCircuit(String),
    #[error("need 1 <= d < n, got d={d}, n={n}")]
    Shape { d: usize, n: usize },
    #[error("point has length {got}, expected {expected}")]
    Dimension { expected: usize, got: usize },
    #[error("face enumeration supports n <= {MAX_TYPE_N}, got d={d}, n={n}")]
    SizeGuard { d: usize, n: usize },
    #[error("operation needs a finite Plücker vector")]
    Infinite,
    #[error("scaled coordinates overflow")]
    Overflow,
    #[error("invalid d-partition {0:?}")]
    Partition(String),
    #[error("reconstruction failed: {0}")]
    Reconstruction(String),
    #[error("tree must have at least 5 leaves, got {0}")]
    TooFewLeaves(usize),
    #[error(transparent)]
    Plucker(#[from] PlueckerError),
    #[error(transparent)]
    MinPlus(#[from] MinPlusError),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// One circuit form `F_J` together with its support `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    pub support: Vec<usize>,
    pub form: TropPolynomial,
}

impl Circuit {
    /// Coefficient `w_{J \ j}` of `x_j`.
    pub fn coefficient(&self, j: usize) -> &ExtReal {
        let mut e = vec![0; self.form.nvars()];
        e[j] = 1;
        self.form.coefficient(&e).expect("j in support")
    }

    pub fn label(&self) -> String {
        label(self.form.nvars(), &self.support)
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .support
            .iter()
            .map(|&j| format!("{}*x{}", self.coefficient(j), j + 1))
            .join(" + ");
        write!(f, "F_{} = {terms}", self.label())
    }
}

/// The circuit forms of `w`, one per `(d+1)`-subset in lexicographic order.
pub fn circuits(w: &PlueckerVector) -> Result<Vec<Circuit>, TropLinError> {
    let (d, n) = (w.d(), w.n());
    if d == 0 || d >= n {
        return Err(TropLinError::Shape { d, n });
    }
    subsets(n, d + 1)
        .into_iter()
        .map(|support| {
            let mut coeffs = vec![ExtReal::Infinity; n];
            for &j in &support {
                let rest: Vec<usize> = support.iter().copied().filter(|&i| i != j).collect();
                coeffs[j] = w.at(&rest).clone();
            }
            if coeffs.iter().filter(|c| c.is_finite()).count() < 2 {
                return Err(TropLinError::DegenerateCircuit(label(n, &support)));
            }
            // Drop the x_i with i outside J so only the support carries terms.
            let terms = support
                .iter()
                .map(|&j| {
                    let mut e = vec![0; n];
                    e[j] = 1;
                    (e, coeffs[j].clone())
                })
                .collect();
            Ok(Circuit {
                form: TropPolynomial::new(n, terms)?,
                support,
            })
        })
        .collect()
}

/// The tropical `d`-plane `L_w` with its circuit forms.
#[derive(Clone, Debug)]
pub struct TropicalPlane {
    w: PlueckerVector,
    circuits: Vec<Circuit>,
}

impl TropicalPlane {
    pub fn new(w: PlueckerVector) -> Result<Self, TropLinError> {
        let circuits = circuits(&w)?;
        Ok(Self { w, circuits })
    }

    pub fn plucker(&self) -> &PlueckerVector {
        &self.w
    }

    pub fn d(&self) -> usize {
        self.w.d()
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    pub fn circuits(&self) -> &[Circuit] {
        &self.circuits
    }

    /// Supports `J` of the circuits whose minimum is attained only once at `x`.
    pub fn violated_circuits(&self, x: &[Rat]) -> Result<Vec<Vec<usize>>, TropLinError> {
        if x.len() != self.n() {
            return Err(TropLinError::Dimension {
                expected: self.n(),
                got: x.len(),
            });
        }
        let mut out = Vec::new();
        for c in &self.circuits {
            if !c.form.on_hypersurface(x)? {
                out.push(c.support.clone());
            }
        }
        Ok(out)
    }

    /// `x` lies on every circuit hypersurface.
    pub fn contains(&self, x: &[Rat]) -> Result<bool, TropLinError> {
        Ok(self.violated_circuits(x)?.is_empty())
    }

    /// The maximal faces of `L_w`, one per `d`-partition, each with a point
    /// in its relative interior.
    pub fn maximal_faces(&self) -> Result<Vec<MaximalFace>, TropLinError> {
        search::maximal_faces(self)
    }

    /// The type of `L_w`: the `d`-partitions of its maximal faces.
    pub fn plane_type(&self) -> Result<BTreeSet<DPartition>, TropLinError> {
        Ok(self
            .maximal_faces()?
            .into_iter()
            .map(|f| f.partition)
            .collect())
    }

    /// The dual `(n-d)`-plane.
    pub fn dual(&self) -> Result<Self, TropLinError> {
        Self::new(dual(&self.w))
    }
}

/// The vector whose `[n] \ I` coordinate is the `I` coordinate of `w`.
pub fn dual(w: &PlueckerVector) -> PlueckerVector {
    w.complement_dual()
}

/// An unordered partition of `[n]` into nonempty blocks.
///
/// Blocks are stored sorted, ordered by size and then lexicographically, so
/// equal partitions compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl DPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, TropLinError> {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let all: Vec<usize> = blocks.iter().flatten().copied().sorted().collect();
        if blocks.iter().any(Vec::is_empty) || all != (0..n).collect::<Vec<_>>() {
            return Err(TropLinError::Partition(format!("{blocks:?}")));
        }
        Ok(Self { n, blocks })
    }

    /// Parses `"1|23|456"`; blocks with labels above 9 separate by commas.
    pub fn parse(n: usize, s: &str) -> Result<Self, TropLinError> {
        let err = || TropLinError::Partition(s.to_string());
        let commas = n > 9 || s.contains(',');
        let blocks = s
            .split('|')
            .map(|b| {
                let b = b.trim();
                let items: Vec<&str> = if commas {
                    b.split(',').map(str::trim).collect()
                } else {
                    b.split("").filter(|c| !c.is_empty()).collect()
                };
                items
                    .into_iter()
                    .map(|c| match c.parse::<usize>() {
                        Ok(v) if v >= 1 => Ok(v - 1),
                        _ => Err(err()),
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(n, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Image under `i -> perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&i| perm[i]).collect())
            .collect();
        Self::new(self.n, blocks).expect("permutation of a partition")
    }
}

impl fmt::Display for DPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n > 9 { "," } else { "" };
        let s = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|i| (i + 1).to_string()).join(sep))
            .join("|");
        f.write_str(&s)
    }
}

impl Serialize for DPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A maximal face is bounded exactly when every block has at least two
/// elements.
pub fn is_bounded_face(p: &DPartition) -> bool {
    p.blocks.iter().all(|b| b.len() >= 2)
}

/// All partitions of `[n]` into exactly `d` nonempty blocks.
pub fn d_partitions(n: usize, d: usize) -> Vec<DPartition> {
    fn go(i: usize, n: usize, d: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<DPartition>) {
        if cur.len() + (n - i) < d {
            return;
        }
        if i == n {
            if cur.len() == d {
                out.push(DPartition::new(n, cur.clone()).expect("partition"));
            }
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(i);
            go(i + 1, n, d, cur, out);
            cur[b].pop();
        }
        if cur.len() < d {
            cur.push(vec![i]);
            go(i + 1, n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Non-obvious part of the type of an EEFF1 sample plane in `G(3,6)`.
pub const SAGBI_TYPE: [&str; 13] = [
    "1|23|456", "1|56|234", "2|13|456", "2|56|134", "3|12|456", "3|56|124", "4|12|356", "4|56|123",
    "5|12|346", "5|46|123", "6|12|345", "6|45|123", "12|34|56",
];

/// Non-obvious part of the type shared by the three FFGG tetrahedra of a
/// bipyramid.
pub const BIPYRAMID_TYPE: [&str; 13] = [
    "1|34|256", "1|56|234", "2|34|156", "2|56|134", "3|12|456", "3|56|124", "4|12|356", "4|56|123",
    "5|12|346", "5|34|126", "6|12|345", "6|34|125", "12|34|56",
];

/// Non-obvious part of the type of an EEEE plane (27 facets, none bounded).
pub const EEEE_TYPE: [&str; 12] = [
    "1|23|456", "1|234|56", "2|13|456", "2|135|46", "3|12|456", "3|126|45", "4|26|135", "4|126|35",
    "5|16|234", "5|126|34", "6|15|234", "6|135|24",
];

/// The partitions `{i, j, [n] \ {i, j}}` shared by every generic 3-plane.
pub fn obvious_tripartitions(n: usize) -> Vec<DPartition> {
    (0..n)
        .tuple_combinations()
        .map(|(i, j)| {
            let rest = (0..n).filter(|&k| k != i && k != j).collect();
            DPartition::new(n, vec![vec![i], vec![j], rest]).expect("tripartition")
        })
        .collect()
}

/// A listed set of tripartitions of `[6]` together with the 15 obvious ones.
pub fn full_type_g36(listed: &[&str]) -> BTreeSet<DPartition> {
    let mut out: BTreeSet<DPartition> = obvious_tripartitions(6).into_iter().collect();
    out.extend(
        listed
            .iter()
            .map(|s| DPartition::parse(6, s).expect("valid literal")),
    );
    out
}

/// A leaf pair `{j, k}` that no edge on the path between leaves `ends`
/// separates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathWitness {
    pub ends: [usize; 2],
    pub pair: [usize; 2],
}

/// Outcome of [`ci_status_d2`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CiStatus {
    /// One witness per leaf pair. Every path between two points of the tree
    /// extends to a leaf-to-leaf path, so for any two hyperplanes containing
    /// the dual plane their intersection contains a codimension-one cone.
    NotCompleteIntersection(Vec<PathWitness>),
    Unknown,
}

/// Whether the dual `(n-2)`-plane of a trivalent tree is provably not cut out
/// by two tropical hyperplanes.
pub fn ci_status_d2(t: &SemiLabeledTree) -> Result<CiStatus, TropLinError> {
    let n = t.n();
    if n < 5 {
        return Err(TropLinError::TooFewLeaves(n));
    }
    if !t.is_trivalent() {
        return Err(TreeError::NotTrivalent.into());
    }
    let splits = t.split_set();
    let mut witnesses = Vec::new();
    for (p, q) in (0..n).tuple_combinations() {
        let path: Vec<_> = splits.iter().filter(|s| s.separates(p, q)).collect();
        let pair = (0..n)
            .filter(|&i| i != p && i != q)
            .tuple_combinations()
            .find(|&(j, k)| path.iter().all(|s| !s.separates(j, k)));
        match pair {
            Some((j, k)) => witnesses.push(PathWitness {
                ends: [p, q],
                pair: [j, k],
            }),
            None => return Ok(CiStatus::Unknown),
        }
    }
    Ok(CiStatus::NotCompleteIntersection(witnesses))
}

impl FromStr for DPartition {
    type Err = TropLinError;

    /// Parses with `n` inferred from the largest label.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let n = if s.contains(',') {
            s.split(['|', ',']).filter(|t| !t.trim().is_empty()).count()
        } else {
            s.chars().filter(char::is_ascii_digit).count()
        };
        Self::parse(n, s)
    }
}
