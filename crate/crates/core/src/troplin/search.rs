//! Maximal faces of `L_w` by depth-first search over tight sets.
//!
//! Every constraint produced by a circuit is a difference constraint
//! `x_b - x_a <= c`, so feasibility of a partial choice is the absence of a
//! negative cycle and the affine hull of the feasible region is spanned by the
//! zero-weight cycles. The dimension of the region is the number of classes of
//! coordinates whose differences are pinned, and those classes are the blocks
//! of the `d`-partition.

use std::collections::BTreeMap;
use std::thread;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::{DPartition, TropLinError, TropicalPlane, MAX_TYPE_N};
use crate::rat::Rat;

const INF: i128 = i128::MAX;

/// A maximal face of `L_w`: its `d`-partition and a point in its relative
/// interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalFace {
    pub partition: DPartition,
    pub interior_point: Vec<Rat>,
}

/// All-pairs shortest paths of a difference-constraint system, maintained
/// incrementally. `dist[a][b]` bounds `x_b - x_a` from above.
#[derive(Clone)]
struct Closure {
    n: usize,
    dist: Vec<i128>,
}

impl Closure {
    fn new(n: usize) -> Self {
        let mut dist = vec![INF; n * n];
        for i in 0..n {
            dist[i * n + i] = 0;
        }
        Self { n, dist }
    }

    fn get(&self, a: usize, b: usize) -> i128 {
        self.dist[a * self.n + b]
    }

    /// Adds `x_b - x_a <= c`; false if the system becomes infeasible.
    fn add(&mut self, a: usize, b: usize, c: i128) -> bool {
        let back = self.get(b, a);
        if back != INF && c + back < 0 {
            return false;
        }
        if self.get(a, b) <= c {
            return true;
        }
        let n = self.n;
        for i in 0..n {
            let ia = self.get(i, a);
            if ia == INF {
                continue;
            }
            for j in 0..n {
                let bj = self.get(b, j);
                if bj == INF {
                    continue;
                }
                let via = ia + c + bj;
                if via < self.dist[i * n + j] {
                    self.dist[i * n + j] = via;
                }
            }
        }
        true
    }

    /// Class index per coordinate; `i ~ j` when `x_j - x_i` is constant on
    /// the region.
    fn classes(&self) -> (Vec<usize>, usize) {
        let n = self.n;
        let mut class = vec![usize::MAX; n];
        let mut count = 0;
        for i in 0..n {
            if class[i] != usize::MAX {
                continue;
            }
            for j in i..n {
                let (f, b) = (self.get(i, j), self.get(j, i));
                if j == i || (f != INF && b != INF && f + b == 0) {
                    class[j] = count;
                }
            }
            count += 1;
        }
        (class, count)
    }
}

/// Circuit data scaled to integers: `(support, coefficient of x_j for j in support)`.
struct ScaledCircuit {
    support: Vec<usize>,
    coeffs: Vec<i128>,
    choices: Vec<u32>,
}

struct Search<'a> {
    n: usize,
    d: usize,
    circuits: &'a [ScaledCircuit],
}

impl Search<'_> {
    fn apply(&self, c: &ScaledCircuit, mask: u32, state: &mut Closure) -> bool {
        let k = c.support.len();
        let first = mask.trailing_zeros() as usize;
        let (s0, c0) = (c.support[first], c.coeffs[first]);
        for p in (first + 1)..k {
            let (j, cj) = (c.support[p], c.coeffs[p]);
            let ok = if mask >> p & 1 == 1 {
                state.add(s0, j, c0 - cj) && state.add(j, s0, cj - c0)
            } else {
                state.add(j, s0, cj - c0)
            };
            if !ok {
                return false;
            }
        }
        for p in 0..first {
            let (m, cm) = (c.support[p], c.coeffs[p]);
            if !state.add(m, s0, cm - c0) {
                return false;
            }
        }
        true
    }

    fn dfs(&self, depth: usize, state: &Closure, out: &mut Vec<Closure>) {
        if depth == self.circuits.len() {
            if state.classes().1 == self.d {
                out.push(state.clone());
            }
            return;
        }
        let c = &self.circuits[depth];
        for &mask in &c.choices {
            let mut next = state.clone();
            if self.apply(c, mask, &mut next) && next.classes().1 >= self.d {
                self.dfs(depth + 1, &next, out);
            }
        }
    }

    fn face(&self, state: &Closure, scale: &BigInt, bound: i128) -> MaximalFace {
        let n = self.n;
        let (class, count) = state.classes();
        let mut blocks = vec![Vec::new(); count];
        for (i, &c) in class.iter().enumerate() {
            blocks[c].push(i);
        }
        // Averaging the shortest-path potentials from every source gives a
        // point strictly inside every constraint that is not an implied
        // equality. The box keeps all potentials finite without reaching the
        // region's relative interior boundary.
        let mut boxed = state.clone();
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    boxed.add(a, b, bound);
                }
            }
        }
        debug_assert_eq!(boxed.classes().1, count);
        let denom = Rat::from_integer(scale * BigInt::from(n));
        let point = (0..n)
            .map(|b| {
                let s: i128 = (0..n).map(|a| boxed.get(a, b)).sum();
                Rat::from_integer(BigInt::from(s)) / &denom
            })
            .collect();
        MaximalFace {
            partition: DPartition::new(n, blocks).expect("classes partition [n]"),
            interior_point: point,
        }
    }
}

pub(super) fn maximal_faces(plane: &TropicalPlane) -> Result<Vec<MaximalFace>, TropLinError> {
    let (d, n) = (plane.d(), plane.n());
    if n > MAX_TYPE_N {
        return Err(TropLinError::SizeGuard { d, n });
    }
    let w = plane
        .plucker()
        .finite_coords()
        .map_err(|_| TropLinError::Infinite)?;
    let scale = w.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let to_int = |x: &Rat| -> Result<i128, TropLinError> {
        (x * Rat::from_integer(scale.clone()))
            .to_integer()
            .to_i128()
            .filter(|v| v.abs() < 1 << 100)
            .ok_or(TropLinError::Overflow)
    };
    let mut max_abs = 0i128;
    let mut circuits = Vec::new();
    for c in plane.circuits() {
        let coeffs = c
            .support
            .iter()
            .map(|&j| {
                let v = c.coefficient(j).finite().ok_or(TropLinError::Infinite)?;
                to_int(v)
            })
            .collect::<Result<Vec<_>, _>>()?;
        max_abs = max_abs.max(coeffs.iter().map(|v| v.abs()).max().unwrap_or(0));
        let k = c.support.len() as u32;
        let choices = (0u32..1 << k).filter(|m| m.count_ones() >= 2).collect();
        circuits.push(ScaledCircuit {
            support: c.support.clone(),
            coeffs,
            choices,
        });
    }
    let search = Search {
        n,
        d,
        circuits: &circuits,
    };
    let bound = 4 * (n as i128) * (max_abs + 1) + 1;
    let root = Closure::new(n);
    let first = &circuits[0];
    let leaves: Vec<Vec<Closure>> = thread::scope(|s| {
        let handles: Vec<_> = first
            .choices
            .iter()
            .map(|&mask| {
                let search = &search;
                let root = &root;
                s.spawn(move || {
                    let mut state = root.clone();
                    let mut out = Vec::new();
                    if search.apply(first, mask, &mut state) && state.classes().1 >= d {
                        search.dfs(1, &state, &mut out);
                    }
                    out
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search thread"))
            .collect()
    });
    let mut faces: BTreeMap<DPartition, MaximalFace> = BTreeMap::new();
    for state in leaves.iter().flatten() {
        let face = search.face(state, &scale, bound);
        faces.entry(face.partition.clone()).or_insert(face);
    }
    Ok(faces.into_values().collect())
}
