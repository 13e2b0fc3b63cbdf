//! Recovering `w` from a membership oracle for `L_w`.
//!
//! For each `(d-1)`-subset `I` put `x_i = M` on `I` and keep the remaining
//! coordinates in a window well below `M`. There the circuit `I + {j, k}`
//! holds exactly when `x_j - x_k = w_{I+j} - w_{I+k}`, so scanning a grid of
//! differences against a fixed anchor locates the unique point of `L_w` in
//! the window and the differences are read off from it.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::Signed;

use super::TropLinError;
use crate::plucker_vector::PlueckerVector;
use crate::rat::{rat, Rat};
use crate::subsets::{binomial, label, rank, subsets};

/// A priori bounds on the unknown vector: `|w_S| <= magnitude` and every
/// `w_S` is a multiple of `1/denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructBound {
    pub magnitude: u64,
    pub denominator: u64,
}

impl ReconstructBound {
    /// The smallest bound containing the finite vector `w`.
    pub fn of(w: &PlueckerVector) -> Result<Self, TropLinError> {
        let coords = w.finite_coords().map_err(|_| TropLinError::Infinite)?;
        let mut magnitude = 0u64;
        let mut denominator = 1u64;
        for c in &coords {
            let ceil = c.abs().ceil().to_integer();
            let m: u64 = ceil.try_into().map_err(|_| TropLinError::Overflow)?;
            magnitude = magnitude.max(m);
            let q: u64 = c.denom().try_into().map_err(|_| TropLinError::Overflow)?;
            denominator = num_integer::lcm(denominator, q);
        }
        Ok(Self {
            magnitude,
            denominator,
        })
    }
}

/// Reconstructs `w` modulo `image(phi)` from `member`, which returns the
/// supports of the violated circuits at a point (empty for points of `L_w`).
pub fn reconstruct_plucker(
    member: impl Fn(&[Rat]) -> Vec<Vec<usize>>,
    d: usize,
    n: usize,
    bound: &ReconstructBound,
) -> Result<PlueckerVector, TropLinError> {
    if d == 0 || d >= n {
        return Err(TropLinError::Shape { d, n });
    }
    let fail = |msg: String| TropLinError::Reconstruction(msg);
    let b = rat(bound.magnitude as i64);
    let q = bound.denominator.max(1) as i64;
    let big_m = rat(4 * n as i64) * &b + rat(1);
    // Window for the free coordinates: [M - 6B - 1, M - 2B - 1].
    let base = &big_m - rat(4) * &b - rat(1);
    let steps = 2 * bound.magnitude as i64 * q;

    // One located point of L_w per (d-1)-subset I.
    let mut readings: Vec<(Vec<usize>, Vec<Rat>)> = Vec::new();
    for inner in subsets(n, d - 1) {
        let rest: Vec<usize> = (0..n).filter(|i| !inner.contains(i)).collect();
        let anchor = rest[0];
        let mut found: Vec<Option<Rat>> = vec![None; n];
        found[anchor] = Some(rat(0));
        for k in -steps..=steps {
            let delta = Rat::new(BigInt::from(k), BigInt::from(q));
            let mut x = vec![&base + &delta; n];
            for &i in &inner {
                x[i] = big_m.clone();
            }
            x[anchor] = base.clone();
            let violated = member(&x);
            for &j in &rest[1..] {
                let mut support = inner.clone();
                support.extend([anchor, j]);
                support.sort_unstable();
                if !violated.contains(&support) {
                    if found[j].is_some() {
                        return Err(fail(format!(
                            "two differences satisfy circuit {}",
                            label(n, &support)
                        )));
                    }
                    found[j] = Some(delta.clone());
                }
            }
        }
        let mut x = vec![big_m.clone(); n];
        for &j in &rest {
            let delta = found[j].clone().ok_or_else(|| {
                fail(format!(
                    "no grid difference for x{} with I = {}",
                    j + 1,
                    label(n, &inner)
                ))
            })?;
            x[j] = &base + delta;
        }
        if !member(&x).is_empty() {
            return Err(fail(format!(
                "located point for I = {} is not on the plane",
                label(n, &inner)
            )));
        }
        readings.push((inner, x));
    }

    // w_{I+j} - w_{I+k} = x_j - x_k; propagate from the first d-subset.
    let all = subsets(n, d);
    let mut value: Vec<Option<Rat>> = vec![None; binomial(n, d)];
    value[0] = Some(rat(0));
    let mut queue = VecDeque::from([0usize]);
    let with = |inner: &[usize], j: usize| {
        let mut s = inner.to_vec();
        s.push(j);
        s.sort_unstable();
        rank(n, &s)
    };
    while let Some(s) = queue.pop_front() {
        let ws = value[s].clone().expect("queued with a value");
        for (inner, x) in &readings {
            let Some(&j) = all[s].iter().find(|i| !inner.contains(i)) else {
                continue;
            };
            if !inner.iter().all(|i| all[s].contains(i)) {
                continue;
            }
            for k in (0..n).filter(|k| !inner.contains(k) && *k != j) {
                let t = with(inner, k);
                let wt = &ws - (&x[j] - &x[k]);
                match &value[t] {
                    None => {
                        value[t] = Some(wt);
                        queue.push_back(t);
                    }
                    Some(v) if *v != wt => {
                        return Err(fail(format!(
                            "inconsistent differences at {}",
                            label(n, &all[t])
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let coords: Vec<Rat> = value
        .into_iter()
        .map(|v| v.ok_or_else(|| fail("coordinates not connected".into())))
        .collect::<Result<_, _>>()?;
    Ok(PlueckerVector::from_rats(d, n, coords)?.reduce_mod_phi()?)
}
