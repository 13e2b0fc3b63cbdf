//! Vectors indexed by the `d`-subsets of `[n]`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::minplus::ExtReal;
use crate::rat::{parse_rat, rat, Rat};
use crate::subsets::{binomial, label, parse_label, rank, subsets};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlueckerError {
    #[error("need d <= n, got d={d}, n={n}")]
    BadShape { d: usize, n: usize },
    #[error("coordinate vector has length {got}, expected {expected}")]
    Length { got: usize, expected: usize },
    #[error("invalid subset label {0:?}")]
    Label(String),
    #[error("missing coordinate {0}")]
    Missing(String),
    #[error("invalid coordinate value {0:?}")]
    Value(String),
    #[error("operation needs finite coordinates")]
    Infinite,
    #[error("shape mismatch: ({0},{1}) vs ({2},{3})")]
    Mismatch(usize, usize, usize, usize),
    #[error("json: {0}")]
    Json(String),
}

/// A point of `R^{C(n,d)}` (entries may be `+inf`), coordinates in
/// lexicographic subset order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlueckerVector {
    d: usize,
    n: usize,
    coords: Vec<ExtReal>,
}

impl PlueckerVector {
    pub fn zero(d: usize, n: usize) -> Result<Self, PlueckerError> {
        Self::from_fn(d, n, |_| ExtReal::zero())
    }

    pub fn from_fn(
        d: usize,
        n: usize,
        mut f: impl FnMut(&[usize]) -> ExtReal,
    ) -> Result<Self, PlueckerError> {
        if d > n {
            return Err(PlueckerError::BadShape { d, n });
        }
        let coords = subsets(n, d).iter().map(|s| f(s)).collect();
        Ok(Self { d, n, coords })
    }

    pub fn from_coords(d: usize, n: usize, coords: Vec<ExtReal>) -> Result<Self, PlueckerError> {
        if d > n {
            return Err(PlueckerError::BadShape { d, n });
        }
        let expected = binomial(n, d);
        if coords.len() != expected {
            return Err(PlueckerError::Length {
                got: coords.len(),
                expected,
            });
        }
        Ok(Self { d, n, coords })
    }

    pub fn from_rats(d: usize, n: usize, coords: Vec<Rat>) -> Result<Self, PlueckerError> {
        Self::from_coords(d, n, coords.into_iter().map(ExtReal::Finite).collect())
    }

    /// Standard basis vector `e_S`.
    pub fn unit(d: usize, n: usize, subset: &[usize]) -> Result<Self, PlueckerError> {
        let mut v = Self::zero(d, n)?;
        *v.get_mut(subset)? = ExtReal::from(1);
        Ok(v)
    }

    /// Sum of basis vectors given by 1-based labels, e.g. `["12", "34"]`.
    pub fn sum_of_units(d: usize, n: usize, labels: &[&str]) -> Result<Self, PlueckerError> {
        let mut v = Self::zero(d, n)?;
        for l in labels {
            let s = parse_label(l).ok_or_else(|| PlueckerError::Label(l.to_string()))?;
            let c = v.get_mut(&s)?;
            *c = c.tropical_mul(&ExtReal::from(1));
        }
        Ok(v)
    }

    /// `phi(a)`: coordinate `S` is `sum_{i in S} a_i`.
    pub fn phi(d: usize, a: &[Rat]) -> Result<Self, PlueckerError> {
        let n = a.len();
        Self::from_fn(d, n, |s| {
            ExtReal::Finite(s.iter().map(|&i| a[i].clone()).sum())
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[ExtReal] {
        &self.coords
    }

    pub fn subsets(&self) -> Vec<Vec<usize>> {
        subsets(self.n, self.d)
    }

    fn index(&self, subset: &[usize]) -> Result<usize, PlueckerError> {
        let ok = subset.len() == self.d
            && subset.windows(2).all(|w| w[0] < w[1])
            && subset.iter().all(|&i| i < self.n);
        if !ok {
            return Err(PlueckerError::Label(format!("{subset:?}")));
        }
        Ok(rank(self.n, subset))
    }

    pub fn get(&self, subset: &[usize]) -> Result<&ExtReal, PlueckerError> {
        let i = self.index(subset)?;
        Ok(&self.coords[i])
    }

    pub fn get_mut(&mut self, subset: &[usize]) -> Result<&mut ExtReal, PlueckerError> {
        let i = self.index(subset)?;
        Ok(&mut self.coords[i])
    }

    /// Coordinate by unsorted subset (sorted internally).
    pub fn at(&self, subset: &[usize]) -> &ExtReal {
        let mut s = subset.to_vec();
        s.sort_unstable();
        self.get(&s).expect("valid subset")
    }

    /// Coordinate by 1-based label.
    pub fn at_label(&self, l: &str) -> Result<&ExtReal, PlueckerError> {
        let s = parse_label(l).ok_or_else(|| PlueckerError::Label(l.to_string()))?;
        self.get(&s)
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(ExtReal::is_finite)
    }

    pub fn finite_coords(&self) -> Result<Vec<Rat>, PlueckerError> {
        self.coords
            .iter()
            .map(|c| c.finite().cloned().ok_or(PlueckerError::Infinite))
            .collect()
    }

    fn check_shape(&self, other: &Self) -> Result<(), PlueckerError> {
        if self.d != other.d || self.n != other.n {
            return Err(PlueckerError::Mismatch(self.d, self.n, other.d, other.n));
        }
        Ok(())
    }

    /// Ordinary (coordinate-wise) sum.
    pub fn add(&self, other: &Self) -> Result<Self, PlueckerError> {
        self.check_shape(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.tropical_mul(b))
            .collect();
        Ok(Self {
            coords,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PlueckerError> {
        self.check_shape(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| match (a, b) {
                (ExtReal::Finite(x), ExtReal::Finite(y)) => Ok(ExtReal::Finite(x - y)),
                _ => Err(PlueckerError::Infinite),
            })
            .collect::<Result<_, _>>()?;
        Ok(Self {
            coords,
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &Rat) -> Result<Self, PlueckerError> {
        let v = self.finite_coords()?;
        Self::from_rats(self.d, self.n, v.into_iter().map(|x| x * c).collect())
    }

    /// The vector whose `[n] \ S` coordinate is the `S` coordinate of `self`.
    pub fn complement_dual(&self) -> Self {
        let n = self.n;
        let d = n - self.d;
        let coords = subsets(n, d)
            .iter()
            .map(|s| {
                let comp: Vec<usize> = (0..n).filter(|i| !s.contains(i)).collect();
                self.coords[rank(n, &comp)].clone()
            })
            .collect();
        Self { d, n, coords }
    }

    /// Solves for `a` minimising `|w - phi(a)|` (exact least squares); the
    /// residual is the canonical representative of `w` modulo `image(phi)`.
    pub fn phi_component(&self) -> Result<Vec<Rat>, PlueckerError> {
        let w = self.finite_coords()?;
        let (n, d) = (self.n, self.d);
        if d == 0 {
            return Ok(vec![Rat::zero(); n]);
        }
        if d == n {
            return Ok(vec![&w[0] / rat(n as i64); n]);
        }
        // phi^T phi = (alpha - beta) I + beta J
        let alpha = rat(binomial(n - 1, d - 1) as i64);
        let beta = if d >= 2 {
            rat(binomial(n - 2, d - 2) as i64)
        } else {
            Rat::zero()
        };
        let mut rhs = vec![Rat::zero(); n];
        for (s, x) in subsets(n, d).iter().zip(&w) {
            for &i in s {
                rhs[i] += x;
            }
        }
        let total: Rat = rhs.iter().cloned().sum();
        let gap = &alpha - &beta;
        let denom = &gap + &beta * rat(n as i64);
        Ok(rhs
            .iter()
            .map(|r| (r - &beta * &total / &denom) / &gap)
            .collect())
    }

    /// Canonical representative modulo `image(phi)` (orthogonal projection).
    pub fn reduce_mod_phi(&self) -> Result<Self, PlueckerError> {
        let a = self.phi_component()?;
        self.sub(&Self::phi(self.d, &a)?)
    }

    /// Canonical representative modulo `R (1, .., 1)` (mean zero).
    pub fn reduce_mod_ones(&self) -> Result<Self, PlueckerError> {
        let w = self.finite_coords()?;
        let mean: Rat = w.iter().cloned().sum::<Rat>() / rat(w.len() as i64);
        Self::from_rats(self.d, self.n, w.into_iter().map(|x| x - &mean).collect())
    }

    pub fn eq_mod_phi(&self, other: &Self) -> Result<bool, PlueckerError> {
        self.check_shape(other)?;
        Ok(self
            .sub(other)?
            .reduce_mod_phi()?
            .coords
            .iter()
            .all(|c| c.is_zero()))
    }

    /// `(label, value)` pairs in lexicographic order.
    pub fn labelled(&self) -> Vec<(String, ExtReal)> {
        subsets(self.n, self.d)
            .iter()
            .zip(&self.coords)
            .map(|(s, c)| (label(self.n, s), c.clone()))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let file = PlueckerFile {
            d: self.d,
            n: self.n,
            coords: self
                .labelled()
                .into_iter()
                .map(|(l, c)| (l, c.to_string()))
                .collect(),
        };
        serde_json::to_value(file).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, PlueckerError> {
        let file: PlueckerFile = serde_json::from_value(value.clone())
            .map_err(|e| PlueckerError::Json(e.to_string()))?;
        let mut v = Self::zero(file.d, file.n)?;
        let mut seen = 0;
        for (l, c) in &file.coords {
            let s = parse_label(l).ok_or_else(|| PlueckerError::Label(l.clone()))?;
            *v.get_mut(&s)? = parse_ext(c)?;
            seen += 1;
        }
        if seen != v.coords.len() {
            let missing = v
                .labelled()
                .into_iter()
                .map(|(l, _)| l)
                .find(|l| !file.coords.contains_key(l))
                .unwrap_or_default();
            return Err(PlueckerError::Missing(missing));
        }
        Ok(v)
    }
}

fn parse_ext(s: &str) -> Result<ExtReal, PlueckerError> {
    if s.trim() == "inf" {
        Ok(ExtReal::Infinity)
    } else {
        parse_rat(s)
            .map(ExtReal::Finite)
            .map_err(|_| PlueckerError::Value(s.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct PlueckerFile {
    d: usize,
    n: usize,
    coords: BTreeMap<String, String>,
}

impl fmt::Display for PlueckerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .labelled()
            .into_iter()
            .map(|(l, c)| format!("{l}:{c}"))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl From<i64> for ExtReal {
    fn from(v: i64) -> Self {
        ExtReal::Finite(rat(v))
    }
}
