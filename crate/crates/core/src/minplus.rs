//! Min-plus arithmetic over `R ∪ {+inf}`.
//!
//! Tropical addition is `min`, tropical multiplication is `+`. A tropical
//! polynomial evaluates to the minimum of its affine-linear terms and its
//! hypersurface is where that minimum is attained at least twice.

use std::fmt;
use std::io::{Read, Write};

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plucker_vector::{PlueckerError, PlueckerVector};
use crate::rat::{format_rat, parse_rat, Rat};
use crate::subsets::{permutations, subsets};

#[derive(Debug, Error)]
pub enum MinPlusError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("exponent vectors must be pairwise distinct")]
    DuplicateExponent,
    #[error("a tropical polynomial needs at least one finite coefficient")]
    AllInfinite,
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("tropical determinant limited to 8x8, got {0}x{0}")]
    TooLarge(usize),
    #[error("need rows <= cols for minors, got {rows}x{cols}")]
    TooManyRows { rows: usize, cols: usize },
    #[error("ragged matrix: row {row} has {got} entries, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("bad scalar {0:?}")]
    Scalar(String),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Pluecker(#[from] PlueckerError),
}

/// A real number or `+inf`. `Finite` values order below `Infinity`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtReal {
    Finite(Rat),
    Infinity,
}

impl ExtReal {
    pub fn zero() -> Self {
        ExtReal::Finite(Rat::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtReal::Finite(x) if x.is_zero())
    }

    pub fn finite(&self) -> Option<&Rat> {
        match self {
            ExtReal::Finite(x) => Some(x),
            ExtReal::Infinity => None,
        }
    }

    /// `min(self, other)`.
    pub fn tropical_add(&self, other: &Self) -> Self {
        std::cmp::min(self, other).clone()
    }

    /// `self + other`; infinity absorbs.
    pub fn tropical_mul(&self, other: &Self) -> Self {
        match (self, other) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => ExtReal::Finite(a + b),
            _ => ExtReal::Infinity,
        }
    }

    pub fn parse(s: &str) -> Result<Self, MinPlusError> {
        let t = s.trim();
        if t == "inf" || t == "+inf" {
            return Ok(ExtReal::Infinity);
        }
        parse_rat(t)
            .map(ExtReal::Finite)
            .map_err(|_| MinPlusError::Scalar(s.to_string()))
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(x) => f.write_str(&format_rat(x)),
            ExtReal::Infinity => f.write_str("inf"),
        }
    }
}

impl From<Rat> for ExtReal {
    fn from(x: Rat) -> Self {
        ExtReal::Finite(x)
    }
}

/// `sum_a C_a x^a` read in min-plus: `min_a (C_a + <a, x>)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropPolynomial {
    nvars: usize,
    terms: Vec<(Vec<u32>, ExtReal)>,
}

impl TropPolynomial {
    pub fn new(nvars: usize, terms: Vec<(Vec<u32>, ExtReal)>) -> Result<Self, MinPlusError> {
        for (e, _) in &terms {
            if e.len() != nvars {
                return Err(MinPlusError::Dimension {
                    expected: nvars,
                    got: e.len(),
                });
            }
        }
        let mut exps: Vec<&Vec<u32>> = terms.iter().map(|(e, _)| e).collect();
        exps.sort();
        if exps.windows(2).any(|w| w[0] == w[1]) {
            return Err(MinPlusError::DuplicateExponent);
        }
        if !terms.iter().any(|(_, c)| c.is_finite()) {
            return Err(MinPlusError::AllInfinite);
        }
        Ok(Self { nvars, terms })
    }

    /// The tropical linear form `min_i (c_i + x_i)`.
    pub fn linear(coeffs: Vec<ExtReal>) -> Result<Self, MinPlusError> {
        let n = coeffs.len();
        let terms = coeffs
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                let mut e = vec![0; n];
                e[i] = 1;
                (e, c)
            })
            .collect();
        Self::new(n, terms)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Vec<u32>, ExtReal)] {
        &self.terms
    }

    /// Coefficient of the term with exponent `e`, if present.
    pub fn coefficient(&self, e: &[u32]) -> Option<&ExtReal> {
        self.terms.iter().find(|(x, _)| x == e).map(|(_, c)| c)
    }

    fn term_values(&self, x: &[Rat]) -> Result<Vec<ExtReal>, MinPlusError> {
        if x.len() != self.nvars {
            return Err(MinPlusError::Dimension {
                expected: self.nvars,
                got: x.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| match c {
                ExtReal::Infinity => ExtReal::Infinity,
                ExtReal::Finite(c) => {
                    let mut v = c.clone();
                    for (ei, xi) in e.iter().zip(x) {
                        if *ei != 0 {
                            v += xi * Rat::from_integer((*ei).into());
                        }
                    }
                    ExtReal::Finite(v)
                }
            })
            .collect())
    }

    pub fn evaluate(&self, x: &[Rat]) -> Result<ExtReal, MinPlusError> {
        let vals = self.term_values(x)?;
        Ok(vals.into_iter().min().unwrap_or(ExtReal::Infinity))
    }

    /// Exponents of the terms attaining the minimum at `x`.
    pub fn tight_terms(&self, x: &[Rat]) -> Result<Vec<Vec<u32>>, MinPlusError> {
        let vals = self.term_values(x)?;
        let min = vals.iter().min().cloned().unwrap_or(ExtReal::Infinity);
        Ok(self
            .terms
            .iter()
            .zip(&vals)
            .filter(|(_, v)| v.is_finite() && **v == min)
            .map(|((e, _), _)| e.clone())
            .collect())
    }

    /// `x` lies on the tropical hypersurface.
    pub fn on_hypersurface(&self, x: &[Rat]) -> Result<bool, MinPlusError> {
        Ok(self.tight_terms(x)?.len() >= 2)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let file = TropPolyFile {
            vars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermFile {
                    exp: e.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(file).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, MinPlusError> {
        let file: TropPolyFile = serde_json::from_value(value.clone())?;
        let terms = file
            .terms
            .into_iter()
            .map(|t| Ok((t.exp, ExtReal::parse(&t.coeff)?)))
            .collect::<Result<_, MinPlusError>>()?;
        Self::new(file.vars, terms)
    }
}

impl fmt::Display for TropPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, k)| **k > 0)
                    .map(|(i, k)| {
                        if *k == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("x{}^{k}", i + 1)
                        }
                    })
                    .collect();
                if mono.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{}", mono.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TropPolyFile {
    vars: usize,
    terms: Vec<TermFile>,
}

#[derive(Serialize, Deserialize)]
struct TermFile {
    exp: Vec<u32>,
    coeff: String,
}

/// Rectangular matrix over `R ∪ {+inf}`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<ExtReal>,
}

impl TropMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<ExtReal>) -> Result<Self, MinPlusError> {
        if entries.len() != rows * cols {
            return Err(MinPlusError::Dimension {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<ExtReal>>) -> Result<Self, MinPlusError> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(MinPlusError::Ragged {
                    row: i,
                    expected: cols,
                    got: r.len(),
                });
            }
            entries.extend(r);
        }
        Self::new(nrows, cols, entries)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self, MinPlusError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| ExtReal::from(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &ExtReal {
        &self.entries[r * self.cols + c]
    }

    /// Columns `cols` as a new matrix.
    pub fn column_submatrix(&self, cols: &[usize]) -> Self {
        let entries = (0..self.rows)
            .flat_map(|r| cols.iter().map(move |&c| (r, c)))
            .map(|(r, c)| self.get(r, c).clone())
            .collect();
        Self {
            rows: self.rows,
            cols: cols.len(),
            entries,
        }
    }

    pub fn read_csv<R: Read>(reader: R) -> Result<Self, MinPlusError> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .flexible(true)
            .from_reader(reader);
        let mut rows = Vec::new();
        for rec in rdr.records() {
            let rec = rec?;
            rows.push(
                rec.iter()
                    .map(ExtReal::parse)
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        Self::from_rows(rows)
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<(), MinPlusError> {
        let mut w = csv::WriterBuilder::new()
            .has_headers(false)
            .from_writer(writer);
        for r in 0..self.rows {
            w.write_record((0..self.cols).map(|c| self.get(r, c).to_string()))?;
        }
        w.flush().map_err(csv::Error::from)?;
        Ok(())
    }
}

/// `min_sigma sum_r M[r, sigma(r)]`, by enumeration of all permutations.
pub fn tropical_determinant(m: &TropMatrix) -> Result<ExtReal, MinPlusError> {
    if m.rows != m.cols {
        return Err(MinPlusError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if m.rows > 8 {
        return Err(MinPlusError::TooLarge(m.rows));
    }
    Ok(permutations(m.rows)
        .iter()
        .map(|p| {
            p.iter().enumerate().fold(ExtReal::zero(), |acc, (r, &c)| {
                acc.tropical_mul(m.get(r, c))
            })
        })
        .min()
        .unwrap_or_else(ExtReal::zero))
}

/// Number of permutations attaining the tropical determinant.
pub fn determinant_multiplicity(m: &TropMatrix) -> Result<usize, MinPlusError> {
    let det = tropical_determinant(m)?;
    Ok(permutations(m.rows)
        .iter()
        .filter(|p| {
            p.iter().enumerate().fold(ExtReal::zero(), |acc, (r, &c)| {
                acc.tropical_mul(m.get(r, c))
            }) == det
        })
        .count())
}

/// The vector of tropical maximal minors of a `d x n` matrix.
pub fn tropical_minors(m: &TropMatrix) -> Result<PlueckerVector, MinPlusError> {
    if m.rows > m.cols {
        return Err(MinPlusError::TooManyRows {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let coords = subsets(m.cols, m.rows)
        .iter()
        .map(|s| tropical_determinant(&m.column_submatrix(s)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PlueckerVector::from_coords(m.rows, m.cols, coords)?)
}
