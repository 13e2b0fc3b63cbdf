//! Matrices over `k[t]` and the `t`-adic valuations of their maximal minors.
//!
//! Besides `Q` and `GF(p)` the coefficients may live in a binary field
//! `GF(2^k)`, whose elements are bit vectors reduced modulo a fixed
//! irreducible polynomial.

use std::fmt;

use super::{ExactAlgError, Field, Scalar};
use crate::minplus::ExtReal;
use crate::plucker_vector::PlueckerVector;
use crate::rat::rat;
use crate::subsets::{label, permutation_sign, permutations, subsets};

/// Coefficient field of a [`TPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TField {
    Base(Field),
    /// `GF(2)[a] / (modulus)` with `modulus` given as a bit mask of degree `k`.
    Binary {
        k: u32,
        modulus: u32,
    },
}

impl From<Field> for TField {
    fn from(f: Field) -> Self {
        TField::Base(f)
    }
}

impl TField {
    /// `GF(4) = GF(2)[a]/(a^2 + a + 1)`.
    pub const GF4: TField = TField::Binary {
        k: 2,
        modulus: 0b111,
    };

    pub fn characteristic(&self) -> u32 {
        match self {
            TField::Base(f) => f.characteristic(),
            TField::Binary { .. } => 2,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            TField::Base(f) => f.zero(),
            TField::Binary { .. } => Scalar::Mod(0),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            TField::Base(f) => f.from_i64(v),
            TField::Binary { .. } => Scalar::Mod((v & 1) as u32),
        }
    }

    /// Element of a binary field from its bit vector.
    pub fn from_bits(&self, bits: u32) -> Scalar {
        match self {
            TField::Base(f) => f.from_i64(bits as i64),
            TField::Binary { k, .. } => Scalar::Mod(bits & ((1 << k) - 1)),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match self {
            TField::Base(f) => f.is_zero(a),
            TField::Binary { .. } => *a == Scalar::Mod(0),
        }
    }

    fn bits(a: &Scalar) -> u32 {
        match a {
            Scalar::Mod(v) => *v,
            Scalar::Rational(_) => panic!("rational scalar in a binary field"),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            TField::Base(f) => f.add(a, b),
            TField::Binary { .. } => Scalar::Mod(Self::bits(a) ^ Self::bits(b)),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            TField::Base(f) => f.neg(a),
            TField::Binary { .. } => a.clone(),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            TField::Base(f) => f.mul(a, b),
            TField::Binary { k, modulus } => {
                let (mut x, y) = (Self::bits(a), Self::bits(b));
                let mut acc = 0u32;
                for i in 0..*k {
                    if y >> i & 1 == 1 {
                        acc ^= x;
                    }
                    x <<= 1;
                    if x >> k & 1 == 1 {
                        x ^= modulus;
                    }
                }
                Scalar::Mod(acc)
            }
        }
    }

    pub fn format(&self, a: &Scalar) -> String {
        match self {
            TField::Base(f) => f.format(a),
            TField::Binary { .. } => {
                let v = Self::bits(a);
                let parts: Vec<String> = (0..32)
                    .rev()
                    .filter(|i| v >> i & 1 == 1)
                    .map(|i| match i {
                        0 => "1".to_string(),
                        1 => "a".to_string(),
                        _ => format!("a^{i}"),
                    })
                    .collect();
                if parts.len() > 1 {
                    format!("({})", parts.join("+"))
                } else {
                    parts.concat()
                }
            }
        }
    }
}

/// A univariate polynomial in `t`; coefficients lowest degree first, no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPoly {
    field: TField,
    coeffs: Vec<Scalar>,
}

impl TPoly {
    pub fn new(field: impl Into<TField>, coeffs: Vec<Scalar>) -> Self {
        let mut p = TPoly {
            field: field.into(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn from_ints(field: impl Into<TField>, coeffs: &[i64]) -> Self {
        let field = field.into();
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: impl Into<TField>) -> Self {
        TPoly {
            field: field.into(),
            coeffs: Vec::new(),
        }
    }

    pub fn field(&self) -> TField {
        self.field
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Lowest exponent with nonzero coefficient; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.field.is_zero(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => f.add(a, b),
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => f.zero(),
            })
            .collect();
        Self::new(f, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(
            self.field,
            self.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    /// Parses `1 + t + t^3` style input (integer coefficients).
    pub fn parse(field: impl Into<TField>, s: &str) -> Result<Self, ExactAlgError> {
        let field = field.into();
        let perr = || ExactAlgError::Parse(format!("bad polynomial in t: `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = Self::zero(field);
        for piece in compact
            .replace('-', "+-")
            .split('+')
            .filter(|p| !p.is_empty())
        {
            let (neg, body) = match piece.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, piece),
            };
            let (coeff, exp) = match body.split_once('t') {
                None => (body.parse::<i64>().map_err(|_| perr())?, 0usize),
                Some((c, e)) => {
                    let c = match c.trim_end_matches('*') {
                        "" => 1,
                        x => x.parse::<i64>().map_err(|_| perr())?,
                    };
                    let e = match e {
                        "" => 1,
                        x => x
                            .strip_prefix('^')
                            .and_then(|x| x.parse().ok())
                            .ok_or_else(perr)?,
                    };
                    (c, e)
                }
            };
            let mut coeffs = vec![field.zero(); exp + 1];
            coeffs[exp] = field.from_i64(if neg { -coeff } else { coeff });
            out = out.add(&Self::new(field, coeffs));
        }
        Ok(out)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if self.field.is_zero(c) {
                continue;
            }
            let s = self.field.format(c);
            let (neg, abs) = match s.strip_prefix('-') {
                Some(r) => (true, r.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (i, abs.as_str()) {
                (0, _) => f.write_str(&abs)?,
                (1, "1") => f.write_str("t")?,
                (1, _) => write!(f, "{abs}*t")?,
                (_, "1") => write!(f, "t^{i}")?,
                _ => write!(f, "{abs}*t^{i}")?,
            }
        }
        Ok(())
    }
}

/// A `d x n` matrix with entries in `k[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPolyMatrix {
    d: usize,
    n: usize,
    field: TField,
    entries: Vec<TPoly>,
}

impl TPolyMatrix {
    pub fn new(
        d: usize,
        n: usize,
        field: impl Into<TField>,
        entries: Vec<TPoly>,
    ) -> Result<Self, ExactAlgError> {
        let field = field.into();
        if entries.len() != d * n || d == 0 || d > n || d > 8 {
            return Err(ExactAlgError::MatrixShape(format!(
                "{d} x {n} with {} entries",
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.field != field) {
            return Err(ExactAlgError::FieldMismatch);
        }
        Ok(TPolyMatrix {
            d,
            n,
            field,
            entries,
        })
    }

    /// `a + t * b` for constant matrices `a`, `b` (row-major). Over a binary
    /// field the entries are bit vectors of field elements.
    pub fn linear(
        field: impl Into<TField>,
        a: &[Vec<i64>],
        b: &[Vec<i64>],
    ) -> Result<Self, ExactAlgError> {
        let field = field.into();
        let d = a.len();
        let n = a.first().map_or(0, Vec::len);
        if b.len() != d || a.iter().chain(b).any(|r| r.len() != n) {
            return Err(ExactAlgError::MatrixShape("ragged rows".into()));
        }
        let entries = (0..d)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .map(|(r, c)| {
                let conv = |v: i64| match field {
                    TField::Binary { .. } => field.from_bits(v as u32),
                    TField::Base(_) => field.from_i64(v),
                };
                TPoly::new(field, vec![conv(a[r][c]), conv(b[r][c])])
            })
            .collect();
        Self::new(d, n, field, entries)
    }

    pub fn field(&self) -> TField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.d
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &TPoly {
        &self.entries[r * self.n + c]
    }

    /// Determinant of the columns `cols` (Leibniz expansion).
    pub fn minor(&self, cols: &[usize]) -> TPoly {
        let f = self.field;
        let mut acc = TPoly::zero(f);
        for p in permutations(self.d) {
            let mut term = TPoly::from_ints(f, &[permutation_sign(&p) as i64]);
            for (r, &k) in p.iter().enumerate() {
                term = term.mul(self.get(r, cols[k]));
                if term.is_zero() {
                    break;
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}

/// The vector of `t`-adic valuations of the maximal minors. A minor that
/// vanishes identically gives an infinite coordinate; see
/// [`vanishing_minors`].
pub fn plucker_valuations(m: &TPolyMatrix) -> PlueckerVector {
    let coords = subsets(m.n, m.d)
        .iter()
        .map(|s| match m.minor(s).valuation() {
            Some(v) => ExtReal::Finite(rat(v as i64)),
            None => ExtReal::Infinity,
        })
        .collect();
    PlueckerVector::from_coords(m.d, m.n, coords).expect("shape checked on construction")
}

/// Labels of the column sets whose minor is identically zero.
pub fn vanishing_minors(m: &TPolyMatrix) -> Vec<String> {
    subsets(m.n, m.d)
        .iter()
        .filter(|s| m.minor(s).is_zero())
        .map(|s| label(m.n, s))
        .collect()
}
