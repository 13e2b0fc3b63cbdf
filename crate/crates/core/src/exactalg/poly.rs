//! Sparse multivariate polynomials over a [`Field`].

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Signed;

use super::{ExactAlgError, Field, Monomial, Scalar, TermOrder, MAX_VARS};
use crate::rat::{parse_rat, Rat};

/// Coefficient field together with the (ordered) variable names.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: Field,
    names: Vec<String>,
}

impl PolyRing {
    pub fn new(field: Field, names: Vec<String>) -> Result<Arc<Self>, ExactAlgError> {
        if names.len() > MAX_VARS {
            return Err(ExactAlgError::TooManyVariables(names.len()));
        }
        let mut seen = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if seen.insert(n.as_str(), i).is_some() {
                return Err(ExactAlgError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(PolyRing { field, names }))
    }

    /// Ring with variables `x1, ..., xn`.
    pub fn with_xs(field: Field, n: usize) -> Result<Arc<Self>, ExactAlgError> {
        Self::new(field, (1..=n).map(|i| format!("x{i}")).collect())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables over another field.
    pub fn with_field(&self, field: Field) -> Arc<Self> {
        Arc::new(PolyRing {
            field,
            names: self.names.clone(),
        })
    }

    /// This ring with extra variables appended after the existing ones.
    pub fn extended(&self, extra: &[&str]) -> Result<Arc<Self>, ExactAlgError> {
        let mut names = self.names.clone();
        names.extend(extra.iter().map(|s| s.to_string()));
        Self::new(self.field, names)
    }
}

/// A polynomial. Terms are kept sorted by decreasing degree, then
/// lexicographically, with no zero coefficients.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl MultiPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        MultiPoly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        Self::from_terms(ring, vec![(Monomial::ONE, c)])
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Self::from_terms(ring, vec![(Monomial::var(i), ring.field.one())])
    }

    pub fn var_named(ring: &Arc<PolyRing>, name: &str) -> Result<Self, ExactAlgError> {
        let i = ring
            .index_of(name)
            .ok_or_else(|| ExactAlgError::UnknownVariable(name.to_string()))?;
        Ok(Self::var(ring, i))
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Scalar) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Builds a polynomial from integer-coefficient terms.
    pub fn from_int_terms(ring: &Arc<PolyRing>, terms: &[(i64, Monomial)]) -> Self {
        let f = ring.field;
        Self::from_terms(
            ring,
            terms.iter().map(|(c, m)| (*m, f.from_i64(*c))).collect(),
        )
    }

    /// Combines like terms, drops zeros and sorts.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Scalar)>) -> Self {
        let field = ring.field;
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(x) => *x = field.add(x, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Monomial, Scalar)> =
            acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| b.0.graded_cmp(&a.0));
        MultiPoly {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Scalar)>) -> Self {
        let mut p = MultiPoly {
            ring: ring.clone(),
            terms,
        };
        p.terms.sort_by(|a, b| b.0.graded_cmp(&a.0));
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// A single term (with any nonzero coefficient).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|(x, _)| x == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field.zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .all_equal_or_empty()
    }

    /// Variables occurring in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        let mask = self
            .terms
            .iter()
            .fold(0u64, |m, (x, _)| m | x.support_mask());
        (0..self.ring.nvars())
            .filter(|i| mask >> i & 1 == 1)
            .collect()
    }

    fn check_ring(&self, other: &Self) -> Result<(), ExactAlgError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else if self.ring.field != other.ring.field {
            Err(ExactAlgError::FieldMismatch)
        } else {
            Err(ExactAlgError::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactAlgError> {
        self.check_ring(other)?;
        let mut t = self.terms.clone();
        t.extend(other.terms.iter().cloned());
        Ok(Self::from_terms(&self.ring, t))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactAlgError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let f = self.ring.field;
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let f = self.ring.field;
        if f.is_zero(c) {
            return Self::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (*m, f.mul(x, c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactAlgError> {
        self.check_ring(other)?;
        let f = self.ring.field;
        let mut t = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if m1
                    .raw()
                    .iter()
                    .zip(m2.raw())
                    .any(|(a, b)| *a as u32 + *b as u32 > 255)
                {
                    return Err(ExactAlgError::ExponentOverflow);
                }
                t.push((m1.mul(m2), f.mul(c1, c2)));
            }
        }
        Ok(Self::from_terms(&self.ring, t))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (x.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Result<Self, ExactAlgError> {
        let mut out = Self::one(&self.ring);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Largest term under `ord`.
    pub fn leading_term(&self, ord: &TermOrder) -> Option<&(Monomial, Scalar)> {
        self.terms.iter().max_by(|a, b| ord.compare(&a.0, &b.0))
    }

    /// Divides by the leading coefficient under `ord`.
    pub fn monic(&self, ord: &TermOrder) -> Self {
        match self.leading_term(ord) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.ring.field.inv(c).expect("nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Terms sorted by `ord`, largest first.
    pub fn sorted_terms(&self, ord: &TermOrder) -> Vec<(Monomial, Scalar)> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| ord.compare(&b.0, &a.0));
        t
    }

    pub fn weight_of(m: &Monomial, w: &[Rat]) -> Rat {
        w.iter()
            .enumerate()
            .filter(|(i, _)| m.exponent(*i) > 0)
            .map(|(i, x)| x * Rat::from_integer(m.exponent(i).into()))
            .sum()
    }

    /// Sum of the terms whose `w`-weight is minimal.
    pub fn initial_form(&self, w: &[Rat]) -> Result<Self, ExactAlgError> {
        if w.len() != self.ring.nvars() {
            return Err(ExactAlgError::WeightLength {
                expected: self.ring.nvars(),
                got: w.len(),
            });
        }
        let weights: Vec<Rat> = self
            .terms
            .iter()
            .map(|(m, _)| Self::weight_of(m, w))
            .collect();
        let Some(min) = weights.iter().min() else {
            return Ok(self.clone());
        };
        let terms = self
            .terms
            .iter()
            .zip(&weights)
            .filter(|(_, x)| *x == min)
            .map(|(t, _)| t.clone())
            .collect();
        Ok(MultiPoly {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Replaces variable `i` by `images[i]` (all in `target`).
    pub fn substitute(
        &self,
        target: &Arc<PolyRing>,
        images: &[MultiPoly],
    ) -> Result<Self, ExactAlgError> {
        if images.len() != self.ring.nvars() {
            return Err(ExactAlgError::RingMismatch);
        }
        if target.field != self.ring.field {
            return Err(ExactAlgError::FieldMismatch);
        }
        let mut cache: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut acc = Vec::new();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for i in m.support() {
                let e = m.exponent(i);
                let p = match cache.get(&(i, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = images[i].pow(e)?;
                        cache.insert((i, e), p.clone());
                        p
                    }
                };
                t = t.mul(&p)?;
            }
            acc.extend(t.terms);
        }
        Ok(Self::from_terms(target, acc))
    }

    /// Renames variables: variable `i` becomes `target` variable `map[i]`.
    pub fn embed(&self, target: &Arc<PolyRing>, map: &[usize]) -> Result<Self, ExactAlgError> {
        if map.len() != self.ring.nvars() || map.iter().any(|&j| j >= target.nvars()) {
            return Err(ExactAlgError::RingMismatch);
        }
        if target.field != self.ring.field {
            return Err(ExactAlgError::FieldMismatch);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; target.nvars()];
                for i in m.support() {
                    e[map[i]] += m.exponent(i);
                }
                (Monomial::from_exponents(&e), c.clone())
            })
            .collect();
        Ok(Self::from_terms(target, terms))
    }

    /// Same polynomial in a ring with identical variable names over another
    /// field (coefficients reduced mod p).
    pub fn change_field(&self, target: &Arc<PolyRing>) -> Result<Self, ExactAlgError> {
        if target.names != self.ring.names {
            return Err(ExactAlgError::RingMismatch);
        }
        let mut t = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            t.push((*m, target.field.convert(c)?));
        }
        Ok(Self::from_terms(target, t))
    }

    /// Parses text such as `p_12*p_34 - 2*p_13*p_24 + 1/2*p_14^2`.
    pub fn parse(ring: &Arc<PolyRing>, text: &str) -> Result<Self, ExactAlgError> {
        let perr = |msg: &str| ExactAlgError::Parse(format!("{msg} in `{text}`"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(perr("empty input"));
        }
        // split into signed terms
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            let starts_term =
                (ch == '+' || ch == '-') && !matches!(prev, Some('^') | Some('*') | Some('/'));
            if starts_term {
                if !cur.is_empty() {
                    pieces.push((neg, std::mem::take(&mut cur)));
                } else if prev.is_some() {
                    return Err(perr("dangling sign"));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(perr("trailing sign"));
        }
        pieces.push((neg, cur));

        let field = ring.field;
        let mut terms = Vec::with_capacity(pieces.len());
        for (neg, body) in pieces {
            let mut coeff = Rat::from_integer(1.into());
            let mut exps = vec![0u32; ring.nvars()];
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(perr("empty factor"));
                }
                let first = factor.chars().next().unwrap();
                if first.is_ascii_digit() || first == '.' {
                    let r = parse_rat(factor).map_err(|e| perr(&e.to_string()))?;
                    coeff *= r;
                } else {
                    let (name, e) = match factor.split_once('^') {
                        Some((n, e)) => (n, e.parse::<u32>().map_err(|_| perr("bad exponent"))?),
                        None => (factor, 1),
                    };
                    let i = ring
                        .index_of(name)
                        .ok_or_else(|| ExactAlgError::UnknownVariable(name.to_string()))?;
                    exps[i] += e;
                    if exps[i] > 255 {
                        return Err(ExactAlgError::ExponentOverflow);
                    }
                }
            }
            if neg {
                coeff = -coeff;
            }
            terms.push((Monomial::from_exponents(&exps), field.from_rat(&coeff)?));
        }
        Ok(Self::from_terms(ring, terms))
    }

    fn fmt_monomial(&self, m: &Monomial) -> String {
        m.support()
            .into_iter()
            .map(|i| match m.exponent(i) {
                1 => self.ring.names[i].clone(),
                e => format!("{}^{e}", self.ring.names[i]),
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Text form with terms in the order of `ord` (largest first).
    pub fn format_with(&self, ord: &TermOrder) -> String {
        self.format_terms(&self.sorted_terms(ord))
    }

    fn format_terms(&self, terms: &[(Monomial, Scalar)]) -> String {
        if terms.is_empty() {
            return "0".to_string();
        }
        let field = self.ring.field;
        let mut out = String::new();
        for (k, (m, c)) in terms.iter().enumerate() {
            let s = field.format(c);
            let (neg, abs) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs);
            } else if abs == "1" {
                out.push_str(&self.fmt_monomial(m));
            } else {
                out.push_str(&abs);
                out.push('*');
                out.push_str(&self.fmt_monomial(m));
            }
        }
        out
    }

    /// Compares by ring then terms; used to sort generator lists.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let key = |p: &Self| p.terms.iter().map(|(m, _)| *m.raw()).collect::<Vec<_>>();
        other
            .degree()
            .cmp(&self.degree())
            .reverse()
            .then_with(|| key(other).cmp(&key(self)))
            .then_with(|| self.to_string().cmp(&other.to_string()))
    }

    /// True when every coefficient is a negative rational (used for sign
    /// normalization of displayed generators).
    pub fn leading_is_negative(&self) -> bool {
        matches!(self.terms.first(), Some((_, Scalar::Rational(r))) if r.is_negative())
    }
}

trait AllEqual {
    fn all_equal_or_empty(self) -> bool;
}

impl<I: Iterator<Item = u32>> AllEqual for I {
    fn all_equal_or_empty(mut self) -> bool {
        match self.next() {
            None => true,
            Some(first) => self.all(|x| x == first),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_terms(&self.terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(Field::Rational, vec!["x".into(), "y".into(), "z".into()]).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let r = ring();
        let p = MultiPoly::parse(&r, "x*y - 2*z^2 + 1/2*x - 3").unwrap();
        assert_eq!(p.to_string(), "x*y - 2*z^2 + 1/2*x - 3");
        let q = MultiPoly::parse(&r, "-x + x").unwrap();
        assert!(q.is_zero());
        assert!(MultiPoly::parse(&r, "x + w").is_err());
        assert!(MultiPoly::parse(&r, "x +").is_err());
    }

    #[test]
    fn arithmetic() {
        let r = ring();
        let a = MultiPoly::parse(&r, "x + y").unwrap();
        let b = MultiPoly::parse(&r, "x - y").unwrap();
        let c = a.mul(&b).unwrap();
        assert_eq!(c, MultiPoly::parse(&r, "x^2 - y^2").unwrap());
        assert!(c.is_homogeneous());
        assert_eq!(a.pow(3).unwrap().len(), 4);
    }

    #[test]
    fn initial_form_min_weight() {
        let r = ring();
        let p = MultiPoly::parse(&r, "x*y + z^2 + x*z").unwrap();
        let inw = p.initial_form(&[rat(0), rat(2), rat(0)]).unwrap();
        assert_eq!(inw, MultiPoly::parse(&r, "z^2 + x*z").unwrap());
    }

    #[test]
    fn prime_field_display() {
        let r = ring().with_field(Field::Prime(7));
        let p = MultiPoly::parse(&r, "x - y").unwrap();
        assert_eq!(p.to_string(), "x - y");
        let q = MultiPoly::parse(&r, "1/2*x").unwrap();
        assert_eq!(q.to_string(), "-3*x");
    }

    #[test]
    fn substitution() {
        let r = ring();
        let s = PolyRing::with_xs(Field::Rational, 2).unwrap();
        let p = MultiPoly::parse(&r, "x*y - z").unwrap();
        let imgs = vec![
            MultiPoly::parse(&s, "x1").unwrap(),
            MultiPoly::parse(&s, "x2").unwrap(),
            MultiPoly::parse(&s, "x1*x2").unwrap(),
        ];
        assert!(p.substitute(&s, &imgs).unwrap().is_zero());
    }
}
