//! Term orders: weight rows refined by degree reverse lexicographic order.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::{ExactAlgError, Monomial};
use crate::rat::Rat;

/// A monomial order on `n` variables.
///
/// Monomials are compared by each weight row in turn (larger weight is
/// larger), then by total degree, then reverse lexicographically with respect
/// to `var_order` (first entry is the largest variable, last the smallest).
///
/// The leading term of a polynomial is its *largest* term. Because initial
/// forms in this crate pick *minimal* weight, the order used to compute
/// `in_w(I)` is [`TermOrder::refining_min_weight`], whose weight row is `-w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    weights: Vec<Vec<Rat>>,
    var_order: Vec<usize>,
}

impl TermOrder {
    /// Plain degree reverse lexicographic order with `x_0 > x_1 > ...`.
    pub fn degrevlex(n: usize) -> Self {
        TermOrder {
            weights: Vec::new(),
            var_order: (0..n).collect(),
        }
    }

    /// Larger `w`-weight first, ties broken by degrevlex.
    pub fn weighted(w: Vec<Rat>) -> Self {
        let n = w.len();
        TermOrder {
            weights: vec![w],
            var_order: (0..n).collect(),
        }
    }

    /// Leading terms have minimal `w`-weight; initial forms with respect to
    /// this order are `in_w`.
    pub fn refining_min_weight(w: &[Rat]) -> Self {
        Self::weighted(w.iter().map(|x| -x).collect())
    }

    /// An elimination order for the variables in `eliminate`, refined by
    /// degrevlex.
    pub fn elimination(n: usize, eliminate: &[usize]) -> Self {
        let mut row = vec![Rat::zero(); n];
        for &i in eliminate {
            row[i] = Rat::from_integer(1.into());
        }
        Self::weighted(row)
    }

    /// Adds a further weight row consulted after the existing ones.
    pub fn then_weight(mut self, w: Vec<Rat>) -> Result<Self, ExactAlgError> {
        if w.len() != self.nvars() {
            return Err(ExactAlgError::WeightLength {
                expected: self.nvars(),
                got: w.len(),
            });
        }
        self.weights.push(w);
        Ok(self)
    }

    /// Replaces the reverse-lexicographic tie break; `order[0]` becomes the
    /// largest variable.
    pub fn with_var_order(mut self, order: Vec<usize>) -> Result<Self, ExactAlgError> {
        let n = self.nvars();
        let mut seen = vec![false; n];
        if order.len() != n {
            return Err(ExactAlgError::VariableOrder(format!(
                "expected {n} entries, got {}",
                order.len()
            )));
        }
        for &i in &order {
            if i >= n || seen[i] {
                return Err(ExactAlgError::VariableOrder(format!(
                    "{order:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        self.var_order = order;
        Ok(self)
    }

    /// Makes variable `v` the smallest in the reverse-lexicographic tie break.
    pub fn with_last_variable(self, v: usize) -> Self {
        let mut order: Vec<usize> = self.var_order.iter().copied().filter(|&i| i != v).collect();
        order.push(v);
        let mut out = self;
        out.var_order = order;
        out
    }

    pub fn nvars(&self) -> usize {
        self.var_order.len()
    }

    pub fn weights(&self) -> &[Vec<Rat>] {
        &self.weights
    }

    /// The first weight row (all zeros for pure degrevlex).
    pub fn weight(&self) -> Vec<Rat> {
        self.weights
            .first()
            .cloned()
            .unwrap_or_else(|| vec![Rat::zero(); self.nvars()])
    }

    pub fn var_order(&self) -> &[usize] {
        &self.var_order
    }

    pub fn has_negative_weight(&self) -> bool {
        self.weights.iter().flatten().any(|x| x.is_negative())
    }

    pub(crate) fn check_nvars(&self, n: usize) -> Result<(), ExactAlgError> {
        if self.nvars() != n {
            return Err(ExactAlgError::WeightLength {
                expected: n,
                got: self.nvars(),
            });
        }
        for w in &self.weights {
            if w.len() != n {
                return Err(ExactAlgError::WeightLength {
                    expected: n,
                    got: w.len(),
                });
            }
        }
        Ok(())
    }

    fn weight_of(w: &[Rat], m: &Monomial) -> Rat {
        w.iter()
            .enumerate()
            .filter(|(i, _)| m.exponent(*i) > 0)
            .map(|(i, x)| x * Rat::from_integer(m.exponent(i).into()))
            .sum()
    }

    /// Direct comparison; the Gröbner engine uses a precomputed integer key
    /// instead.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for w in &self.weights {
            let c = Self::weight_of(w, a).cmp(&Self::weight_of(w, b));
            if c != Ordering::Equal {
                return c;
            }
        }
        let c = a.degree().cmp(&b.degree());
        if c != Ordering::Equal {
            return c;
        }
        for &v in self.var_order.iter().rev() {
            let (x, y) = (a.exponent(v), b.exponent(v));
            if x != y {
                return y.cmp(&x);
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_basics() {
        let o = TermOrder::degrevlex(3);
        // x0*x2 < x1^2 in degrevlex
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.compare(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn min_weight_refinement() {
        let o = TermOrder::refining_min_weight(&[rat(1), rat(0), rat(0)]);
        // x0 has weight 1 so it is smaller than x1
        assert_eq!(o.compare(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Less);
        let o = o.with_last_variable(1);
        assert_eq!(o.var_order(), &[0, 2, 1]);
        assert_eq!(o.compare(&m(&[0, 1, 0]), &m(&[0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn rejects_bad_permutation() {
        assert!(TermOrder::degrevlex(3)
            .with_var_order(vec![0, 0, 1])
            .is_err());
    }
}
