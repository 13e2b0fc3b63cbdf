//! Dense exponent vectors with a fixed variable capacity.

use std::cmp::Ordering;
use std::fmt;

/// Largest number of variables a ring may have.
pub const MAX_VARS: usize = 64;

/// Exponent vector `x^a`; entries beyond the ring's variable count are zero.
///
/// The derived `Ord` is not a term order; [`Monomial::graded_cmp`] gives the
/// canonical display order (degree, then lexicographic).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    e: [u8; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { e: [0; MAX_VARS] };

    pub fn one() -> Self {
        Self::ONE
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::ONE;
        m.e[i] = 1;
        m
    }

    /// Builds a monomial from exponents; panics if an exponent exceeds 255 or
    /// more than [`MAX_VARS`] are given.
    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut m = Self::ONE;
        for (i, &x) in exps.iter().enumerate() {
            m.e[i] = u8::try_from(x).expect("exponent overflow (max 255)");
        }
        m
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.e[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.e[..nvars].iter().map(|&x| x as u32).collect()
    }

    pub(crate) fn raw(&self) -> &[u8; MAX_VARS] {
        &self.e
    }

    pub fn degree(&self) -> u32 {
        self.e.iter().map(|&x| x as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.e.iter().all(|&x| x == 0)
    }

    /// Bit `i` set iff variable `i` occurs.
    pub fn support_mask(&self) -> u64 {
        self.e
            .iter()
            .enumerate()
            .fold(0u64, |m, (i, &x)| if x > 0 { m | (1 << i) } else { m })
    }

    pub fn support(&self) -> Vec<usize> {
        (0..MAX_VARS).filter(|&i| self.e[i] > 0).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = *self;
        for (a, b) in m.e.iter_mut().zip(other.e.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow (max 255)");
        }
        m
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.e.iter().zip(other.e.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        let mut m = *other;
        for (a, b) in m.e.iter_mut().zip(self.e.iter()) {
            *a -= *b;
        }
        Some(m)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut m = *self;
        for (a, b) in m.e.iter_mut().zip(other.e.iter()) {
            *a = (*a).max(*b);
        }
        m
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut m = *self;
        for (a, b) in m.e.iter_mut().zip(other.e.iter()) {
            *a = (*a).min(*b);
        }
        m
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.e
            .iter()
            .zip(other.e.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Degree first, then lexicographic with variable 0 largest.
    pub fn graded_cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.e.cmp(&other.e))
    }

    /// Moves exponent of variable `i` to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut m = Self::ONE;
        for (i, &j) in perm.iter().enumerate() {
            m.e[j] = self.e[i];
        }
        m
    }

    /// Removes variable `i` entirely (sets its exponent to zero).
    pub fn without(&self, i: usize) -> Self {
        let mut m = *self;
        m.e[i] = 0;
        m
    }
}

impl Default for Monomial {
    fn default() -> Self {
        Self::ONE
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.e.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1);
        write!(f, "x^{:?}", &self.e[..last])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(&[1, 0, 2]);
        let b = Monomial::from_exponents(&[2, 1, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(
            a.quotient_of(&b),
            Some(Monomial::from_exponents(&[1, 1, 0]))
        );
        assert_eq!(
            a.lcm(&Monomial::var(1)),
            Monomial::from_exponents(&[1, 1, 2])
        );
        assert_eq!(a.gcd(&b), a);
        assert!(a.is_coprime(&Monomial::var(1)));
        assert_eq!(b.degree(), 5);
        assert_eq!(a.support_mask(), 0b101);
    }

    #[test]
    fn graded_order() {
        let x = Monomial::var(0);
        let y = Monomial::var(1);
        assert_eq!(x.graded_cmp(&y), Ordering::Greater);
        assert_eq!(x.graded_cmp(&y.mul(&y)), Ordering::Less);
    }
}
