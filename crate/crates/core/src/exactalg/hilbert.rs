//! Hilbert series of monomial ideals and degrees of homogeneous ideals.
//!
//! The numerator `N(t)` of `HS(S/M) = N(t) / (1-t)^n` is computed with the
//! pivot recursion `N(M) = N(M + <x>) + t^deg(x) N(M : x)`, which organises the
//! inclusion–exclusion over the minimal generators.

use super::{ExactAlgError, IdealHandle, Monomial, TermOrder};

/// Hilbert series data of `S / M` for a monomial ideal `M` in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Coefficients of `N(t)`, lowest degree first.
    pub numerator: Vec<i128>,
    /// Krull dimension of `S / M`.
    pub dimension: usize,
    /// Degree (multiplicity); zero for the unit ideal.
    pub degree: i128,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_add(a: &mut Vec<i128>, b: &[i128], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, x) in b.iter().enumerate() {
        a[i + shift] += x;
    }
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn numerator(gens: Vec<Monomial>) -> Vec<i128> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    // pairwise coprime generators: product formula
    let mut union = 0u64;
    let mut coprime = true;
    for g in &gens {
        let s = g.support_mask();
        if union & s != 0 {
            coprime = false;
            break;
        }
        union |= s;
    }
    if coprime {
        let mut acc = vec![1i128];
        for g in &gens {
            let mut f = vec![0i128; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] = -1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    // pivot on the variable occurring in the most non-pure-power generators
    let mut counts = [0usize; 64];
    for g in gens.iter().filter(|g| g.support_mask().count_ones() > 1) {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let v = (0..64)
        .max_by_key(|&i| (counts[i], std::cmp::Reverse(i)))
        .unwrap();
    let pivot = Monomial::var(v);
    let mut with_pivot = gens.clone();
    with_pivot.push(pivot);
    let quotient: Vec<Monomial> = gens
        .iter()
        .map(|g| pivot.gcd(g).quotient_of(g).expect("gcd divides"))
        .collect();
    let mut out = numerator(with_pivot);
    let q = numerator(quotient);
    poly_add(&mut out, &q, 1);
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

/// Hilbert series data of `S / M` where `M` is generated by `gens` in a ring
/// with `nvars` variables.
pub fn monomial_hilbert(gens: &[Monomial], nvars: usize) -> HilbertData {
    let num = numerator(gens.to_vec());
    if num.iter().all(|&c| c == 0) {
        return HilbertData {
            numerator: num,
            dimension: 0,
            degree: 0,
        };
    }
    // divide by (1 - t) while t = 1 is a root
    let mut q = num.clone();
    let mut codim = 0;
    while q.iter().sum::<i128>() == 0 {
        // synthetic division of q(t) by (1 - t): q = (1 - t) r
        let mut r = vec![0i128; q.len() - 1];
        let mut carry = 0i128;
        for i in 0..r.len() {
            carry += q[i];
            r[i] = carry;
        }
        q = r;
        codim += 1;
    }
    HilbertData {
        numerator: num,
        dimension: nvars - codim,
        degree: q.iter().sum(),
    }
}

/// Degree of the projective scheme of a homogeneous ideal, read off from the
/// Hilbert series of its initial monomial ideal under `ord`.
pub fn degree_of(ideal: &IdealHandle, ord: &TermOrder) -> Result<i128, ExactAlgError> {
    Ok(hilbert_data(ideal, ord)?.degree)
}

/// Full Hilbert data of `S / I` for a homogeneous ideal.
pub fn hilbert_data(ideal: &IdealHandle, ord: &TermOrder) -> Result<HilbertData, ExactAlgError> {
    if !ideal.is_homogeneous() {
        return Err(ExactAlgError::NotHomogeneous);
    }
    let gb = ideal.reduced_groebner(ord)?;
    let leads = super::groebner::leading_monomials(&gb, ord);
    Ok(monomial_hilbert(&leads, ideal.ring().nvars()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn principal_monomial() {
        let h = monomial_hilbert(&[m(&[1, 0])], 2);
        assert_eq!(h.numerator, vec![1, -1]);
        assert_eq!(h.dimension, 1);
        assert_eq!(h.degree, 1);
    }

    #[test]
    fn coordinate_cross() {
        // <xy> in k[x,y]: two lines
        let h = monomial_hilbert(&[m(&[1, 1])], 2);
        assert_eq!((h.dimension, h.degree), (1, 2));
        // <xy, xz, yz>: three coordinate points in P^2
        let h = monomial_hilbert(&[m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 1, 1])], 3);
        assert_eq!((h.dimension, h.degree), (1, 3));
    }

    #[test]
    fn matches_brute_force_count() {
        // compare the Hilbert function against direct enumeration of standard monomials
        let gens = [m(&[2, 1, 0]), m(&[0, 2, 1]), m(&[1, 0, 2]), m(&[1, 1, 1])];
        let h = monomial_hilbert(&gens, 3);
        // expand N(t)/(1-t)^3 up to degree 8
        let mut series = h.numerator.clone();
        series.resize(9, 0);
        for _ in 0..3 {
            for i in 1..series.len() {
                series[i] += series[i - 1];
            }
        }
        for d in 0..9u32 {
            let mut count = 0;
            for a in 0..=d {
                for b in 0..=d - a {
                    let x = m(&[a, b, d - a - b]);
                    if !gens.iter().any(|g| g.divides(&x)) {
                        count += 1;
                    }
                }
            }
            assert_eq!(series[d as usize], count, "degree {d}");
        }
    }

    #[test]
    fn unit_ideal() {
        let h = monomial_hilbert(&[Monomial::ONE], 3);
        assert_eq!(h.degree, 0);
    }
}
