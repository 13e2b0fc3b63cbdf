//! Buchberger's algorithm with the Gebauer–Möller pair criteria.
//!
//! Polynomials are converted to an internal form in which variable `k` is the
//! `k`-th entry of the term order's variable order, so the reverse
//! lexicographic tie break always runs over the identity order. Exponents are
//! packed eight to a word which makes divisibility a handful of word
//! operations; this caps exponents at 127 inside the engine.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::field::{inv_mod, mul_mod};
use super::{ExactAlgError, Field, Monomial, MultiPoly, PolyRing, Scalar, TermOrder, MAX_VARS};
use crate::rat::Rat;

/// Default limit on reduction steps for one basis computation.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

const WORDS: usize = MAX_VARS / 8;
const ROWS: usize = 3;
const HIGH: u64 = 0x8080_8080_8080_8080;
const MAX_WEIGHT: i64 = 1 << 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Mono {
    key: [i64; ROWS],
    deg: u32,
    mask: u64,
    w: [u64; WORDS],
}

impl Mono {
    const ONE: Mono = Mono {
        key: [0; ROWS],
        deg: 0,
        mask: 0,
        w: [0; WORDS],
    };

    fn byte(&self, i: usize) -> u8 {
        (self.w[i / 8] >> (8 * (i % 8))) as u8
    }

    fn mask_of(w: &[u64; WORDS]) -> u64 {
        let mut m = 0u64;
        for (k, &x) in w.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for b in 0..8 {
                if (x >> (8 * b)) & 0xff != 0 {
                    m |= 1 << (8 * k + b);
                }
            }
        }
        m
    }

    fn divides(&self, other: &Mono) -> bool {
        if self.mask & !other.mask != 0 || self.deg > other.deg {
            return false;
        }
        self.w
            .iter()
            .zip(other.w.iter())
            .all(|(&a, &b)| ((b | HIGH) - a) & HIGH == HIGH)
    }

    /// Product; `None` if some exponent would reach 128.
    fn mul(&self, other: &Mono) -> Option<Mono> {
        let mut w = [0u64; WORDS];
        for k in 0..WORDS {
            let s = self.w[k] + other.w[k];
            if s & HIGH != 0 {
                return None;
            }
            w[k] = s;
        }
        let mut key = [0i64; ROWS];
        for r in 0..ROWS {
            key[r] = self.key[r] + other.key[r];
        }
        Some(Mono {
            key,
            deg: self.deg + other.deg,
            mask: self.mask | other.mask,
            w,
        })
    }

    /// `other / self`, assuming divisibility.
    fn quotient_of(&self, other: &Mono) -> Mono {
        let mut w = [0u64; WORDS];
        for k in 0..WORDS {
            w[k] = other.w[k] - self.w[k];
        }
        let mut key = [0i64; ROWS];
        for r in 0..ROWS {
            key[r] = other.key[r] - self.key[r];
        }
        Mono {
            key,
            deg: other.deg - self.deg,
            mask: Self::mask_of(&w),
            w,
        }
    }

    fn lcm(&self, other: &Mono, ctx: &Ctx) -> Mono {
        let mut w = [0u64; WORDS];
        for k in 0..WORDS {
            let (a, b) = (self.w[k], other.w[k]);
            if a == b || b == 0 {
                w[k] = a;
                continue;
            }
            if a == 0 {
                w[k] = b;
                continue;
            }
            let mut x = 0u64;
            for s in 0..8 {
                let ea = (a >> (8 * s)) & 0xff;
                let eb = (b >> (8 * s)) & 0xff;
                x |= ea.max(eb) << (8 * s);
            }
            w[k] = x;
        }
        ctx.mono_from_words(w)
    }

    fn is_coprime(&self, other: &Mono) -> bool {
        self.mask & other.mask == 0
    }
}

#[derive(Clone, Debug)]
struct Ctx {
    nvars: usize,
    rows: Vec<Vec<i64>>,
}

impl Ctx {
    fn mono_from_words(&self, w: [u64; WORDS]) -> Mono {
        let mut key = [0i64; ROWS];
        let mut deg = 0u32;
        let mask = Mono::mask_of(&w);
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let e = ((w[i / 8] >> (8 * (i % 8))) & 0xff) as i64;
            deg += e as u32;
            for (r, row) in self.rows.iter().enumerate() {
                key[r] += row[i] * e;
            }
        }
        Mono { key, deg, mask, w }
    }

    fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        for r in 0..self.rows.len() {
            match a.key[r].cmp(&b.key[r]) {
                Ordering::Equal => {}
                c => return c,
            }
        }
        match a.deg.cmp(&b.deg) {
            Ordering::Equal => {}
            c => return c,
        }
        for k in (0..WORDS).rev() {
            let (x, y) = (a.w[k], b.w[k]);
            if x != y {
                let diff = x ^ y;
                let byte = (63 - diff.leading_zeros()) / 8;
                let ea = (x >> (8 * byte)) & 0xff;
                let eb = (y >> (8 * byte)) & 0xff;
                // smaller exponent on the last differing variable wins
                return eb.cmp(&ea);
            }
        }
        Ordering::Equal
    }
}

/// Coefficient arithmetic used by the engine.
pub(crate) trait Arith {
    type E: Clone + std::fmt::Debug + PartialEq;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn is_one(&self, a: &Self::E) -> bool;
    fn sub_mul(&self, a: &Self::E, b: &Self::E, c: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn from_scalar(&self, s: &Scalar) -> Self::E;
    fn to_scalar(&self, e: &Self::E) -> Scalar;
}

pub(crate) struct QArith;

impl Arith for QArith {
    type E = Rat;
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &Rat) -> bool {
        a.is_one()
    }
    fn sub_mul(&self, a: &Rat, b: &Rat, c: &Rat) -> Rat {
        a - b * c
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn inv(&self, a: &Rat) -> Rat {
        a.recip()
    }
    fn from_scalar(&self, s: &Scalar) -> Rat {
        match s {
            Scalar::Rational(r) => r.clone(),
            Scalar::Mod(v) => Rat::from_integer((*v).into()),
        }
    }
    fn to_scalar(&self, e: &Rat) -> Scalar {
        Scalar::Rational(e.clone())
    }
}

pub(crate) struct FpArith(u32);

impl Arith for FpArith {
    type E = u32;
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    fn sub_mul(&self, a: &u32, b: &u32, c: &u32) -> u32 {
        let p = self.0 as u64;
        ((*a as u64 + p - (*b as u64 * *c as u64) % p) % p) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        mul_mod(*a, *b, self.0)
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.0 - a
        }
    }
    fn inv(&self, a: &u32) -> u32 {
        inv_mod(*a, self.0)
    }
    fn from_scalar(&self, s: &Scalar) -> u32 {
        match s {
            Scalar::Mod(v) => v % self.0,
            Scalar::Rational(_) => panic!("rational scalar in prime-field engine"),
        }
    }
    fn to_scalar(&self, e: &u32) -> Scalar {
        Scalar::Mod(*e)
    }
}

type Poly<E> = Vec<(Mono, E)>;

struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    sugar: u32,
}

struct Engine<'a, A: Arith> {
    ctx: &'a Ctx,
    ar: &'a A,
    polys: Vec<Poly<A::E>>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    steps: u64,
    budget: u64,
}

impl<'a, A: Arith> Engine<'a, A> {
    fn new(ctx: &'a Ctx, ar: &'a A, budget: u64) -> Self {
        Engine {
            ctx,
            ar,
            polys: Vec::new(),
            sugar: Vec::new(),
            active: Vec::new(),
            steps: 0,
            budget,
        }
    }

    fn lead(&self, i: usize) -> &Mono {
        &self.polys[i][0].0
    }

    fn tick(&mut self) -> Result<(), ExactAlgError> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(ExactAlgError::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    fn make_monic(&self, p: &mut Poly<A::E>) {
        if let Some((_, c)) = p.first() {
            if !self.ar.is_one(c) {
                let inv = self.ar.inv(c);
                for t in p.iter_mut() {
                    t.1 = self.ar.mul(&t.1, &inv);
                }
            }
        }
    }

    /// `a - c * q * b`, where both inputs are sorted.
    fn sub_scaled(
        &self,
        a: &[(Mono, A::E)],
        c: &A::E,
        q: &Mono,
        b: &[(Mono, A::E)],
    ) -> Result<Poly<A::E>, ExactAlgError> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut ia = 0;
        let mut ib = 0;
        let next_b = |ib: usize| -> Result<Option<Mono>, ExactAlgError> {
            if ib < b.len() {
                q.mul(&b[ib].0)
                    .map(Some)
                    .ok_or(ExactAlgError::ExponentOverflow)
            } else {
                Ok(None)
            }
        };
        let mut mb = next_b(ib)?;
        while ia < a.len() || mb.is_some() {
            let ord = match (&mb, a.get(ia)) {
                (None, _) => Ordering::Greater,
                (Some(_), None) => Ordering::Less,
                (Some(m), Some((ma, _))) => self.ctx.cmp(ma, m),
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[ia].clone());
                    ia += 1;
                }
                Ordering::Less => {
                    let v = self.ar.neg(&self.ar.mul(c, &b[ib].1));
                    out.push((mb.unwrap(), v));
                    ib += 1;
                    mb = next_b(ib)?;
                }
                Ordering::Equal => {
                    let v = self.ar.sub_mul(&a[ia].1, c, &b[ib].1);
                    if !self.ar.is_zero(&v) {
                        out.push((a[ia].0, v));
                    }
                    ia += 1;
                    ib += 1;
                    mb = next_b(ib)?;
                }
            }
        }
        Ok(out)
    }

    fn find_reducer(&self, m: &Mono, reducers: &[usize]) -> Option<usize> {
        reducers.iter().copied().find(|&g| self.lead(g).divides(m))
    }

    /// Full reduction of `p` modulo the (monic) polynomials `reducers`.
    fn reduce(
        &mut self,
        mut p: Poly<A::E>,
        reducers: &[usize],
    ) -> Result<Poly<A::E>, ExactAlgError> {
        let mut done: Poly<A::E> = Vec::new();
        let mut pos = 0;
        while pos < p.len() {
            let m = p[pos].0;
            match self.find_reducer(&m, reducers) {
                None => {
                    done.push(p[pos].clone());
                    pos += 1;
                }
                Some(g) => {
                    self.tick()?;
                    let q = self.lead(g).quotient_of(&m);
                    let c = p[pos].1.clone();
                    p = self.sub_scaled(&p[pos + 1..], &c, &q, &self.polys[g][1..])?;
                    pos = 0;
                }
            }
        }
        Ok(done)
    }

    fn spoly(&self, pair: &Pair) -> Result<Poly<A::E>, ExactAlgError> {
        let (f, g) = (&self.polys[pair.i], &self.polys[pair.j]);
        let qf = f[0].0.quotient_of(&pair.lcm);
        let qg = g[0].0.quotient_of(&pair.lcm);
        let mut scaled = Vec::with_capacity(f.len());
        for (m, c) in &f[1..] {
            scaled.push((qf.mul(m).ok_or(ExactAlgError::ExponentOverflow)?, c.clone()));
        }
        let one = self.ar.one();
        self.sub_scaled(&scaled, &one, &qg, &g[1..])
    }

    fn active_indices(&self) -> Vec<usize> {
        (0..self.polys.len()).filter(|&i| self.active[i]).collect()
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Mono) -> u32 {
        let si = self.sugar[i] + lcm.deg - self.lead(i).deg;
        let sj = self.sugar[j] + lcm.deg - self.lead(j).deg;
        si.max(sj)
    }

    /// Inserts polynomial `h` (already stored) and updates the pair set.
    fn update(&mut self, pairs: &mut Vec<Pair>, h: usize) {
        let lh = *self.lead(h);
        let candidates: Vec<(usize, Mono)> = self
            .active_indices()
            .into_iter()
            .map(|g| (g, self.lead(g).lcm(&lh, self.ctx)))
            .collect();
        let mut kept: Vec<(usize, Mono)> = Vec::new();
        for (idx, (g, l)) in candidates.iter().enumerate() {
            let coprime = self.lead(*g).is_coprime(&lh);
            let dominated = candidates[idx + 1..].iter().any(|(_, l2)| l2.divides(l))
                || kept.iter().any(|(_, l2)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*g, *l));
            }
        }
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !self.lead(*g).is_coprime(&lh))
            .map(|(g, l)| Pair {
                i: g,
                j: h,
                lcm: l,
                sugar: self.pair_sugar(g, h, &l),
            })
            .collect();
        let ctx = self.ctx;
        pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && self.lead(p.i).lcm(&lh, ctx) != p.lcm
                && self.lead(p.j).lcm(&lh, ctx) != p.lcm)
        });
        pairs.extend(fresh);
        for g in 0..self.polys.len() {
            if self.active[g] && lh.divides(self.lead(g)) {
                self.active[g] = false;
            }
        }
        self.active[h] = true;
    }

    fn push(&mut self, p: Poly<A::E>, sugar: u32) -> usize {
        self.polys.push(p);
        self.sugar.push(sugar);
        self.active.push(false);
        self.polys.len() - 1
    }

    fn select(&self, pairs: &[Pair]) -> usize {
        let mut best = 0;
        for k in 1..pairs.len() {
            let (a, b) = (&pairs[k], &pairs[best]);
            let c = a
                .sugar
                .cmp(&b.sugar)
                .then_with(|| self.ctx.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)));
            if c == Ordering::Less {
                best = k;
            }
        }
        best
    }

    fn run(&mut self, mut input: Vec<Poly<A::E>>) -> Result<Vec<Poly<A::E>>, ExactAlgError> {
        input.retain(|p| !p.is_empty());
        input.sort_by(|a, b| self.ctx.cmp(&a[0].0, &b[0].0).then(a.len().cmp(&b.len())));
        let mut pairs: Vec<Pair> = Vec::new();
        for p in input {
            let act = self.active_indices();
            let mut r = self.reduce(p, &act)?;
            if r.is_empty() {
                continue;
            }
            self.make_monic(&mut r);
            let sugar = r.iter().map(|(m, _)| m.deg).max().unwrap_or(0);
            let h = self.push(r, sugar);
            self.update(&mut pairs, h);
        }
        while !pairs.is_empty() {
            let k = self.select(&pairs);
            let pair = pairs.swap_remove(k);
            let s = self.spoly(&pair)?;
            let act = self.active_indices();
            let mut r = self.reduce(s, &act)?;
            if r.is_empty() {
                continue;
            }
            self.make_monic(&mut r);
            let h = self.push(r, pair.sugar);
            self.update(&mut pairs, h);
            if self.polys[h][0].0.deg == 0 {
                // unit ideal
                return Ok(vec![self.polys[h].clone()]);
            }
        }
        self.interreduce()
    }

    fn interreduce(&mut self) -> Result<Vec<Poly<A::E>>, ExactAlgError> {
        let mut act = self.active_indices();
        act.sort_by(|&a, &b| self.ctx.cmp(self.lead(a), self.lead(b)));
        if act.iter().any(|&i| self.lead(i).deg == 0) {
            return Ok(vec![vec![(Mono::ONE, self.ar.one())]]);
        }
        let mut out = Vec::with_capacity(act.len());
        for &i in &act {
            let others: Vec<usize> = act.iter().copied().filter(|&j| j != i).collect();
            let p = self.polys[i].clone();
            let head = p[0].clone();
            let tail = self.reduce(p[1..].to_vec(), &others)?;
            let mut q = vec![head];
            q.extend(tail);
            self.make_monic(&mut q);
            out.push(q);
        }
        // replace stored polynomials so later lookups see reduced tails
        for (&i, q) in act.iter().zip(&out) {
            self.polys[i] = q.clone();
        }
        out.sort_by(|a, b| self.ctx.cmp(&b[0].0, &a[0].0));
        Ok(out)
    }
}

fn scaled_rows(ord: &TermOrder) -> Result<Vec<Vec<i64>>, ExactAlgError> {
    let perm = ord.var_order();
    let rows = ord.weights();
    if rows.len() > ROWS {
        return Err(ExactAlgError::WeightOverflow);
    }
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let den = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let mut ints = vec![0i64; MAX_VARS];
        for (k, &v) in perm.iter().enumerate() {
            let x = (row[v].numer() * (&den / row[v].denom()))
                .to_i64()
                .filter(|x| x.abs() < MAX_WEIGHT)
                .ok_or(ExactAlgError::WeightOverflow)?;
            ints[k] = x;
        }
        out.push(ints);
    }
    Ok(out)
}

/// The order data prepared for one computation.
pub(crate) struct Prepared {
    ctx: Ctx,
    perm: Vec<usize>,
}

impl Prepared {
    pub(crate) fn new(ord: &TermOrder, nvars: usize) -> Result<Self, ExactAlgError> {
        ord.check_nvars(nvars)?;
        Ok(Prepared {
            ctx: Ctx {
                nvars,
                rows: scaled_rows(ord)?,
            },
            perm: ord.var_order().to_vec(),
        })
    }

    fn to_mono(&self, m: &Monomial) -> Result<Mono, ExactAlgError> {
        let mut w = [0u64; WORDS];
        for (k, &v) in self.perm.iter().enumerate() {
            let e = m.exponent(v) as u64;
            if e > 127 {
                return Err(ExactAlgError::ExponentOverflow);
            }
            w[k / 8] |= e << (8 * (k % 8));
        }
        Ok(self.ctx.mono_from_words(w))
    }

    fn from_mono(&self, m: &Mono) -> Monomial {
        let mut e = vec![0u32; self.ctx.nvars];
        for (k, &v) in self.perm.iter().enumerate() {
            e[v] = m.byte(k) as u32;
        }
        Monomial::from_exponents(&e)
    }

    fn to_poly<A: Arith>(&self, ar: &A, f: &MultiPoly) -> Result<Poly<A::E>, ExactAlgError> {
        let mut p = Vec::with_capacity(f.len());
        for (m, c) in f.terms() {
            p.push((self.to_mono(m)?, ar.from_scalar(c)));
        }
        p.sort_by(|a, b| self.ctx.cmp(&b.0, &a.0));
        Ok(p)
    }

    fn from_poly<A: Arith>(&self, ar: &A, ring: &Arc<PolyRing>, p: &Poly<A::E>) -> MultiPoly {
        MultiPoly::from_sorted_terms(
            ring,
            p.iter()
                .map(|(m, c)| (self.from_mono(m), ar.to_scalar(c)))
                .collect(),
        )
    }
}

fn check_inputs(gens: &[MultiPoly], ord: &TermOrder) -> Result<Arc<PolyRing>, ExactAlgError> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => return Err(ExactAlgError::RingMismatch),
    };
    if gens.iter().any(|g| **g.ring() != *ring) {
        return Err(ExactAlgError::RingMismatch);
    }
    ord.check_nvars(ring.nvars())?;
    if ord.has_negative_weight() && !gens.iter().all(|g| g.is_homogeneous()) {
        return Err(ExactAlgError::NegativeWeightInhomogeneous);
    }
    Ok(ring)
}

fn groebner_with<A: Arith>(
    ar: &A,
    ring: &Arc<PolyRing>,
    gens: &[MultiPoly],
    ord: &TermOrder,
    budget: u64,
) -> Result<Vec<MultiPoly>, ExactAlgError> {
    let prep = Prepared::new(ord, ring.nvars())?;
    let input = gens
        .iter()
        .map(|g| prep.to_poly(ar, g))
        .collect::<Result<Vec<_>, _>>()?;
    let mut eng = Engine::new(&prep.ctx, ar, budget);
    let basis = eng.run(input)?;
    Ok(basis.iter().map(|p| prep.from_poly(ar, ring, p)).collect())
}

/// The reduced Gröbner basis of the ideal generated by `gens`: monic, sorted
/// by decreasing leading monomial. The zero ideal gives an empty list.
///
/// `budget` bounds the number of reduction steps; running out is reported as
/// [`ExactAlgError::BudgetExceeded`].
pub fn reduced_groebner_basis(
    gens: &[MultiPoly],
    ord: &TermOrder,
    budget: u64,
) -> Result<Vec<MultiPoly>, ExactAlgError> {
    let nonzero: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(Vec::new());
    }
    let ring = check_inputs(&nonzero, ord)?;
    match ring.field() {
        Field::Rational => groebner_with(&QArith, &ring, &nonzero, ord, budget),
        Field::Prime(p) => groebner_with(&FpArith(p), &ring, &nonzero, ord, budget),
    }
}

fn normal_form_with<A: Arith>(
    ar: &A,
    f: &MultiPoly,
    basis: &[MultiPoly],
    ord: &TermOrder,
) -> Result<MultiPoly, ExactAlgError> {
    let prep = Prepared::new(ord, f.ring().nvars())?;
    let mut eng = Engine::new(&prep.ctx, ar, u64::MAX);
    for g in basis {
        if g.is_zero() {
            continue;
        }
        let mut p = prep.to_poly(ar, g)?;
        eng.make_monic(&mut p);
        eng.push(p, 0);
    }
    let all: Vec<usize> = (0..eng.polys.len()).collect();
    let r = eng.reduce(prep.to_poly(ar, f)?, &all)?;
    Ok(prep.from_poly(ar, f.ring(), &r))
}

/// Remainder of `f` on division by `basis` (leading terms taken with respect
/// to `ord`). When `basis` is a Gröbner basis for `ord` the result is zero
/// exactly when `f` lies in the ideal.
pub fn normal_form(
    f: &MultiPoly,
    basis: &[MultiPoly],
    ord: &TermOrder,
) -> Result<MultiPoly, ExactAlgError> {
    if basis.iter().any(|g| **g.ring() != **f.ring()) {
        return Err(ExactAlgError::RingMismatch);
    }
    match f.field() {
        Field::Rational => normal_form_with(&QArith, f, basis, ord),
        Field::Prime(p) => normal_form_with(&FpArith(p), f, basis, ord),
    }
}

/// Leading monomials of `basis` under `ord`.
pub fn leading_monomials(basis: &[MultiPoly], ord: &TermOrder) -> Vec<Monomial> {
    basis
        .iter()
        .filter_map(|g| g.leading_term(ord).map(|(m, _)| *m))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn ring(field: Field, n: usize) -> Arc<PolyRing> {
        PolyRing::with_xs(field, n).unwrap()
    }

    fn polys(r: &Arc<PolyRing>, s: &[&str]) -> Vec<MultiPoly> {
        s.iter().map(|t| MultiPoly::parse(r, t).unwrap()).collect()
    }

    #[test]
    fn mono_packing_roundtrip() {
        let ord = TermOrder::degrevlex(10)
            .with_var_order(vec![9, 8, 7, 6, 5, 4, 3, 2, 1, 0])
            .unwrap();
        let prep = Prepared::new(&ord, 10).unwrap();
        let m = Monomial::from_exponents(&[1, 0, 3, 0, 0, 0, 0, 0, 2, 7]);
        let x = prep.to_mono(&m).unwrap();
        assert_eq!(prep.from_mono(&x), m);
        assert_eq!(x.deg, 13);
    }

    #[test]
    fn packed_compare_matches_term_order() {
        let ord = TermOrder::weighted(vec![rat(1), rat(0), rat(2), rat(0)])
            .with_var_order(vec![2, 0, 3, 1])
            .unwrap();
        let prep = Prepared::new(&ord, 4).unwrap();
        let monos: Vec<Monomial> = (0..81u32)
            .map(|k| Monomial::from_exponents(&[k % 3, k / 3 % 3, k / 9 % 3, k / 27]))
            .collect();
        for a in &monos {
            for b in &monos {
                let (x, y) = (prep.to_mono(a).unwrap(), prep.to_mono(b).unwrap());
                assert_eq!(prep.ctx.cmp(&x, &y), ord.compare(a, b), "{a:?} {b:?}");
                assert_eq!(x.divides(&y), a.divides(b));
            }
        }
    }

    #[test]
    fn cyclic3() {
        let r = ring(Field::Rational, 3);
        let gens = polys(
            &r,
            &["x1 + x2 + x3", "x1*x2 + x2*x3 + x3*x1", "x1*x2*x3 - 1"],
        );
        let gb = reduced_groebner_basis(&gens, &TermOrder::degrevlex(3), DEFAULT_BUDGET).unwrap();
        let expect = polys(&r, &["x1 + x2 + x3", "x2^2 + x2*x3 + x3^2", "x3^3 - 1"]);
        assert_eq!(gb.len(), 3);
        for e in &expect {
            assert!(gb.contains(e), "missing {e}");
        }
    }

    #[test]
    fn unit_and_zero() {
        let r = ring(Field::Prime(5), 2);
        let gb = reduced_groebner_basis(
            &polys(&r, &["x1", "x1 + 1"]),
            &TermOrder::degrevlex(2),
            1000,
        )
        .unwrap();
        assert_eq!(gb, polys(&r, &["1"]));
        assert!(
            reduced_groebner_basis(&[MultiPoly::zero(&r)], &TermOrder::degrevlex(2), 10)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn budget_is_reported() {
        let r = ring(Field::Rational, 3);
        let gens = polys(
            &r,
            &["x1 + x2 + x3", "x1*x2 + x2*x3 + x3*x1", "x1*x2*x3 - 1"],
        );
        let err = reduced_groebner_basis(&gens, &TermOrder::degrevlex(3), 2).unwrap_err();
        assert_eq!(err, ExactAlgError::BudgetExceeded(2));
    }

    #[test]
    fn normal_form_membership() {
        let r = ring(Field::Rational, 2);
        let gens = polys(&r, &["x1^2 - x2", "x1*x2 - 1"]);
        let ord = TermOrder::degrevlex(2);
        let gb = reduced_groebner_basis(&gens, &ord, DEFAULT_BUDGET).unwrap();
        let f = gens[0]
            .mul(&polys(&r, &["x1 + 3"])[0])
            .unwrap()
            .add(&gens[1])
            .unwrap();
        assert!(normal_form(&f, &gb, &ord).unwrap().is_zero());
        assert!(!normal_form(&polys(&r, &["x1"])[0], &gb, &ord)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn negative_weights_need_homogeneity() {
        let r = ring(Field::Rational, 2);
        let ord = TermOrder::weighted(vec![rat(-1), rat(0)]);
        assert_eq!(
            reduced_groebner_basis(&polys(&r, &["x1 - 1"]), &ord, 100).unwrap_err(),
            ExactAlgError::NegativeWeightInhomogeneous
        );
    }
}
