//! Ideals with cached Gröbner bases, initial ideals, monomial-freeness,
//! elimination, intersection and toric kernels.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde_json::{json, Value};

use super::groebner::{leading_monomials, normal_form, reduced_groebner_basis, DEFAULT_BUDGET};
use super::{ExactAlgError, Field, Monomial, MultiPoly, PolyRing, TermOrder};
use crate::rat::Rat;

/// Generators of an ideal plus a cache of reduced Gröbner bases per order.
#[derive(Debug)]
pub struct IdealHandle {
    ring: Arc<PolyRing>,
    gens: Vec<MultiPoly>,
    budget: u64,
    cache: Mutex<HashMap<TermOrder, Arc<Vec<MultiPoly>>>>,
}

impl Clone for IdealHandle {
    fn clone(&self) -> Self {
        IdealHandle {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            budget: self.budget,
            cache: Mutex::new(self.cache.lock().expect("cache lock").clone()),
        }
    }
}

/// Outcome of a monomial-freeness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialFreeness {
    pub free: bool,
    /// A monomial in the ideal when `free` is false.
    pub witness: Option<MultiPoly>,
}

impl IdealHandle {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<MultiPoly>) -> Result<Self, ExactAlgError> {
        if gens.iter().any(|g| **g.ring() != **ring) {
            return Err(ExactAlgError::RingMismatch);
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealHandle {
            ring: ring.clone(),
            gens,
            budget: DEFAULT_BUDGET,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn parse(ring: &Arc<PolyRing>, gens: &[&str]) -> Result<Self, ExactAlgError> {
        let polys = gens
            .iter()
            .map(|s| MultiPoly::parse(ring, s))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(ring, polys)
    }

    /// Limits every Gröbner computation on this ideal (and ideals derived from
    /// it) to `budget` reduction steps.
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// True if every generator is homogeneous (so the ideal is).
    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    fn default_order(&self) -> TermOrder {
        TermOrder::degrevlex(self.ring.nvars())
    }

    fn derived(&self, ring: &Arc<PolyRing>, gens: Vec<MultiPoly>) -> Result<Self, ExactAlgError> {
        Ok(Self::new(ring, gens)?.with_budget(self.budget))
    }

    /// The reduced Gröbner basis for `ord`, computed once and cached.
    pub fn reduced_groebner(&self, ord: &TermOrder) -> Result<Arc<Vec<MultiPoly>>, ExactAlgError> {
        if let Some(gb) = self.cache.lock().expect("cache lock").get(ord) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(if self.gens.is_empty() {
            ord.check_nvars(self.ring.nvars())?;
            Vec::new()
        } else {
            reduced_groebner_basis(&self.gens, ord, self.budget)?
        });
        self.cache
            .lock()
            .expect("cache lock")
            .insert(ord.clone(), gb.clone());
        Ok(gb)
    }

    fn seed_cache(&self, ord: TermOrder, gb: Vec<MultiPoly>) {
        self.cache
            .lock()
            .expect("cache lock")
            .insert(ord, Arc::new(gb));
    }

    pub fn is_unit(&self) -> Result<bool, ExactAlgError> {
        let gb = self.reduced_groebner(&self.default_order())?;
        Ok(gb.len() == 1 && gb[0].is_unit())
    }

    /// Ideal membership via the cached degrevlex basis.
    pub fn contains(&self, f: &MultiPoly) -> Result<bool, ExactAlgError> {
        let ord = self.default_order();
        let gb = self.reduced_groebner(&ord)?;
        Ok(normal_form(f, &gb, &ord)?.is_zero())
    }

    /// `other` is contained in `self`.
    pub fn contains_ideal(&self, other: &IdealHandle) -> Result<bool, ExactAlgError> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals, by mutual containment.
    pub fn equals(&self, other: &IdealHandle) -> Result<bool, ExactAlgError> {
        if *self.ring != *other.ring {
            return Err(ExactAlgError::RingMismatch);
        }
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    /// `in_w(I)`, generated by the `w`-initial forms of the reduced Gröbner
    /// basis for an order refining minimal `w`-weight.
    pub fn initial_ideal(&self, w: &[Rat]) -> Result<IdealHandle, ExactAlgError> {
        self.initial_ideal_with(&TermOrder::refining_min_weight(w))
    }

    /// Same as [`IdealHandle::initial_ideal`] with an explicit refining order;
    /// its first weight row must be `-w`.
    pub fn initial_ideal_with(&self, ord: &TermOrder) -> Result<IdealHandle, ExactAlgError> {
        let w: Vec<Rat> = ord.weight().iter().map(|x| -x).collect();
        let gb = self.reduced_groebner(ord)?;
        let forms = gb
            .iter()
            .map(|g| g.initial_form(&w))
            .collect::<Result<Vec<_>, _>>()?;
        let out = self.derived(&self.ring, forms.clone())?;
        // the initial forms are already the reduced basis of in_w(I) for the
        // tie-break order
        let tie =
            TermOrder::degrevlex(self.ring.nvars()).with_var_order(ord.var_order().to_vec())?;
        out.seed_cache(tie, forms.clone());
        out.seed_cache(ord.clone(), forms);
        Ok(out)
    }

    /// Decides whether `in_w(I)` contains a monomial.
    pub fn is_monomial_free(&self, w: &[Rat]) -> Result<MonomialFreeness, ExactAlgError> {
        self.initial_ideal(w)?.monomial_freeness()
    }

    /// Decides whether this ideal contains a monomial, with a witness if it
    /// does.
    ///
    /// Homogeneous ideals are saturated one variable at a time (a degrevlex
    /// basis with `x_i` last, divided by the largest power of `x_i`); other
    /// ideals use the auxiliary variable test.
    pub fn monomial_freeness(&self) -> Result<MonomialFreeness, ExactAlgError> {
        if self.is_unit()? {
            let one = MultiPoly::one(&self.ring);
            return Ok(MonomialFreeness {
                free: false,
                witness: Some(one),
            });
        }
        if let Some(m) = self.monomial_in_bases() {
            return Ok(MonomialFreeness {
                free: false,
                witness: Some(m),
            });
        }
        let saturated_unit = if self.is_homogeneous() {
            self.saturation_by_all_variables()?.is_unit()?
        } else {
            self.contains_monomial_by_aux_variable()?
        };
        if !saturated_unit {
            return Ok(MonomialFreeness {
                free: true,
                witness: None,
            });
        }
        let witness = self.find_monomial()?;
        Ok(MonomialFreeness {
            free: false,
            witness: Some(witness),
        })
    }

    fn monomial_in_bases(&self) -> Option<MultiPoly> {
        let cache = self.cache.lock().expect("cache lock");
        let mut found: Vec<MultiPoly> = cache
            .values()
            .flat_map(|gb| gb.iter())
            .chain(self.gens.iter())
            .filter(|g| g.is_monomial())
            .map(|g| MultiPoly::monomial(&self.ring, g.terms()[0].0, self.ring.field().one()))
            .collect();
        found.sort_by_key(|m| (m.degree(), m.to_string()));
        found.into_iter().next()
    }

    /// `I : x_v^infinity` for a homogeneous ideal.
    pub fn saturate_variable(&self, v: usize) -> Result<IdealHandle, ExactAlgError> {
        if !self.is_homogeneous() {
            return Err(ExactAlgError::NotHomogeneous);
        }
        let ord = self.default_order().with_last_variable(v);
        let gb = self.reduced_groebner(&ord)?;
        let mut divided = Vec::with_capacity(gb.len());
        for g in gb.iter() {
            let k = g
                .terms()
                .iter()
                .map(|(m, _)| m.exponent(v))
                .min()
                .unwrap_or(0);
            let mut e = vec![0u32; self.ring.nvars()];
            e[v] = k;
            let xk = Monomial::from_exponents(&e);
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| (xk.quotient_of(m).expect("x_v^k divides"), c.clone()))
                .collect();
            divided.push(MultiPoly::from_terms(&self.ring, terms));
        }
        self.derived(&self.ring, divided)
    }

    /// `I : (x_1 ... x_n)^infinity` for a homogeneous ideal.
    pub fn saturation_by_all_variables(&self) -> Result<IdealHandle, ExactAlgError> {
        let mut cur = self.clone();
        let mask = self.gens.iter().fold(0u64, |acc, g| {
            acc | g
                .terms()
                .iter()
                .fold(0u64, |m, (x, _)| m | x.support_mask())
        });
        for v in 0..self.ring.nvars() {
            if mask >> v & 1 == 0 {
                continue;
            }
            cur = cur.saturate_variable(v)?;
            if cur.is_unit()? {
                break;
            }
        }
        Ok(cur)
    }

    /// Tests `1 in I + <y * x_1 ... x_n - 1>` in a ring with an extra
    /// variable `y`.
    pub fn contains_monomial_by_aux_variable(&self) -> Result<bool, ExactAlgError> {
        let n = self.ring.nvars();
        let y = fresh_name(&self.ring, "y");
        let ext = self.ring.extended(&[&y])?;
        let map: Vec<usize> = (0..n).collect();
        let mut gens = self
            .gens
            .iter()
            .map(|g| g.embed(&ext, &map))
            .collect::<Result<Vec<_>, _>>()?;
        let all = Monomial::from_exponents(&vec![1; n + 1]);
        gens.push(MultiPoly::from_int_terms(
            &ext,
            &[(1, all), (-1, Monomial::ONE)],
        ));
        let gb = reduced_groebner_basis(&gens, &TermOrder::degrevlex(n + 1), self.budget)?;
        Ok(gb.len() == 1 && gb[0].is_unit())
    }

    /// Some monomial in the ideal, assuming one exists: the smallest power
    /// of `x_1 ... x_n` that lies in it, then reduced greedily variable by
    /// variable.
    fn find_monomial(&self) -> Result<MultiPoly, ExactAlgError> {
        let n = self.ring.nvars();
        let ord = self.default_order();
        let gb = self.reduced_groebner(&ord)?;
        let member = |e: &[u32]| -> Result<bool, ExactAlgError> {
            let m = MultiPoly::monomial(
                &self.ring,
                Monomial::from_exponents(e),
                self.ring.field().one(),
            );
            Ok(normal_form(&m, &gb, &ord)?.is_zero())
        };
        let mut k = 1u32;
        let mut e = vec![1u32; n];
        while !member(&e)? {
            k += 1;
            if k > 127 {
                return Err(ExactAlgError::ExponentOverflow);
            }
            e = vec![k; n];
        }
        for v in 0..n {
            while e[v] > 0 {
                e[v] -= 1;
                if !member(&e)? {
                    e[v] += 1;
                    break;
                }
            }
        }
        Ok(MultiPoly::monomial(
            &self.ring,
            Monomial::from_exponents(&e),
            self.ring.field().one(),
        ))
    }

    /// `I ∩ k[x_j : j not in vars]`, returned in the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<IdealHandle, ExactAlgError> {
        let ord = TermOrder::elimination(self.ring.nvars(), vars);
        let gb = self.reduced_groebner(&ord)?;
        let mask: u64 = vars.iter().fold(0, |m, &v| m | 1 << v);
        let kept = gb
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.support_mask() & mask == 0))
            .cloned()
            .collect();
        self.derived(&self.ring, kept)
    }

    /// Generators whose variables all lie in `map`'s domain, renamed into
    /// `target` (variable `map[i]` of this ring becomes variable `i`).
    fn restrict(
        &self,
        target: &Arc<PolyRing>,
        map: &[usize],
    ) -> Result<IdealHandle, ExactAlgError> {
        let mut back = vec![usize::MAX; self.ring.nvars()];
        for (i, &j) in map.iter().enumerate() {
            back[j] = i;
        }
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0u32; target.nvars()];
                    for v in m.support() {
                        if back[v] == usize::MAX {
                            return Err(ExactAlgError::RingMismatch);
                        }
                        e[back[v]] = m.exponent(v);
                    }
                    Ok((Monomial::from_exponents(&e), c.clone()))
                })
                .collect::<Result<Vec<_>, ExactAlgError>>()?;
            gens.push(MultiPoly::from_terms(target, terms));
        }
        self.derived(target, gens)
    }

    /// Reduced Gröbner basis under degrevlex, sorted; a canonical generating
    /// set for display and comparison.
    pub fn canonical_generators(&self) -> Result<Vec<MultiPoly>, ExactAlgError> {
        Ok(self.reduced_groebner(&self.default_order())?.to_vec())
    }

    /// Minimal generators of the initial monomial ideal under `ord`.
    pub fn leading_ideal(&self, ord: &TermOrder) -> Result<Vec<Monomial>, ExactAlgError> {
        Ok(leading_monomials(&self.reduced_groebner(ord)?, ord))
    }

    /// JSON form: field, characteristic, variables and generator strings.
    pub fn to_json(&self) -> Value {
        let field = self.ring.field();
        json!({
            "field": match field { Field::Rational => "QQ".to_string(), Field::Prime(p) => format!("GF({p})") },
            "characteristic": field.characteristic(),
            "variables": self.ring.names(),
            "generators": self.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self, ExactAlgError> {
        let bad = |m: &str| ExactAlgError::Json(m.to_string());
        let c = value
            .get("characteristic")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing characteristic"))?;
        let field = Field::from_characteristic(
            u32::try_from(c).map_err(|_| bad("characteristic too large"))?,
        )?;
        let vars = value
            .get("variables")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing variables"))?
            .iter()
            .map(|v| {
                v.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| bad("variable names must be strings"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let ring = PolyRing::new(field, vars)?;
        let gens = value
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing generators"))?
            .iter()
            .map(|g| {
                let s = g
                    .as_str()
                    .ok_or_else(|| bad("generators must be strings"))?;
                MultiPoly::parse(&ring, s)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(&ring, gens)
    }
}

fn fresh_name(ring: &PolyRing, base: &str) -> String {
    let mut name = format!("{base}_aux");
    let mut k = 0;
    while ring.index_of(&name).is_some() {
        k += 1;
        name = format!("{base}_aux{k}");
    }
    name
}

/// `I ∩ J` via `t I + (1 - t) J` and elimination of `t`.
pub fn intersect_ideals(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle, ExactAlgError> {
    if *i.ring != *j.ring {
        return Err(ExactAlgError::RingMismatch);
    }
    let ring = &i.ring;
    let n = ring.nvars();
    let t = fresh_name(ring, "t");
    let ext = ring.extended(&[&t])?;
    let map: Vec<usize> = (0..n).collect();
    let tvar = MultiPoly::var(&ext, n);
    let one_minus_t = MultiPoly::one(&ext).sub(&tvar)?;
    let mut gens = Vec::new();
    for f in &i.gens {
        gens.push(f.embed(&ext, &map)?.mul(&tvar)?);
    }
    for g in &j.gens {
        gens.push(g.embed(&ext, &map)?.mul(&one_minus_t)?);
    }
    let big = IdealHandle::new(&ext, gens)?.with_budget(i.budget.min(j.budget));
    big.eliminate(&[n])?.restrict(ring, &map)
}

/// Kernel of the map `source -> target` sending variable `i` to `images[i]`,
/// by eliminating the target variables from `<x_i - images[i]>`.
pub fn toric_kernel(
    source: &Arc<PolyRing>,
    images: &[MultiPoly],
) -> Result<IdealHandle, ExactAlgError> {
    toric_kernel_with_budget(source, images, DEFAULT_BUDGET)
}

pub fn toric_kernel_with_budget(
    source: &Arc<PolyRing>,
    images: &[MultiPoly],
    budget: u64,
) -> Result<IdealHandle, ExactAlgError> {
    if images.len() != source.nvars() {
        return Err(ExactAlgError::RingMismatch);
    }
    let Some(target) = images.first().map(|m| m.ring().clone()) else {
        return IdealHandle::new(source, Vec::new());
    };
    if images.iter().any(|m| **m.ring() != *target) {
        return Err(ExactAlgError::RingMismatch);
    }
    if target.field() != source.field() {
        return Err(ExactAlgError::FieldMismatch);
    }
    let m = target.nvars();
    let n = source.nvars();
    // target variables first, then the source variables under fresh names
    let mut names: Vec<String> = target.names().to_vec();
    for s in source.names() {
        let mut name = s.clone();
        while names.contains(&name) {
            name.push('\'');
        }
        names.push(name);
    }
    let ext = PolyRing::new(source.field(), names)?;
    let tmap: Vec<usize> = (0..m).collect();
    let mut gens = Vec::with_capacity(n);
    for (i, img) in images.iter().enumerate() {
        let x = MultiPoly::var(&ext, m + i);
        gens.push(x.sub(&img.embed(&ext, &tmap)?)?);
    }
    let big = IdealHandle::new(&ext, gens)?.with_budget(budget);
    let elim: Vec<usize> = (0..m).collect();
    let smap: Vec<usize> = (m..m + n).collect();
    big.eliminate(&elim)?.restrict(source, &smap)
}
