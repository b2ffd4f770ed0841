//! Finite modules over finite rings: construction, submodule lattices,
//! avoidance, faithfulness and the covering lemmas.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::{union_all, BitSet};
use crate::config;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealLattice};
use crate::ring::FiniteRing;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleDescription {
    /// R^rank; rank 0 is the zero module.
    Free { rank: u32 },
    /// Quotient of a module by the submodule generated by the listed
    /// elements. Each generator is a component-expression list for free
    /// modules, or a single exact element name otherwise.
    QuotientOf {
        module: Box<ModuleDescription>,
        #[serde(rename = "submoduleGenerators")]
        submodule_generators: Vec<Vec<String>>,
    },
    /// (R/m)^power for a maximal ideal m given by generators; the action
    /// factors through R -> R/m.
    ResiduePower {
        #[serde(rename = "maximalIdeal")]
        maximal_ideal: Vec<String>,
        power: u32,
    },
}

impl ModuleDescription {
    pub fn label(&self) -> String {
        match self {
            ModuleDescription::Free { rank } => format!("free^{rank}"),
            ModuleDescription::QuotientOf { module, .. } => format!("{}/sub", module.label()),
            ModuleDescription::ResiduePower { maximal_ideal, power } => {
                format!("(R/({}))^{power}", maximal_ideal.join(","))
            }
        }
    }
}

pub struct FiniteModule {
    ring: Arc<FiniteRing>,
    size: usize,
    add: Vec<u16>,
    zero: u16,
    /// scalar action, ring-size x module-size
    action: Vec<u16>,
    desc: ModuleDescription,
    names: Vec<String>,
}

impl std::fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FiniteModule({} over {}, {} elements)",
            self.desc.label(),
            self.ring.desc().label(),
            self.size
        )
    }
}

impl FiniteModule {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }
    pub fn size(&self) -> usize {
        self.size
    }
    pub fn zero(&self) -> u16 {
        self.zero
    }
    pub fn desc(&self) -> &ModuleDescription {
        &self.desc
    }
    pub fn name(&self, m: u16) -> &str {
        &self.names[m as usize]
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.size + b as usize]
    }
    #[inline]
    pub fn act(&self, r: u16, m: u16) -> u16 {
        self.action[r as usize * self.size + m as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.size as u16
    }

    fn verify_axioms(&self) -> Result<()> {
        let r = &self.ring;
        let n = self.size as u16;
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return Err(Error::EngineBug("module zero law fails".into()));
            }
            if self.act(r.one(), a) != a {
                return Err(Error::EngineBug("module unit law fails".into()));
            }
            if !(0..n).any(|b| self.add(a, b) == self.zero) {
                return Err(Error::EngineBug("module element has no negative".into()));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(Error::EngineBug("module addition not commutative".into()));
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(Error::EngineBug("module addition not associative".into()));
                    }
                }
            }
        }
        for s in r.elements() {
            for a in 0..n {
                for b in 0..n {
                    if self.act(s, self.add(a, b)) != self.add(self.act(s, a), self.act(s, b)) {
                        return Err(Error::EngineBug("action not additive in the module".into()));
                    }
                }
            }
            for t in r.elements() {
                for a in 0..n {
                    if self.act(r.add(s, t), a) != self.add(self.act(s, a), self.act(t, a)) {
                        return Err(Error::EngineBug("action not additive in the ring".into()));
                    }
                    if self.act(r.mul(s, t), a) != self.act(s, self.act(t, a)) {
                        return Err(Error::EngineBug("action not multiplicative".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn build_module(ring: &Arc<FiniteRing>, desc: &ModuleDescription) -> Result<Arc<FiniteModule>> {
    let m = match desc {
        ModuleDescription::Free { rank } => build_free(ring, *rank, desc.clone())?,
        ModuleDescription::ResiduePower { maximal_ideal, power } => {
            let gens: Vec<u16> = maximal_ideal
                .iter()
                .map(|g| ring.parse_element(g))
                .collect::<Result<_>>()?;
            let m = Ideal::generated(ring, &gens);
            build_residue_power(ring, &m, *power, desc.clone())?
        }
        ModuleDescription::QuotientOf {
            module,
            submodule_generators,
        } => {
            let inner = build_module(ring, module)?;
            let gens: Vec<u16> = submodule_generators
                .iter()
                .map(|g| inner.parse_element(g))
                .collect::<Result<_>>()?;
            let sub = Submodule::generated(&inner, &gens);
            quotient_module(&inner, &sub, desc.clone())?
        }
    };
    m.verify_axioms()?;
    Ok(Arc::new(m))
}

impl FiniteModule {
    /// Resolves a module element: exact name, or component expressions for a
    /// product-shaped module.
    fn parse_element(&self, exprs: &[String]) -> Result<u16> {
        if exprs.len() == 1 {
            if let Some(i) = self.names.iter().position(|n| n == &exprs[0]) {
                return Ok(i as u16);
            }
        }
        // component form for free modules: decode through the ring
        if let ModuleDescription::Free { rank } = self.desc {
            if exprs.len() != rank as usize {
                return Err(Error::MalformedDescription(format!(
                    "expected {rank} components, got {}",
                    exprs.len()
                )));
            }
            let n = self.ring.size();
            let mut idx = 0usize;
            for e in exprs {
                let c = self.ring.parse_element(e)? as usize;
                idx = idx * n + c;
            }
            return Ok(idx as u16);
        }
        Err(Error::MalformedDescription(format!(
            "cannot resolve module element {exprs:?}"
        )))
    }
}

fn module_size_guard(size: u128) -> Result<usize> {
    let bound = config::max_ring_size();
    if size == 0 || size > bound as u128 || size > u16::MAX as u128 {
        return Err(Error::SizeBound { size, bound });
    }
    Ok(size as usize)
}

fn build_free(ring: &Arc<FiniteRing>, rank: u32, desc: ModuleDescription) -> Result<FiniteModule> {
    let n = ring.size();
    let size = module_size_guard((n as u128).pow(rank))?;
    let decode = |mut i: usize| -> Vec<u16> {
        let mut v = vec![0u16; rank as usize];
        for k in (0..rank as usize).rev() {
            v[k] = (i % n) as u16;
            i /= n;
        }
        v
    };
    let encode = |v: &[u16]| -> usize {
        v.iter().fold(0usize, |acc, &c| acc * n + c as usize)
    };
    let mut add = vec![0u16; size * size];
    for a in 0..size {
        let va = decode(a);
        for b in 0..size {
            let vb = decode(b);
            let s: Vec<u16> = va.iter().zip(&vb).map(|(&x, &y)| ring.add(x, y)).collect();
            add[a * size + b] = encode(&s) as u16;
        }
    }
    let mut action = vec![0u16; n * size];
    for r in 0..n as u16 {
        for a in 0..size {
            let va = decode(a);
            let s: Vec<u16> = va.iter().map(|&x| ring.mul(r, x)).collect();
            action[r as usize * size + a] = encode(&s) as u16;
        }
    }
    let names: Vec<String> = (0..size)
        .map(|i| {
            let v = decode(i);
            let parts: Vec<&str> = v.iter().map(|&c| ring.name(c)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    Ok(FiniteModule {
        ring: ring.clone(),
        size,
        add,
        zero: 0,
        action,
        desc,
        names,
    })
}

fn build_residue_power(
    ring: &Arc<FiniteRing>,
    m: &Ideal,
    power: u32,
    desc: ModuleDescription,
) -> Result<FiniteModule> {
    if !is_maximal_ideal(ring, m) {
        return Err(Error::NotMaximal);
    }
    let (field, proj) = crate::ring::quotient_ring(ring, m)?;
    let f = field.size();
    let size = module_size_guard((f as u128).pow(power))?;
    let decode = |mut i: usize| -> Vec<u16> {
        let mut v = vec![0u16; power as usize];
        for k in (0..power as usize).rev() {
            v[k] = (i % f) as u16;
            i /= f;
        }
        v
    };
    let encode = |v: &[u16]| -> usize {
        v.iter().fold(0usize, |acc, &c| acc * f + c as usize)
    };
    let mut add = vec![0u16; size * size];
    for a in 0..size {
        let va = decode(a);
        for b in 0..size {
            let vb = decode(b);
            let s: Vec<u16> = va.iter().zip(&vb).map(|(&x, &y)| field.add(x, y)).collect();
            add[a * size + b] = encode(&s) as u16;
        }
    }
    let n = ring.size();
    let mut action = vec![0u16; n * size];
    for r in 0..n as u16 {
        let rf = proj.apply(r);
        for a in 0..size {
            let va = decode(a);
            let s: Vec<u16> = va.iter().map(|&x| field.mul(rf, x)).collect();
            action[r as usize * size + a] = encode(&s) as u16;
        }
    }
    let names: Vec<String> = (0..size)
        .map(|i| {
            let v = decode(i);
            let parts: Vec<&str> = v.iter().map(|&c| field.name(c)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    Ok(FiniteModule {
        ring: ring.clone(),
        size,
        add,
        zero: 0,
        action,
        desc,
        names,
    })
}

/// Standalone maximality test: adjoining any outside element must generate
/// the unit ideal.
pub fn is_maximal_ideal(ring: &Arc<FiniteRing>, m: &Ideal) -> bool {
    if m.is_unit_ideal() {
        return false;
    }
    ring.elements().all(|x| {
        if m.contains(x) {
            return true;
        }
        let mut gens = m.small_generating_set();
        gens.push(x);
        Ideal::generated(ring, &gens).is_unit_ideal()
    })
}

fn quotient_module(
    inner: &Arc<FiniteModule>,
    sub: &Submodule,
    desc: ModuleDescription,
) -> Result<FiniteModule> {
    let n = inner.size();
    let mut rep = vec![u16::MAX; n];
    for i in 0..n as u16 {
        let mut best = u16::MAX;
        for j in sub.members.iter() {
            best = best.min(inner.add(i, j as u16));
        }
        rep[i as usize] = best;
    }
    let reps: Vec<u16> = (0..n as u16).filter(|&i| rep[i as usize] == i).collect();
    let index_of: HashMap<u16, u16> = reps
        .iter()
        .enumerate()
        .map(|(k, &r)| (r, k as u16))
        .collect();
    let m = reps.len();
    let mut add = vec![0u16; m * m];
    for (a, &ra) in reps.iter().enumerate() {
        for (b, &rb) in reps.iter().enumerate() {
            add[a * m + b] = index_of[&rep[inner.add(ra, rb) as usize]];
        }
    }
    let rn = inner.ring().size();
    let mut action = vec![0u16; rn * m];
    for r in 0..rn as u16 {
        for (a, &ra) in reps.iter().enumerate() {
            action[r as usize * m + a] = index_of[&rep[inner.act(r, ra) as usize]];
        }
    }
    let names: Vec<String> = reps.iter().map(|&r| inner.name(r).to_string()).collect();
    Ok(FiniteModule {
        ring: inner.ring().clone(),
        size: m,
        add,
        zero: index_of[&rep[inner.zero() as usize]],
        action,
        desc,
        names,
    })
}

#[derive(Clone, PartialEq, Eq)]
pub struct Submodule {
    pub members: BitSet,
}

impl Submodule {
    /// Cyclic-plus-sum closure of the generators.
    pub fn generated(module: &FiniteModule, gens: &[u16]) -> Submodule {
        let mut set = BitSet::new(module.size());
        set.insert(module.zero() as usize);
        for &g in gens {
            for r in module.ring().elements() {
                set.insert(module.act(r, g) as usize);
            }
        }
        Submodule {
            members: additive_closure(module, set),
        }
    }

    pub fn size(&self) -> usize {
        self.members.count()
    }
}

fn additive_closure(module: &FiniteModule, mut set: BitSet) -> BitSet {
    let mut frontier: Vec<u16> = set.iter().map(|i| i as u16).collect();
    let mut members = frontier.clone();
    while let Some(x) = frontier.pop() {
        for k in 0..members.len() {
            let s = module.add(x, members[k]);
            if set.insert(s as usize) {
                members.push(s);
                frontier.push(s);
            }
        }
    }
    set
}

/// Orbit Rm of a single element; already a submodule.
fn cyclic_members(module: &FiniteModule, m: u16) -> BitSet {
    let mut set = BitSet::new(module.size());
    for r in module.ring().elements() {
        set.insert(module.act(r, m) as usize);
    }
    set
}

fn sum_sets(module: &FiniteModule, a: &BitSet, b: &BitSet) -> BitSet {
    let mut s = a.clone();
    s.union_with(b);
    let base = s.clone();
    for y in b.iter() {
        for x in base.iter() {
            s.insert(module.add(x as u16, y as u16) as usize);
        }
    }
    s
}

/// All submodules, by cyclic seeding and binary-sum closure; canonically
/// ordered like the ideal lattice.
pub fn all_submodules(module: &FiniteModule) -> Result<Vec<Submodule>> {
    all_submodules_with_cap(module, config::DEFAULT_LATTICE_BOUND)
}

pub fn all_submodules_with_cap(module: &FiniteModule, cap: usize) -> Result<Vec<Submodule>> {
    let mut seen: HashMap<BitSet, usize> = HashMap::new();
    let mut sets: Vec<BitSet> = Vec::new();
    for m in module.elements() {
        let c = cyclic_members(module, m);
        if !seen.contains_key(&c) {
            seen.insert(c.clone(), sets.len());
            sets.push(c);
        }
    }
    let mut frontier: Vec<usize> = (0..sets.len()).collect();
    while let Some(i) = frontier.pop() {
        let mut k = 0;
        while k < sets.len() {
            let (a, b) = (&sets[i], &sets[k]);
            k += 1;
            if a.is_subset(b) || b.is_subset(a) {
                continue;
            }
            let sum = sum_sets(module, a, b);
            if !seen.contains_key(&sum) {
                if sets.len() >= cap {
                    return Err(Error::LatticeBound(cap));
                }
                seen.insert(sum.clone(), sets.len());
                frontier.push(sets.len());
                sets.push(sum);
            }
        }
    }
    sets.sort_by(|a, b| a.count().cmp(&b.count()).then_with(|| a.cmp(b)));
    Ok(sets.into_iter().map(|members| Submodule { members }).collect())
}

/// The submodule IM generated by products of ideal members with module
/// elements.
pub fn ideal_times_module(ideal: &Ideal, module: &FiniteModule) -> BitSet {
    let mut set = BitSet::new(module.size());
    set.insert(module.zero() as usize);
    for i in ideal.members().iter() {
        for m in module.elements() {
            set.insert(module.act(i as u16, m) as usize);
        }
    }
    additive_closure(module, set)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ModulePredicates {
    pub cyclic: bool,
    pub faithful: bool,
    pub has_avoidance: bool,
    pub multiplication_module: bool,
    pub min_cover_size: Option<usize>,
}

/// Direct route: the module is covered by the union of its proper
/// submodules, or not.
pub fn module_has_avoidance_direct(module: &FiniteModule) -> Result<bool> {
    let subs = all_submodules(module)?;
    let proper: Vec<&BitSet> = subs
        .iter()
        .map(|s| &s.members)
        .filter(|m| m.count() < module.size())
        .collect();
    let union = union_all(module.size(), proper.into_iter());
    Ok(union.count() < module.size())
}

/// Bridge route: the ideal 0 x M inside the idealization R |x M has
/// avoidance exactly when M does.
pub fn module_has_avoidance_via_idealization(module: &FiniteModule) -> Result<bool> {
    let ring = module.ring();
    let (big, _incl) = crate::ring::idealization(ring, module)?;
    let mut members = BitSet::new(big.size());
    // elements (0, m) sit at indices 0..|M| by construction
    for m in 0..module.size() {
        members.insert(m);
    }
    let zm = Ideal::from_members(&big, members);
    let lat = IdealLattice::build(&big)?;
    Ok(crate::avoidance::has_avoidance(&zm, &lat))
}

pub fn module_predicates(module: &FiniteModule) -> Result<ModulePredicates> {
    let ring = module.ring();
    let subs = all_submodules(module)?;
    let full = module.size();
    let cyclic = module
        .elements()
        .any(|m| cyclic_members(module, m).count() == full);
    let faithful = ring.elements().all(|r| {
        r == ring.zero()
            || module
                .elements()
                .any(|m| module.act(r, m) != module.zero())
    });
    let direct = {
        let proper: Vec<&BitSet> = subs
            .iter()
            .map(|s| &s.members)
            .filter(|m| m.count() < full)
            .collect();
        union_all(full, proper.into_iter()).count() < full
    };
    // standing cross-check against the idealization bridge whenever the
    // idealization fits the size budget
    if (ring.size() as u128) * (full as u128) <= config::max_ring_size() as u128 {
        let bridged = module_has_avoidance_via_idealization(module)?;
        if bridged != direct {
            return Err(Error::EngineBug(
                "module avoidance disagrees with the idealization bridge".into(),
            ));
        }
    }
    let lat = IdealLattice::build(ring)?;
    let achievable: Vec<BitSet> = lat
        .ideals()
        .iter()
        .map(|i| ideal_times_module(i, module))
        .collect();
    let multiplication_module = subs
        .iter()
        .all(|n| achievable.iter().any(|im| *im == n.members));
    let min_cover_size = if direct {
        None
    } else {
        let proper: Vec<BitSet> = subs
            .iter()
            .map(|s| s.members.clone())
            .filter(|m| m.count() < full)
            .collect();
        let target = BitSet::full(full);
        crate::avoidance::min_cover_over(&target, &proper).map(|mc| mc.sets.len())
    };
    Ok(ModulePredicates {
        cyclic,
        faithful,
        has_avoidance: direct,
        multiplication_module,
        min_cover_size,
    })
}

/// Outcome of the faithful covering check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum CoverVerdict {
    /// Union of the I_k M fell short of M.
    HypothesisFails,
    /// The union is all of M and member k is the unit ideal.
    UnitWitness { index: usize },
}

/// For faithful M with M = union of I_k M, some I_k must be the unit ideal.
pub fn faithful_cover_check(module: &FiniteModule, ideals: &[Ideal]) -> Result<CoverVerdict> {
    let ring = module.ring();
    let faithful = ring.elements().all(|r| {
        r == ring.zero()
            || module
                .elements()
                .any(|m| module.act(r, m) != module.zero())
    });
    if !faithful {
        return Err(Error::NotFaithful);
    }
    let pieces: Vec<BitSet> = ideals
        .iter()
        .map(|i| ideal_times_module(i, module))
        .collect();
    let union = union_all(module.size(), pieces.iter());
    if union.count() < module.size() {
        return Ok(CoverVerdict::HypothesisFails);
    }
    match ideals.iter().position(|i| i.is_unit_ideal()) {
        Some(index) => Ok(CoverVerdict::UnitWitness { index }),
        None => Err(Error::EngineBug(
            "faithful module covered by proper ideal multiples".into(),
        )),
    }
}

/// Produces a covering family of exactly |R/m| + 1 proper submodules when
/// the residue dimension is at least 2. The family is found by exhaustive
/// search over maximal proper submodules.
pub fn residue_cover(module: &FiniteModule, maximal: &Ideal) -> Result<Vec<Submodule>> {
    let ring = module.ring();
    if !is_maximal_ideal(ring, maximal) {
        return Err(Error::NotMaximal);
    }
    let mm = ideal_times_module(maximal, module);
    let residue_order = ring.size() / maximal.size();
    let quotient_size = module.size() / mm.count();
    // |M/mM| = residue_order^dim
    let mut dim = 0u32;
    let mut acc = 1usize;
    while acc < quotient_size {
        acc *= residue_order;
        dim += 1;
    }
    if acc != quotient_size {
        return Err(Error::EngineBug(
            "residue quotient size is not a power of the residue field order".into(),
        ));
    }
    if dim < 2 {
        return Err(Error::DimensionTooSmall);
    }
    let n = residue_order + 1;
    let subs = all_submodules(module)?;
    let proper: Vec<&Submodule> = subs.iter().filter(|s| s.size() < module.size()).collect();
    // candidates: maximal elements of the proper poset
    let candidates: Vec<&Submodule> = proper
        .iter()
        .filter(|s| {
            !proper
                .iter()
                .any(|t| t.members != s.members && s.members.is_subset(&t.members))
        })
        .copied()
        .collect();
    let target = BitSet::full(module.size());
    let mut picked: Vec<usize> = Vec::new();
    if search_exact_cover(&target, &candidates, n, 0, &mut picked) {
        return Ok(picked.iter().map(|&i| candidates[i].clone()).collect());
    }
    Err(Error::EngineBug(format!(
        "no covering family of {n} proper submodules found"
    )))
}

fn search_exact_cover(
    target: &BitSet,
    candidates: &[&Submodule],
    want: usize,
    from: usize,
    picked: &mut Vec<usize>,
) -> bool {
    if picked.len() == want {
        let union = union_all(
            target.capacity(),
            picked.iter().map(|&i| &candidates[i].members),
        );
        return union.is_superset(target);
    }
    for i in from..candidates.len() {
        picked.push(i);
        if search_exact_cover(target, candidates, want, i + 1, picked) {
            return true;
        }
        picked.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, RingDescription};

    fn f2() -> Arc<FiniteRing> {
        build_ring(&RingDescription::zmod(2)).unwrap()
    }
    fn f3() -> Arc<FiniteRing> {
        build_ring(&RingDescription::zmod(3)).unwrap()
    }

    #[test]
    fn free_module_of_rank_two() {
        let m = build_module(&f2(), &ModuleDescription::Free { rank: 2 }).unwrap();
        assert_eq!(m.size(), 4);
        assert_eq!(m.name(0), "(0,0)");
    }

    #[test]
    fn zero_module() {
        let m = build_module(&f2(), &ModuleDescription::Free { rank: 0 }).unwrap();
        assert_eq!(m.size(), 1);
    }

    #[test]
    fn residue_power_action_factors_through_projection() {
        let z12 = build_ring(&RingDescription::zmod(12)).unwrap();
        let m = build_module(
            &z12,
            &ModuleDescription::ResiduePower {
                maximal_ideal: vec!["2".into()],
                power: 2,
            },
        )
        .unwrap();
        assert_eq!(m.size(), 4);
        // scalar 2 acts as 0, scalar 3 acts as 1
        for v in m.elements() {
            assert_eq!(m.act(2, v), m.zero());
            assert_eq!(m.act(3, v), v);
        }
    }

    #[test]
    fn residue_power_requires_maximal() {
        let z12 = build_ring(&RingDescription::zmod(12)).unwrap();
        let err = build_module(
            &z12,
            &ModuleDescription::ResiduePower {
                maximal_ideal: vec!["4".into()],
                power: 1,
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotMaximal));
    }

    #[test]
    fn submodule_counts_of_planes() {
        let m2 = build_module(&f2(), &ModuleDescription::Free { rank: 2 }).unwrap();
        assert_eq!(all_submodules(&m2).unwrap().len(), 5);
        let m3 = build_module(&f3(), &ModuleDescription::Free { rank: 2 }).unwrap();
        assert_eq!(all_submodules(&m3).unwrap().len(), 6);
    }

    #[test]
    fn self_module_submodules_are_ideals() {
        let z12 = build_ring(&RingDescription::zmod(12)).unwrap();
        let m = build_module(&z12, &ModuleDescription::Free { rank: 1 }).unwrap();
        let subs = all_submodules(&m).unwrap();
        let lat = IdealLattice::build(&z12).unwrap();
        assert_eq!(subs.len(), lat.len());
        for (s, i) in subs.iter().zip(lat.ideals()) {
            assert_eq!(&s.members, i.members());
        }
    }

    #[test]
    fn plane_predicates_over_f2() {
        let m = build_module(&f2(), &ModuleDescription::Free { rank: 2 }).unwrap();
        let p = module_predicates(&m).unwrap();
        assert!(!p.cyclic);
        assert!(p.faithful);
        assert!(!p.has_avoidance);
        assert_eq!(p.min_cover_size, Some(3));
        assert!(!p.multiplication_module);
    }

    #[test]
    fn pir_self_module_has_avoidance() {
        let z12 = build_ring(&RingDescription::zmod(12)).unwrap();
        let m = build_module(&z12, &ModuleDescription::Free { rank: 1 }).unwrap();
        let p = module_predicates(&m).unwrap();
        assert!(p.cyclic && p.has_avoidance && p.faithful);
    }

    #[test]
    fn faithful_cover_verdicts() {
        let z12 = build_ring(&RingDescription::zmod(12)).unwrap();
        let m = build_module(&z12, &ModuleDescription::Free { rank: 1 }).unwrap();
        let unit = Ideal::generated(&z12, &[1]);
        let two = Ideal::generated(&z12, &[2]);
        let three = Ideal::generated(&z12, &[3]);
        let v = faithful_cover_check(&m, &[unit, two.clone()]).unwrap();
        assert_eq!(v, CoverVerdict::UnitWitness { index: 0 });
        let v = faithful_cover_check(&m, &[two, three]).unwrap();
        assert_eq!(v, CoverVerdict::HypothesisFails);
    }

    #[test]
    fn faithful_cover_rejects_unfaithful_modules() {
        let z12 = build_ring(&RingDescription::zmod(12)).unwrap();
        let m = build_module(
            &z12,
            &ModuleDescription::ResiduePower {
                maximal_ideal: vec!["2".into()],
                power: 2,
            },
        )
        .unwrap();
        let unit = Ideal::generated(&z12, &[1]);
        assert!(matches!(
            faithful_cover_check(&m, &[unit]),
            Err(Error::NotFaithful)
        ));
    }

    #[test]
    fn residue_cover_line_counts() {
        let m2 = build_module(&f2(), &ModuleDescription::Free { rank: 2 }).unwrap();
        let zero2 = Ideal::generated(&f2(), &[]);
        let fam = residue_cover(&m2, &zero2).unwrap();
        assert_eq!(fam.len(), 3);
        let m3 = build_module(&f3(), &ModuleDescription::Free { rank: 2 }).unwrap();
        let zero3 = Ideal::generated(&f3(), &[]);
        let fam = residue_cover(&m3, &zero3).unwrap();
        assert_eq!(fam.len(), 4);
        for s in &fam {
            assert!(s.size() < m3.size());
        }
        let union = union_all(m3.size(), fam.iter().map(|s| &s.members));
        assert_eq!(union.count(), m3.size());
    }

    #[test]
    fn residue_cover_needs_dimension_two() {
        let m1 = build_module(&f2(), &ModuleDescription::Free { rank: 1 }).unwrap();
        let zero = Ideal::generated(&f2(), &[]);
        assert!(matches!(
            residue_cover(&m1, &zero),
            Err(Error::DimensionTooSmall)
        ));
    }

    #[test]
    fn quotient_module_shrinks() {
        let m = build_module(&f2(), &ModuleDescription::Free { rank: 2 }).unwrap();
        let q = build_module(
            &f2(),
            &ModuleDescription::QuotientOf {
                module: Box::new(ModuleDescription::Free { rank: 2 }),
                submodule_generators: vec![vec!["1".into(), "0".into()]],
            },
        )
        .unwrap();
        assert_eq!(m.size(), 4);
        assert_eq!(q.size(), 2);
    }
}
