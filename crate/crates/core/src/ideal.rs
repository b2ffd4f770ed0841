//! Ideals of a finite ring and the complete lattice of them.
//!
//! Member sets are dense bit-vectors keyed by element index. The lattice is
//! enumerated by seeding with all principal ideals and closing under pairwise
//! sum to a fixpoint: every ideal of a finite ring is a finite sum of
//! principal ideals.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::bits::BitSet;
use crate::config;
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

#[derive(Clone)]
pub struct Ideal {
    ring: Arc<FiniteRing>,
    members: BitSet,
    generators: Option<Vec<u16>>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.as_ref() == other.ring.as_ref() && self.members == other.members
    }
}
impl Eq for Ideal {}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set()
            .entries(self.members.iter().map(|i| self.ring.name(i as u16)))
            .finish()
    }
}

/// Set of all multiples r*a; already closed under addition.
fn principal_members(ring: &FiniteRing, a: u16) -> BitSet {
    let mut s = BitSet::new(ring.size());
    for r in ring.elements() {
        s.insert(ring.mul(r, a) as usize);
    }
    s
}

/// Closes a set containing 0 under addition.
fn additive_closure(ring: &FiniteRing, mut set: BitSet) -> BitSet {
    let mut frontier: Vec<u16> = set.iter().map(|i| i as u16).collect();
    let mut members: Vec<u16> = frontier.clone();
    while let Some(x) = frontier.pop() {
        for k in 0..members.len() {
            let s = ring.add(x, members[k]);
            if set.insert(s as usize) {
                members.push(s);
                frontier.push(s);
            }
        }
    }
    set
}

fn ideal_closure(ring: &FiniteRing, gens: &[u16]) -> BitSet {
    let mut s = BitSet::new(ring.size());
    s.insert(ring.zero() as usize);
    for &g in gens {
        s.union_with(&principal_members(ring, g));
    }
    additive_closure(ring, s)
}

impl Ideal {
    /// Least ideal containing the generators.
    pub fn generated(ring: &Arc<FiniteRing>, gens: &[u16]) -> Ideal {
        Ideal {
            ring: ring.clone(),
            members: ideal_closure(ring, gens),
            generators: Some(gens.to_vec()),
        }
    }

    /// Wraps an explicit member set, which must already be an ideal.
    pub fn from_members(ring: &Arc<FiniteRing>, members: BitSet) -> Ideal {
        debug_assert!(is_ideal_set(ring, &members));
        Ideal {
            ring: ring.clone(),
            members,
            generators: None,
        }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }
    pub fn members(&self) -> &BitSet {
        &self.members
    }
    pub fn generators(&self) -> Option<&[u16]> {
        self.generators.as_deref()
    }

    pub fn contains(&self, a: u16) -> bool {
        self.members.contains(a as usize)
    }
    pub fn size(&self) -> usize {
        self.members.count()
    }
    pub fn is_zero(&self) -> bool {
        self.size() == 1
    }
    pub fn is_unit_ideal(&self) -> bool {
        self.contains(self.ring.one())
    }
    pub fn is_proper(&self) -> bool {
        !self.is_unit_ideal()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    fn check_same_ring(&self, other: &Ideal) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring.as_ref() == other.ring.as_ref() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Sum A + B = {a + b}.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        if self.members.is_subset(&other.members) {
            return Ok(other.clone());
        }
        if other.members.is_subset(&self.members) {
            return Ok(self.clone());
        }
        let mut s = self.members.clone();
        s.union_with(&other.members);
        // one translation pass completes the subgroup sum
        let base = s.clone();
        for b in other.members.iter() {
            for a in base.iter() {
                s.insert(self.ring.add(a as u16, b as u16) as usize);
            }
        }
        Ok(Ideal {
            ring: self.ring.clone(),
            members: s,
            generators: None,
        })
    }

    /// Product AB: additive closure of the pairwise products.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let mut s = BitSet::new(self.ring.size());
        s.insert(self.ring.zero() as usize);
        for a in self.members.iter() {
            for b in other.members.iter() {
                s.insert(self.ring.mul(a as u16, b as u16) as usize);
            }
        }
        Ok(Ideal {
            ring: self.ring.clone(),
            members: additive_closure(&self.ring, s),
            generators: None,
        })
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let mut s = self.members.clone();
        s.intersect_with(&other.members);
        Ok(Ideal {
            ring: self.ring.clone(),
            members: s,
            generators: None,
        })
    }

    /// Colon (self : other) = { r | r * other ⊆ self }.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let mut s = BitSet::new(self.ring.size());
        for r in self.ring.elements() {
            if other
                .members
                .iter()
                .all(|b| self.contains(self.ring.mul(r, b as u16)))
            {
                s.insert(r as usize);
            }
        }
        Ok(Ideal {
            ring: self.ring.clone(),
            members: s,
            generators: None,
        })
    }

    /// d-th power, d >= 1; stabilizes once consecutive powers agree.
    pub fn power(&self, d: u32) -> Ideal {
        assert!(d >= 1, "ideal powers start at 1");
        let mut acc = self.clone();
        for _ in 1..d {
            let next = acc.product(self).expect("same ring");
            if next.members == acc.members {
                return acc;
            }
            acc = next;
        }
        acc
    }

    /// Fixpoint of the descending power chain.
    pub fn stable_power(&self) -> Ideal {
        let mut acc = self.clone();
        loop {
            let next = acc.product(self).expect("same ring");
            if next.members == acc.members {
                return acc;
            }
            acc = next;
        }
    }

    /// { x | x^k in self for some k }; element orders cap the search.
    pub fn radical(&self) -> Ideal {
        let mut s = BitSet::new(self.ring.size());
        for x in self.ring.elements() {
            let mut pow = x;
            let mut seen = BitSet::new(self.ring.size());
            loop {
                if self.contains(pow) {
                    s.insert(x as usize);
                    break;
                }
                if !seen.insert(pow as usize) {
                    break;
                }
                pow = self.ring.mul(pow, x);
            }
        }
        Ideal {
            ring: self.ring.clone(),
            members: s,
            generators: None,
        }
    }

    /// { r | r * self = 0 }.
    pub fn annihilator(&self) -> Ideal {
        let zero = self.ring.zero();
        let mut s = BitSet::new(self.ring.size());
        for r in self.ring.elements() {
            if self
                .members
                .iter()
                .all(|a| self.ring.mul(r, a as u16) == zero)
            {
                s.insert(r as usize);
            }
        }
        Ideal {
            ring: self.ring.clone(),
            members: s,
            generators: None,
        }
    }

    /// Greedy small generating set, used when a description needs one.
    pub fn small_generating_set(&self) -> Vec<u16> {
        if let Some(g) = &self.generators {
            return g.clone();
        }
        let mut gens: Vec<u16> = Vec::new();
        let mut closure = ideal_closure(&self.ring, &gens);
        for x in self.members.iter() {
            if !closure.contains(x) {
                gens.push(x as u16);
                closure = ideal_closure(&self.ring, &gens);
            }
        }
        gens
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.small_generating_set()
            .iter()
            .map(|&g| self.ring.name(g).to_string())
            .collect()
    }

    /// Sorted element-name list; the serialized form of an ideal.
    pub fn member_names(&self) -> Vec<String> {
        self.members
            .iter()
            .map(|i| self.ring.name(i as u16).to_string())
            .collect()
    }
}

/// Closure soundness check: contains zero, closed under addition and the
/// ring action.
pub fn is_ideal_set(ring: &FiniteRing, set: &BitSet) -> bool {
    if !set.contains(ring.zero() as usize) {
        return false;
    }
    for a in set.iter() {
        for b in set.iter() {
            if !set.contains(ring.add(a as u16, b as u16) as usize) {
                return false;
            }
        }
        for r in ring.elements() {
            if !set.contains(ring.mul(r, a as u16) as usize) {
                return false;
            }
        }
    }
    true
}

/// The complete ideal lattice, canonically ordered by (cardinality, member
/// set).
pub struct IdealLattice {
    ring: Arc<FiniteRing>,
    ideals: Vec<Ideal>,
    index: HashMap<BitSet, usize>,
    zero_idx: usize,
    unit_idx: usize,
}

impl IdealLattice {
    pub fn build(ring: &Arc<FiniteRing>) -> Result<IdealLattice> {
        Self::build_with_cap(ring, config::DEFAULT_LATTICE_BOUND)
    }

    pub fn build_with_cap(ring: &Arc<FiniteRing>, cap: usize) -> Result<IdealLattice> {
        let mut seen: HashMap<BitSet, usize> = HashMap::new();
        let mut sets: Vec<BitSet> = Vec::new();
        for a in ring.elements() {
            let p = principal_members(ring, a);
            if !seen.contains_key(&p) {
                seen.insert(p.clone(), sets.len());
                sets.push(p);
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
                let sum = sum_sets(ring, a, b);
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
        let index: HashMap<BitSet, usize> = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let zero_idx = 0;
        let unit_idx = sets.len() - 1;
        debug_assert_eq!(sets[zero_idx].count(), 1);
        debug_assert_eq!(sets[unit_idx].count(), ring.size());
        let ideals = sets
            .into_iter()
            .map(|members| Ideal {
                ring: ring.clone(),
                members,
                generators: None,
            })
            .collect();
        Ok(IdealLattice {
            ring: ring.clone(),
            ideals,
            index,
            zero_idx,
            unit_idx,
        })
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }
    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }
    pub fn len(&self) -> usize {
        self.ideals.len()
    }
    pub fn is_empty(&self) -> bool {
        false
    }
    pub fn zero(&self) -> &Ideal {
        &self.ideals[self.zero_idx]
    }
    pub fn unit(&self) -> &Ideal {
        &self.ideals[self.unit_idx]
    }

    pub fn index_of(&self, ideal: &Ideal) -> Option<usize> {
        self.index.get(ideal.members()).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.ideals[i].members().is_subset(self.ideals[j].members())
    }

    /// Indices of ideals strictly below the given member set.
    pub fn proper_subideals(&self, of: &Ideal) -> Vec<usize> {
        self.ideals
            .iter()
            .enumerate()
            .filter(|(_, j)| j.members().is_subset(of.members()) && j.members() != of.members())
            .map(|(i, _)| i)
            .collect()
    }

    /// Maximal elements of the strict subideal poset of `of`.
    pub fn maximal_proper_subideals(&self, of: &Ideal) -> Vec<usize> {
        let below = self.proper_subideals(of);
        below
            .iter()
            .copied()
            .filter(|&i| {
                !below
                    .iter()
                    .any(|&j| j != i && self.leq(i, j))
            })
            .collect()
    }

    /// Hasse diagram edges (i covered by j).
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.ideals.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.leq(i, j) {
                    continue;
                }
                let between = (0..n)
                    .any(|k| k != i && k != j && self.leq(i, k) && self.leq(k, j));
                if !between {
                    edges.push((i, j));
                }
            }
        }
        edges
    }
}

fn sum_sets(ring: &FiniteRing, a: &BitSet, b: &BitSet) -> BitSet {
    let mut s = a.clone();
    s.union_with(b);
    let base = s.clone();
    for y in b.iter() {
        for x in base.iter() {
            s.insert(ring.add(x as u16, y as u16) as usize);
        }
    }
    s
}

/// Per-ideal classification record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdealPredicates {
    pub principal: bool,
    pub idempotent: bool,
    pub pure: bool,
    pub radical_ideal: bool,
    pub prime: bool,
    pub maximal: bool,
    pub primary: bool,
    pub multiplication_ideal: bool,
}

pub fn ideal_predicates(a: &Ideal, lat: &IdealLattice) -> IdealPredicates {
    let ring = a.ring();
    let principal = a
        .members
        .iter()
        .any(|g| principal_members(ring, g as u16) == a.members);
    let idempotent = a.product(a).expect("same ring").members == a.members;
    let pure = a.members.iter().all(|x| {
        a.members
            .iter()
            .any(|b| ring.mul(x as u16, b as u16) == x as u16)
    });
    let rad = a.radical();
    let radical_ideal = rad.members == a.members;
    let proper = a.is_proper();
    let prime = proper && {
        let mut ok = true;
        'outer: for x in ring.elements() {
            if a.contains(x) {
                continue;
            }
            for y in ring.elements() {
                if !a.contains(y) && a.contains(ring.mul(x, y)) {
                    ok = false;
                    break 'outer;
                }
            }
        }
        ok
    };
    let maximal = proper
        && lat
            .ideals()
            .iter()
            .all(|j| !(a.members.is_subset(j.members()) && j.members() != &a.members && j.is_proper()));
    let primary = proper && {
        let mut ok = true;
        'outer: for x in ring.elements() {
            if a.contains(x) {
                continue;
            }
            for y in ring.elements() {
                if !rad.contains(y) && a.contains(ring.mul(x, y)) {
                    ok = false;
                    break 'outer;
                }
            }
        }
        ok
    };
    let multiplication_ideal = lat
        .ideals()
        .iter()
        .filter(|j| j.members().is_subset(&a.members))
        .all(|j| {
            let q = j.colon(a).expect("same ring");
            let prod = a.product(&q).expect("same ring");
            prod.members == *j.members()
        });
    IdealPredicates {
        principal,
        idempotent,
        pure,
        radical_ideal,
        prime,
        maximal,
        primary,
        multiplication_ideal,
    }
}

/// Prime and maximal spectra. For finite rings the two coincide, which the
/// caller-facing suites assert.
pub struct Spectrum {
    pub primes: Vec<usize>,
    pub maximals: Vec<usize>,
}

pub fn spectrum(lat: &IdealLattice) -> Spectrum {
    let mut primes = Vec::new();
    let mut maximals = Vec::new();
    for (i, a) in lat.ideals().iter().enumerate() {
        let p = ideal_predicates(a, lat);
        if p.prime {
            primes.push(i);
        }
        if p.maximal {
            maximals.push(i);
        }
    }
    debug_assert_eq!(primes, maximals, "finite rings: Spec = Max");
    Spectrum { primes, maximals }
}
