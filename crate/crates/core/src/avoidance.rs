//! Avoidance decisions: whether an ideal is trapped in a union of others,
//! minimal covering families, power exponents for covers, map avoidance and
//! the primary variant.
//!
//! Arbitrary-family quantification collapses to proper-subideal families: a
//! failing family {I_k} yields the proper-subideal family {I ∩ I_k} and
//! conversely, so the union over all proper subideals is the maximal test.

use serde::Serialize;

use crate::bits::{union_all, BitSet};
use crate::error::{Error, Result};
use crate::ideal::{ideal_predicates, Ideal, IdealLattice};
use crate::ring::map::{extend_ideal, RingMap};
use crate::ring::FiniteRing;
use std::sync::Arc;

/// A (claimed) cover: target ideal and a nonempty member list in the same
/// ring. The union of members is a mere set, so coverage is a set-level
/// question.
pub struct CoverFamily {
    target: Ideal,
    members: Vec<Ideal>,
}

impl CoverFamily {
    pub fn new(target: Ideal, members: Vec<Ideal>) -> Result<CoverFamily> {
        if members.is_empty() {
            return Err(Error::MalformedDescription(
                "a cover family needs at least one member".into(),
            ));
        }
        for m in &members {
            if m.ring().as_ref() != target.ring().as_ref() {
                return Err(Error::RingMismatch);
            }
        }
        Ok(CoverFamily { target, members })
    }

    pub fn target(&self) -> &Ideal {
        &self.target
    }
    pub fn members(&self) -> &[Ideal] {
        &self.members
    }
    pub fn len(&self) -> usize {
        self.members.len()
    }
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn covers(&self) -> bool {
        let union = union_all(
            self.target.ring().size(),
            self.members.iter().map(|m| m.members()),
        );
        self.target.members().is_subset(&union)
    }
}

/// True iff the ideal is NOT contained in the union of all its proper
/// subideals.
pub fn has_avoidance(ideal: &Ideal, lat: &IdealLattice) -> bool {
    let ring_size = ideal.ring().size();
    let union = union_all(
        ring_size,
        lat.ideals()
            .iter()
            .filter(|j| j.members().is_subset(ideal.members()) && j.members() != ideal.members())
            .map(|j| j.members()),
    );
    !ideal.members().is_subset(&union)
}

/// Every ideal of the lattice has avoidance.
pub fn is_avoidance_ring(lat: &IdealLattice) -> bool {
    lat.ideals().iter().all(|i| has_avoidance(i, lat))
}

pub struct MinCoverSets {
    pub sets: Vec<BitSet>,
    /// False when the exhaustive search was abandoned for a greedy upper
    /// bound (too many candidates).
    pub certified_minimal: bool,
}

const EXHAUSTIVE_CANDIDATE_LIMIT: usize = 32;
const EXHAUSTIVE_NODE_BUDGET: usize = 1 << 24;

/// Smallest subfamily of `candidates` whose union contains `target`, or
/// `None` when even the whole family falls short. Candidates contained in
/// another candidate are dropped first; the search then walks family sizes
/// in nondecreasing order.
pub fn min_cover_over(target: &BitSet, candidates: &[BitSet]) -> Option<MinCoverSets> {
    let mut maximal: Vec<&BitSet> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|d| *d != **c && c.is_subset(d))
        })
        .collect();
    maximal.sort_by(|a, b| b.count().cmp(&a.count()).then_with(|| a.cmp(b)));
    maximal.dedup();
    let whole = union_all(target.capacity(), maximal.iter().copied());
    if !target.is_subset(&whole) {
        return None;
    }
    if maximal.len() <= EXHAUSTIVE_CANDIDATE_LIMIT {
        let mut picked = Vec::new();
        let mut budget = EXHAUSTIVE_NODE_BUDGET;
        for k in 1..=maximal.len() {
            if search_cover(target, &maximal, k, 0, &mut picked, &mut budget) {
                return Some(MinCoverSets {
                    sets: picked.iter().map(|&i| maximal[i].clone()).collect(),
                    certified_minimal: true,
                });
            }
            if budget == 0 {
                break;
            }
        }
    }
    // greedy upper bound, flagged non-minimal
    let mut covered = BitSet::new(target.capacity());
    let mut sets = Vec::new();
    while !target.is_subset(&covered) {
        let best = maximal
            .iter()
            .enumerate()
            .max_by_key(|(i, c)| {
                let gain = c.iter().filter(|&e| target.contains(e) && !covered.contains(e)).count();
                (gain, usize::MAX - i)
            })
            .map(|(i, _)| i)
            .expect("whole family covers");
        covered.union_with(maximal[best]);
        sets.push(maximal[best].clone());
    }
    Some(MinCoverSets {
        sets,
        certified_minimal: false,
    })
}

fn search_cover(
    target: &BitSet,
    candidates: &[&BitSet],
    want: usize,
    from: usize,
    picked: &mut Vec<usize>,
    budget: &mut usize,
) -> bool {
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    if picked.len() == want {
        let union = union_all(target.capacity(), picked.iter().map(|&i| candidates[i]));
        return target.is_subset(&union);
    }
    let remaining = want - picked.len();
    for i in from..=candidates.len().saturating_sub(remaining) {
        picked.push(i);
        if search_cover(target, candidates, want, i + 1, picked, budget) {
            return true;
        }
        picked.pop();
    }
    false
}

pub struct MinCover {
    pub family: CoverFamily,
    pub certified_minimal: bool,
}

/// Smallest family of proper subideals covering the ideal; absent exactly
/// when the ideal has avoidance.
pub fn min_cover(ideal: &Ideal, lat: &IdealLattice) -> Option<MinCover> {
    let candidates: Vec<BitSet> = lat
        .ideals()
        .iter()
        .filter(|j| j.members().is_subset(ideal.members()) && j.members() != ideal.members())
        .map(|j| j.members().clone())
        .collect();
    let found = min_cover_over(ideal.members(), &candidates)?;
    let members = found
        .sets
        .into_iter()
        .map(|s| Ideal::from_members(ideal.ring(), s))
        .collect();
    Some(MinCover {
        family: CoverFamily::new(ideal.clone(), members).expect("same ring"),
        certified_minimal: found.certified_minimal,
    })
}

/// True iff no proper sub-list of the members still covers the target.
/// Leave-one-out suffices: coverage is monotone in the family.
pub fn is_irredundant(fam: &CoverFamily) -> Result<bool> {
    if !fam.covers() {
        return Err(Error::NotACover);
    }
    let ring_size = fam.target().ring().size();
    for skip in 0..fam.members.len() {
        let union = union_all(
            ring_size,
            fam.members
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, m)| m.members()),
        );
        if fam.target.members().is_subset(&union) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exponent data for a cover. The intersection exponent is present only for
/// irredundant families; its bound n-1 is enforced for n >= 2 (a singleton
/// family is vacuously irredundant and its exponent is 1).
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct McCoyResult {
    pub per_member_exponent: u32,
    /// Index (into the family) of the member absorbing the power; lowest
    /// index wins ties.
    pub per_member_witness: usize,
    pub intersection_exponent: Option<u32>,
    pub bound: u32,
}

pub fn mccoy(fam: &CoverFamily) -> Result<McCoyResult> {
    if !fam.covers() {
        return Err(Error::NotACover);
    }
    let n = fam.members.len() as u32;
    let cap = fam.target.ring().size() as u32;

    let (per_member_exponent, per_member_witness) = {
        let mut power = fam.target.clone();
        let mut found = None;
        for d in 1..=cap {
            if let Some(k) = fam.members.iter().position(|m| power.is_subset(m)) {
                found = Some((d, k));
                break;
            }
            let next = power.product(&fam.target).expect("same ring");
            if next.members() == power.members() {
                break; // stabilized without containment
            }
            power = next;
        }
        found.ok_or_else(|| {
            Error::EngineBug("no power of the target lands in a member".into())
        })?
    };

    let intersection_exponent = if is_irredundant(fam)? {
        let mut inter = fam.members[0].clone();
        for m in &fam.members[1..] {
            inter = inter.intersection(m).expect("same ring");
        }
        let mut power = fam.target.clone();
        let mut found = None;
        for d in 1..=cap {
            if power.is_subset(&inter) {
                found = Some(d);
                break;
            }
            let next = power.product(&fam.target).expect("same ring");
            if next.members() == power.members() {
                break;
            }
            power = next;
        }
        let d = found.ok_or_else(|| {
            Error::EngineBug("no power of the target lands in the intersection".into())
        })?;
        if n >= 2 && d > n - 1 {
            return Err(Error::BoundViolation {
                exponent: d,
                bound: n - 1,
            });
        }
        Some(d)
    } else {
        None
    };

    Ok(McCoyResult {
        per_member_exponent,
        per_member_witness,
        intersection_exponent,
        bound: n.saturating_sub(1),
    })
}

/// When all but at most two members are radical ideals, some member must
/// contain the target outright; returns its index (lowest wins).
pub fn radical_variant_check(fam: &CoverFamily) -> Result<usize> {
    if !fam.covers() {
        return Err(Error::NotACover);
    }
    let non_radical = fam
        .members
        .iter()
        .filter(|m| m.radical().members() != m.members())
        .count();
    if non_radical > 2 {
        return Err(Error::HypothesisFailed(format!(
            "{non_radical} members are not radical ideals"
        )));
    }
    fam.members
        .iter()
        .position(|m| fam.target.members().is_subset(m.members()))
        .ok_or_else(|| Error::EngineBug("no member contains the target".into()))
}

/// Map avoidance for a fixed homomorphism: for each source ideal I let
/// Bad(I) be the proper subideals J with IS ⊄ JS; the map has avoidance iff
/// no I is covered by the union of its Bad set.
pub fn map_has_avoidance(map: &RingMap) -> Result<bool> {
    let lat = IdealLattice::build(map.source())?;
    let exts: Vec<BitSet> = lat
        .ideals()
        .iter()
        .map(|i| extend_ideal(map, i).map(|e| e.members().clone()))
        .collect::<Result<_>>()?;
    let n = map.source().size();
    for (i, ideal) in lat.ideals().iter().enumerate() {
        let bad_union = union_all(
            n,
            lat.ideals().iter().enumerate().filter_map(|(j, sub)| {
                let strictly_below = sub.members().is_subset(ideal.members())
                    && sub.members() != ideal.members();
                if strictly_below && !exts[i].is_subset(&exts[j]) {
                    Some(sub.members())
                } else {
                    None
                }
            }),
        );
        if ideal.members().is_subset(&bad_union) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PrimaryAvoidance {
    pub avoidance: bool,
    pub primary_avoidance: bool,
}

/// Decides avoidance twice: with arbitrary covers and with cover members
/// restricted to primary ideals. Finite rings are Laskerian, so the two
/// answers agree; the suites assert it.
pub fn primary_avoidance_equiv(ring: &Arc<FiniteRing>) -> Result<PrimaryAvoidance> {
    let lat = IdealLattice::build(ring)?;
    let avoidance = is_avoidance_ring(&lat);
    let primary: Vec<bool> = lat
        .ideals()
        .iter()
        .map(|a| ideal_predicates(a, &lat).primary)
        .collect();
    let n = ring.size();
    let primary_avoidance = lat.ideals().iter().all(|i| {
        let union = union_all(
            n,
            lat.ideals()
                .iter()
                .zip(&primary)
                .filter(|(q, &is_primary)| is_primary && !i.members().is_subset(q.members()))
                .map(|(q, _)| q.members()),
        );
        !i.members().is_subset(&union)
    });
    Ok(PrimaryAvoidance {
        avoidance,
        primary_avoidance,
    })
}

/// Exploratory probe report. No theorem is asserted here: the sampled side
/// quantifies only over the supplied maps.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConjectureReport {
    pub target: String,
    /// Every local factor of the target is a field.
    pub right_side: bool,
    pub sampled_maps: usize,
    pub failing_maps: Vec<String>,
    pub sampled_left_side: bool,
    pub agreement: bool,
    pub low_confidence: bool,
}

pub fn conjecture_probe(ring: &Arc<FiniteRing>, sources: &[RingMap]) -> Result<ConjectureReport> {
    for map in sources {
        if map.target().as_ref() != ring.as_ref() {
            return Err(Error::RingMismatch);
        }
    }
    let decomp = crate::structure::local_decomposition(ring)?;
    let right_side = decomp.factors.iter().all(|f| f.factor.is_field());
    let mut failing = Vec::new();
    for map in sources {
        if !map_has_avoidance(map)? {
            failing.push(format!(
                "{} -> {}",
                map.source().desc().label(),
                map.target().desc().label()
            ));
        }
    }
    let sampled_left_side = failing.is_empty();
    Ok(ConjectureReport {
        target: ring.desc().label(),
        right_side,
        sampled_maps: sources.len(),
        failing_maps: failing,
        sampled_left_side,
        agreement: sampled_left_side == right_side,
        low_confidence: sources.is_empty(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, quotient_ring, RingDescription};

    fn z12() -> Arc<FiniteRing> {
        build_ring(&RingDescription::zmod(12)).unwrap()
    }

    fn fqm2(q: u64) -> Arc<FiniteRing> {
        build_ring(&RingDescription::PolyQuotient {
            base: Box::new(RingDescription::zmod(q)),
            vars: vec!["x".into(), "y".into()],
            truncation: 2,
            relations: vec![],
        })
        .unwrap()
    }

    fn maximal_of(r: &Arc<FiniteRing>) -> Ideal {
        let x = r.element_by_name("x").unwrap();
        let y = r.element_by_name("y").unwrap();
        Ideal::generated(r, &[x, y])
    }

    #[test]
    fn golden_maximal_ideal_fails_avoidance() {
        let r = fqm2(2);
        let lat = IdealLattice::build(&r).unwrap();
        let m = maximal_of(&r);
        assert!(!has_avoidance(&m, &lat));
        assert!(!is_avoidance_ring(&lat));
    }

    #[test]
    fn principal_ideals_have_avoidance() {
        let r = fqm2(2);
        let lat = IdealLattice::build(&r).unwrap();
        let x = r.element_by_name("x").unwrap();
        assert!(has_avoidance(&Ideal::generated(&r, &[x]), &lat));
        let r12 = z12();
        let lat12 = IdealLattice::build(&r12).unwrap();
        for a in r12.elements() {
            assert!(has_avoidance(&Ideal::generated(&r12, &[a]), &lat12));
        }
    }

    #[test]
    fn idempotent_ideal_of_z6_has_avoidance() {
        let r = build_ring(&RingDescription::zmod(6)).unwrap();
        let lat = IdealLattice::build(&r).unwrap();
        let three = Ideal::generated(&r, &[3]);
        assert!(has_avoidance(&three, &lat));
    }

    #[test]
    fn min_cover_of_golden_maximal_is_three_lines() {
        let r = fqm2(2);
        let lat = IdealLattice::build(&r).unwrap();
        let m = maximal_of(&r);
        let mc = min_cover(&m, &lat).unwrap();
        assert!(mc.certified_minimal);
        assert_eq!(mc.family.len(), 3);
        for member in mc.family.members() {
            assert_eq!(member.size(), 2);
        }
        assert!(mc.family.covers());
    }

    #[test]
    fn min_cover_size_grows_with_the_field() {
        let r = fqm2(3);
        let lat = IdealLattice::build(&r).unwrap();
        let m = maximal_of(&r);
        let mc = min_cover(&m, &lat).unwrap();
        assert_eq!(mc.family.len(), 4);
    }

    #[test]
    fn principal_ideal_has_no_cover() {
        let r = z12();
        let lat = IdealLattice::build(&r).unwrap();
        let four = Ideal::generated(&r, &[4]);
        assert!(min_cover(&four, &lat).is_none());
    }

    #[test]
    fn avoidance_ring_examples() {
        for desc in [
            RingDescription::zmod(12),
            RingDescription::PolyQuotient {
                base: Box::new(RingDescription::zmod(2)),
                vars: vec!["x".into()],
                truncation: 3,
                relations: vec![],
            },
        ] {
            let r = build_ring(&desc).unwrap();
            let lat = IdealLattice::build(&r).unwrap();
            assert!(is_avoidance_ring(&lat), "{}", desc.label());
        }
    }

    #[test]
    fn irredundance_of_the_line_cover() {
        let r = fqm2(2);
        let m = maximal_of(&r);
        let lat = IdealLattice::build(&r).unwrap();
        let lines: Vec<Ideal> = lat
            .ideals()
            .iter()
            .filter(|i| i.size() == 2)
            .cloned()
            .collect();
        assert_eq!(lines.len(), 3);
        let fam = CoverFamily::new(m.clone(), lines.clone()).unwrap();
        assert!(is_irredundant(&fam).unwrap());
        let mut padded = lines.clone();
        padded.push(Ideal::generated(&r, &[]));
        let fam2 = CoverFamily::new(m.clone(), padded).unwrap();
        assert!(!is_irredundant(&fam2).unwrap());
        let fam3 = CoverFamily::new(m.clone(), vec![m.clone()]).unwrap();
        assert!(is_irredundant(&fam3).unwrap());
    }

    #[test]
    fn mccoy_on_the_golden_cover_attains_the_bound() {
        let r = fqm2(2);
        let m = maximal_of(&r);
        let lat = IdealLattice::build(&r).unwrap();
        let lines: Vec<Ideal> = lat
            .ideals()
            .iter()
            .filter(|i| i.size() == 2)
            .cloned()
            .collect();
        let fam = CoverFamily::new(m, lines).unwrap();
        let res = mccoy(&fam).unwrap();
        assert_eq!(res.per_member_exponent, 2);
        assert_eq!(res.per_member_witness, 0);
        assert_eq!(res.intersection_exponent, Some(2));
        assert_eq!(res.bound, 2); // attained
    }

    #[test]
    fn two_member_covers_have_exponent_one() {
        let r = z12();
        let six = Ideal::generated(&r, &[6]);
        let two = Ideal::generated(&r, &[2]);
        let three = Ideal::generated(&r, &[3]);
        let fam = CoverFamily::new(six, vec![two, three]).unwrap();
        let res = mccoy(&fam).unwrap();
        assert_eq!(res.per_member_exponent, 1);
        assert_eq!(res.per_member_witness, 0);
    }

    #[test]
    fn containment_gives_exponent_one() {
        let r = z12();
        let four = Ideal::generated(&r, &[4]);
        let two = Ideal::generated(&r, &[2]);
        let fam = CoverFamily::new(four, vec![two]).unwrap();
        let res = mccoy(&fam).unwrap();
        assert_eq!(res.per_member_exponent, 1);
        assert_eq!(res.intersection_exponent, Some(1));
    }

    #[test]
    fn mccoy_rejects_non_covers() {
        let r = z12();
        let two = Ideal::generated(&r, &[2]);
        let four = Ideal::generated(&r, &[4]);
        let six = Ideal::generated(&r, &[6]);
        let fam = CoverFamily::new(two, vec![four, six]).unwrap();
        assert!(matches!(mccoy(&fam), Err(Error::NotACover)));
    }

    #[test]
    fn radical_variant_on_z12() {
        let r = z12();
        let six = Ideal::generated(&r, &[6]);
        let two = Ideal::generated(&r, &[2]);
        let three = Ideal::generated(&r, &[3]);
        let four = Ideal::generated(&r, &[4]);
        let fam = CoverFamily::new(six, vec![two, three, four]).unwrap();
        assert_eq!(radical_variant_check(&fam).unwrap(), 0);
    }

    #[test]
    fn radical_variant_rejects_three_non_radicals() {
        let r = fqm2(2);
        let m = maximal_of(&r);
        let lat = IdealLattice::build(&r).unwrap();
        let lines: Vec<Ideal> = lat
            .ideals()
            .iter()
            .filter(|i| i.size() == 2)
            .cloned()
            .collect();
        // each line has radical m, so all three are non-radical
        let fam = CoverFamily::new(m, lines).unwrap();
        assert!(matches!(
            radical_variant_check(&fam),
            Err(Error::HypothesisFailed(_))
        ));
    }

    #[test]
    fn identity_map_avoidance_matches_ring_avoidance() {
        let bad = fqm2(2);
        assert!(!map_has_avoidance(&RingMap::identity(&bad)).unwrap());
        let good = z12();
        assert!(map_has_avoidance(&RingMap::identity(&good)).unwrap());
    }

    #[test]
    fn quotient_map_from_non_avoidance_ring_can_have_avoidance() {
        let r = fqm2(2);
        let x = r.element_by_name("x").unwrap();
        let ix = Ideal::generated(&r, &[x]);
        let (_q, proj) = quotient_ring(&r, &ix).unwrap();
        assert!(map_has_avoidance(&proj).unwrap());
    }

    #[test]
    fn primary_equivalence_on_golden_rings() {
        let r = z12();
        let p = primary_avoidance_equiv(&r).unwrap();
        assert_eq!(
            p,
            PrimaryAvoidance { avoidance: true, primary_avoidance: true }
        );
        let g = fqm2(2);
        let p = primary_avoidance_equiv(&g).unwrap();
        assert_eq!(
            p,
            PrimaryAvoidance { avoidance: false, primary_avoidance: false }
        );
        let f = build_ring(&RingDescription::zmod(7)).unwrap();
        let p = primary_avoidance_equiv(&f).unwrap();
        assert!(p.avoidance && p.primary_avoidance);
    }

    #[test]
    fn probe_on_a_product_of_fields() {
        let r = build_ring(&RingDescription::Product {
            factors: vec![RingDescription::zmod(2), RingDescription::zmod(3)],
        })
        .unwrap();
        let id = RingMap::identity(&r);
        let report = conjecture_probe(&r, &[id]).unwrap();
        assert!(report.right_side);
        assert!(report.failing_maps.is_empty());
        assert!(report.agreement);
        assert!(!report.low_confidence);
    }

    #[test]
    fn probe_with_empty_sources_is_low_confidence() {
        let r = build_ring(&RingDescription::zmod(4)).unwrap();
        let report = conjecture_probe(&r, &[]).unwrap();
        assert!(!report.right_side);
        assert!(report.low_confidence);
        assert!(report.sampled_left_side); // vacuous
    }
}
