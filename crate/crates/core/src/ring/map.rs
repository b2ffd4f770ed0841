//! Unital ring homomorphisms given elementwise, with the extension and
//! contraction operations on ideals and the predicates derived from them.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealLattice};
use crate::ring::FiniteRing;

pub struct RingMap {
    source: Arc<FiniteRing>,
    target: Arc<FiniteRing>,
    image: Vec<u16>,
}

impl RingMap {
    /// Checks preservation of 0, 1, + and * exhaustively.
    pub fn new(
        source: Arc<FiniteRing>,
        target: Arc<FiniteRing>,
        image: Vec<u16>,
    ) -> Result<Self> {
        if image.len() != source.size() {
            return Err(Error::EngineBug("map table has the wrong length".into()));
        }
        if image[source.zero() as usize] != target.zero() {
            return Err(Error::EngineBug("map does not preserve zero".into()));
        }
        if image[source.one() as usize] != target.one() {
            return Err(Error::EngineBug("map does not preserve one".into()));
        }
        let n = source.size();
        let bad = crate::par::find_map_range(n, |a| {
            let a = a as u16;
            for b in 0..n as u16 {
                if image[source.add(a, b) as usize] != target.add(image[a as usize], image[b as usize])
                    || image[source.mul(a, b) as usize]
                        != target.mul(image[a as usize], image[b as usize])
                {
                    return Some((a, b));
                }
            }
            None
        });
        if let Some((a, b)) = bad {
            return Err(Error::EngineBug(format!(
                "map is not a homomorphism at ({a},{b})"
            )));
        }
        Ok(RingMap {
            source,
            target,
            image,
        })
    }

    pub fn identity(ring: &Arc<FiniteRing>) -> Self {
        RingMap {
            source: ring.clone(),
            target: ring.clone(),
            image: (0..ring.size() as u16).collect(),
        }
    }

    pub fn source(&self) -> &Arc<FiniteRing> {
        &self.source
    }
    pub fn target(&self) -> &Arc<FiniteRing> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, a: u16) -> u16 {
        self.image[a as usize]
    }

    /// self after `first`: x -> self(first(x)).
    pub fn compose(&self, first: &RingMap) -> Result<RingMap> {
        if first.target.as_ref() != self.source.as_ref() {
            return Err(Error::RingMismatch);
        }
        Ok(RingMap {
            source: first.source.clone(),
            target: self.target.clone(),
            image: first.image.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        for &y in &self.image {
            hit[y as usize] = true;
        }
        hit.iter().all(|&h| h)
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        for &y in &self.image {
            if hit[y as usize] {
                return false;
            }
            hit[y as usize] = true;
        }
        true
    }
}

impl std::fmt::Debug for RingMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "RingMap({} -> {})",
            self.source.desc().label(),
            self.target.desc().label()
        )
    }
}

/// Smallest ideal of the target containing the image of `ideal`.
pub fn extend_ideal(map: &RingMap, ideal: &Ideal) -> Result<Ideal> {
    if ideal.ring().as_ref() != map.source().as_ref() {
        return Err(Error::RingMismatch);
    }
    let gens: Vec<u16> = ideal.members().iter().map(|i| map.apply(i as u16)).collect();
    Ok(Ideal::generated(map.target(), &gens))
}

/// Exact preimage; always an ideal.
pub fn contract_ideal(map: &RingMap, ideal: &Ideal) -> Result<Ideal> {
    if ideal.ring().as_ref() != map.target().as_ref() {
        return Err(Error::RingMismatch);
    }
    let mut members = crate::bits::BitSet::new(map.source().size());
    for a in 0..map.source().size() {
        if ideal.contains(map.apply(a as u16)) {
            members.insert(a);
        }
    }
    Ok(Ideal::from_members(map.source(), members))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MapPredicates {
    pub surjective: bool,
    pub injective: bool,
    /// Every ideal of the target is the extension of its contraction.
    pub every_ideal_extended: bool,
    /// Every ideal of the source is the contraction of its extension.
    pub cyclically_pure: bool,
}

pub fn map_predicates(map: &RingMap) -> MapPredicates {
    let source_lat = IdealLattice::build(map.source()).expect("source lattice within bound");
    let target_lat = IdealLattice::build(map.target()).expect("target lattice within bound");
    let every_ideal_extended = target_lat.ideals().iter().all(|j| {
        let c = contract_ideal(map, j).expect("same ring");
        let ce = extend_ideal(map, &c).expect("same ring");
        ce.members() == j.members()
    });
    let cyclically_pure = source_lat.ideals().iter().all(|i| {
        let e = extend_ideal(map, i).expect("same ring");
        let ec = contract_ideal(map, &e).expect("same ring");
        ec.members() == i.members()
    });
    MapPredicates {
        surjective: map.is_surjective(),
        injective: map.is_injective(),
        every_ideal_extended,
        cyclically_pure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, quotient_ring, RingDescription};

    #[test]
    fn extension_through_projection() {
        let z12 = build_ring(&RingDescription::zmod(12)).unwrap();
        let four = Ideal::generated(&z12, &[4]);
        let (_q, proj) = quotient_ring(&z12, &four).unwrap();
        let two = Ideal::generated(&z12, &[2]);
        let ext = extend_ideal(&proj, &two).unwrap();
        // (2) extends to (2) in Z/4: two cosets
        assert_eq!(ext.members().count(), 2);
        let zero = Ideal::generated(&z12, &[]);
        let ext0 = extend_ideal(&proj, &zero).unwrap();
        assert_eq!(ext0.members().count(), 1);
    }

    #[test]
    fn contraction_of_zero_through_z4_to_z2() {
        let z4 = build_ring(&RingDescription::zmod(4)).unwrap();
        let two = Ideal::generated(&z4, &[2]);
        let (z2, proj) = quotient_ring(&z4, &two).unwrap();
        assert_eq!(z2.size(), 2);
        let zero = Ideal::generated(&z2, &[]);
        let c = contract_ideal(&proj, &zero).unwrap();
        assert_eq!(c.members().to_vec(), vec![0, 2]);
    }

    #[test]
    fn identity_contracts_to_itself() {
        let z12 = build_ring(&RingDescription::zmod(12)).unwrap();
        let id = RingMap::identity(&z12);
        let six = Ideal::generated(&z12, &[6]);
        assert_eq!(
            contract_ideal(&id, &six).unwrap().members(),
            six.members()
        );
    }

    #[test]
    fn projection_predicates() {
        let z4 = build_ring(&RingDescription::zmod(4)).unwrap();
        let two = Ideal::generated(&z4, &[2]);
        let (_z2, proj) = quotient_ring(&z4, &two).unwrap();
        let p = map_predicates(&proj);
        assert!(p.surjective);
        assert!(p.every_ideal_extended);
        assert!(!p.cyclically_pure); // (0)^{ec} = (2)
    }

    #[test]
    fn field_inclusion_predicates() {
        // F_2 -> F_2[x]/(x^2): (x) is not extended, but the map is
        // cyclically pure.
        let f2 = build_ring(&RingDescription::zmod(2)).unwrap();
        let dual = build_ring(&RingDescription::PolyQuotient {
            base: Box::new(RingDescription::zmod(2)),
            vars: vec!["x".into()],
            truncation: 2,
            relations: vec![],
        })
        .unwrap();
        let image = vec![dual.zero(), dual.one()];
        let incl = RingMap::new(f2.clone(), dual.clone(), image).unwrap();
        let p = map_predicates(&incl);
        assert!(!p.surjective);
        assert!(p.injective);
        assert!(!p.every_ideal_extended);
        assert!(p.cyclically_pure);
        let x = dual.element_by_name("x").unwrap();
        let ix = Ideal::generated(&dual, &[x]);
        let c = contract_ideal(&incl, &ix).unwrap();
        assert_eq!(c.members().count(), 1);
    }

    #[test]
    fn composition_chains_projections() {
        let z12 = build_ring(&RingDescription::zmod(12)).unwrap();
        let four = Ideal::generated(&z12, &[4]);
        let (z4, p1) = quotient_ring(&z12, &four).unwrap();
        let two = Ideal::generated(&z4, &[z4.parse_element("2").unwrap()]);
        let (_z2, p2) = quotient_ring(&z4, &two).unwrap();
        let comp = p2.compose(&p1).unwrap();
        assert!(comp.is_surjective());
        assert_eq!(comp.source().size(), 12);
        assert_eq!(comp.target().size(), 2);
    }
}
