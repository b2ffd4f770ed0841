//! Exhaustive ring isomorphism search. Test machinery for desk-scale
//! cross-checks (CRT instances, quotient recognitions); only offered below
//! 64 elements and deliberately not part of the decision kernel.

use crate::error::{Error, Result};
use crate::ring::FiniteRing;

const LIMIT: usize = 64;
const UNSET: u16 = u16::MAX;

/// Element invariants preserved by any isomorphism; used to prune.
fn signature(r: &FiniteRing, a: u16) -> (u32, bool, bool, u32) {
    let mut acc = a;
    let mut add_order = 1u32;
    while acc != r.zero() {
        acc = r.add(acc, a);
        add_order += 1;
    }
    let unit = r.is_unit(a);
    let idempotent = r.mul(a, a) == a;
    let mut pow = a;
    let mut nilp = 0u32;
    for k in 1..=r.size() as u32 {
        if pow == r.zero() {
            nilp = k - 1;
            break;
        }
        pow = r.mul(pow, a);
    }
    (add_order, unit, idempotent, nilp)
}

struct Search<'a> {
    a: &'a FiniteRing,
    b: &'a FiniteRing,
    sig_a: Vec<(u32, bool, bool, u32)>,
    sig_b: Vec<(u32, bool, bool, u32)>,
    map: Vec<u16>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn assign(&mut self, x: u16, y: u16, trail: &mut Vec<u16>) -> bool {
        if self.map[x as usize] != UNSET {
            return self.map[x as usize] == y;
        }
        if self.used[y as usize] || self.sig_a[x as usize] != self.sig_b[y as usize] {
            return false;
        }
        self.map[x as usize] = y;
        self.used[y as usize] = true;
        trail.push(x);
        true
    }

    fn propagate(&mut self, trail: &mut Vec<u16>) -> bool {
        let n = self.a.size() as u16;
        let mut i = 0;
        while i < trail.len() {
            let x = trail[i];
            i += 1;
            let fx = self.map[x as usize];
            for u in 0..n {
                let fu = self.map[u as usize];
                if fu == UNSET {
                    continue;
                }
                let s = self.a.add(x, u);
                if !self.assign(s, self.b.add(fx, fu), trail) {
                    return false;
                }
                let p = self.a.mul(x, u);
                if !self.assign(p, self.b.mul(fx, fu), trail) {
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, trail: &mut Vec<u16>) {
        while let Some(x) = trail.pop() {
            let y = self.map[x as usize];
            self.used[y as usize] = false;
            self.map[x as usize] = UNSET;
        }
    }

    fn run(&mut self) -> bool {
        let n = self.a.size() as u16;
        let Some(x) = (0..n).find(|&x| self.map[x as usize] == UNSET) else {
            return true;
        };
        for y in 0..n {
            let mut trail = Vec::new();
            if self.assign(x, y, &mut trail) && self.propagate(&mut trail) && self.run() {
                return true;
            }
            self.undo(&mut trail);
        }
        false
    }
}

/// Searches for a unital ring isomorphism; returns the image table if one
/// exists. Refuses rings of 64 elements or more.
pub fn exhaustive_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Result<Option<Vec<u16>>> {
    if a.size() >= LIMIT || b.size() >= LIMIT {
        return Err(Error::SizeBound {
            size: a.size().max(b.size()) as u128,
            bound: LIMIT - 1,
        });
    }
    if a.size() != b.size() {
        return Ok(None);
    }
    let sig_a: Vec<_> = a.elements().map(|x| signature(a, x)).collect();
    let sig_b: Vec<_> = b.elements().map(|x| signature(b, x)).collect();
    let mut sa = sig_a.clone();
    let mut sb = sig_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(None);
    }
    let mut search = Search {
        a,
        b,
        sig_a,
        sig_b,
        map: vec![UNSET; a.size()],
        used: vec![false; a.size()],
    };
    let mut trail = Vec::new();
    if !(search.assign(a.zero(), b.zero(), &mut trail)
        && search.assign(a.one(), b.one(), &mut trail)
        && search.propagate(&mut trail))
    {
        return Ok(None);
    }
    if !search.run() {
        return Ok(None);
    }
    let map = search.map;
    // final exhaustive verification
    for x in a.elements() {
        for y in a.elements() {
            if map[a.add(x, y) as usize] != b.add(map[x as usize], map[y as usize])
                || map[a.mul(x, y) as usize] != b.mul(map[x as usize], map[y as usize])
            {
                return Err(Error::EngineBug("search returned a non-homomorphism".into()));
            }
        }
    }
    Ok(Some(map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, RingDescription};

    #[test]
    fn z4_not_isomorphic_to_z2_x_z2() {
        let z4 = build_ring(&RingDescription::zmod(4)).unwrap();
        let klein = build_ring(&RingDescription::Product {
            factors: vec![RingDescription::zmod(2), RingDescription::zmod(2)],
        })
        .unwrap();
        assert!(exhaustive_isomorphism(&z4, &klein).unwrap().is_none());
    }

    #[test]
    fn different_sizes_are_not_isomorphic() {
        let z4 = build_ring(&RingDescription::zmod(4)).unwrap();
        let z6 = build_ring(&RingDescription::zmod(6)).unwrap();
        assert!(exhaustive_isomorphism(&z4, &z6).unwrap().is_none());
    }

    #[test]
    fn refuses_large_rings() {
        let big = build_ring(&RingDescription::zmod(64)).unwrap();
        assert!(exhaustive_isomorphism(&big, &big).is_err());
    }

    #[test]
    fn self_isomorphism_of_a_small_ring() {
        let r = build_ring(&RingDescription::zmod(9)).unwrap();
        let m = exhaustive_isomorphism(&r, &r).unwrap().unwrap();
        assert_eq!(m[0], 0);
        assert_eq!(m[1], 1);
    }
}
