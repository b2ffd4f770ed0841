//! Ring-level structure: local decomposition through stable powers of
//! maximal ideals, ring-class predicates, and truncated graded algebras
//! over finite fields.
//!
//! Localization at a maximal ideal of a finite ring is defined as the
//! quotient by the stable power m^∞ = fix(m ⊇ m² ⊇ …); for finite rings
//! this is canonically the localization, and it avoids fraction calculus.

use std::sync::Arc;

use serde::Serialize;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::gf::{self, Gf, Rref};
use crate::ideal::{Ideal, IdealLattice};
use crate::poly;
use crate::ring::monquo::MonomialQuotient;
use crate::ring::{
    build_ring, product_ring, quotient_ring, validate_var_names, FiniteRing, GradedVar,
    RingDescription, RingMap,
};

pub struct LocalFactor {
    pub factor: Arc<FiniteRing>,
    pub projection: RingMap,
    pub maximal: Ideal,
    pub stable_power: Ideal,
}

pub struct LocalDecomposition {
    pub ring: Arc<FiniteRing>,
    pub factors: Vec<LocalFactor>,
    /// Product of the factors (the single factor when the ring is local).
    pub assembled: Arc<FiniteRing>,
    /// The combined map ring -> assembled, verified bijective.
    pub iso: RingMap,
}

/// Maximal ideals straight from the subset poset.
fn maximal_ideals(lat: &IdealLattice) -> Vec<usize> {
    let ideals = lat.ideals();
    (0..ideals.len())
        .filter(|&i| {
            ideals[i].is_proper()
                && !ideals.iter().enumerate().any(|(j, other)| {
                    j != i
                        && other.is_proper()
                        && ideals[i].members().is_subset(other.members())
                        && other.members() != ideals[i].members()
                })
        })
        .collect()
}

pub fn local_decomposition(ring: &Arc<FiniteRing>) -> Result<LocalDecomposition> {
    let lat = IdealLattice::build(ring)?;
    let maximals = maximal_ideals(&lat);
    let mut factors = Vec::new();
    for &mi in &maximals {
        let maximal = lat.ideals()[mi].clone();
        let stable_power = maximal.stable_power();
        let (factor, projection) = quotient_ring(ring, &stable_power)?;
        factors.push(LocalFactor {
            factor,
            projection,
            maximal,
            stable_power,
        });
    }
    let (assembled, iso) = if factors.len() == 1 {
        let f = &factors[0];
        let image: Vec<u16> = ring.elements().map(|x| f.projection.apply(x)).collect();
        (
            f.factor.clone(),
            RingMap::new(ring.clone(), f.factor.clone(), image)?,
        )
    } else {
        let parts: Vec<Arc<FiniteRing>> = factors.iter().map(|f| f.factor.clone()).collect();
        let (product, _) = product_ring(&parts)?;
        let image: Vec<u16> = ring
            .elements()
            .map(|x| {
                let mut idx = 0usize;
                for f in &factors {
                    idx = idx * f.factor.size() + f.projection.apply(x) as usize;
                }
                idx as u16
            })
            .collect();
        (product.clone(), RingMap::new(ring.clone(), product, image)?)
    };
    if assembled.size() != ring.size() || !iso.is_injective() {
        return Err(Error::EngineBug(
            "combined map into the local factors is not bijective".into(),
        ));
    }
    Ok(LocalDecomposition {
        ring: ring.clone(),
        factors,
        assembled,
        iso,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RingPredicates {
    pub local: bool,
    pub pir: bool,
    pub bezout: bool,
    pub absolutely_flat: bool,
    pub chain_ring: bool,
}

pub fn ring_predicates(ring: &Arc<FiniteRing>) -> Result<RingPredicates> {
    let lat = IdealLattice::build(ring)?;
    let local = maximal_ideals(&lat).len() == 1;
    let principal: Vec<bool> = lat
        .ideals()
        .iter()
        .map(|i| {
            i.members().iter().any(|g| {
                let p = Ideal::generated(ring, &[g as u16]);
                p.members() == i.members()
            })
        })
        .collect();
    let pir = principal.iter().all(|&p| p);
    // Bezout: every two-generated ideal is principal. Finite rings make
    // this equal to pir; the suites assert the equality.
    let principal_sets: Vec<&Ideal> = {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for a in ring.elements() {
            let p = Ideal::generated(ring, &[a]);
            let idx = lat.index_of(&p).expect("principal ideal in the lattice");
            if seen.insert(idx) {
                out.push(&lat.ideals()[idx]);
            }
        }
        out
    };
    let mut bezout = true;
    'outer: for (i, a) in principal_sets.iter().enumerate() {
        for b in &principal_sets[i..] {
            let sum = a.sum(b).expect("same ring");
            let idx = lat.index_of(&sum).expect("sum in the lattice");
            if !principal[idx] {
                bezout = false;
                break 'outer;
            }
        }
    }
    let absolutely_flat = ring.elements().all(|a| {
        ring.elements()
            .any(|x| ring.mul(ring.mul(a, a), x) == a)
    });
    let ideals = lat.ideals();
    let chain_ring = (0..ideals.len()).all(|i| {
        (i + 1..ideals.len()).all(|j| {
            ideals[i].members().is_subset(ideals[j].members())
                || ideals[j].members().is_subset(ideals[i].members())
        })
    });
    Ok(RingPredicates {
        local,
        pir,
        bezout,
        absolutely_flat,
        chain_ring,
    })
}

/// Avoidance decided twice: by definition over the lattice, and by the local
/// criterion (every local factor Bezout). The residue fields of a finite
/// ring are always finite, so only the Bezout branch of the criterion can
/// fire; the flag records that.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LocalCriterion {
    pub via_definition: bool,
    pub via_local_criterion: bool,
    pub bezout_branch_only: bool,
}

pub fn local_criterion_check(ring: &Arc<FiniteRing>) -> Result<LocalCriterion> {
    let lat = IdealLattice::build(ring)?;
    let via_definition = crate::avoidance::is_avoidance_ring(&lat);
    let decomp = local_decomposition(ring)?;
    let mut via_local_criterion = true;
    for f in &decomp.factors {
        if !ring_predicates(&f.factor)?.bezout {
            via_local_criterion = false;
            break;
        }
    }
    Ok(LocalCriterion {
        via_definition,
        via_local_criterion,
        bezout_branch_only: true,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GradedBasisElement {
    pub name: String,
    pub degree: u32,
}

/// A finite-dimensional truncated N-graded algebra over a finite field,
/// with its underlying ring.
pub struct GradedAlgebra {
    ring: Arc<FiniteRing>,
    field: Arc<FiniteRing>,
    basis: Vec<GradedBasisElement>,
    truncation: u32,
    mq: MonomialQuotient,
}

impl std::fmt::Debug for GradedAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GradedAlgebra(dim {}, truncation {})",
            self.basis.len(),
            self.truncation
        )
    }
}

impl GradedAlgebra {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }
    pub fn field(&self) -> &Arc<FiniteRing> {
        &self.field
    }
    pub fn basis(&self) -> &[GradedBasisElement] {
        &self.basis
    }
    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// Product of two basis elements as coordinates over the basis.
    pub fn struct_const(&self, i: usize, j: usize) -> Vec<u16> {
        self.mq.struct_const(i, j)
    }

    /// Ring element with coefficient 1 on the given basis slot.
    pub fn basis_element(&self, slot: usize) -> u16 {
        let mut coeffs = vec![self.field.zero(); self.basis.len()];
        coeffs[slot] = self.field.one();
        self.mq.encode(&coeffs) as u16
    }

    /// Member set of the irrelevant ideal (zero constant coordinate).
    pub fn irrelevant_ideal(&self) -> Ideal {
        let mut members = BitSet::new(self.ring.size());
        for e in 0..self.ring.size() {
            if self.mq.decode(e)[0] == self.field.zero() {
                members.insert(e);
            }
        }
        Ideal::from_members(&self.ring, members)
    }
}

/// Builds a truncated graded algebra. Relations must be homogeneous of
/// weighted degree in [2, truncation) and free of linear monomials, which
/// realizes the presentation-kernel condition at finite scale.
pub fn build_graded(
    field_desc: &RingDescription,
    vars: &[GradedVar],
    truncation: u32,
    relation_sources: &[String],
) -> Result<GradedAlgebra> {
    let field = build_ring(field_desc)?;
    if !field.is_field() {
        return Err(Error::MalformedDescription(
            "graded base must be a finite field".into(),
        ));
    }
    if truncation < 1 {
        return Err(Error::MalformedDescription("truncation must be >= 1".into()));
    }
    let names: Vec<String> = vars.iter().map(|v| v.name.clone()).collect();
    let degrees: Vec<u32> = vars.iter().map(|v| v.degree).collect();
    validate_var_names(&names)?;
    if degrees.iter().any(|&d| d == 0) {
        return Err(Error::MalformedDescription(
            "variable degrees must be >= 1".into(),
        ));
    }
    let ch = field.characteristic() as i64;
    let mut relations = Vec::new();
    for src in relation_sources {
        let terms = poly::parse_poly(src, &names)
            .map_err(|e| Error::MalformedDescription(format!("{src:?}: {e}")))?;
        let live: Vec<&poly::Term> = terms
            .iter()
            .filter(|t| t.coeff.rem_euclid(ch) != 0)
            .collect();
        if live.is_empty() {
            continue; // the zero polynomial constrains nothing
        }
        let wdeg =
            |t: &poly::Term| -> u32 { t.exps.iter().zip(&degrees).map(|(e, d)| e * d).sum() };
        let d0 = wdeg(live[0]);
        if live.iter().any(|t| wdeg(t) != d0) || d0 < 2 || d0 >= truncation {
            return Err(Error::NonHomogeneousRelation(format!(
                "{src:?} must be homogeneous of degree in [2, {truncation})"
            )));
        }
        if live.iter().any(|t| t.exps.iter().sum::<u32>() < 2) {
            return Err(Error::LinearRelation(src.clone()));
        }
        relations.push(terms);
    }
    let mq = MonomialQuotient::build(
        field.clone(),
        names.clone(),
        degrees.clone(),
        truncation,
        &relations,
    )?;
    let desc = RingDescription::Graded {
        field: Box::new(field_desc.clone()),
        vars: vars.to_vec(),
        truncation,
        relations: relation_sources.to_vec(),
    };
    let basis: Vec<GradedBasisElement> = (0..mq.dim())
        .map(|s| GradedBasisElement {
            name: mq.basis_name(s),
            degree: mq.basis_degree(s),
        })
        .collect();
    debug_assert_eq!(
        basis.iter().filter(|b| b.degree == 0).count(),
        1,
        "exactly one degree-0 basis element"
    );
    let ring = Arc::new(mq.build_ring(desc)?);
    Ok(GradedAlgebra {
        ring,
        field,
        basis,
        truncation,
        mq,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MinimalGenerator {
    pub name: String,
    pub degree: u32,
    /// Index of the representative in the underlying ring.
    pub element: u16,
}

/// Homogeneous minimal generators of the irrelevant ideal, lifted from a
/// basis of m/m² by exact row reduction; lowest degree wins ties.
pub fn minimal_generators(g: &GradedAlgebra) -> Vec<MinimalGenerator> {
    let gf = Gf::new(g.field().clone()).expect("graded base is a field");
    let dim = g.basis().len();
    let positive: Vec<usize> = (0..dim).filter(|&s| g.basis()[s].degree >= 1).collect();
    let mut span = Rref::new();
    for &i in &positive {
        for &j in &positive {
            let row = g.struct_const(i, j);
            span.insert(&gf, row);
        }
    }
    let mut order = positive.clone();
    order.sort_by_key(|&s| (g.basis()[s].degree, s));
    let mut picked = Vec::new();
    for s in order {
        let mut row = vec![gf.zero(); dim];
        row[s] = gf.one();
        if span.insert(&gf, row) {
            picked.push(MinimalGenerator {
                name: g.basis()[s].name.clone(),
                degree: g.basis()[s].degree,
                element: g.basis_element(s),
            });
        }
    }
    picked.sort_by_key(|m| (m.degree, m.element));
    picked
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GradedClassification {
    pub avoidance: bool,
    pub pir: bool,
    pub is_truncated_univariate: bool,
}

pub fn graded_avoidance_classify(g: &GradedAlgebra) -> Result<GradedClassification> {
    let lat = IdealLattice::build(g.ring())?;
    let avoidance = crate::avoidance::is_avoidance_ring(&lat);
    let pir = ring_predicates(g.ring())?.pir;
    let is_truncated_univariate = minimal_generators(g).len() <= 1;
    Ok(GradedClassification {
        avoidance,
        pir,
        is_truncated_univariate,
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LinearAlgebraResult {
    pub rank: usize,
    pub row_basis: Vec<Vec<u16>>,
    pub kernel_basis: Vec<Vec<u16>>,
}

/// Exact Gauss elimination over a finite field given by its tables.
pub fn field_linear_algebra(
    field: &Arc<FiniteRing>,
    rows: &[Vec<u16>],
) -> Result<LinearAlgebraResult> {
    let gf = Gf::new(field.clone())?;
    let cols = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::MalformedDescription(
            "matrix rows have unequal lengths".into(),
        ));
    }
    let reduced = gf::rref(&gf, rows.to_vec());
    let kernel_basis = gf::kernel_basis(&gf, rows, cols);
    Ok(LinearAlgebraResult {
        rank: reduced.rank(),
        row_basis: reduced.rows,
        kernel_basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::iso::exhaustive_isomorphism;

    fn gv(name: &str, degree: u32) -> GradedVar {
        GradedVar {
            name: name.into(),
            degree,
        }
    }

    #[test]
    fn z12_decomposes_into_z4_and_z3() {
        let r = build_ring(&RingDescription::zmod(12)).unwrap();
        let d = local_decomposition(&r).unwrap();
        assert_eq!(d.factors.len(), 2);
        let mut sizes: Vec<usize> = d.factors.iter().map(|f| f.factor.size()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 4]);
        // stable powers: (2)^infinity = (4), (3)^infinity = (3)
        let mut stable_sizes: Vec<usize> =
            d.factors.iter().map(|f| f.stable_power.size()).collect();
        stable_sizes.sort_unstable();
        assert_eq!(stable_sizes, vec![3, 4]);
        // pairwise comaximal with zero intersection
        let a = &d.factors[0].stable_power;
        let b = &d.factors[1].stable_power;
        assert!(a.sum(b).unwrap().is_unit_ideal());
        assert!(a.intersection(b).unwrap().is_zero());
    }

    #[test]
    fn fields_are_their_own_decomposition() {
        let f = build_ring(&RingDescription::zmod(7)).unwrap();
        let d = local_decomposition(&f).unwrap();
        assert_eq!(d.factors.len(), 1);
        assert!(exhaustive_isomorphism(&d.assembled, &f).unwrap().is_some());
    }

    #[test]
    fn product_of_three_fields_splits() {
        let r = build_ring(&RingDescription::Product {
            factors: vec![
                RingDescription::zmod(2),
                RingDescription::zmod(2),
                RingDescription::zmod(2),
            ],
        })
        .unwrap();
        let d = local_decomposition(&r).unwrap();
        assert_eq!(d.factors.len(), 3);
        assert!(d.factors.iter().all(|f| f.factor.size() == 2));
    }

    #[test]
    fn predicates_of_z8() {
        let r = build_ring(&RingDescription::zmod(8)).unwrap();
        let p = ring_predicates(&r).unwrap();
        assert!(p.local && p.pir && p.bezout && p.chain_ring);
        assert!(!p.absolutely_flat);
    }

    #[test]
    fn predicates_of_the_golden_ring() {
        let r = build_ring(&RingDescription::PolyQuotient {
            base: Box::new(RingDescription::zmod(2)),
            vars: vec!["x".into(), "y".into()],
            truncation: 2,
            relations: vec![],
        })
        .unwrap();
        let p = ring_predicates(&r).unwrap();
        assert!(p.local);
        assert!(!p.pir && !p.bezout && !p.chain_ring && !p.absolutely_flat);
    }

    #[test]
    fn product_of_fields_is_absolutely_flat() {
        let r = build_ring(&RingDescription::Product {
            factors: vec![RingDescription::zmod(2), RingDescription::zmod(3)],
        })
        .unwrap();
        let p = ring_predicates(&r).unwrap();
        assert!(p.absolutely_flat && p.pir && p.bezout);
        assert!(!p.local);
    }

    #[test]
    fn local_criterion_agrees_on_goldens() {
        for (desc, expect) in [
            (RingDescription::zmod(12), true),
            (
                RingDescription::PolyQuotient {
                    base: Box::new(RingDescription::zmod(2)),
                    vars: vec!["x".into(), "y".into()],
                    truncation: 2,
                    relations: vec![],
                },
                false,
            ),
        ] {
            let r = build_ring(&desc).unwrap();
            let c = local_criterion_check(&r).unwrap();
            assert_eq!(c.via_definition, expect, "{}", desc.label());
            assert_eq!(c.via_definition, c.via_local_criterion);
        }
    }

    #[test]
    fn graded_square_zero_build() {
        let g = build_graded(
            &RingDescription::zmod(2),
            &[gv("x", 1), gv("y", 1)],
            2,
            &[],
        )
        .unwrap();
        let names: Vec<&str> = g.basis().iter().map(|b| b.name.as_str()).collect();
        assert_eq!(names, vec!["1", "x", "y"]);
        assert_eq!(g.ring().size(), 8);
    }

    #[test]
    fn graded_univariate_matches_poly_quotient() {
        let g = build_graded(&RingDescription::zmod(2), &[gv("x", 1)], 3, &[]).unwrap();
        let p = build_ring(&RingDescription::PolyQuotient {
            base: Box::new(RingDescription::zmod(2)),
            vars: vec!["x".into()],
            truncation: 3,
            relations: vec![],
        })
        .unwrap();
        assert!(exhaustive_isomorphism(g.ring(), &p).unwrap().is_some());
    }

    #[test]
    fn graded_relation_cuts_the_basis() {
        let g = build_graded(
            &RingDescription::zmod(3),
            &[gv("x", 1), gv("y", 1)],
            3,
            &["x*y".into()],
        )
        .unwrap();
        assert_eq!(g.basis().len(), 5);
    }

    #[test]
    fn graded_rejects_bad_relations() {
        let f2 = RingDescription::zmod(2);
        // mixed degrees
        let err =
            build_graded(&f2, &[gv("x", 1), gv("y", 1)], 3, &["x^2 + y".into()]).unwrap_err();
        assert!(matches!(err, Error::NonHomogeneousRelation(_)));
        // homogeneous of weighted degree 2 but with a linear monomial
        let err =
            build_graded(&f2, &[gv("x", 1), gv("y", 2)], 3, &["y + x^2".into()]).unwrap_err();
        assert!(matches!(err, Error::LinearRelation(_)));
        // degree out of range
        let err = build_graded(&f2, &[gv("x", 1)], 2, &["x^2".into()]).unwrap_err();
        assert!(matches!(err, Error::NonHomogeneousRelation(_)));
    }

    #[test]
    fn minimal_generators_examples() {
        let g = build_graded(
            &RingDescription::zmod(2),
            &[gv("x", 1), gv("y", 1)],
            2,
            &[],
        )
        .unwrap();
        let gens = minimal_generators(&g);
        let names: Vec<&str> = gens.iter().map(|m| m.name.as_str()).collect();
        assert_eq!(names, vec!["x", "y"]);

        let g = build_graded(&RingDescription::zmod(2), &[gv("x", 1)], 3, &[]).unwrap();
        let gens = minimal_generators(&g);
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].name, "x");

        let g = build_graded(&RingDescription::zmod(3), &[], 1, &[]).unwrap();
        assert!(minimal_generators(&g).is_empty());
    }

    #[test]
    fn minimal_generators_regenerate_and_are_minimal() {
        let g = build_graded(
            &RingDescription::zmod(3),
            &[gv("x", 1), gv("y", 1)],
            3,
            &["x*y".into()],
        )
        .unwrap();
        let m = g.irrelevant_ideal();
        let gens = minimal_generators(&g);
        let elems: Vec<u16> = gens.iter().map(|m| m.element).collect();
        assert_eq!(
            Ideal::generated(g.ring(), &elems).members(),
            m.members(),
            "generators regenerate the irrelevant ideal"
        );
        for skip in 0..elems.len() {
            let rest: Vec<u16> = elems
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, &e)| e)
                .collect();
            assert_ne!(
                Ideal::generated(g.ring(), &rest).members(),
                m.members(),
                "dropping a generator must fail"
            );
        }
        // exhaustive minimality: no subset of m of size count-1 generates
        let count = elems.len();
        if count >= 1 {
            let members: Vec<u16> = m.members().iter().map(|e| e as u16).collect();
            let mut found_smaller = false;
            let mut idxs = vec![0usize; count - 1];
            if count - 1 > 0 {
                'outer: loop {
                    let subset: Vec<u16> = idxs.iter().map(|&i| members[i]).collect();
                    if idxs.windows(2).all(|w| w[0] < w[1])
                        && Ideal::generated(g.ring(), &subset).members() == m.members()
                    {
                        found_smaller = true;
                        break 'outer;
                    }
                    // next index tuple
                    let mut k = count - 1;
                    loop {
                        if k == 0 {
                            break 'outer;
                        }
                        k -= 1;
                        if idxs[k] + 1 < members.len() {
                            idxs[k] += 1;
                            for j in k + 1..count - 1 {
                                idxs[j] = idxs[j - 1] + 1;
                            }
                            break;
                        }
                    }
                }
            }
            assert!(!found_smaller, "no smaller generating set exists");
        }
    }

    #[test]
    fn classify_golden_graded_algebras() {
        let chain = build_graded(&RingDescription::zmod(2), &[gv("x", 1)], 4, &[]).unwrap();
        let c = graded_avoidance_classify(&chain).unwrap();
        assert_eq!(
            c,
            GradedClassification {
                avoidance: true,
                pir: true,
                is_truncated_univariate: true
            }
        );
        let square = build_graded(
            &RingDescription::zmod(2),
            &[gv("x", 1), gv("y", 1)],
            2,
            &[],
        )
        .unwrap();
        let c = graded_avoidance_classify(&square).unwrap();
        assert_eq!(
            c,
            GradedClassification {
                avoidance: false,
                pir: false,
                is_truncated_univariate: false
            }
        );
        let square3 = build_graded(
            &RingDescription::zmod(3),
            &[gv("x", 1), gv("y", 1)],
            2,
            &[],
        )
        .unwrap();
        let c = graded_avoidance_classify(&square3).unwrap();
        assert!(!c.avoidance && !c.pir && !c.is_truncated_univariate);
    }

    #[test]
    fn linear_algebra_over_f2() {
        let f2 = build_ring(&RingDescription::zmod(2)).unwrap();
        let r = field_linear_algebra(&f2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(r.rank, 2);
        let r = field_linear_algebra(&f2, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(r.rank, 1);
        assert_eq!(r.kernel_basis, vec![vec![1, 1]]);
        let r = field_linear_algebra(&f2, &[vec![0, 0]]).unwrap();
        assert_eq!(r.rank, 0);
        assert!(matches!(
            field_linear_algebra(
                &build_ring(&RingDescription::zmod(4)).unwrap(),
                &[vec![1]]
            ),
            Err(Error::NotAField)
        ));
    }

    #[test]
    fn absolutely_flat_implies_radical_ideals_and_avoidance() {
        let r = build_ring(&RingDescription::Product {
            factors: vec![RingDescription::zmod(2), RingDescription::zmod(3)],
        })
        .unwrap();
        let p = ring_predicates(&r).unwrap();
        assert!(p.absolutely_flat);
        let lat = IdealLattice::build(&r).unwrap();
        for i in lat.ideals() {
            assert_eq!(i.radical().members(), i.members());
        }
        assert!(crate::avoidance::is_avoidance_ring(&lat));
    }

    #[test]
    fn chain_rings_are_avoidance_rings() {
        for desc in [
            RingDescription::zmod(8),
            RingDescription::zmod(27),
            RingDescription::PolyQuotient {
                base: Box::new(RingDescription::zmod(2)),
                vars: vec!["x".into()],
                truncation: 3,
                relations: vec![],
            },
        ] {
            let r = build_ring(&desc).unwrap();
            let p = ring_predicates(&r).unwrap();
            assert!(p.chain_ring, "{}", desc.label());
            let lat = IdealLattice::build(&r).unwrap();
            assert!(crate::avoidance::is_avoidance_ring(&lat));
        }
    }
}
