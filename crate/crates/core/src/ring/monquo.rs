//! Truncated monomial quotient algebras over a finite field.
//!
//! The ambient algebra is K[vars] modulo all monomials of weighted degree >=
//! truncation; the relation ideal inside it is the span of every relation
//! multiplied by every surviving monomial, computed by exact row reduction.
//! No term orders: the quotient basis is simply the non-pivot monomials.

use std::collections::HashMap;
use std::sync::Arc;

use crate::config;
use crate::error::{Error, Result};
use crate::gf::{self, Gf, Rref};
use crate::poly::Term;
use crate::ring::{FiniteRing, RingDescription};

pub(crate) struct MonomialQuotient {
    pub vars: Vec<String>,
    pub degrees: Vec<u32>,
    pub truncation: u32,
    /// All exponent vectors of weighted degree < truncation, ordered by
    /// (degree, lexicographic).
    pub monomials: Vec<Vec<u32>>,
    mon_index: HashMap<Vec<u32>, usize>,
    span: Rref,
    /// Surviving (non-pivot) monomial indices, ascending.
    pub basis: Vec<usize>,
    pub gf: Gf,
}

impl MonomialQuotient {
    pub fn build(
        field: Arc<FiniteRing>,
        vars: Vec<String>,
        degrees: Vec<u32>,
        truncation: u32,
        relations: &[Vec<Term>],
    ) -> Result<Self> {
        assert_eq!(vars.len(), degrees.len());
        if degrees.iter().any(|&d| d == 0) {
            return Err(Error::MalformedDescription(
                "variable degrees must be >= 1".into(),
            ));
        }
        let gf = Gf::new(field)?;
        let mut monomials = Vec::new();
        let mut cur = vec![0u32; vars.len()];
        enumerate_monomials(&degrees, truncation, 0, 0, &mut cur, &mut monomials);
        monomials.sort_by(|a, b| {
            let da: u32 = weighted_degree(a, &degrees);
            let db: u32 = weighted_degree(b, &degrees);
            da.cmp(&db).then_with(|| a.cmp(b))
        });
        let mon_index: HashMap<Vec<u32>, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();

        // ideal span: every relation times every monomial, truncated
        let nm = monomials.len();
        let mut rows = Vec::new();
        for rel in relations {
            for m in &monomials {
                let mut row = vec![gf.zero(); nm];
                let mut nonzero = false;
                for t in rel {
                    let mut e: Vec<u32> = t.exps.iter().zip(m).map(|(a, b)| a + b).collect();
                    if weighted_degree(&e, &degrees) >= truncation {
                        continue;
                    }
                    let slot = mon_index[&std::mem::take(&mut e)];
                    let c = gf.ring().element_from_int(t.coeff);
                    row[slot] = gf.add(row[slot], c);
                    nonzero = true;
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
        let span = gf::rref(&gf, rows);
        let pivot_set: std::collections::HashSet<usize> = span.pivots.iter().copied().collect();
        let basis: Vec<usize> = (0..nm).filter(|i| !pivot_set.contains(i)).collect();
        if basis.is_empty() || pivot_set.contains(&0) {
            // the unit monomial died: quotient is the zero ring
            return Err(Error::OneEqualsZero);
        }
        debug_assert_eq!(basis[0], 0, "the unit monomial is the first basis element");
        Ok(MonomialQuotient {
            vars,
            degrees,
            truncation,
            monomials,
            mon_index,
            span,
            basis,
            gf,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_degree(&self, slot: usize) -> u32 {
        weighted_degree(&self.monomials[self.basis[slot]], &self.degrees)
    }

    pub fn basis_name(&self, slot: usize) -> String {
        crate::poly::monomial_string(&self.monomials[self.basis[slot]], &self.vars)
    }

    /// Product of two basis monomials, as coordinates over the basis.
    pub fn struct_const(&self, i: usize, j: usize) -> Vec<u16> {
        let gf = &self.gf;
        let mut out = vec![gf.zero(); self.dim()];
        let e: Vec<u32> = self.monomials[self.basis[i]]
            .iter()
            .zip(&self.monomials[self.basis[j]])
            .map(|(a, b)| a + b)
            .collect();
        if weighted_degree(&e, &self.degrees) >= self.truncation {
            return out;
        }
        let slot = self.mon_index[&e];
        let mut row = vec![gf.zero(); self.monomials.len()];
        row[slot] = gf.one();
        gf::reduce_row(gf, &self.span, &mut row);
        for (bi, &mi) in self.basis.iter().enumerate() {
            out[bi] = row[mi];
        }
        out
    }

    fn q(&self) -> usize {
        self.gf.order()
    }

    pub fn ring_size(&self) -> u128 {
        (self.q() as u128).pow(self.dim() as u32)
    }

    pub fn decode(&self, mut idx: usize) -> Vec<u16> {
        let q = self.q();
        let mut v = vec![0u16; self.dim()];
        for c in v.iter_mut() {
            *c = (idx % q) as u16;
            idx /= q;
        }
        v
    }

    pub fn encode(&self, coeffs: &[u16]) -> usize {
        let q = self.q();
        let mut idx = 0usize;
        for &c in coeffs.iter().rev() {
            idx = idx * q + c as usize;
        }
        idx
    }

    pub fn element_name(&self, coeffs: &[u16]) -> String {
        let gf = &self.gf;
        let mut parts = Vec::new();
        for slot in (0..self.dim()).rev() {
            let c = coeffs[slot];
            if c == gf.zero() {
                continue;
            }
            let mon = self.basis_name(slot);
            let cname = gf.ring().name(c);
            let atomic = !cname.contains('+') && !cname.contains('*');
            let part = if mon == "1" {
                cname.to_string()
            } else if c == gf.one() {
                mon
            } else if atomic {
                format!("{cname}*{mon}")
            } else {
                format!("({cname})*{mon}")
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    /// Materializes the full operation tables.
    pub fn build_ring(&self, desc: RingDescription) -> Result<FiniteRing> {
        let bound = config::max_ring_size();
        let size128 = self.ring_size();
        if size128 > bound as u128 || size128 > u16::MAX as u128 {
            return Err(Error::SizeBound {
                size: size128,
                bound,
            });
        }
        let size = size128 as usize;
        let dim = self.dim();
        let gf = &self.gf;
        let vectors: Vec<Vec<u16>> = (0..size).map(|i| self.decode(i)).collect();
        let sc: Vec<Vec<u16>> = (0..dim * dim)
            .map(|k| self.struct_const(k / dim, k % dim))
            .collect();
        let add_rows = crate::par::map_range(size, |a| {
            let va = &vectors[a];
            let mut row = vec![0u16; size];
            for (b, vb) in vectors.iter().enumerate() {
                let sum: Vec<u16> = va.iter().zip(vb).map(|(&x, &y)| gf.add(x, y)).collect();
                row[b] = self.encode(&sum) as u16;
            }
            row
        });
        let mul_rows = crate::par::map_range(size, |a| {
            let va = &vectors[a];
            let mut row = vec![0u16; size];
            for (b, vb) in vectors.iter().enumerate() {
                let mut acc = vec![gf.zero(); dim];
                for (i, &x) in va.iter().enumerate() {
                    if x == gf.zero() {
                        continue;
                    }
                    for (j, &y) in vb.iter().enumerate() {
                        if y == gf.zero() {
                            continue;
                        }
                        gf.axpy(&mut acc, gf.mul(x, y), &sc[i * dim + j]);
                    }
                }
                row[b] = self.encode(&acc) as u16;
            }
            row
        });
        let add: Vec<u16> = add_rows.into_iter().flatten().collect();
        let mul: Vec<u16> = mul_rows.into_iter().flatten().collect();
        let names: Vec<String> = (0..size).map(|i| self.element_name(&vectors[i])).collect();
        FiniteRing::from_tables(add, mul, 0, 1, desc, names)
    }

    pub fn into_ring(self, desc: RingDescription) -> Result<FiniteRing> {
        self.build_ring(desc)
    }
}

fn weighted_degree(exps: &[u32], degrees: &[u32]) -> u32 {
    exps.iter().zip(degrees).map(|(e, d)| e * d).sum()
}

fn enumerate_monomials(
    degrees: &[u32],
    truncation: u32,
    var: usize,
    used: u32,
    cur: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if var == degrees.len() {
        out.push(cur.clone());
        return;
    }
    let mut e = 0u32;
    loop {
        let deg = used + e * degrees[var];
        if deg >= truncation {
            break;
        }
        cur[var] = e;
        enumerate_monomials(degrees, truncation, var + 1, deg, cur, out);
        e += 1;
    }
    cur[var] = 0;
}
