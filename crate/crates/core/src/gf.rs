//! Arithmetic and exact linear algebra over a finite field presented as a
//! `FiniteRing`. Row reduction here backs the monomial quotient construction
//! and the graded machinery; everything is table-driven and exact.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::FiniteRing;

/// A field view over a ring: validates the field axiom once and caches
/// inverses.
pub struct Gf {
    ring: Arc<FiniteRing>,
    inv: Vec<u16>,
}

impl Gf {
    pub fn new(ring: Arc<FiniteRing>) -> Result<Self> {
        let mut inv = vec![0u16; ring.size()];
        for a in ring.elements() {
            if a == ring.zero() {
                continue;
            }
            match ring.inverse(a) {
                Some(b) => inv[a as usize] = b,
                None => return Err(Error::NotAField),
            }
        }
        Ok(Gf { ring, inv })
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }
    pub fn order(&self) -> usize {
        self.ring.size()
    }
    #[inline]
    pub fn zero(&self) -> u16 {
        self.ring.zero()
    }
    #[inline]
    pub fn one(&self) -> u16 {
        self.ring.one()
    }
    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.ring.add(a, b)
    }
    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.ring.sub(a, b)
    }
    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.ring.mul(a, b)
    }
    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.ring.neg(a)
    }
    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        debug_assert!(a != self.zero());
        self.inv[a as usize]
    }

    /// y += c * x, componentwise.
    pub fn axpy(&self, y: &mut [u16], c: u16, x: &[u16]) {
        if c == self.zero() {
            return;
        }
        for (yi, &xi) in y.iter_mut().zip(x) {
            *yi = self.add(*yi, self.mul(c, xi));
        }
    }
}

/// Result of Gaussian elimination: row-reduced rows with their pivot columns.
pub struct Rref {
    pub rows: Vec<Vec<u16>>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn new() -> Self {
        Rref {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the span and inserts it if independent; returns
    /// true when the rank grew. Rows stay normalized with pivot columns in
    /// ascending order.
    pub fn insert(&mut self, gf: &Gf, mut row: Vec<u16>) -> bool {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            let c = row[p];
            if c != gf.zero() {
                let ncoef = gf.neg(c);
                gf.axpy(&mut row, ncoef, r);
            }
        }
        if let Some(p) = row.iter().position(|&c| c != gf.zero()) {
            let scale = gf.inv(row[p]);
            for c in row.iter_mut() {
                *c = gf.mul(scale, *c);
            }
            for r in self.rows.iter_mut() {
                let c = r[p];
                if c != gf.zero() {
                    let ncoef = gf.neg(c);
                    let row_clone = row.clone();
                    gf.axpy(r, ncoef, &row_clone);
                }
            }
            let at = self.pivots.partition_point(|&q| q < p);
            self.pivots.insert(at, p);
            self.rows.insert(at, row);
            true
        } else {
            false
        }
    }
}

impl Default for Rref {
    fn default() -> Self {
        Self::new()
    }
}

/// Exact reduced row echelon form of the given rows.
pub fn rref(gf: &Gf, input: Vec<Vec<u16>>) -> Rref {
    let mut out = Rref::new();
    for row in input {
        out.insert(gf, row);
    }
    out
}

/// Reduces `row` modulo the span: afterwards every pivot coordinate is zero.
pub fn reduce_row(gf: &Gf, span: &Rref, row: &mut [u16]) {
    for (r, &p) in span.rows.iter().zip(&span.pivots) {
        let c = row[p];
        if c != gf.zero() {
            let ncoef = gf.neg(c);
            gf.axpy(row, ncoef, r);
        }
    }
}

/// True if `row` lies in the span.
pub fn in_span(gf: &Gf, span: &Rref, row: &[u16]) -> bool {
    let mut r = row.to_vec();
    reduce_row(gf, span, &mut r);
    r.iter().all(|&c| c == gf.zero())
}

/// Kernel basis of the matrix whose rows are `rows` acting on column vectors,
/// i.e. solutions of `rows * v = 0`, one basis vector per free column.
pub fn kernel_basis(gf: &Gf, rows: &[Vec<u16>], cols: usize) -> Vec<Vec<u16>> {
    let span = rref(gf, rows.to_vec());
    let mut basis = Vec::new();
    let pivot_set: std::collections::HashSet<usize> = span.pivots.iter().copied().collect();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![gf.zero(); cols];
        v[free] = gf.one();
        for (r, &p) in span.rows.iter().zip(&span.pivots) {
            v[p] = gf.neg(r[free]);
        }
        basis.push(v);
    }
    basis
}
