//! Finite commutative rings as explicit operation tables.
//!
//! A ring is its full addition and multiplication tables over element
//! indices, plus the description it was built from. The representation is
//! uniform across every constructor, and element ordering is canonical per
//! constructor so results are byte-reproducible across runs.

mod desc;
pub mod iso;
pub mod map;
pub(crate) mod monquo;

pub use desc::{GradedVar, RingDescription};
pub use map::{MapPredicates, RingMap};

use std::sync::Arc;

use crate::config;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::module::FiniteModule;
use crate::par;
use crate::poly;

pub struct FiniteRing {
    size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: u16,
    one: u16,
    desc: RingDescription,
    names: Vec<String>,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}
impl Eq for FiniteRing {}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteRing({}, {} elements)", self.desc.label(), self.size)
    }
}

impl FiniteRing {
    pub fn size(&self) -> usize {
        self.size
    }
    pub fn zero(&self) -> u16 {
        self.zero
    }
    pub fn one(&self) -> u16 {
        self.one
    }
    pub fn desc(&self) -> &RingDescription {
        &self.desc
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn name(&self, i: u16) -> &str {
        &self.names[i as usize]
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.size + b as usize]
    }
    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.size + b as usize]
    }
    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.size as u16
    }

    pub fn pow(&self, a: u16, d: u32) -> u16 {
        let mut acc = self.one;
        for _ in 0..d {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn is_unit(&self, a: u16) -> bool {
        self.elements().any(|b| self.mul(a, b) == self.one)
    }

    pub fn inverse(&self, a: u16) -> Option<u16> {
        self.elements().find(|&b| self.mul(a, b) == self.one)
    }

    /// Every nonzero element a unit.
    pub fn is_field(&self) -> bool {
        self.elements().all(|a| a == self.zero || self.is_unit(a))
    }

    /// Additive order of 1.
    pub fn characteristic(&self) -> usize {
        let mut acc = self.one;
        let mut k = 1usize;
        while acc != self.zero {
            acc = self.add(acc, self.one);
            k += 1;
        }
        k
    }

    /// The image of an integer under the unique map from Z.
    pub fn element_from_int(&self, v: i64) -> u16 {
        let ch = self.characteristic() as i64;
        let mut r = v.rem_euclid(ch) as u64;
        let mut acc = self.zero;
        while r > 0 {
            acc = self.add(acc, self.one);
            r -= 1;
        }
        acc
    }

    pub fn element_by_name(&self, name: &str) -> Option<u16> {
        self.names.iter().position(|n| n == name).map(|i| i as u16)
    }

    /// Resolves an element expression: `#index`, an exact element name, or a
    /// polynomial in the grammar whose variables are element names that look
    /// like identifiers.
    pub fn parse_element(&self, expr: &str) -> Result<u16> {
        let expr = expr.trim();
        if let Some(idx) = expr.strip_prefix('#') {
            let i: usize = idx
                .parse()
                .map_err(|_| Error::MalformedDescription(format!("bad index {expr:?}")))?;
            if i >= self.size {
                return Err(Error::MalformedDescription(format!(
                    "index {i} out of range for a ring of {} elements",
                    self.size
                )));
            }
            return Ok(i as u16);
        }
        if let Some(i) = self.element_by_name(expr) {
            return Ok(i);
        }
        let vars: Vec<String> = self
            .names
            .iter()
            .filter(|n| {
                n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                    && n.chars().all(|c| c.is_ascii_alphanumeric())
            })
            .cloned()
            .collect();
        let terms = poly::parse_poly(expr, &vars)
            .map_err(|e| Error::MalformedDescription(format!("{expr:?}: {e}")))?;
        let mut acc = self.zero;
        for t in terms {
            let mut m = self.element_from_int(t.coeff);
            for (vi, &e) in t.exps.iter().enumerate() {
                if e > 0 {
                    let v = self.element_by_name(&vars[vi]).unwrap();
                    m = self.mul(m, self.pow(v, e));
                }
            }
            acc = self.add(acc, m);
        }
        Ok(acc)
    }

    /// Assembles a ring from raw tables, verifying the commutative unital
    /// ring axioms. Rings up to `EXHAUSTIVE_AXIOM_LIMIT` elements get the
    /// full cubic sweep; larger ones a fixed deterministic triple sample.
    pub fn from_tables(
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: u16,
        one: u16,
        desc: RingDescription,
        names: Vec<String>,
    ) -> Result<Self> {
        let size = names.len();
        assert_eq!(add.len(), size * size, "addition table shape");
        assert_eq!(mul.len(), size * size, "multiplication table shape");
        if size == 0 || zero == one {
            return Err(Error::OneEqualsZero);
        }
        let at = |t: &[u16], a: usize, b: usize| t[a * size + b] as usize;
        for a in 0..size {
            for b in 0..size {
                if at(&add, a, b) != at(&add, b, a) {
                    return Err(Error::NonCommutative(a, b));
                }
                if at(&mul, a, b) != at(&mul, b, a) {
                    return Err(Error::NonCommutative(a, b));
                }
            }
        }
        for a in 0..size {
            if at(&add, a, zero as usize) != a {
                return Err(Error::EngineBug(format!("0 is not an additive identity at {a}")));
            }
            if at(&mul, a, one as usize) != a {
                return Err(Error::EngineBug(format!("1 is not a multiplicative identity at {a}")));
            }
        }
        let mut neg = vec![u16::MAX; size];
        for a in 0..size {
            match (0..size).find(|&b| at(&add, a, b) == zero as usize) {
                Some(b) => neg[a] = b as u16,
                None => {
                    return Err(Error::EngineBug(format!("no additive inverse for {a}")));
                }
            }
        }
        let check_triple = |a: usize, b: usize, c: usize| -> bool {
            at(&add, at(&add, a, b), c) == at(&add, a, at(&add, b, c))
                && at(&mul, at(&mul, a, b), c) == at(&mul, a, at(&mul, b, c))
                && at(&mul, a, at(&add, b, c)) == at(&add, at(&mul, a, b), at(&mul, a, c))
        };
        if size <= config::EXHAUSTIVE_AXIOM_LIMIT {
            let bad = par::find_map_range(size, |a| {
                for b in 0..size {
                    for c in 0..size {
                        if !check_triple(a, b, c) {
                            return Some((a, b, c));
                        }
                    }
                }
                None
            });
            if let Some((a, b, c)) = bad {
                return Err(Error::EngineBug(format!(
                    "associativity/distributivity fails at ({a},{b},{c})"
                )));
            }
        } else {
            // deterministic LCG sample of triples
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..1 << 18 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = (state >> 40) as usize % size;
                let b = (state >> 20) as usize % size;
                let c = state as usize % size;
                if !check_triple(a, b, c) {
                    return Err(Error::EngineBug(format!(
                        "associativity/distributivity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
        Ok(FiniteRing {
            size,
            add,
            mul,
            neg,
            zero,
            one,
            desc,
            names,
        })
    }

    /// Full cubic axiom sweep, for test suites that insist on it regardless
    /// of size.
    pub fn verify_axioms_exhaustive(&self) -> Result<()> {
        let n = self.size;
        let bad = par::find_map_range(n, |a| {
            let a = a as u16;
            for b in 0..n as u16 {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Some((a, b, 0));
                }
                for c in 0..n as u16 {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                        || self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                    {
                        return Some((a, b, c));
                    }
                }
            }
            None
        });
        match bad {
            None => Ok(()),
            Some((a, b, c)) => Err(Error::EngineBug(format!(
                "axiom failure at ({a},{b},{c})"
            ))),
        }
    }
}

fn size_guard(size: u128) -> Result<usize> {
    let bound = config::max_ring_size();
    if size == 0 || size > bound as u128 || size > u16::MAX as u128 {
        return Err(Error::SizeBound { size, bound });
    }
    Ok(size as usize)
}

/// Builds the ring described by `desc`. Element ordering is canonical:
/// lexicographic over the construction recursion.
pub fn build_ring(desc: &RingDescription) -> Result<Arc<FiniteRing>> {
    match desc {
        RingDescription::Zmod { n } => build_zmod(*n),
        RingDescription::GaloisField { p, k, modulus } => build_galois(*p, *k, modulus),
        RingDescription::Product { factors } => {
            if factors.len() < 2 {
                return Err(Error::MalformedDescription(
                    "a product needs at least two factors".into(),
                ));
            }
            let built: Vec<Arc<FiniteRing>> =
                factors.iter().map(build_ring).collect::<Result<_>>()?;
            let (ring, _) = product_ring(&built)?;
            Ok(ring)
        }
        RingDescription::PolyQuotient {
            base,
            vars,
            truncation,
            relations,
        } => build_poly_quotient(base, vars, *truncation, relations),
        RingDescription::Quotient {
            ring,
            ideal_generators,
        } => {
            let inner = build_ring(ring)?;
            let gens: Vec<u16> = ideal_generators
                .iter()
                .map(|g| inner.parse_element(g))
                .collect::<Result<_>>()?;
            let ideal = Ideal::generated(&inner, &gens);
            let (q, _) = quotient_ring(&inner, &ideal)?;
            Ok(q)
        }
        RingDescription::Idealization { ring, module } => {
            let inner = build_ring(ring)?;
            let m = crate::module::build_module(&inner, module)?;
            let (r, _) = idealization(&inner, &m)?;
            Ok(r)
        }
        RingDescription::Graded {
            field,
            vars,
            truncation,
            relations,
        } => {
            let g = crate::structure::build_graded(field, vars, *truncation, relations)?;
            Ok(g.ring().clone())
        }
    }
}

fn build_zmod(n: u64) -> Result<Arc<FiniteRing>> {
    if n < 2 {
        return Err(Error::MalformedDescription(format!(
            "Z/{n} is not allowed; n must be at least 2"
        )));
    }
    let size = size_guard(n as u128)?;
    let mut add = vec![0u16; size * size];
    let mut mul = vec![0u16; size * size];
    for a in 0..size {
        for b in 0..size {
            add[a * size + b] = ((a + b) % size) as u16;
            mul[a * size + b] = ((a * b) % size) as u16;
        }
    }
    let names = (0..size).map(|i| i.to_string()).collect();
    Ok(Arc::new(FiniteRing::from_tables(
        add,
        mul,
        0,
        1,
        RingDescription::Zmod { n },
        names,
    )?))
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn build_galois(p: u64, k: u32, modulus: &[u64]) -> Result<Arc<FiniteRing>> {
    if !is_prime(p) {
        return Err(Error::MalformedDescription(format!("{p} is not prime")));
    }
    if k < 1 {
        return Err(Error::MalformedDescription("degree must be >= 1".into()));
    }
    if modulus.len() != k as usize + 1 || modulus[k as usize] % p != 1 {
        return Err(Error::MalformedDescription(
            "modulus must be a monic coefficient list of length degree + 1".into(),
        ));
    }
    let modulus: Vec<u64> = modulus.iter().map(|c| c % p).collect();
    let size = size_guard((p as u128).pow(k))?;
    let kk = k as usize;

    // polynomial arithmetic over F_p with coefficient vectors of length k
    let decode = |i: usize| -> Vec<u64> {
        let mut v = vec![0u64; kk];
        let mut x = i as u64;
        for c in v.iter_mut() {
            *c = x % p;
            x /= p;
        }
        v
    };
    let encode = |v: &[u64]| -> usize {
        let mut x = 0u64;
        for &c in v.iter().rev() {
            x = x * p + c;
        }
        x as usize
    };
    let reduce = |mut v: Vec<u64>| -> Vec<u64> {
        // v has length up to 2k-1; eliminate degrees >= k using the monic modulus
        for d in (kk..v.len()).rev() {
            let c = v[d] % p;
            if c != 0 {
                v[d] = 0;
                for j in 0..kk {
                    let sub = (c * modulus[j]) % p;
                    v[d - kk + j] = (v[d - kk + j] + p - sub) % p;
                }
            }
        }
        v.truncate(kk);
        v
    };
    let polymul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        out
    };

    if kk >= 2 {
        // irreducibility: no monic factor of degree 1..=k/2
        for d in 1..=kk / 2 {
            let count = (p as usize).pow(d as u32);
            for t in 0..count {
                let mut f = vec![0u64; d + 1];
                let mut x = t as u64;
                for c in f.iter_mut().take(d) {
                    *c = x % p;
                    x /= p;
                }
                f[d] = 1;
                if poly_divides(&f, &modulus, p) {
                    return Err(Error::ReducibleModulus(p));
                }
            }
        }
    }

    let mut add = vec![0u16; size * size];
    let mut mul = vec![0u16; size * size];
    for a in 0..size {
        let va = decode(a);
        for b in 0..size {
            let vb = decode(b);
            let sum: Vec<u64> = va.iter().zip(&vb).map(|(x, y)| (x + y) % p).collect();
            add[a * size + b] = encode(&sum) as u16;
            mul[a * size + b] = encode(&reduce(polymul(&va, &vb))) as u16;
        }
    }
    let names: Vec<String> = (0..size).map(|i| gf_name(&decode(i))).collect();
    Ok(Arc::new(FiniteRing::from_tables(
        add,
        mul,
        0,
        1,
        RingDescription::GaloisField {
            p,
            k,
            modulus: modulus.clone(),
        },
        names,
    )?))
}

/// True if f divides g over F_p (both coefficient lists, f monic).
fn poly_divides(f: &[u64], g: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = g.to_vec();
    let df = f.len() - 1;
    while rem.len() > df {
        let lead = *rem.last().unwrap() % p;
        if lead != 0 {
            let shift = rem.len() - 1 - df;
            for j in 0..=df {
                let sub = (lead * f[j]) % p;
                rem[shift + j] = (rem[shift + j] + p - sub) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c % p == 0)
}

fn gf_name(coeffs: &[u64]) -> String {
    let mut parts = Vec::new();
    for (d, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let base = match d {
            0 => c.to_string(),
            1 if c == 1 => "a".into(),
            1 => format!("{c}*a"),
            _ if c == 1 => format!("a^{d}"),
            _ => format!("{c}*a^{d}"),
        };
        parts.push(base);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

fn build_poly_quotient(
    base: &RingDescription,
    vars: &[String],
    truncation: u32,
    relations: &[String],
) -> Result<Arc<FiniteRing>> {
    let field = build_ring(base)?;
    if !field.is_field() {
        return Err(Error::MalformedDescription(
            "poly_quotient base must be a finite field".into(),
        ));
    }
    if truncation < 1 {
        return Err(Error::MalformedDescription("truncation must be >= 1".into()));
    }
    validate_var_names(vars)?;
    let mut rels = Vec::new();
    for r in relations {
        let terms = poly::parse_poly(r, vars)
            .map_err(|e| Error::MalformedDescription(format!("{r:?}: {e}")))?;
        for t in &terms {
            let deg: u32 = t.exps.iter().sum();
            if deg >= truncation {
                return Err(Error::MalformedDescription(format!(
                    "relation {r:?} has a term of total degree {deg} >= truncation {truncation}"
                )));
            }
        }
        rels.push(terms);
    }
    let degrees = vec![1u32; vars.len()];
    let mq = monquo::MonomialQuotient::build(field, vars.to_vec(), degrees, truncation, &rels)?;
    let desc = RingDescription::PolyQuotient {
        base: Box::new(base.clone()),
        vars: vars.to_vec(),
        truncation,
        relations: relations.to_vec(),
    };
    Ok(Arc::new(mq.into_ring(desc)?))
}

pub(crate) fn validate_var_names(vars: &[String]) -> Result<()> {
    for (i, v) in vars.iter().enumerate() {
        let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && v.chars().all(|c| c.is_ascii_alphanumeric());
        if !ok {
            return Err(Error::MalformedDescription(format!(
                "variable name {v:?} must be an identifier"
            )));
        }
        if vars[..i].contains(v) {
            return Err(Error::MalformedDescription(format!(
                "duplicate variable name {v:?}"
            )));
        }
    }
    Ok(())
}

/// Componentwise product with the canonical surjective projections.
pub fn product_ring(factors: &[Arc<FiniteRing>]) -> Result<(Arc<FiniteRing>, Vec<RingMap>)> {
    if factors.len() < 2 {
        return Err(Error::MalformedDescription(
            "a product needs at least two factors".into(),
        ));
    }
    let size = size_guard(
        factors
            .iter()
            .map(|f| f.size() as u128)
            .product::<u128>(),
    )?;
    let sizes: Vec<usize> = factors.iter().map(|f| f.size()).collect();
    let decode = |mut i: usize| -> Vec<usize> {
        let mut v = vec![0usize; sizes.len()];
        for (slot, &s) in v.iter_mut().zip(&sizes).rev() {
            let _ = slot;
            let _ = s;
        }
        for k in (0..sizes.len()).rev() {
            v[k] = i % sizes[k];
            i /= sizes[k];
        }
        v
    };
    let encode = |v: &[usize]| -> usize {
        let mut i = 0usize;
        for (k, &c) in v.iter().enumerate() {
            i = i * sizes[k] + c;
        }
        i
    };
    let mut add = vec![0u16; size * size];
    let mut mul = vec![0u16; size * size];
    for a in 0..size {
        let va = decode(a);
        for b in 0..size {
            let vb = decode(b);
            let s: Vec<usize> = va
                .iter()
                .zip(&vb)
                .enumerate()
                .map(|(k, (&x, &y))| factors[k].add(x as u16, y as u16) as usize)
                .collect();
            let m: Vec<usize> = va
                .iter()
                .zip(&vb)
                .enumerate()
                .map(|(k, (&x, &y))| factors[k].mul(x as u16, y as u16) as usize)
                .collect();
            add[a * size + b] = encode(&s) as u16;
            mul[a * size + b] = encode(&m) as u16;
        }
    }
    let one = encode(
        &factors
            .iter()
            .map(|f| f.one() as usize)
            .collect::<Vec<_>>(),
    ) as u16;
    let zero = encode(
        &factors
            .iter()
            .map(|f| f.zero() as usize)
            .collect::<Vec<_>>(),
    ) as u16;
    let names: Vec<String> = (0..size)
        .map(|i| {
            let v = decode(i);
            let parts: Vec<&str> = v
                .iter()
                .enumerate()
                .map(|(k, &c)| factors[k].name(c as u16))
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let desc = RingDescription::Product {
        factors: factors.iter().map(|f| f.desc().clone()).collect(),
    };
    let ring = Arc::new(FiniteRing::from_tables(add, mul, zero, one, desc, names)?);
    let mut projections = Vec::new();
    for k in 0..factors.len() {
        let image: Vec<u16> = (0..size).map(|i| decode(i)[k] as u16).collect();
        projections.push(RingMap::new(ring.clone(), factors[k].clone(), image)?);
    }
    Ok((ring, projections))
}

/// Quotient by a proper ideal, with the canonical projection. Cosets are
/// ordered by their minimal representative.
pub fn quotient_ring(ring: &Arc<FiniteRing>, ideal: &Ideal) -> Result<(Arc<FiniteRing>, RingMap)> {
    if !Arc::ptr_eq(ideal.ring(), ring) && ideal.ring().as_ref() != ring.as_ref() {
        return Err(Error::RingMismatch);
    }
    if ideal.contains(ring.one()) {
        return Err(Error::ImproperIdeal);
    }
    let n = ring.size();
    // coset representative = minimal element of i + I
    let mut rep = vec![u16::MAX; n];
    for i in 0..n as u16 {
        let mut best = u16::MAX;
        for j in ideal.members().iter() {
            best = best.min(ring.add(i, j as u16));
        }
        rep[i as usize] = best;
    }
    let mut reps: Vec<u16> = (0..n as u16).filter(|&i| rep[i as usize] == i).collect();
    reps.sort_unstable();
    let index_of: std::collections::HashMap<u16, u16> = reps
        .iter()
        .enumerate()
        .map(|(k, &r)| (r, k as u16))
        .collect();
    let m = reps.len();
    let mut add = vec![0u16; m * m];
    let mut mul = vec![0u16; m * m];
    for (a, &ra) in reps.iter().enumerate() {
        for (b, &rb) in reps.iter().enumerate() {
            add[a * m + b] = index_of[&rep[ring.add(ra, rb) as usize]];
            mul[a * m + b] = index_of[&rep[ring.mul(ra, rb) as usize]];
        }
    }
    let zero = index_of[&rep[ring.zero() as usize]];
    let one = index_of[&rep[ring.one() as usize]];
    let names: Vec<String> = reps.iter().map(|&r| ring.name(r).to_string()).collect();
    let gens = ideal.generator_names();
    let desc = RingDescription::Quotient {
        ring: Box::new(ring.desc().clone()),
        ideal_generators: gens,
    };
    let quot = Arc::new(FiniteRing::from_tables(add, mul, zero, one, desc, names)?);
    let image: Vec<u16> = (0..n).map(|i| index_of[&rep[i]]).collect();
    let projection = RingMap::new(ring.clone(), quot.clone(), image)?;
    Ok((quot, projection))
}

/// Nagata idealization R x M with (r,m)(r',m') = (rr', rm' + r'm), together
/// with the inclusion r -> (r, 0).
pub fn idealization(
    ring: &Arc<FiniteRing>,
    module: &FiniteModule,
) -> Result<(Arc<FiniteRing>, RingMap)> {
    let n = ring.size();
    let mm = module.size();
    let size = size_guard(n as u128 * mm as u128)?;
    let idx = |r: u16, m: u16| -> usize { r as usize * mm + m as usize };
    let mut add = vec![0u16; size * size];
    let mut mul = vec![0u16; size * size];
    for r1 in 0..n as u16 {
        for m1 in 0..mm as u16 {
            let a = idx(r1, m1);
            for r2 in 0..n as u16 {
                for m2 in 0..mm as u16 {
                    let b = idx(r2, m2);
                    add[a * size + b] = idx(ring.add(r1, r2), module.add(m1, m2)) as u16;
                    let cross = module.add(module.act(r1, m2), module.act(r2, m1));
                    mul[a * size + b] = idx(ring.mul(r1, r2), cross) as u16;
                }
            }
        }
    }
    let names: Vec<String> = (0..size)
        .map(|i| {
            let r = (i / mm) as u16;
            let m = (i % mm) as u16;
            format!("({},{})", ring.name(r), module.name(m))
        })
        .collect();
    let desc = RingDescription::Idealization {
        ring: Box::new(ring.desc().clone()),
        module: module.desc().clone(),
    };
    let big = Arc::new(FiniteRing::from_tables(
        add,
        mul,
        idx(ring.zero(), module.zero()) as u16,
        idx(ring.one(), module.zero()) as u16,
        desc,
        names,
    )?);
    let image: Vec<u16> = (0..n as u16).map(|r| idx(r, module.zero()) as u16).collect();
    let inclusion = RingMap::new(ring.clone(), big.clone(), image)?;
    Ok((big, inclusion))
}
