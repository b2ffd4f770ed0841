//! Exact ideal arithmetic in the ring of integers, through divisibility.
//!
//! An ideal is its canonical nonnegative generator (0 for the zero ideal).
//! Cover decisions are made two ways on purpose: a residue-exhaustion scan
//! that does not presuppose any avoidance fact, and the divisibility
//! shortcut; the suites assert the two agree.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_RESIDUE_CAP: u128 = 1 << 22;
/// Trial division is exact for generators whose square fits the scan.
const FACTOR_TRIAL_LIMIT: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZIdeal {
    gen: u64,
}

impl ZIdeal {
    pub fn new(gen: u64) -> ZIdeal {
        ZIdeal { gen }
    }
    pub fn zero() -> ZIdeal {
        ZIdeal { gen: 0 }
    }
    pub fn gen(&self) -> u64 {
        self.gen
    }
    pub fn is_zero(&self) -> bool {
        self.gen == 0
    }

    /// Membership: n | m, with 0 | m only for m = 0.
    pub fn contains(&self, m: u64) -> bool {
        if self.gen == 0 {
            m == 0
        } else {
            m % self.gen == 0
        }
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm_checked(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b)).checked_mul(b).ok_or(Error::Overflow)
}

/// Sum is the gcd of generators.
pub fn z_sum(a: ZIdeal, b: ZIdeal) -> ZIdeal {
    ZIdeal::new(gcd(a.gen, b.gen))
}

/// Product of generators.
pub fn z_product(a: ZIdeal, b: ZIdeal) -> Result<ZIdeal> {
    a.gen
        .checked_mul(b.gen)
        .map(ZIdeal::new)
        .ok_or(Error::Overflow)
}

/// Intersection is the lcm; lcm(0, n) = 0.
pub fn z_intersection(a: ZIdeal, b: ZIdeal) -> Result<ZIdeal> {
    lcm_checked(a.gen, b.gen).map(ZIdeal::new)
}

/// Radical is the squarefree part of the generator.
pub fn z_radical(a: ZIdeal) -> Result<ZIdeal> {
    if a.gen == 0 {
        return Ok(a);
    }
    let mut n = a.gen;
    let mut squarefree = 1u64;
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if d > FACTOR_TRIAL_LIMIT {
            return Err(Error::FactorBound(a.gen));
        }
        if n % d == 0 {
            squarefree *= d;
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        squarefree *= n;
    }
    Ok(ZIdeal::new(squarefree))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZOp {
    Sum,
    Product,
    Intersection,
    Radical,
}

pub fn z_combine(op: ZOp, a: ZIdeal, b: Option<ZIdeal>) -> Result<ZIdeal> {
    match op {
        ZOp::Sum => Ok(z_sum(a, b.ok_or_else(missing_operand)?)),
        ZOp::Product => z_product(a, b.ok_or_else(missing_operand)?),
        ZOp::Intersection => z_intersection(a, b.ok_or_else(missing_operand)?),
        ZOp::Radical => z_radical(a),
    }
}

fn missing_operand() -> Error {
    Error::MalformedDescription("this operation needs a second ideal".into())
}

/// Residue-exhaustion cover decision: nZ is inside the union of the n_k Z
/// iff every multiple of n in one period of lcm(n, n_1, ..) is divisible by
/// some n_k. Complete by periodicity; refuses scans past `cap` steps.
pub fn z_cover_decision(target: ZIdeal, family: &[ZIdeal], cap: u128) -> Result<bool> {
    Ok(z_cover_witness(target, family, cap)?.is_none())
}

/// As the decision, but reporting the first uncovered multiple.
pub fn z_cover_witness(target: ZIdeal, family: &[ZIdeal], cap: u128) -> Result<Option<u128>> {
    if family.is_empty() {
        return Err(Error::MalformedDescription(
            "the cover family must be nonempty".into(),
        ));
    }
    if target.gen == 0 || family.iter().any(|f| f.gen == 0) {
        return Err(Error::ZeroIdealUnsupported);
    }
    let n = target.gen as u128;
    let mut period = 1u128;
    for f in family {
        let g = gcd_u128(period, f.gen as u128);
        period = (period / g)
            .checked_mul(f.gen as u128)
            .ok_or(Error::Overflow)?;
    }
    // multiples of n repeat their residues mod the family period after
    // period / gcd(n, period) steps
    let steps = period / gcd_u128(n, period);
    if steps > cap {
        return Err(Error::ResidueBound { period: steps, cap });
    }
    for t in 1..=steps {
        let m = n * t;
        if !family.iter().any(|f| m % f.gen as u128 == 0) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_u128(b, a % b)
    }
}

/// Divisibility shortcut for the same decision; the independent route the
/// residue scan is checked against.
pub fn z_cover_shortcut(target: ZIdeal, family: &[ZIdeal]) -> bool {
    family.iter().any(|f| f.gen != 0 && target.gen % f.gen == 0)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ZMcCoy {
    pub per_member_exponent: u32,
    pub per_member_witness: usize,
}

/// The integers are an avoidance ring, so a true cover always yields a
/// containing member and exponent 1.
pub fn z_mccoy(target: ZIdeal, family: &[ZIdeal], cap: u128) -> Result<ZMcCoy> {
    if !z_cover_decision(target, family, cap)? {
        return Err(Error::NotACover);
    }
    match family
        .iter()
        .position(|f| f.gen != 0 && target.gen % f.gen == 0)
    {
        Some(k) => Ok(ZMcCoy {
            per_member_exponent: 1,
            per_member_witness: k,
        }),
        None => Err(Error::EngineBug(
            "true cover with no dividing member".into(),
        )),
    }
}
