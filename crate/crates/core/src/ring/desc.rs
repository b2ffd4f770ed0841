use serde::{Deserialize, Serialize};

use crate::module::ModuleDescription;

/// Structured recipe for a finite commutative ring. Every built ring retains
/// its description, and structure is always recovered from the description,
/// never reverse-engineered from the tables.
///
/// The canonical JSON encoding tags each variant with a `kind` field, e.g.
/// `{"kind":"zmod","n":12}` or
/// `{"kind":"poly_quotient","base":{"kind":"zmod","n":2},"vars":["x","y"],
///   "truncation":2,"relations":[]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingDescription {
    /// The residue ring Z/n, n >= 2.
    Zmod { n: u64 },
    /// The field with p^k elements, presented as F_p[a]/(modulus). The
    /// modulus is a monic coefficient list c_0..c_k with c_k = 1.
    GaloisField { p: u64, k: u32, modulus: Vec<u64> },
    /// Componentwise product of two or more rings.
    Product { factors: Vec<RingDescription> },
    /// base[vars] modulo all monomials of total degree >= truncation and the
    /// listed relation polynomials (strings in the polynomial grammar, total
    /// degree < truncation). The base must be a finite field.
    PolyQuotient {
        base: Box<RingDescription>,
        vars: Vec<String>,
        truncation: u32,
        relations: Vec<String>,
    },
    /// Quotient by the ideal generated by the named elements.
    Quotient {
        ring: Box<RingDescription>,
        #[serde(rename = "idealGenerators")]
        ideal_generators: Vec<String>,
    },
    /// Nagata idealization: the ring on R x M with
    /// (r,m)(r',m') = (rr', rm' + r'm).
    Idealization {
        ring: Box<RingDescription>,
        module: ModuleDescription,
    },
    /// Truncated graded algebra over a finite field: variables carry
    /// positive degrees, relations are homogeneous of degree in [2,
    /// truncation), and everything of degree >= truncation vanishes.
    Graded {
        field: Box<RingDescription>,
        vars: Vec<GradedVar>,
        truncation: u32,
        relations: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedVar {
    pub name: String,
    pub degree: u32,
}

impl RingDescription {
    pub fn zmod(n: u64) -> Self {
        RingDescription::Zmod { n }
    }

    /// Short human-readable label used in reports.
    pub fn label(&self) -> String {
        match self {
            RingDescription::Zmod { n } => format!("Z/{n}"),
            RingDescription::GaloisField { p, k, .. } => format!("GF({p}^{k})"),
            RingDescription::Product { factors } => {
                let parts: Vec<String> = factors.iter().map(|f| f.label()).collect();
                parts.join(" x ")
            }
            RingDescription::PolyQuotient {
                base,
                vars,
                truncation,
                relations,
            } => {
                let rel = if relations.is_empty() {
                    String::new()
                } else {
                    format!("; {}", relations.join(", "))
                };
                format!(
                    "{}[{}]/(deg>={}{rel})",
                    base.label(),
                    vars.join(","),
                    truncation
                )
            }
            RingDescription::Quotient {
                ring,
                ideal_generators,
            } => format!("{} mod ({})", ring.label(), ideal_generators.join(",")),
            RingDescription::Idealization { ring, module } => {
                format!("{} |x {}", ring.label(), module.label())
            }
            RingDescription::Graded {
                field,
                vars,
                truncation,
                relations,
            } => {
                let vs: Vec<String> = vars
                    .iter()
                    .map(|v| format!("{}:{}", v.name, v.degree))
                    .collect();
                let rel = if relations.is_empty() {
                    String::new()
                } else {
                    format!("; {}", relations.join(", "))
                };
                format!(
                    "graded {}[{}]/(deg>={}{rel})",
                    field.label(),
                    vs.join(","),
                    truncation
                )
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_uses_kind_tags() {
        let d = RingDescription::PolyQuotient {
            base: Box::new(RingDescription::zmod(2)),
            vars: vec!["x".into(), "y".into()],
            truncation: 2,
            relations: vec![],
        };
        let s = serde_json::to_string(&d).unwrap();
        assert!(s.contains("\"kind\":\"poly_quotient\""));
        assert!(s.contains("\"kind\":\"zmod\""));
        let back: RingDescription = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn quotient_field_name_is_camel_case() {
        let d = RingDescription::Quotient {
            ring: Box::new(RingDescription::zmod(12)),
            ideal_generators: vec!["4".into()],
        };
        let s = serde_json::to_string(&d).unwrap();
        assert!(s.contains("\"idealGenerators\""));
    }
}
