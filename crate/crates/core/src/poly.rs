//! Tiny polynomial grammar used by descriptions and the CLI.
//!
//! A polynomial is a sum of terms joined by `+` or `-`. A term is a `*`-joined
//! list of factors, each an integer coefficient, a declared variable name, or
//! `var^exp`. Whitespace is ignored. Examples: `x`, `2*x^2*y + y^2`, `x*y - 1`.

/// One parsed term: integer coefficient and one exponent per declared variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: i64,
    pub exps: Vec<u32>,
}

pub fn parse_poly(src: &str, vars: &[String]) -> Result<Vec<Term>, String> {
    let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut terms = Vec::new();
    let mut rest = compact.as_str();
    let mut sign = 1i64;
    // leading sign
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    loop {
        let split = rest
            .char_indices()
            .find(|&(_, c)| c == '+' || c == '-')
            .map(|(i, c)| (i, c));
        let (chunk, next_sign, tail) = match split {
            Some((i, c)) => (&rest[..i], if c == '-' { -1 } else { 1 }, &rest[i + 1..]),
            None => (rest, 1, ""),
        };
        terms.push(parse_term(chunk, sign, vars)?);
        if tail.is_empty() && split.is_none() {
            break;
        }
        if tail.is_empty() {
            return Err(format!("dangling operator in {src:?}"));
        }
        sign = next_sign;
        rest = tail;
    }
    Ok(terms)
}

fn parse_term(chunk: &str, sign: i64, vars: &[String]) -> Result<Term, String> {
    if chunk.is_empty() {
        return Err("empty term".into());
    }
    let mut coeff = sign;
    let mut exps = vec![0u32; vars.len()];
    for factor in chunk.split('*') {
        if factor.is_empty() {
            return Err(format!("empty factor in {chunk:?}"));
        }
        if factor.chars().next().unwrap().is_ascii_digit() {
            let c: i64 = factor
                .parse()
                .map_err(|_| format!("bad integer {factor:?}"))?;
            coeff = coeff
                .checked_mul(c)
                .ok_or_else(|| format!("coefficient overflow in {chunk:?}"))?;
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e: u32 = e.parse().map_err(|_| format!("bad exponent {e:?}"))?;
                (n, e)
            }
            None => (factor, 1),
        };
        let vi = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| format!("undeclared variable {name:?}"))?;
        exps[vi] = exps[vi]
            .checked_add(exp)
            .ok_or_else(|| format!("exponent overflow in {chunk:?}"))?;
    }
    Ok(Term { coeff, exps })
}

/// Renders a monomial exponent vector in the same grammar, `1` for the empty
/// monomial.
pub fn monomial_string(exps: &[u32], vars: &[String]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .zip(vars)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, v)| {
            if e == 1 {
                v.clone()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn parses_sums_and_powers() {
        let p = parse_poly("2*x^2*y + y^2 - 1", &vars()).unwrap();
        assert_eq!(
            p,
            vec![
                Term { coeff: 2, exps: vec![2, 1] },
                Term { coeff: 1, exps: vec![0, 2] },
                Term { coeff: -1, exps: vec![0, 0] },
            ]
        );
    }

    #[test]
    fn leading_minus_and_spaces() {
        let p = parse_poly("- x*y", &vars()).unwrap();
        assert_eq!(p, vec![Term { coeff: -1, exps: vec![1, 1] }]);
    }

    #[test]
    fn rejects_unknown_variable() {
        assert!(parse_poly("z + x", &vars()).is_err());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("x +", &vars()).is_err());
        assert!(parse_poly("", &vars()).is_err());
        assert!(parse_poly("x^", &vars()).is_err());
    }

    #[test]
    fn monomial_rendering_round_trips() {
        assert_eq!(monomial_string(&[0, 0], &vars()), "1");
        assert_eq!(monomial_string(&[1, 2], &vars()), "x*y^2");
    }
}
