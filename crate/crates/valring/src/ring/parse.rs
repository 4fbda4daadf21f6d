//! Ring spec strings: `Z/p^r` and `GF(q)[t]/t^r`, with an optional explicit
//! residue field modulus as in `GF(4:x^2+x+1)[t]/t^2`. `parse` and
//! `format_spec` round-trip.

use super::{poly, RingFamily, RingSpec};
use crate::error::{Error, Result};

fn parse_u64(s: &str, what: &str) -> Result<u64> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| Error::Parse(format!("bad {what}: {s:?}")))
}

/// `p^r` or bare `p` (r = 1).
fn parse_power(s: &str) -> Result<(u64, u32)> {
    match s.split_once('^') {
        Some((base, exp)) => {
            Ok((parse_u64(base, "base")?, parse_u64(exp, "exponent")? as u32))
        }
        None => Ok((parse_u64(s, "base")?, 1)),
    }
}

/// Modulus polynomial in `x`, descending powers, e.g. `x^2+x+1` or `x^3+2x+1`.
/// Returns ascending coefficients.
fn parse_modulus(s: &str, p: u64) -> Result<Vec<u64>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty modulus".into()));
    }
    let mut coeffs: Vec<u64> = Vec::new();
    for term in s.split('+') {
        let term = term.trim();
        let (coeff_str, deg) = match term.find('x') {
            None => (term, 0usize),
            Some(pos) => {
                let after = &term[pos + 1..];
                let deg = if let Some(exp) = after.strip_prefix('^') {
                    parse_u64(exp, "modulus exponent")? as usize
                } else if after.is_empty() {
                    1
                } else {
                    return Err(Error::Parse(format!("bad modulus term: {term:?}")));
                };
                (&term[..pos], deg)
            }
        };
        let coeff = if coeff_str.is_empty() {
            1
        } else {
            parse_u64(coeff_str, "modulus coefficient")?
        };
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, 0);
        }
        coeffs[deg] = (coeffs[deg] + coeff) % p;
    }
    Ok(coeffs)
}

fn format_modulus(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        terms.push(match (i, c) {
            (0, _) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, _) => format!("{c}x"),
            (_, 1) => format!("x^{i}"),
            (_, _) => format!("{c}x^{i}"),
        });
    }
    terms.join("+")
}

fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut n = q;
            let mut m = 0;
            while n % p == 0 {
                n /= p;
                m += 1;
            }
            return (n == 1).then_some((p, m));
        }
        p += 1;
    }
    Some((q, 1))
}

impl RingSpec {
    /// Parse a ring spec string with the default order cap.
    pub fn parse(s: &str) -> Result<Self> {
        Self::parse_capped(s, super::DEFAULT_ORDER_CAP)
    }

    pub fn parse_capped(s: &str, cap: u64) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("Z/") {
            let (p, r) = parse_power(rest)?;
            return Self::z_power_r_capped(p, r, cap);
        }
        if let Some(rest) = s.strip_prefix("GF(") {
            let (field, tail) = rest
                .split_once(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parens in {s:?}")))?;
            let tail = tail.trim();
            let t_exp = tail
                .strip_prefix("[t]/t")
                .ok_or_else(|| Error::Parse(format!("expected [t]/t^r in {s:?}")))?;
            let r = if t_exp.is_empty() {
                1
            } else {
                let exp = t_exp
                    .strip_prefix('^')
                    .ok_or_else(|| Error::Parse(format!("bad t power in {s:?}")))?;
                parse_u64(exp, "t exponent")? as u32
            };
            let (q_str, modulus_str) = match field.split_once(':') {
                Some((q, m)) => (q, Some(m)),
                None => (field, None),
            };
            let q = parse_u64(q_str, "field size")?;
            let (p, m) = factor_prime_power(q)
                .ok_or_else(|| Error::Parse(format!("{q} is not a prime power")))?;
            let modulus = match modulus_str {
                Some(ms) => {
                    let coeffs = parse_modulus(ms, p)?;
                    if poly::degree(&coeffs) != Some(m as usize) {
                        return Err(Error::Parse(format!(
                            "modulus degree does not match field size {q}"
                        )));
                    }
                    coeffs
                }
                None if m == 1 => Vec::new(),
                // smallest irreducible by ascending index keeps the choice
                // deterministic when the string omits it
                None => poly::smallest_irreducible(p, m as usize),
            };
            return Self::truncated_poly_capped(p, &modulus, r, cap);
        }
        Err(Error::Parse(format!("unrecognized ring spec {s:?}")))
    }

    /// Canonical string form; `parse(format_spec(r)) == r`.
    pub fn format_spec(&self) -> String {
        match self.family {
            RingFamily::ZPowerR => {
                if self.r == 1 {
                    format!("Z/{}", self.p)
                } else {
                    format!("Z/{}^{}", self.p, self.r)
                }
            }
            RingFamily::TruncatedPoly => {
                let field = if self.m == 1 {
                    format!("{}", self.q)
                } else {
                    format!("{}:{}", self.q, format_modulus(&self.modulus))
                };
                if self.r == 1 {
                    format!("GF({field})[t]/t")
                } else {
                    format!("GF({field})[t]/t^{}", self.r)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_families() {
        let z8 = RingSpec::parse("Z/2^3").unwrap();
        assert_eq!((z8.p(), z8.r(), z8.order()), (2, 3, 8));
        let f9 = RingSpec::parse("GF(3)[t]/t^2").unwrap();
        assert_eq!((f9.q(), f9.r(), f9.order()), (3, 2, 9));
        let z5 = RingSpec::parse("Z/5").unwrap();
        assert_eq!((z5.p(), z5.r()), (5, 1));
    }

    #[test]
    fn explicit_modulus() {
        let g = RingSpec::parse("GF(4:x^2+x+1)[t]/t^2").unwrap();
        assert_eq!((g.p(), g.m(), g.q(), g.order()), (2, 2, 4, 16));
        assert!(RingSpec::parse("GF(4:x^2+1)[t]/t^2").is_err()); // reducible
        assert!(RingSpec::parse("GF(4:x^3+x+1)[t]/t^2").is_err()); // wrong degree
    }

    #[test]
    fn omitted_modulus_picks_smallest_irreducible() {
        let auto = RingSpec::parse("GF(4)[t]/t^2").unwrap();
        let explicit = RingSpec::parse("GF(4:x^2+x+1)[t]/t^2").unwrap();
        assert_eq!(auto, explicit);
        let g9 = RingSpec::parse("GF(9)[t]/t").unwrap();
        assert_eq!((g9.p(), g9.m(), g9.order()), (3, 2, 9));
    }

    #[test]
    fn round_trips() {
        for s in [
            "Z/2^2",
            "Z/2^3",
            "Z/3^2",
            "Z/7",
            "GF(2)[t]/t^2",
            "GF(3)[t]/t^2",
            "GF(5)[t]/t^3",
            "GF(4:x^2+x+1)[t]/t^2",
            "GF(9:x^2+1)[t]/t^2",
            "GF(8:x^3+x+1)[t]/t",
        ] {
            let ring = RingSpec::parse(s).unwrap();
            let printed = ring.format_spec();
            let reparsed = RingSpec::parse(&printed).unwrap();
            assert_eq!(ring, reparsed, "round-trip failed for {s}");
        }
        assert_eq!(RingSpec::parse("Z/3^2").unwrap().format_spec(), "Z/3^2");
        assert_eq!(RingSpec::parse("Z/5^1").unwrap().format_spec(), "Z/5");
        assert_eq!(
            RingSpec::parse("GF(4)[t]/t^2").unwrap().format_spec(),
            "GF(4:x^2+x+1)[t]/t^2"
        );
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "Z/6", "Z/2^", "GF(6)[t]/t^2", "GF(3)[t]", "Q/2^2", "Z/4^2"] {
            assert!(RingSpec::parse(s).is_err(), "accepted {s:?}");
        }
    }
}
