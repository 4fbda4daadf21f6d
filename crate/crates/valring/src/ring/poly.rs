//! Polynomial arithmetic over F_p, used for the residue-field digits of
//! truncated polynomial rings.
//!
//! Polynomials are coefficient vectors in ascending degree order with
//! coefficients reduced mod p. The zero polynomial is the empty vector.

/// Drop trailing zero coefficients.
pub fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub fn degree(v: &[u64]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + y) % p;
    }
    trim(&mut out);
    out
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + p - y) % p;
    }
    trim(&mut out);
    out
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo a monic polynomial `m`.
pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    assert!(m.len() >= 2, "modulus must have degree >= 1");
    assert_eq!(*m.last().unwrap(), 1, "modulus must be monic");
    let mut r = a.to_vec();
    trim(&mut r);
    let md = m.len() - 1;
    while r.len() > md {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - md;
        if lead != 0 {
            for (j, &mj) in m.iter().enumerate().take(md) {
                let idx = shift + j;
                r[idx] = (r[idx] + p - lead * mj % p) % p;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    // extended Euclid on integers
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "not invertible mod p");
    (t.rem_euclid(p as i128)) as u64
}

/// Inverse of `a` modulo the monic irreducible `m`, via extended Euclid in F_p[x].
/// Returns None for the zero polynomial.
pub fn inverse_mod(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
    let mut r_prev = m.to_vec();
    let mut r_cur = rem(a, m, p);
    if r_cur.is_empty() {
        return None;
    }
    let mut t_prev: Vec<u64> = Vec::new();
    let mut t_cur: Vec<u64> = vec![1];
    while !r_cur.is_empty() {
        // divide r_prev by r_cur
        let mut q = vec![0u64; r_prev.len().saturating_sub(r_cur.len()) + 1];
        let mut rr = r_prev.clone();
        let lead_inv = inv_mod_p(*r_cur.last().unwrap(), p);
        while rr.len() >= r_cur.len() && !rr.is_empty() {
            let coeff = *rr.last().unwrap() * lead_inv % p;
            let shift = rr.len() - r_cur.len();
            q[shift] = coeff;
            for (j, &cj) in r_cur.iter().enumerate() {
                let idx = shift + j;
                rr[idx] = (rr[idx] + p - coeff * cj % p) % p;
            }
            trim(&mut rr);
        }
        trim(&mut q);
        let t_next = sub(&t_prev, &mul(&q, &t_cur, p), p);
        r_prev = r_cur;
        r_cur = rr;
        t_prev = t_cur;
        t_cur = t_next;
    }
    // r_prev is the gcd; for irreducible m and a != 0 it is a nonzero constant
    let c = inv_mod_p(r_prev[0], p);
    let mut out = mul(&t_prev, &[c], p);
    out = rem(&out, m, p);
    Some(out)
}

/// Exhaustive divisor check: a monic polynomial of degree >= 1 is irreducible
/// iff no monic polynomial of degree in [1, deg/2] divides it.
pub fn is_irreducible(m: &[u64], p: u64) -> bool {
    let Some(d) = degree(m) else { return false };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    for dd in 1..=d / 2 {
        // all monic polynomials of degree dd
        let count = p.pow(dd as u32);
        for idx in 0..count {
            let mut div = decode_base_p(idx, dd, p);
            div.push(1);
            if rem(m, &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The lexicographically smallest monic irreducible of degree `m` over F_p,
/// ordering candidates by their base-p encoding of the low coefficients.
pub fn smallest_irreducible(p: u64, m: usize) -> Vec<u64> {
    let count = p.pow(m as u32);
    for idx in 0..count {
        let mut cand = decode_base_p(idx, m, p);
        cand.push(1);
        if is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

pub fn decode_base_p(mut idx: u64, len: usize, p: u64) -> Vec<u64> {
    let mut out = vec![0u64; len];
    for slot in out.iter_mut() {
        *slot = idx % p;
        idx /= p;
    }
    out
}

pub fn encode_base_p(coeffs: &[u64], len: usize, p: u64) -> u64 {
    let mut out = 0u64;
    for i in (0..len).rev() {
        out = out * p + coeffs.get(i).copied().unwrap_or(0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_and_rem_reduce() {
        // (x+1)(x+1) = x^2+2x+1 ≡ 2x over F_3 with modulus x^2+1
        let prod = mul(&[1, 1], &[1, 1], 3);
        assert_eq!(prod, vec![1, 2, 1]);
        let red = rem(&prod, &[1, 0, 1], 3);
        assert_eq!(red, vec![0, 2]);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = vec![1, 1, 1]; // x^2+x+1 over F_2
        for idx in 1..4u64 {
            let a = decode_base_p(idx, 2, 2);
            let inv = inverse_mod(&a, &m, 2).unwrap();
            let one = rem(&mul(&a, &inv, 2), &m, 2);
            assert_eq!(one, vec![1]);
        }
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&[1, 1, 1], 2)); // x^2+x+1
        assert!(!is_irreducible(&[1, 0, 1], 2)); // x^2+1 = (x+1)^2
        assert!(is_irreducible(&[1, 0, 1], 3)); // x^2+1 over F_3
        assert!(!is_irreducible(&[0, 0, 1], 5)); // x^2
        assert!(is_irreducible(&[1, 2, 0, 1], 3)); // x^3+2x+1 over F_3 has no root
    }

    #[test]
    fn smallest_irreducible_degree2() {
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]);
    }
}
