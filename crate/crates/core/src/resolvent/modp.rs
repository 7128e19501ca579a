//! Univariate polynomials over word-sized prime fields.
//!
//! Coefficient vectors are stored lowest degree first and kept trimmed, so
//! the zero polynomial is the empty vector.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactnum::Rational;

pub type PolyP = Vec<u64>;

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "zero has no inverse");
    pow_mod(a, p - 2, p)
}

pub fn trim(f: &mut PolyP) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

pub fn degree(f: &PolyP) -> Option<usize> {
    f.len().checked_sub(1)
}

/// Reduces rational coefficients; `None` if `p` divides a denominator.
pub fn from_rationals(coeffs: &[Rational], p: u64) -> Option<PolyP> {
    let mut out: PolyP = coeffs.iter().map(|c| c.mod_u64(p)).collect::<Option<_>>()?;
    trim(&mut out);
    Some(out)
}

pub fn add(f: &PolyP, g: &PolyP, p: u64) -> PolyP {
    let n = f.len().max(g.len());
    let mut out: PolyP = (0..n)
        .map(|i| add_mod(*f.get(i).unwrap_or(&0), *g.get(i).unwrap_or(&0), p))
        .collect();
    trim(&mut out);
    out
}

pub fn sub(f: &PolyP, g: &PolyP, p: u64) -> PolyP {
    let n = f.len().max(g.len());
    let mut out: PolyP = (0..n)
        .map(|i| sub_mod(*f.get(i).unwrap_or(&0), *g.get(i).unwrap_or(&0), p))
        .collect();
    trim(&mut out);
    out
}

pub fn mul(f: &PolyP, g: &PolyP, p: u64) -> PolyP {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(a, b, p), p);
        }
    }
    trim(&mut out);
    out
}

pub fn div_rem(f: &PolyP, g: &PolyP, p: u64) -> (PolyP, PolyP) {
    let dg = degree(g).expect("division by zero polynomial");
    let mut r = f.clone();
    if r.len() <= dg {
        return (Vec::new(), r);
    }
    let inv = inv_mod(g[dg], p);
    let mut q = vec![0u64; r.len() - dg];
    for i in (dg..r.len()).rev() {
        let c = mul_mod(r[i], inv, p);
        if c == 0 {
            continue;
        }
        q[i - dg] = c;
        for (j, &b) in g.iter().enumerate() {
            let k = i - dg + j;
            r[k] = sub_mod(r[k], mul_mod(c, b, p), p);
        }
    }
    r.truncate(dg);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

pub fn rem(f: &PolyP, g: &PolyP, p: u64) -> PolyP {
    div_rem(f, g, p).1
}

pub fn monic(f: &PolyP, p: u64) -> PolyP {
    match f.last() {
        None => Vec::new(),
        Some(&lc) => {
            let inv = inv_mod(lc, p);
            f.iter().map(|&c| mul_mod(c, inv, p)).collect()
        }
    }
}

pub fn gcd(f: &PolyP, g: &PolyP, p: u64) -> PolyP {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

pub fn derivative(f: &PolyP, p: u64) -> PolyP {
    let mut out: PolyP = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
        .collect();
    trim(&mut out);
    out
}

/// `base^e mod modulus`.
pub fn pow_rem(base: &PolyP, mut e: u128, modulus: &PolyP, p: u64) -> PolyP {
    let mut result: PolyP = rem(&vec![1], modulus, p);
    let mut b = rem(base, modulus, p);
    while e > 0 {
        if e & 1 == 1 {
            result = rem(&mul(&result, &b, p), modulus, p);
        }
        e >>= 1;
        if e > 0 {
            b = rem(&mul(&b, &b, p), modulus, p);
        }
    }
    result
}

pub fn eval(f: &PolyP, x: u64, p: u64) -> u64 {
    f.iter()
        .rev()
        .fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
}

pub fn is_squarefree(f: &PolyP, p: u64) -> bool {
    let d = derivative(f, p);
    if d.is_empty() {
        return degree(f) == Some(0);
    }
    degree(&gcd(f, &d, p)) == Some(0)
}

/// Distinct-degree factorization of a squarefree polynomial: pairs (d, g)
/// with g the product of all monic irreducible factors of degree d.
pub fn distinct_degree(f: &PolyP, p: u64) -> Vec<(usize, PolyP)> {
    let mut f = monic(f, p);
    let mut out = Vec::new();
    let x: PolyP = vec![0, 1];
    let mut h = x.clone();
    let mut d = 0usize;
    while let Some(df) = degree(&f) {
        if df == 0 {
            break;
        }
        d += 1;
        if 2 * d > df {
            out.push((df, f));
            break;
        }
        h = pow_rem(&h, p as u128, &f, p);
        let g = gcd(&f, &sub(&h, &x, p), p);
        if degree(&g).unwrap_or(0) > 0 {
            f = div_rem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((d, g));
        }
    }
    out
}

/// Degrees of the irreducible factors of a squarefree polynomial, ascending,
/// via distinct-degree factorization.
pub fn factor_degrees(f: &PolyP, p: u64) -> Vec<usize> {
    let mut out: Vec<usize> = distinct_degree(f, p)
        .into_iter()
        .flat_map(|(d, g)| std::iter::repeat(d).take(degree(&g).unwrap_or(0) / d))
        .collect();
    out.sort_unstable();
    out
}

/// Splits a product of monic irreducibles of degree d into its factors
/// (Cantor-Zassenhaus, odd p).
pub fn equal_degree(g: &PolyP, d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<PolyP> {
    let n = degree(g).unwrap_or(0);
    if n <= d {
        return vec![monic(g, p)];
    }
    loop {
        let a: PolyP = {
            let mut v: PolyP = (0..n).map(|_| rng.gen_range(0..p)).collect();
            trim(&mut v);
            v
        };
        if degree(&a).unwrap_or(0) == 0 {
            continue;
        }
        // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
        let mut norm = rem(&a, g, p);
        let mut frob = norm.clone();
        for _ in 1..d {
            frob = pow_rem(&frob, p as u128, g, p);
            norm = rem(&mul(&norm, &frob, p), g, p);
        }
        let t = pow_rem(&norm, ((p - 1) / 2) as u128, g, p);
        let h = gcd(g, &sub(&t, &vec![1], p), p);
        let dh = degree(&h).unwrap_or(0);
        if dh > 0 && dh < n {
            let rest = div_rem(g, &h, p).0;
            let mut out = equal_degree(&h, d, p, rng);
            out.extend(equal_degree(&rest, d, p, rng));
            return out;
        }
    }
}

/// Monic irreducible factors of a squarefree polynomial over F_p, p odd.
pub fn factor(f: &PolyP, p: u64) -> Vec<PolyP> {
    let mut rng = ChaCha8Rng::seed_from_u64(p ^ 0x9e37_79b9);
    distinct_degree(f, p)
        .into_iter()
        .flat_map(|(d, g)| equal_degree(&g, d, p, &mut rng))
        .collect()
}

/// (s, t) with s*f + t*g = 1, for coprime f and g.
pub fn bezout(f: &PolyP, g: &PolyP, p: u64) -> Option<(PolyP, PolyP)> {
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut s0, mut s1): (PolyP, PolyP) = (vec![1], Vec::new());
    let (mut t0, mut t1): (PolyP, PolyP) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if degree(&r0) != Some(0) {
        return None;
    }
    let inv = inv_mod(r0[0], p);
    let scale = |v: &PolyP| {
        let mut out: PolyP = v.iter().map(|&c| mul_mod(c, inv, p)).collect();
        trim(&mut out);
        out
    };
    Some((scale(&s0), scale(&t0)))
}

/// All distinct roots in F_p, ascending.
pub fn roots(f: &PolyP, p: u64) -> Vec<u64> {
    if f.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    if p < 64 {
        out = (0..p).filter(|&x| eval(f, x, p) == 0).collect();
        return out;
    }
    let x: PolyP = vec![0, 1];
    let xp = pow_rem(&x, p as u128, f, p);
    let lin = gcd(f, &sub(&xp, &x, p), p);
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    split_linear(&lin, p, &mut rng, &mut out);
    out.sort_unstable();
    out
}

fn split_linear(g: &PolyP, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    match degree(g) {
        None | Some(0) => {}
        Some(1) => out.push(sub_mod(0, mul_mod(g[0], inv_mod(g[1], p), p), p)),
        Some(dg) => loop {
            let a = rng.gen_range(0..p);
            let t = pow_rem(&vec![a, 1], ((p - 1) / 2) as u128, g, p);
            let h = gcd(g, &sub(&t, &vec![1], p), p);
            let dh = degree(&h).unwrap_or(0);
            if dh > 0 && dh < dg {
                let rest = div_rem(g, &h, p).0;
                split_linear(&h, p, rng, out);
                split_linear(&rest, p, rng, out);
                return;
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        assert_eq!(mul_mod(u64::MAX - 1, u64::MAX - 1, u64::MAX), 1);
        assert_eq!(mul_mod(inv_mod(3, 101), 3, 101), 1);
        assert_eq!(pow_mod(2, 100, 1_000_000_007), 976_371_285);
    }

    #[test]
    fn degrees_of_factors() {
        // (x^2+1)(x-1)(x-2) over F_7; x^2+1 is irreducible since 7 = 3 mod 4
        let f = mul(&mul(&vec![1, 0, 1], &vec![6, 1], 7), &vec![5, 1], 7);
        assert_eq!(factor_degrees(&f, 7), vec![1, 1, 2]);
        assert_eq!(roots(&f, 7), vec![1, 2]);
    }

    #[test]
    fn roots_large_prime() {
        let p = 1_000_003;
        let f = mul(&mul(&vec![p - 5, 1], &vec![p - 77, 1], p), &vec![3, 0, 1], p);
        let mut r = roots(&f, p);
        r.sort();
        let mut expect: Vec<u64> = vec![5, 77];
        // x^2 = -3 has roots mod p iff -3 is a QR
        if pow_mod(p - 3, (p - 1) / 2, p) == 1 {
            for x in 0..p {
                if mul_mod(x, x, p) == p - 3 {
                    expect.push(x);
                }
            }
        }
        expect.sort();
        assert_eq!(r, expect);
    }

    #[test]
    fn gcd_and_squarefree() {
        let f = mul(&vec![1, 1], &vec![1, 1], 11);
        assert!(!is_squarefree(&f, 11));
        assert!(is_squarefree(&vec![1, 0, 1], 11));
        assert_eq!(gcd(&f, &vec![1, 1], 11), vec![1, 1]);
    }
}
