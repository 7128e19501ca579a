//! Factorization over Q by Hensel lifting and factor recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::galois::odd_primes;
use super::modp::{self, PolyP};
use super::upoly::{self, UPoly};
use crate::exactnum::Rational;

type ZPoly = Vec<BigInt>;

fn ztrim(f: &mut ZPoly) {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
}

fn zmul(f: &[BigInt], g: &[BigInt]) -> ZPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// Symmetric residues in (-m/2, m/2].
fn zmod(f: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut out: ZPoly = f
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    ztrim(&mut out);
    out
}

/// Quotient by a monic divisor when the division is exact.
fn zdiv_exact(f: &[BigInt], g: &[BigInt]) -> Option<ZPoly> {
    let dg = g.len() - 1;
    let mut r = f.to_vec();
    if r.len() < g.len() {
        return None;
    }
    let mut q = vec![BigInt::zero(); r.len() - dg];
    for k in (0..q.len()).rev() {
        let c = r[k + dg].clone();
        if c.is_zero() {
            continue;
        }
        for (i, gi) in g.iter().enumerate() {
            r[k + i] -= &c * gi;
        }
        q[k] = c;
    }
    r[..dg].iter().all(Zero::is_zero).then_some(q)
}

fn to_modp(f: &[BigInt], p: u64) -> PolyP {
    let pb = BigInt::from(p);
    let mut v: PolyP = f
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
        .collect();
    modp::trim(&mut v);
    v
}

fn from_modp(f: &PolyP) -> ZPoly {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts f = g*h mod p (g, h monic and coprime) to f = G*H mod p^k.
fn lift_pair(f: &[BigInt], g: &PolyP, h: &PolyP, p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (s, t) = modp::bezout(g, h, p).expect("coprime modular factors");
    let pb = BigInt::from(p);
    let mut big_g = from_modp(g);
    let mut big_h = from_modp(h);
    let mut m = pb.clone();
    for _ in 1..k {
        let mut e: ZPoly = f.to_vec();
        let gh = zmul(&big_g, &big_h);
        for (i, c) in gh.iter().enumerate() {
            if i < e.len() {
                e[i] -= c;
            } else {
                e.push(-c);
            }
        }
        let e: ZPoly = e.iter().map(|c| c / &m).collect();
        let ep = to_modp(&e, p);
        let dg = modp::rem(&modp::mul(&t, &ep, p), g, p);
        let dh = modp::rem(&modp::mul(&s, &ep, p), h, p);
        for (i, c) in dg.iter().enumerate() {
            big_g[i] += &m * c;
        }
        for (i, c) in dh.iter().enumerate() {
            big_h[i] += &m * c;
        }
        m *= &pb;
    }
    (zmod(&big_g, &m), zmod(&big_h, &m))
}

fn lift_all(f: &[BigInt], factors: &[PolyP], p: u64, k: u32) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let m = num_traits::pow(BigInt::from(p), k as usize);
        return vec![zmod(f, &m)];
    }
    let rest = factors[1..]
        .iter()
        .fold(vec![1u64], |acc, g| modp::mul(&acc, g, p));
    let (g, h) = lift_pair(f, &factors[0], &rest, p, k);
    let mut out = vec![g];
    out.extend(lift_all(&h, &factors[1..], p, k));
    out
}

/// The prime used and the monic irreducible factors of a monic squarefree
/// integer polynomial.
fn factor_monic(f: &[BigInt]) -> (Option<u64>, Vec<ZPoly>) {
    let n = f.len() - 1;
    if n <= 1 {
        return (None, vec![f.to_vec()]);
    }
    let mut best: Option<(u64, usize)> = None;
    let mut seen = 0;
    for p in odd_primes() {
        let fp = to_modp(f, p);
        if !modp::is_squarefree(&fp, p) {
            continue;
        }
        let count = modp::factor_degrees(&fp, p).len();
        if best.map_or(true, |(_, c)| count < c) {
            best = Some((p, count));
        }
        seen += 1;
        if seen >= 12 || count == 1 {
            break;
        }
    }
    let (p, count) = best.expect("some prime keeps f squarefree");
    if count == 1 {
        return (Some(p), vec![f.to_vec()]);
    }
    let modular = modp::factor(&to_modp(f, p), p);

    let norm = f.iter().map(|c| c * c).fold(BigInt::zero(), |a, b| a + b).sqrt() + BigInt::one();
    let bound = (BigInt::one() << n) * norm * 2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut m = pb.clone();
    while m <= bound {
        m *= &pb;
        k += 1;
    }
    let mut lifted = lift_all(f, &modular, p, k);
    let mut rest = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for subset in subsets(lifted.len(), size) {
            let cand = subset
                .iter()
                .fold(vec![BigInt::one()], |acc, &i| zmod(&zmul(&acc, &lifted[i]), &m));
            if !rest[0].is_zero() && !cand[0].is_zero() && !(&rest[0] % &cand[0]).is_zero() {
                continue;
            }
            if let Some(q) = zdiv_exact(&rest, &cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                rest = q;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => size += 1,
        }
    }
    found.push(rest);
    (Some(p), found)
}

/// Index subsets of {0..n-1} of the given size, lexicographic.
fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, size, &mut Vec::new(), &mut out);
    out
}

/// Monic irreducible factors over Q of the squarefree part of f, with the
/// prime used for lifting.
pub fn factor_squarefree(f: &[Rational]) -> (Option<u64>, Vec<UPoly>) {
    let g = upoly::squarefree_part(f);
    let n = g.len() - 1;
    let a = upoly::clear_denominators(&g);
    let lead = a[n].clone();
    // y = lead * x gives a monic integer polynomial
    let b: ZPoly = a
        .iter()
        .enumerate()
        .map(|(i, ai)| {
            if i == n {
                BigInt::one()
            } else {
                ai * num_traits::pow(lead.clone(), n - 1 - i)
            }
        })
        .collect();
    let (p, factors) = factor_monic(&b);
    let l = Rational::from(lead);
    let out = factors
        .into_iter()
        .map(|c| {
            let mut scale = Rational::one();
            let back: UPoly = c
                .iter()
                .map(|ci| {
                    let v = &Rational::from(ci.clone()) * &scale;
                    scale = &scale * &l;
                    v
                })
                .collect();
            upoly::monic(&back)
        })
        .collect();
    (p, out)
}
