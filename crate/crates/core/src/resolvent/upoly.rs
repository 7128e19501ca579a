//! Dense univariate polynomials over Q, lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp;
use crate::exactnum::{is_probable_prime, Rational};

pub type UPoly = Vec<Rational>;

pub fn trim(f: &mut UPoly) {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
}

pub fn degree(f: &[Rational]) -> Option<usize> {
    let mut g = f.to_vec();
    trim(&mut g);
    g.len().checked_sub(1)
}

pub fn eval(f: &[Rational], x: &Rational) -> Rational {
    f.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * x) + c)
}

pub fn derivative(f: &[Rational]) -> UPoly {
    f.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * &Rational::from(i as i64))
        .collect()
}

pub fn div_rem(f: &[Rational], g: &[Rational]) -> (UPoly, UPoly) {
    let mut g = g.to_vec();
    trim(&mut g);
    let dg = g.len().checked_sub(1).expect("division by zero polynomial");
    let mut r = f.to_vec();
    trim(&mut r);
    if r.len() <= dg {
        return (Vec::new(), r);
    }
    let inv = g[dg].recip().expect("nonzero leading coefficient");
    let mut q = vec![Rational::zero(); r.len() - dg];
    for k in (0..q.len()).rev() {
        let c = &r[k + dg] * &inv;
        if c.is_zero() {
            continue;
        }
        for (i, gi) in g.iter().enumerate() {
            r[k + i] = &r[k + i] - &(&c * gi);
        }
        q[k] = c;
    }
    r.truncate(dg);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

pub fn monic(f: &[Rational]) -> UPoly {
    let mut f = f.to_vec();
    trim(&mut f);
    if let Some(lc) = f.last().cloned() {
        let inv = lc.recip().expect("nonzero");
        for c in f.iter_mut() {
            *c = &*c * &inv;
        }
    }
    f
}

pub fn gcd(f: &[Rational], g: &[Rational]) -> UPoly {
    let mut a = f.to_vec();
    let mut b = g.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = div_rem(&a, &b).1;
        a = b;
        b = r;
    }
    monic(&a)
}

/// f / gcd(f, f'): same roots, each simple.
pub fn squarefree_part(f: &[Rational]) -> UPoly {
    let g = gcd(f, &derivative(f));
    if g.len() <= 1 {
        return monic(f);
    }
    monic(&div_rem(f, &g).0)
}

/// Integer coefficients with the same roots (content not removed).
pub fn clear_denominators(f: &[Rational]) -> Vec<BigInt> {
    let l = f
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    f.iter()
        .map(|c| (c.numer() * &l) / c.denom())
        .collect()
}

fn eval_int(f: &[BigInt], x: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn eval_mod(f: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    f.iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

/// Distinct rational roots, ascending. Roots of the squarefree part are
/// found modulo a prime and lifted by Newton iteration past the Cauchy
/// bound, then confirmed exactly.
pub fn rational_roots(f: &[Rational]) -> Vec<Rational> {
    let mut f = f.to_vec();
    trim(&mut f);
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    if f[0].is_zero() {
        out.push(Rational::zero());
        while f.first().is_some_and(|c| c.is_zero()) {
            f.remove(0);
        }
    }
    let g = squarefree_part(&f);
    if g.len() > 1 {
        out.extend(nonzero_roots(&g));
    }
    out.sort();
    out.dedup();
    out
}

fn nonzero_roots(g: &[Rational]) -> Vec<Rational> {
    let a = clear_denominators(g);
    let n = a.len() - 1;
    let lead = a[n].clone();
    // y = lead * x turns f into a monic integer polynomial
    let mut b = Vec::with_capacity(n + 1);
    for (i, ai) in a.iter().enumerate() {
        let e = (n - 1).saturating_sub(i);
        b.push(if i == n { BigInt::one() } else { ai * num_traits::pow(lead.clone(), e) });
    }
    let bound = b.iter().map(|c| c.abs()).max().unwrap_or_default() + BigInt::one();
    let db: Vec<BigInt> = b
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();

    let (p, bp) = (1_000_003u64..)
        .step_by(2)
        .filter(|&p| is_probable_prime(&BigInt::from(p)))
        .map(|p| (p, reduce_mod(&b, p)))
        .find(|(p, bp)| modp::degree(bp) == Some(n) && modp::is_squarefree(bp, *p))
        .expect("a prime where the squarefree part stays squarefree");
    let pb = BigInt::from(p);
    let target = &bound * 2;
    let mut out = Vec::new();
    for r0 in modp::roots(&bp, p) {
        let mut m = pb.clone();
        let mut r = BigInt::from(r0);
        while m <= target {
            m = &m * &m;
            let fr = eval_mod(&b, &r, &m);
            let dfr = eval_mod(&db, &r, &m);
            let Some(inv) = dfr.modinv(&m) else { break };
            r = (&r - fr * inv).mod_floor(&m);
        }
        let y = if &r * 2 > m { &r - &m } else { r };
        if y.abs() <= bound && eval_int(&b, &y).is_zero() {
            out.push(Rational::new(y, lead.clone()).expect("nonzero"));
        }
    }
    out
}

fn reduce_mod(b: &[BigInt], p: u64) -> modp::PolyP {
    let pb = BigInt::from(p);
    let mut v: modp::PolyP = b
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
        .collect();
    modp::trim(&mut v);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> UPoly {
        v.iter().map(|&c| Rational::from(c)).collect()
    }

    #[test]
    fn roots_of_products() {
        // (2x - 3)(x + 5)^2 x
        let f = q(&[0, -75, 20, 17, 2]);
        let r = rational_roots(&f);
        assert_eq!(r, vec![Rational::from(-5), Rational::zero(), "3/2".parse().unwrap()]);
        assert!(rational_roots(&q(&[1, 0, 1])).is_empty());
        assert!(rational_roots(&q(&[-2, 0, 1])).is_empty());
    }

    #[test]
    fn big_roots() {
        // x^2 - (10^30 + 7) x + 7*10^30
        let big: BigInt = num_traits::pow(BigInt::from(10), 30);
        let f = vec![
            Rational::from(&big * 7),
            -Rational::from(&big + 7),
            Rational::one(),
        ];
        let r = rational_roots(&f);
        assert_eq!(r, vec![Rational::from(7), Rational::from(big)]);
    }

    #[test]
    fn gcd_and_division() {
        let f = q(&[-1, 0, 1]);
        let g = q(&[1, 2, 1]);
        assert_eq!(gcd(&f, &g), q(&[1, 1]));
        let (qq, r) = div_rem(&q(&[5, 0, 0, 1]), &q(&[1, 1]));
        assert_eq!(qq, q(&[1, -1, 1]));
        assert_eq!(r, q(&[4]));
    }
}
