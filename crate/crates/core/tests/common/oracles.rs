//! Brute-force oracles shared by the test targets.

use num_traits::{One, Zero};
use origami_core::divpoly::{ec_mul, CurveSpec, DivisionPolySet, Point};
use origami_core::exactnum::Rational;
use origami_core::polyring::{MultiPoly, Symbol};
use origami_core::resolvent::{PairQuadratics, Quartic};

pub fn from_roots(roots: &[Rational]) -> MultiPoly {
    let x = MultiPoly::var(Symbol::X);
    roots
        .iter()
        .fold(MultiPoly::one(), |acc, r| &acc * &(&x - &MultiPoly::constant(r.clone())))
}

/// Coefficients of prod (x - r), highest degree first.
pub fn elementary_coeffs(roots: &[&Rational]) -> Vec<Rational> {
    let mut c = vec![Rational::one()];
    for r in roots {
        let mut next = c.clone();
        next.push(Rational::zero());
        for i in 0..c.len() {
            next[i + 1] = &next[i + 1] - &(&c[i] * *r);
        }
        c = next;
    }
    c
}

/// s1..s6 = r1r2, r3r4, r1r3, r2r4, r1r4, r2r3.
pub fn s_values(r: &[Rational; 4]) -> [Rational; 6] {
    [
        &r[0] * &r[1],
        &r[2] * &r[3],
        &r[0] * &r[2],
        &r[1] * &r[3],
        &r[0] * &r[3],
        &r[1] * &r[2],
    ]
}

/// The 12 sums of a complementary pair {s1,s2}, {s3,s4}, {s5,s6} with one
/// further s.
pub fn h_roots(s: &[Rational; 6]) -> Vec<Rational> {
    let mut out = Vec::new();
    for pair in 0..3 {
        let u = &s[2 * pair] + &s[2 * pair + 1];
        for (j, sj) in s.iter().enumerate() {
            if j / 2 != pair {
                out.push(&u + sj);
            }
        }
    }
    out
}

pub fn quartic_from_roots(r: &[Rational; 4]) -> Quartic {
    let p = from_roots(r);
    Quartic::from_poly(&p, Symbol::X).unwrap()
}

/// Some split of the h roots into two sextics sharing x^6..x^2 gives
/// (v1, v3) and (v2, v4) with v1,v2 roots of p1 and v3,v4 roots of p2.
pub fn pairing_exists(roots: &[Rational], pq: &PairQuadratics) -> bool {
    let val = |p: &MultiPoly| p.constant_value().unwrap();
    let (sum1, prod1, sum2, prod2) = (val(&pq.sum1), val(&pq.product1), val(&pq.sum2), val(&pq.product2));
    for mask in 0u32..(1 << 12) {
        if mask.count_ones() != 6 || mask & 1 == 0 {
            continue;
        }
        let a: Vec<&Rational> = (0..12).filter(|i| mask >> i & 1 == 1).map(|i| &roots[i]).collect();
        let b: Vec<&Rational> = (0..12).filter(|i| mask >> i & 1 == 0).map(|i| &roots[i]).collect();
        let (ca, cb) = (elementary_coeffs(&a), elementary_coeffs(&b));
        if ca[..5] != cb[..5] {
            continue;
        }
        let (v1, v3, v2, v4) = (&ca[5], &ca[6], &cb[5], &cb[6]);
        if &(v1 + v2) == &sum1 && &(v1 * v2) == &prod1 && &(v3 + v4) == &sum2 && &(v3 * v4) == &prod2 {
            return true;
        }
    }
    false
}

pub fn map_agrees(set: &mut DivisionPolySet, c: &CurveSpec, n: i64, pt: &Point) -> bool {
    let Point::Affine(x, y) = pt else { unreachable!() };
    let by_map = match set.eval_map(n, x, y).unwrap() {
        None => Point::Infinity,
        Some((u, v)) => Point::Affine(u, v),
    };
    by_map == ec_mul(n, pt, c).unwrap()
}
