#![allow(dead_code)]

pub mod oracles;

use origami_core::divpoly::{ec_add, ec_mul, AffinePoint, CurveSpec, Point};
use origami_core::exactnum::Rational;
use rand::Rng;

pub fn q(n: i64) -> Rational {
    Rational::from(n)
}

pub fn e83() -> CurveSpec {
    CurveSpec::numeric(q(1269), q(-10746)).unwrap()
}

pub fn p83() -> AffinePoint {
    AffinePoint::numeric(q(15), q(-108), &e83()).unwrap()
}

pub fn p83_point() -> Point {
    Point::Affine(q(15), q(-108))
}

/// A nonsingular curve through two random integral points, returned with
/// both points. Coefficients may be non-integral rationals.
pub fn random_curve_with_points<R: Rng>(rng: &mut R) -> (CurveSpec, Point, Point) {
    loop {
        let z1 = rng.gen_range(-9i64..=9);
        let z2 = rng.gen_range(-9i64..=9);
        let w1 = rng.gen_range(1i64..=30);
        let w2 = rng.gen_range(-30i64..=30);
        if z1 == z2 || w2 == 0 {
            continue;
        }
        let (z1, z2, w1, w2) = (q(z1), q(z2), q(w1), q(w2));
        let a = &(&(&w1.pow(2) - &w2.pow(2)) - &(&z1.pow(3) - &z2.pow(3))) / &(&z1 - &z2);
        let b = &(&w1.pow(2) - &z1.pow(3)) - &(&a * &z1);
        if b == q(0) {
            continue;
        }
        let Ok(c) = CurveSpec::numeric(a, b) else { continue };
        return (c, Point::Affine(z1, w1), Point::Affine(z2, w2));
    }
}

/// Small combinations i·P1 + j·P2, skipping the identity.
pub fn sample_points(c: &CurveSpec, p1: &Point, p2: &Point, count: usize) -> Vec<Point> {
    let mut out = Vec::new();
    'outer: for i in 0i64..=3 {
        for j in -3i64..=3 {
            let pt = ec_add(&ec_mul(i, p1, c).unwrap(), &ec_mul(j, p2, c).unwrap(), c).unwrap();
            if pt != Point::Infinity && !out.contains(&pt) {
                out.push(pt);
            }
            if out.len() == count {
                break 'outer;
            }
        }
    }
    out
}
