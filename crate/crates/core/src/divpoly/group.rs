use num_traits::Zero;

use crate::error::Error;
use crate::exactnum::Rational;

use super::curve::CurveSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    Infinity,
    Affine(Rational, Rational),
}

impl Point {
    pub fn neg(&self) -> Point {
        match self {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => Point::Affine(x.clone(), -y),
        }
    }

    pub fn on_curve(&self, a: &Rational, b: &Rational) -> bool {
        match self {
            Point::Infinity => true,
            Point::Affine(x, y) => y.pow(2) == &(&x.pow(3) + &(a * x)) + b,
        }
    }
}

fn curve_a(curve: &CurveSpec) -> Result<Rational, Error> {
    curve
        .numeric_values()
        .map(|(a, _)| a)
        .ok_or_else(|| Error::Invalid("group law needs a numeric curve".into()))
}

/// Chord-tangent addition.
pub fn ec_add(p: &Point, q: &Point, curve: &CurveSpec) -> Result<Point, Error> {
    let a = curve_a(curve)?;
    let (x1, y1, x2, y2) = match (p, q) {
        (Point::Infinity, _) => return Ok(q.clone()),
        (_, Point::Infinity) => return Ok(p.clone()),
        (Point::Affine(x1, y1), Point::Affine(x2, y2)) => (x1, y1, x2, y2),
    };
    let slope = if x1 == x2 {
        if (y1 + y2).is_zero() {
            return Ok(Point::Infinity);
        }
        // doubling; y1 = y2 ≠ 0 here
        &(&x1.pow(2) * &Rational::from(3) + &a) / &(y1 * &Rational::from(2))
    } else {
        &(y2 - y1) / &(x2 - x1)
    };
    let x3 = &(&slope.pow(2) - x1) - x2;
    let y3 = &(&slope * &(x1 - &x3)) - y1;
    Ok(Point::Affine(x3, y3))
}

/// [n]P by double-and-add; negative n uses −P.
pub fn ec_mul(n: i64, p: &Point, curve: &CurveSpec) -> Result<Point, Error> {
    let mut base = if n < 0 { p.neg() } else { p.clone() };
    let mut k = n.unsigned_abs();
    let mut acc = Point::Infinity;
    while k > 0 {
        if k & 1 == 1 {
            acc = ec_add(&acc, &base, curve)?;
        }
        k >>= 1;
        if k > 0 {
            base = ec_add(&base, &base, curve)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e83() -> CurveSpec {
        CurveSpec::numeric(Rational::from(1269), Rational::from(-10746)).unwrap()
    }

    #[test]
    fn identity_and_inverse() {
        let c = e83();
        let p = Point::Affine(Rational::from(15), Rational::from(-108));
        assert_eq!(ec_add(&p, &Point::Infinity, &c).unwrap(), p);
        assert_eq!(ec_add(&p, &p.neg(), &c).unwrap(), Point::Infinity);
        assert_eq!(ec_mul(0, &p, &c).unwrap(), Point::Infinity);
    }

    #[test]
    fn multiples_stay_on_curve() {
        let c = e83();
        let (a, b) = c.numeric_values().unwrap();
        let p = Point::Affine(Rational::from(15), Rational::from(-108));
        for n in -6..=6 {
            assert!(ec_mul(n, &p, &c).unwrap().on_curve(&a, &b));
        }
        let lhs = ec_add(&ec_mul(2, &p, &c).unwrap(), &ec_mul(3, &p, &c).unwrap(), &c).unwrap();
        assert_eq!(lhs, ec_mul(5, &p, &c).unwrap());
    }
}
