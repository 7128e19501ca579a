use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Integer = BigInt;

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Most coefficients met in practice are integers, so every operation has a
/// fast path for denominator one that skips the gcd work.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Self::reduced(num, den))
    }

    pub fn from_integer(n: BigInt) -> Self {
        Rational {
            num: n,
            den: BigInt::one(),
        }
    }

    fn reduced(mut num: BigInt, mut den: BigInt) -> Self {
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if den.is_one() {
            return Rational { num, den };
        }
        if num.is_zero() {
            return Rational::zero();
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Rational { num, den }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.num.clone())
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn signum(&self) -> i32 {
        match self.num.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self, Error> {
        Rational::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        Rational {
            num: num_traits::pow(self.num.clone(), e as usize),
            den: num_traits::pow(self.den.clone(), e as usize),
        }
    }

    /// Residue modulo a word-sized prime, `None` when the prime divides the denominator.
    pub fn mod_u64(&self, p: u64) -> Option<u64> {
        let pb = BigInt::from(p);
        let n = self.num.mod_floor(&pb);
        let d = self.den.mod_floor(&pb);
        let n = u64::try_from(n).ok()?;
        let d = u64::try_from(d).ok()?;
        if d == 0 {
            return None;
        }
        Some(crate::resolvent::modp::mul_mod(
            n,
            crate::resolvent::modp::inv_mod(d, p),
            p,
        ))
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational {
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational {
            num: BigInt::one(),
            den: BigInt::one(),
        }
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
}

impl From<i32> for Rational {
    fn from(v: i32) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational::from_integer(v)
    }
}

impl From<&BigInt> for Rational {
    fn from(v: &BigInt) -> Self {
        Rational::from_integer(v.clone())
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        if self.den.is_one() && rhs.den.is_one() {
            return Rational::from_integer(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return Rational::reduced(&self.num + &rhs.num, self.den.clone());
        }
        Rational::reduced(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        if self.den.is_one() && rhs.den.is_one() {
            return Rational::from_integer(&self.num - &rhs.num);
        }
        if self.den == rhs.den {
            return Rational::reduced(&self.num - &rhs.num, self.den.clone());
        }
        Rational::reduced(
            &self.num * &rhs.den - &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        if self.den.is_one() && rhs.den.is_one() {
            return Rational::from_integer(&self.num * &rhs.num);
        }
        Rational::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational::reduced(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num += &rhs.num;
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num -= &rhs.num;
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num *= &rhs.num;
        } else {
            *self = &*self * rhs;
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p` or `p/q` with optional sign; no decimals.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse {
            pos: 0,
            msg: format!("not a rational number: {s:?}"),
        };
        match s.split_once('/') {
            None => BigInt::from_str(s).map(Rational::from_integer).map_err(|_| bad()),
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                Rational::new(n, d)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d)).unwrap()
    }

    #[test]
    fn normalizes_sign_and_gcd() {
        let r = q(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(q(0, -7), Rational::zero());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        assert_eq!(&q(1, 2) - &q(1, 2), Rational::zero());
        assert_eq!(&q(2, 3) * &q(9, 4), q(3, 2));
        assert_eq!(&q(2, 3) / &q(4, 9), q(3, 2));
        assert!(q(-1, 2) < q(1, 3));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("-10746".parse::<Rational>().unwrap(), Rational::from(-10746));
        assert_eq!("6/-4".parse::<Rational>().unwrap(), q(-3, 2));
        assert_eq!(q(-3, 2).to_string(), "-3/2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1.5".parse::<Rational>().is_err());
    }

    #[test]
    fn residues() {
        assert_eq!(q(1, 2).mod_u64(7), Some(4));
        assert_eq!(q(-1, 1).mod_u64(7), Some(6));
        assert_eq!(q(1, 7).mod_u64(7), None);
    }
}
