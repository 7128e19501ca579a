//! Integer factorization for display of large constants in factored form.
//!
//! Trial division strips small primes, then Brent's variant of Pollard rho
//! splits what is left. Every rho attempt is capped, so a hard residue is
//! returned as an unfactored cofactor instead of hanging the caller.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::rational::Rational;
use crate::error::Error;

const TRIAL_LIMIT: u32 = 10_000;

/// Default cap on rho iterations per split attempt.
pub const DEFAULT_EFFORT: u64 = 200_000;

// Deterministic below 3.317e24 (Sorenson & Webster); used as fixed rounds above.
const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const MR_EXTRA_BASES: [u32; 7] = [43, 47, 53, 59, 61, 67, 71];

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= n {
            if sieve[i] {
                let mut j = i * i;
                while j <= n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (0..=n).filter(|&k| sieve[k]).map(|k| k as u32).collect()
    })
}

/// ⌊√n⌋ for n ≥ 0.
pub fn isqrt(n: &BigInt) -> Result<BigInt, Error> {
    if n.is_negative() {
        return Err(Error::Domain(format!("isqrt of negative number {n}")));
    }
    Ok(n.sqrt())
}

fn is_square_integer(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// True iff `q` is the square of a rational number.
pub fn is_square(q: &Rational) -> bool {
    // lowest terms: q is a square iff numerator and denominator both are
    is_square_integer(q.numer()) && is_square_integer(q.denom())
}

/// The nonnegative rational square root of `q`, if `q` is a square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if !is_square(q) {
        return None;
    }
    Some(Rational::new(q.numer().sqrt(), q.denom().sqrt()).expect("nonzero denominator"))
}

/// True iff `p` and `q` differ by a nonzero rational square factor.
pub fn same_square_class(p: &Rational, q: &Rational) -> bool {
    !p.is_zero() && !q.is_zero() && is_square(&(p * q))
}

/// The squarefree integer `s` with `q = s * (rational square)`.
pub fn squarefree_part(q: &Rational, effort: u64) -> Result<BigInt, Error> {
    if q.is_zero() {
        return Err(Error::Domain("squarefree part of zero".into()));
    }
    // n/d = n*d / d^2
    let prod = q.numer() * q.denom();
    let f = factor(&prod, effort);
    if !f.cofactor.is_one() && !is_square_integer(&f.cofactor) {
        return Err(Error::Incomplete(format!(
            "squarefree part undetermined: composite cofactor {} left unsplit",
            f.cofactor
        )));
    }
    let mut s = BigInt::from(f.sign);
    for (p, e) in &f.factors {
        if e % 2 == 1 {
            s *= p;
        }
    }
    Ok(s)
}

fn pow_mod(base: &BigInt, exp: &BigInt, m: &BigInt) -> BigInt {
    base.modpow(exp, m)
}

/// Miller–Rabin with the fixed witness set; deterministic below 3.3e24.
pub fn is_probable_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for &p in MR_BASES.iter().chain(MR_EXTRA_BASES.iter()) {
        let pb = BigInt::from(p);
        if n == &pb {
            return true;
        }
        if (n % &pb).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    let bound = BigInt::parse_bytes(b"3317044064679887385961981", 10).unwrap();
    let bases: Vec<u32> = if n < &bound {
        MR_BASES.to_vec()
    } else {
        MR_BASES.iter().chain(MR_EXTRA_BASES.iter()).copied().collect()
    };
    'witness: for a in bases {
        let mut x = pow_mod(&BigInt::from(a), &d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// Brent's cycle detection with batched gcds.
fn rho_split(n: &BigInt, c: u64, max_iter: u64) -> Option<BigInt> {
    let one = BigInt::one();
    let c = BigInt::from(c);
    let f = |v: &BigInt| (v * v + &c) % n;
    let mut y = BigInt::from(2);
    let mut x;
    let mut ys;
    let mut q = one.clone();
    let mut g = one.clone();
    let mut r: u64 = 1;
    let mut iters: u64 = 0;
    const BATCH: u64 = 64;
    loop {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            let steps = BATCH.min(r - k);
            for _ in 0..steps {
                y = f(&y);
                q = (&q * (&x - &y).abs()) % n;
            }
            g = q.gcd(n);
            k += steps;
            iters += steps;
            if !g.is_one() {
                if &g == n {
                    // backtrack one step at a time
                    loop {
                        ys = f(&ys);
                        g = (&x - &ys).abs().gcd(n);
                        if !g.is_one() {
                            break;
                        }
                    }
                }
                return (&g != n).then_some(g);
            }
            if iters >= max_iter {
                return None;
            }
        }
        r *= 2;
    }
}

/// Prime factorization with a sign and an honest leftover cofactor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactoredInteger {
    pub sign: i8,
    #[serde(serialize_with = "ser_factors")]
    pub factors: Vec<(BigInt, u32)>,
    #[serde(serialize_with = "ser_big")]
    pub cofactor: BigInt,
}

fn ser_factors<S: serde::Serializer>(v: &[(BigInt, u32)], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (p, e) in v {
        seq.serialize_element(&(p.to_string(), e))?;
    }
    seq.end()
}

fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl FactoredInteger {
    pub fn value(&self) -> BigInt {
        let mut v = BigInt::from(self.sign) * &self.cofactor;
        for (p, e) in &self.factors {
            v *= num_traits::pow(p.clone(), *e as usize);
        }
        v
    }

    pub fn is_complete(&self) -> bool {
        self.cofactor.is_one()
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        if !self.cofactor.is_one() {
            parts.push(format!("[{}]", self.cofactor));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join(" * "))
    }
}

/// Factor a nonzero integer. Composite leftovers that resist `effort` rho
/// iterations end up in `cofactor`.
pub fn factor(n: &BigInt, effort: u64) -> FactoredInteger {
    assert!(!n.is_zero(), "cannot factor zero");
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut found: Vec<(BigInt, u32)> = Vec::new();
    for &p in small_primes() {
        let pb = BigInt::from(p);
        if (&pb * &pb) > m {
            break;
        }
        let mut e = 0;
        while (&m % &pb).is_zero() {
            m /= &pb;
            e += 1;
        }
        if e > 0 {
            found.push((pb, e));
        }
    }
    let mut cofactor = BigInt::one();
    let mut stack = vec![m];
    while let Some(c) = stack.pop() {
        if c.is_one() {
            continue;
        }
        if c.to_u64().is_some_and(|v| v <= (TRIAL_LIMIT as u64) * (TRIAL_LIMIT as u64))
            || is_probable_prime(&c)
        {
            // below TRIAL_LIMIT^2 and free of small factors means prime
            push_prime(&mut found, c);
            continue;
        }
        let root = c.sqrt();
        if &root * &root == c {
            stack.push(root.clone());
            stack.push(root);
            continue;
        }
        let split = (1..=4u64).find_map(|k| rho_split(&c, k, effort));
        match split {
            Some(d) => {
                let e = &c / &d;
                stack.push(d);
                stack.push(e);
            }
            None => cofactor *= c,
        }
    }
    found.sort();
    FactoredInteger {
        sign,
        factors: found,
        cofactor,
    }
}

fn push_prime(found: &mut Vec<(BigInt, u32)>, p: BigInt) {
    if let Some(slot) = found.iter_mut().find(|(q, _)| q == &p) {
        slot.1 += 1;
    } else {
        found.push((p, 1));
    }
}

/// Factored form of a rational: numerator factors with positive exponents,
/// denominator factors negative. Used only for display.
pub fn factor_rational_display(q: &Rational, effort: u64) -> String {
    if q.is_zero() {
        return "0".into();
    }
    let n = factor(q.numer(), effort);
    if q.is_integer() {
        return n.to_string();
    }
    let d = factor(q.denom(), effort);
    format!("{n} / ({d})")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Num;

    fn big(s: &str) -> BigInt {
        BigInt::from_str_radix(s, 10).unwrap()
    }

    #[test]
    fn isqrt_cases() {
        assert_eq!(isqrt(&BigInt::zero()).unwrap(), BigInt::zero());
        assert_eq!(isqrt(&BigInt::from(144)).unwrap(), BigInt::from(12));
        let two200 = BigInt::one() << 200;
        assert_eq!(isqrt(&two200).unwrap(), BigInt::one() << 100);
        assert_eq!(isqrt(&(&two200 + 1)).unwrap(), BigInt::one() << 100);
        assert!(isqrt(&BigInt::from(-1)).is_err());
    }

    #[test]
    fn squares() {
        assert!(is_square(&"9/4".parse().unwrap()));
        assert!(!is_square(&Rational::from(-1)));
        assert!(is_square(&Rational::from(0)));
        let n = (BigInt::one() << 72)
            * num_traits::pow(BigInt::from(3), 84)
            * num_traits::pow(BigInt::from(83), 3)
            * num_traits::pow(BigInt::from(739), 4);
        assert!(!is_square(&Rational::from(n)));
    }

    #[test]
    fn squarefree_parts() {
        let n = (BigInt::one() << 46)
            * num_traits::pow(BigInt::from(3), 60)
            * num_traits::pow(BigInt::from(83), 3)
            * num_traits::pow(BigInt::from(739), 2);
        assert_eq!(squarefree_part(&Rational::from(n), DEFAULT_EFFORT).unwrap(), BigInt::from(83));
        assert_eq!(squarefree_part(&Rational::from(18), DEFAULT_EFFORT).unwrap(), BigInt::from(2));
        let m = -(BigInt::one() << 14u32) * BigInt::from(83);
        assert_eq!(squarefree_part(&Rational::from(m), DEFAULT_EFFORT).unwrap(), BigInt::from(-83));
        assert_eq!(squarefree_part(&"-8/27".parse().unwrap(), DEFAULT_EFFORT).unwrap(), BigInt::from(-6));
        assert!(squarefree_part(&Rational::from(0), DEFAULT_EFFORT).is_err());
    }

    #[test]
    fn factor_known_constants() {
        let f = factor(&big("11292058368"), DEFAULT_EFFORT);
        assert_eq!(f.to_string(), "2^8 * 3^12 * 83");
        assert_eq!(f.value(), big("11292058368"));

        let one = factor(&BigInt::one(), DEFAULT_EFFORT);
        assert!(one.factors.is_empty());
        assert_eq!(one.sign, 1);
        assert_eq!(one.to_string(), "1");

        // trial-division oracle
        let n = big("2255121");
        let f = factor(&n, DEFAULT_EFFORT);
        let mut m: u64 = 2255121;
        let mut oracle = Vec::new();
        let mut p = 2;
        while m > 1 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            if e > 0 {
                oracle.push((BigInt::from(p), e));
            }
            p += 1;
        }
        assert_eq!(f.factors, oracle);
        assert_eq!(f.value(), n);
    }

    #[test]
    fn rho_splits_semiprime() {
        // two primes above the trial-division range
        let p = big("1000000007");
        let q = big("998244353");
        let f = factor(&(&p * &q * -1), DEFAULT_EFFORT);
        assert_eq!(f.sign, -1);
        assert_eq!(f.factors, vec![(q, 1), (p, 1)]);
        assert!(f.is_complete());
    }

    #[test]
    fn miller_rabin() {
        assert!(is_probable_prime(&big("2305843009213693951")));
        assert!(!is_probable_prime(&big("3317044064679887385961981")));
        assert!(!is_probable_prime(&big("561")));
    }

    #[test]
    fn display_negative() {
        let n = -(BigInt::one() << 72u32) * num_traits::pow(BigInt::from(3), 84) * BigInt::from(83);
        assert_eq!(factor(&n, DEFAULT_EFFORT).to_string(), "-2^72 * 3^84 * 83");
    }
}
