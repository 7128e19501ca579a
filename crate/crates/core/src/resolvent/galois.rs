use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::modp;
use super::quartic::Quartic;
use super::resolvents::resolvent_cubic;
use super::upoly::{self, rational_roots};
use super::zassenhaus;
use crate::elimination::discriminant_rational;
use crate::error::Error;
use crate::exactnum::{is_probable_prime, is_square, Rational};
use crate::polyring::{MultiPoly, Symbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CubicGroup {
    S3,
    C3,
    Reducible,
}

/// Galois group of a cubic given lowest degree first.
pub fn cubic_galois_poly(coeffs: &[Rational]) -> Result<CubicGroup, Error> {
    if upoly::degree(coeffs) != Some(3) {
        return Err(Error::Invalid("cubic_galois needs a degree-3 polynomial".into()));
    }
    if !rational_roots(coeffs).is_empty() {
        return Ok(CubicGroup::Reducible);
    }
    let d = discriminant_rational(coeffs)?;
    Ok(if is_square(&d) { CubicGroup::C3 } else { CubicGroup::S3 })
}

/// Galois group of x^3 + a*x + b.
pub fn cubic_galois(a: &Rational, b: &Rational) -> Result<CubicGroup, Error> {
    cubic_galois_poly(&[b.clone(), a.clone(), Rational::zero(), Rational::one()])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "group", content = "reason")]
pub enum QuarticGroup {
    S4,
    NotS4(String),
}

/// S4 certificate: no rational root, resolvent cubic without rational root,
/// discriminant not a square.
pub fn quartic_galois(q: &Quartic) -> Result<QuarticGroup, Error> {
    let r = q
        .coeffs_low_first()
        .ok_or_else(|| Error::Domain("quartic_galois needs rational coefficients".into()))?;
    if let Some(root) = rational_roots(&r).first() {
        return Ok(QuarticGroup::NotS4(format!("rational root {root}")));
    }
    let rc = resolvent_cubic(q, Symbol::X)
        .univariate_rational(Symbol::X)
        .expect("numeric resolvent cubic");
    if let Some(root) = rational_roots(&rc).first() {
        return Ok(QuarticGroup::NotS4(format!("resolvent cubic has rational root {root}")));
    }
    let d = discriminant_rational(&r)?;
    if d.is_zero() {
        return Ok(QuarticGroup::NotS4("repeated roots".into()));
    }
    if is_square(&d) {
        return Ok(QuarticGroup::NotS4(format!("discriminant {d} is a square")));
    }
    Ok(QuarticGroup::S4)
}

/// Quartic in x from a polynomial, for convenience.
pub fn quartic_galois_poly(p: &MultiPoly, var: Symbol) -> Result<QuarticGroup, Error> {
    quartic_galois(&Quartic::from_poly(p, var)?)
}

/// Outcome of the degree-pattern irreducibility test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Irreducibility {
    /// Factor-degree patterns mod these primes leave no proper factor degree.
    Certified { primes: Vec<u64> },
    /// No product of the factors mod `prime`, lifted p-adically, divides f.
    Lifted { prime: u64, modular_factors: usize },
    Reducible { reason: String },
}

impl Irreducibility {
    pub fn is_certified(&self) -> bool {
        !matches!(self, Irreducibility::Reducible { .. })
    }
}

/// Subset sums of a factor-degree multiset.
fn subset_sums(degrees: &[usize]) -> BTreeSet<usize> {
    let mut sums = BTreeSet::from([0]);
    for &d in degrees {
        let next: Vec<usize> = sums.iter().map(|s| s + d).collect();
        sums.extend(next);
    }
    sums
}

/// Primes above 2 in increasing order.
pub fn odd_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&p| is_probable_prime(&BigInt::from(p)))
}

/// Good reduction: degree kept, denominators invertible, squarefree mod p.
pub fn reduce_good(f: &[Rational], p: u64) -> Option<modp::PolyP> {
    let fp = modp::from_rationals(f, p)?;
    (modp::degree(&fp) == upoly::degree(f) && modp::is_squarefree(&fp, p)).then_some(fp)
}

/// Certifies irreducibility over Q from degree patterns modulo primes: any
/// factor over Q has a degree that is a subset sum of every pattern. When the
/// patterns leave a proper degree open, f is factored by Hensel lifting.
pub fn irreducibility_certificate(f: &[Rational], max_primes: usize) -> Irreducibility {
    let Some(n) = upoly::degree(f) else {
        return Irreducibility::Reducible { reason: "zero polynomial".into() };
    };
    if n == 0 {
        return Irreducibility::Reducible { reason: "constant".into() };
    }
    if let Some(r) = rational_roots(f).first() {
        if n > 1 {
            return Irreducibility::Reducible { reason: format!("rational root {r}") };
        }
    }
    if upoly::squarefree_part(f).len() != n + 1 {
        return Irreducibility::Reducible { reason: "repeated factor".into() };
    }
    let mut possible: BTreeSet<usize> = (0..=n).collect();
    let mut used = Vec::new();
    for p in odd_primes().take(max_primes * 4) {
        if possible.len() <= 2 || used.len() >= max_primes {
            break;
        }
        let Some(fp) = reduce_good(f, p) else { continue };
        let sums = subset_sums(&modp::factor_degrees(&fp, p));
        let before = possible.len();
        possible = possible.intersection(&sums).copied().collect();
        if possible.len() < before {
            used.push(p);
        }
    }
    if possible.len() <= 2 {
        return Irreducibility::Certified { primes: used };
    }
    // degree patterns cannot decide; fall back to factoring
    let (prime, factors) = zassenhaus::factor_squarefree(f);
    if factors.len() > 1 {
        let degrees: Vec<usize> = factors.iter().map(|g| g.len() - 1).collect();
        return Irreducibility::Reducible { reason: format!("factor degrees {degrees:?}") };
    }
    let prime = prime.expect("degree above 1");
    let fp = modp::from_rationals(&upoly::monic(f), prime).expect("good prime");
    Irreducibility::Lifted { prime, modular_factors: modp::factor_degrees(&fp, prime).len() }
}

