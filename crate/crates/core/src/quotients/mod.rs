//! The S4-quotient quartics h1, h2, h3, the quartic g cut out of the
//! 4-division field, the 4-torsion polynomial T4, and the isomorphism
//! alpha -> beta between the fields of g and h1.

pub mod stages;

use serde::Serialize;

use crate::divpoly::{AffinePoint, CurveSpec};
use crate::error::Error;
use crate::exactnum::Rational;
use crate::polyring::{poly, reduce, MultiPoly, RewriteRule, Symbol};
use crate::report::IdentityReport;
use crate::resolvent::galois::{irreducibility_certificate, odd_primes, Irreducibility};
use crate::resolvent::modp;
use crate::resolvent::resolvents::ser_poly;

const D: &str = "(4*a^3 + 27*b^2)";
const DELTA: &str = "(-16*(4*a^3 + 27*b^2))";

/// h1 with d standing for 4a^3 + 27b^2.
pub const H1: &str = "x^4 - 512*d*x^2 + 2^15*d*w^2*x + 2^16*d*(d + w^2*(12*a*z - 36*b)) \
    + 2^18*d*(27*b*z^3 - 9*a^2*z^2 - a^3)";
pub const H2: &str = "x^4 - 512*d*x^2 + 2^15*d*w^2*x + 2^16*d*(d + w^2*(12*a*z - 36*b))";
pub const H3: &str = "x^4 - 8*w*x^3 + 6*(2*a*z + 3*b)*x^2 - d";
/// g with D standing for Delta = -16d.
pub const G: &str = "x^4 - 4*D*x - 12*a*D";
pub const T4: &str = "x^12 + 54*b*x^10 + (132*a^3 + 891*b^2)*x^8 + (432*a^3*b + 2916*b^3)*x^6 \
    + (-528*a^6 - 7128*a^3*b^2 - 24057*b^4)*x^4 + (864*a^6*b + 11664*a^3*b^3 + 39366*b^5)*x^2 \
    - 64*a^9 - 1296*a^6*b^2 - 8748*a^3*b^4 - 19683*b^6";
/// Numerator of beta; beta = numerator / (-9b).
pub const BETA_NUMERATOR: &str = "alpha^3 - 4*a*alpha^2 + (16*a^2 - 72*b*z)*alpha + 2^4*3*d";

fn expand(src: &str) -> MultiPoly {
    poly(&src.replace('d', D).replace('D', DELTA))
}

fn at(curve: &CurveSpec, p: &AffinePoint, e: &MultiPoly) -> MultiPoly {
    p.specialize(&curve.specialize(e))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientSet {
    #[serde(serialize_with = "ser_poly")]
    pub d: MultiPoly,
    #[serde(serialize_with = "ser_poly")]
    pub delta: MultiPoly,
    #[serde(serialize_with = "ser_poly")]
    pub h1: MultiPoly,
    #[serde(serialize_with = "ser_poly")]
    pub h2: MultiPoly,
    #[serde(serialize_with = "ser_poly")]
    pub h3: MultiPoly,
    #[serde(serialize_with = "ser_poly")]
    pub g: MultiPoly,
    #[serde(serialize_with = "ser_poly")]
    pub t4: MultiPoly,
}

pub fn quotient_polys(curve: &CurveSpec, p: &AffinePoint) -> Result<QuotientSet, Error> {
    let d = curve.d();
    if d.is_zero() {
        return Err(Error::Domain("singular curve: 4a^3 + 27b^2 = 0".into()));
    }
    let spec = |src: &str| at(curve, p, &expand(src));
    Ok(QuotientSet {
        delta: d.scale(&Rational::from(-16)),
        d,
        h1: spec(H1),
        h2: spec(H2),
        h3: spec(H3),
        g: spec(G),
        t4: spec(T4),
    })
}

/// beta = numerator / denominator with denominator = -9b.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BetaMap {
    #[serde(serialize_with = "ser_poly")]
    pub numerator: MultiPoly,
    #[serde(serialize_with = "ser_poly")]
    pub denominator: MultiPoly,
}

impl BetaMap {
    /// beta as a polynomial in alpha when b is a number.
    pub fn as_poly(&self) -> Option<MultiPoly> {
        let den = self.denominator.constant_value()?;
        Some(self.numerator.scale(&den.recip().ok()?))
    }
}

pub fn beta_map(curve: &CurveSpec, p: &AffinePoint) -> Result<BetaMap, Error> {
    if curve.b.is_zero() {
        return Err(Error::Domain("isomorphism formula divides by 9b, and b = 0".into()));
    }
    Ok(BetaMap {
        numerator: at(curve, p, &expand(BETA_NUMERATOR)),
        denominator: curve.b.scale(&Rational::from(-9)),
    })
}

/// Staged evidence that beta is a root of h1 whenever alpha is a root of g.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsoWitness {
    pub beta: BetaMap,
    /// 3^8 b^4 h1(beta) in alpha.
    #[serde(serialize_with = "ser_poly")]
    pub expansion: MultiPoly,
    /// c3, c2, c1, c0 after alpha^4 -> 4*Delta*alpha + 12*a*Delta.
    pub coefficients: Vec<String>,
    #[serde(serialize_with = "ser_poly")]
    pub reduced: MultiPoly,
    pub stages: Vec<IdentityReport>,
}

impl IsoWitness {
    pub fn passed(&self) -> bool {
        self.stages.iter().all(IdentityReport::passed)
    }
}

/// The rule alpha^4 -> 4*Delta*alpha + 12*a*Delta for this curve.
pub fn alpha_rule(curve: &CurveSpec) -> RewriteRule {
    let delta = curve.d().scale(&Rational::from(-16));
    let alpha = MultiPoly::var(Symbol::Alpha);
    let rhs = &(&alpha * &delta).scale(&Rational::from(4)) + &(&curve.a * &delta).scale(&Rational::from(12));
    RewriteRule::new(Symbol::Alpha, 4, rhs).expect("alpha-free replacement")
}

/// Computes 3^8 b^4 h1(beta), reduces it by g and then by the curve relation,
/// comparing each stage with the recorded displays.
pub fn verify_isomorphism(curve: &CurveSpec, p: &AffinePoint) -> Result<IsoWitness, Error> {
    let beta = beta_map(curve, p)?;
    let h1 = at(curve, p, &expand(H1));
    let nine_b = curve.b.scale(&Rational::from(9));
    let minus_n = -&beta.numerator;
    // sum_k h1_k (-N)^k (9b)^(4-k)
    let mut expansion = MultiPoly::zero();
    for k in 0..=4u32 {
        let c = h1.coeff_in(Symbol::X, k);
        if c.is_zero() {
            continue;
        }
        expansion = &expansion + &(&(&c * &minus_n.pow(k)) * &nine_b.pow(4 - k));
    }
    let mut stages = vec![IdentityReport::zero(
        "3^8*b^4*h1(beta) expands to the recorded degree-12 polynomial in alpha",
        &(&expansion - &at(curve, p, &poly(stages::EXPANSION))),
    )];

    let folded = reduce(&expansion, &[alpha_rule(curve)]);
    let recorded = [stages::C0, stages::C1, stages::C2, stages::C3];
    let mut coefficients = Vec::new();
    for k in (0..4u32).rev() {
        let ck = folded.coeff_in(Symbol::Alpha, k);
        stages.push(IdentityReport::zero(
            format!("coefficient c{k} of alpha^{k} after alpha^4 -> 4*Delta*alpha + 12*a*Delta"),
            &(&ck - &at(curve, p, &poly(recorded[k as usize]))),
        ));
        coefficients.push(ck.to_string());
    }
    if folded.degree_in(Symbol::Alpha).unwrap_or(0) > 3 {
        return Err(Error::Invariant("alpha-reduction left degree above 3".into()));
    }

    let reduced = p.reduce(curve, &folded);
    stages.push(IdentityReport::zero(
        "c0..c3 vanish modulo w^2 = z^3 + a*z + b",
        &reduced,
    ));
    Ok(IsoWitness { beta, expansion, coefficients, reduced, stages })
}

/// A prime at which g splits into four distinct linear factors and h1 stays
/// squarefree, with the roots of g and h1 there.
pub fn splitting_prime(g: &[Rational], h1: &[Rational], skip: &[Rational]) -> Option<(u64, Vec<u64>, Vec<u64>)> {
    odd_primes().skip_while(|&p| p < 10_007).take(20_000).find_map(|p| {
        if skip.iter().any(|c| c.mod_u64(p).map_or(true, |v| v == 0)) {
            return None;
        }
        let gp = modp::from_rationals(g, p)?;
        let hp = modp::from_rationals(h1, p)?;
        if modp::degree(&gp) != Some(4) || modp::degree(&hp) != Some(4) {
            return None;
        }
        if !modp::is_squarefree(&gp, p) || !modp::is_squarefree(&hp, p) {
            return None;
        }
        let rg = modp::roots(&gp, p);
        (rg.len() == 4).then(|| (p, rg, modp::roots(&hp, p)))
    })
}

/// Checks alpha -> beta maps the roots of g bijectively onto those of h1
/// modulo a prime where g splits. Numeric curves and points only; needs g
/// irreducible over Q.
pub fn inverse_direction_check(curve: &CurveSpec, p: &AffinePoint) -> Result<IdentityReport, Error> {
    let name = "alpha -> beta is a bijection from the roots of g onto the roots of h1";
    let qs = quotient_polys(curve, p)?;
    let beta = beta_map(curve, p)?;
    let uni = |e: &MultiPoly, s: Symbol| {
        e.univariate_rational(s)
            .ok_or_else(|| Error::Domain("inverse_direction_check needs a numeric curve and point".into()))
    };
    let g = uni(&qs.g, Symbol::X)?;
    let h1 = uni(&qs.h1, Symbol::X)?;
    let cert = irreducibility_certificate(&g, 40);
    if let Irreducibility::Reducible { reason } = cert {
        return Ok(IdentityReport::fail(name, format!("precondition failed: g is reducible ({reason})")));
    }
    let num = uni(&beta.numerator, Symbol::Alpha)?;
    if num.len() < 2 {
        return Ok(IdentityReport::fail(name, "beta is constant"));
    }
    let den = beta.denominator.constant_value().expect("numeric b");
    let Some((prime, roots_g, roots_h)) = splitting_prime(&g, &h1, std::slice::from_ref(&den)) else {
        return Ok(IdentityReport::fail(name, "no splitting prime found"));
    };
    let nump = modp::from_rationals(&num, prime).expect("good prime");
    let inv = modp::inv_mod(den.mod_u64(prime).expect("good prime"), prime);
    let mut images: Vec<u64> = roots_g
        .iter()
        .map(|&a| modp::mul_mod(modp::eval(&nump, a, prime), inv, prime))
        .collect();
    images.sort_unstable();
    let ok = images == roots_h;
    Ok(IdentityReport::from_bool(
        name,
        ok,
        format!("mod {prime}: beta(roots of g) = {images:?}, roots of h1 = {roots_h:?}"),
    )
    .with_note(format!("checked modulo {prime}; roots of g: {roots_g:?}")))
}
