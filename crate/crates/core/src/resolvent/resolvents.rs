use std::sync::OnceLock;

use num_traits::One;
use serde::Serialize;

use super::formulas;
use super::quartic::Quartic;
use crate::divpoly::{AffinePoint, CurveSpec};
use crate::elimination::{discriminant, resultant};
use crate::error::Error;
use crate::exactnum::Rational;
use crate::polyring::{poly, reduce, MultiPoly, RewriteRule, Symbol};
use crate::report::IdentityReport;

/// q from the discriminant of the origami octic; equals u on the curve.
pub const Q_DISPLAY: &str = "a^6 + 18*a^5*z^2 + 54*a^4*b*z + 81*a^4*z^4 - 108*a^4*z*w^2 \
    + 54*a^3*b^2 + 486*a^3*b*z^3 - 162*a^3*b*w^2 - 108*a^3*z^3*w^2 + 108*a^3*w^4 \
    + 1215*a^2*b^2*z^2 - 486*a^2*b*z^2*w^2 + 1458*a*b^3*z - 1458*a*b^2*z*w^2 + 729*b^4 \
    - 1458*b^3*w^2 + 729*b^2*w^4";

/// Shared part x^6..x^2 of the two sextic factors of h for the origami quartic.
pub const ORIGAMI_SEXTIC: &str = "x^6 + (-36*a*z - 54*b)*x^5 \
    + (20*a^3 + 432*a^2*z^2 + 1296*a*b*z + 1107*b^2)*x^4 \
    + (-480*a^4*z - 720*a^3*b - 1728*a^3*z^3 - 7776*a^2*b*z^2 - 14904*a*b^2*z - 10692*b^3)*x^3 \
    + (240*a^6 + 4608*a^5*z^2 + 13824*a^4*b*z - 3072*a^4*z*w^2 + 13608*a^3*b^2 \
    - 4608*a^3*b*w^2 + 31104*a^2*b^2*z^2 + 93312*a*b^3*z - 20736*a*b^2*z*w^2 + 80919*b^4 \
    - 31104*b^3*w^2)*x^2";

fn cached(cell: &'static OnceLock<MultiPoly>, src: &str) -> &'static MultiPoly {
    cell.get_or_init(|| {
        let s = src
            .replace("e1", "(-c3)")
            .replace("e2", "c2")
            .replace("e3", "(-c1)")
            .replace("e4", "c0");
        poly(&s)
    })
}

macro_rules! formula {
    ($name:ident, $src:expr) => {
        fn $name() -> &'static MultiPoly {
            static CELL: OnceLock<MultiPoly> = OnceLock::new();
            cached(&CELL, $src)
        }
    };
}

formula!(two_set_formula, formulas::TWO_SET);
formula!(degree12_formula, formulas::DEGREE_12);
formula!(sum1_formula, formulas::SUM1);
formula!(sum2_formula, formulas::SUM2);
formula!(product2_formula, formulas::PRODUCT2);
formula!(g2_formula, formulas::G2);
formula!(product1_factor, formulas::PRODUCT1_FACTOR);

/// k(x), the product resolvent: roots r_i*r_j over the six pairs.
pub fn two_set_resolvent(q: &Quartic) -> MultiPoly {
    q.specialize(two_set_formula())
}

/// Cubic in `var` with roots r1r2+r3r4, r1r3+r2r4, r1r4+r2r3.
pub fn resolvent_cubic(q: &Quartic, var: Symbol) -> MultiPoly {
    let t = MultiPoly::var(var);
    let (c3, c2, c1, c0) = (&q.c3, &q.c2, &q.c1, &q.c0);
    let four = Rational::from(4);
    let lin = &(c1 * c3) - &c0.scale(&four);
    let cst = &(&(c0 * c2).scale(&four) - &c1.pow(2)) - &(&c3.pow(2) * c0);
    &(&(&t.pow(3) - &(c2 * &t.pow(2))) + &(&lin * &t)) + &cst
}

/// sum/product data of the quadratics p1 = (x-v1)(x-v2), p2 = (x-v3)(x-v4).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairQuadratics {
    #[serde(serialize_with = "ser_poly")]
    pub sum1: MultiPoly,
    #[serde(serialize_with = "ser_poly")]
    pub product1: MultiPoly,
    #[serde(serialize_with = "ser_poly")]
    pub sum2: MultiPoly,
    #[serde(serialize_with = "ser_poly")]
    pub product2: MultiPoly,
    #[serde(serialize_with = "ser_poly")]
    pub p1: MultiPoly,
    #[serde(serialize_with = "ser_poly")]
    pub p2: MultiPoly,
    #[serde(serialize_with = "ser_poly")]
    pub d1: MultiPoly,
    #[serde(serialize_with = "ser_poly")]
    pub d2: MultiPoly,
}

pub(crate) fn ser_poly<S: serde::Serializer>(p: &MultiPoly, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// p1, p2 and their discriminants from the closed forms in e1..e4.
pub fn p1_p2(q: &Quartic) -> PairQuadratics {
    let sum1 = q.specialize(sum1_formula());
    let sum2 = q.specialize(sum2_formula());
    let product2 = q.specialize(product2_formula());
    let product1 = &q.specialize(g2_formula()) - &(&sum2 * &q.specialize(product1_factor()));
    let x = MultiPoly::var(Symbol::X);
    let quad = |s: &MultiPoly, p: &MultiPoly| &(&x.pow(2) - &(s * &x)) + p;
    let disc = |s: &MultiPoly, p: &MultiPoly| &s.pow(2) - &p.scale(&Rational::from(4));
    PairQuadratics {
        p1: quad(&sum1, &product1),
        p2: quad(&sum2, &product2),
        d1: disc(&sum1, &product1),
        d2: disc(&sum2, &product2),
        sum1,
        product1,
        sum2,
        product2,
    }
}

/// The closed form for h with chosen values of v1..v4.
pub fn degree12_formula_at(q: &Quartic, v: &[MultiPoly; 4]) -> MultiPoly {
    q.specialize(degree12_formula()).substitute_all(&[
        (Symbol::V1, v[0].clone()),
        (Symbol::V2, v[1].clone()),
        (Symbol::V3, v[2].clone()),
        (Symbol::V4, v[3].clone()),
    ])
}

/// Degree-12 resolvent whose roots are the twelve sums s_i + s_j + s_l that
/// contain exactly one complementary pair of roots of k.
///
/// Let θ run over the roots of the resolvent cubic; θ = s + s' for a
/// complementary pair, so y^2 - θy + c0 divides k(y). The cofactor q_θ has
/// the other four roots, and h(x) = Res_θ(RC(θ), q_θ(x - θ)).
pub fn degree12_resolvent(q: &Quartic) -> Result<MultiPoly, Error> {
    let t = Symbol::T;
    let rc = resolvent_cubic(q, t);
    let tail = &rc - &MultiPoly::var(t).pow(3);
    let rule = [RewriteRule::new(t, 3, -tail)?];
    let x = MultiPoly::var(Symbol::X);
    let tv = MultiPoly::var(t);
    let k = two_set_resolvent(q);
    let pair = &(&x.pow(2) - &(&tv * &x)) + &q.c0;
    let (quot, rem) = k.div_rem(&pair)?;
    let rem = reduce(&rem, &rule);
    if !rem.is_zero() {
        return Err(Error::Invariant(format!(
            "y^2 - θy + c0 does not divide k(y) modulo the resolvent cubic: {rem}"
        )));
    }
    let shifted = reduce(&quot.substitute(Symbol::X, &(&x - &tv)), &rule);
    if !shifted.involves(t) {
        return Ok(shifted.pow(3));
    }
    resultant(&rc, &shifted, t)
}

/// The monic sextic C = x^6 + ... + k2*x^2 with h = C^2 + O(x^7); it is the
/// common part of the two sextic factors.
pub fn common_sextic(h: &MultiPoly) -> Result<MultiPoly, Error> {
    let x = Symbol::X;
    if h.degree_in(x) != Some(12) || !h.coeff_in(x, 12).is_one() {
        return Err(Error::Invalid("expected a monic degree-12 polynomial".into()));
    }
    let xp = MultiPoly::var(x);
    let mut c = xp.pow(6);
    let half = Rational::from(1) / Rational::from(2);
    for j in (2..=5).rev() {
        let gap = &h.coeff_in(x, 6 + j) - &c.pow(2).coeff_in(x, 6 + j);
        c = &c + &(&gap.scale(&half) * &xp.pow(j));
    }
    Ok(c)
}

/// Discriminant D of r(x^2).
pub fn octic_discriminant(q: &Quartic) -> Result<MultiPoly, Error> {
    discriminant(&q.octic(Symbol::X), Symbol::X)
}

/// Quadratic extension obtained by adjoining t with t^2 = delta, over a base
/// ring already reduced by `rules`.
#[derive(Clone, Debug)]
pub struct QuadraticField {
    pub delta: MultiPoly,
    pub rules: Vec<RewriteRule>,
}

impl QuadraticField {
    pub fn new(delta: MultiPoly, rules: Vec<RewriteRule>) -> Self {
        QuadraticField { delta, rules }
    }

    /// Q(sqrt(D)) over Q, represented through the squarefree part of D.
    pub fn rational(squarefree: Rational) -> Self {
        QuadraticField::new(MultiPoly::constant(squarefree), Vec::new())
    }

    /// Q(a,b,z)(w)(sqrt(-(4a^3+27b^2))) with the curve relation for P.
    pub fn origami(curve: &CurveSpec, p: &AffinePoint) -> Self {
        QuadraticField::new(-curve.d(), p.w_rules(curve))
    }

    pub fn reduce_base(&self, e: &MultiPoly) -> MultiPoly {
        if self.rules.is_empty() {
            e.clone()
        } else {
            reduce(e, &self.rules)
        }
    }

    pub fn reduce(&self, e: &MultiPoly) -> MultiPoly {
        let mut rules = self.rules.clone();
        rules.push(RewriteRule::new(Symbol::T, 2, self.delta.clone()).expect("t-free delta"));
        reduce(e, &rules)
    }

    /// m with value = m^2 * delta, when one exists in the base ring.
    pub fn sqrt_coefficient(&self, value: &MultiPoly) -> Option<MultiPoly> {
        let v = self.reduce_base(value);
        let ratio = v.exact_div(&self.delta).ok()?;
        let m = ratio.sqrt_exact()?;
        (self.reduce_base(&(&m.pow(2) * &self.delta)) == v).then_some(m)
    }
}

/// The two sextic factors of h over a quadratic field, or the reason there
/// are none.
#[derive(Clone, Debug)]
pub struct HFactorization {
    pub report: IdentityReport,
    pub common: MultiPoly,
    /// (C + v1 x + v3, C + v2 x + v4) in x and t, where t^2 = delta.
    pub factors: Option<(MultiPoly, MultiPoly)>,
}

/// Checks that h = (C + v1 x + v3)(C + v2 x + v4) with v1, v2 the roots of p1
/// and v3, v4 those of p2, over `field`. Both pairings of the square roots are
/// tried; the one giving h is kept.
pub fn verify_h_factorization(q: &Quartic, field: &QuadraticField) -> Result<HFactorization, Error> {
    let name = "h = (C + v1*x + v3)*(C + v2*x + v4) over the quadratic field";
    let h = field.reduce_base(&degree12_resolvent(q)?);
    let common = field.reduce_base(&common_sextic(&h)?);
    let pq = p1_p2(q);
    let (m1, m2) = match (
        field.sqrt_coefficient(&pq.d1),
        field.sqrt_coefficient(&pq.d2),
    ) {
        (Some(m1), Some(m2)) => (m1, m2),
        (s1, s2) => {
            let which = match (s1.is_some(), s2.is_some()) {
                (false, false) => "d1 and d2",
                (false, true) => "d1",
                _ => "d2",
            };
            return Ok(HFactorization {
                report: IdentityReport::fail(name, format!("{which} not of the form m^2 * {}", field.delta))
                    .with_note("v1..v4 do not all lie in the field, so this factorization does not exist"),
                common,
                factors: None,
            });
        }
    };
    let x = MultiPoly::var(Symbol::X);
    let t = MultiPoly::var(Symbol::T);
    let half = Rational::one() / Rational::from(2);
    let sum1 = field.reduce_base(&pq.sum1);
    let sum2 = field.reduce_base(&pq.sum2);
    let r1 = &m1 * &t;
    let r2 = &m2 * &t;
    let v1 = (&sum1 + &r1).scale(&half);
    let v2 = (&sum1 - &r1).scale(&half);
    let mut last = MultiPoly::zero();
    for sign in [1i64, -1] {
        let r2s = r2.scale(&Rational::from(sign));
        let v3 = (&sum2 + &r2s).scale(&half);
        let v4 = (&sum2 - &r2s).scale(&half);
        let fa = &(&common + &(&v1 * &x)) + &v3;
        let fb = &(&common + &(&v2 * &x)) + &v4;
        let diff = field.reduce(&(&(&fa * &fb) - &h));
        if diff.is_zero() {
            return Ok(HFactorization {
                report: IdentityReport::pass(name)
                    .with_note(format!("v3 pairs with sign {:+} on sqrt(d2)", sign)),
                common,
                factors: Some((fa, fb)),
            });
        }
        last = diff;
    }
    Ok(HFactorization {
        report: IdentityReport::fail(name, last.to_string())
            .with_note("neither pairing of the square roots reproduces h"),
        common,
        factors: None,
    })
}

/// Checks the closed form for h coefficient by coefficient against the
/// elimination route. The x coefficient involves v1*v4 + v2*v3, which is not
/// symmetric in each pair, so it is only reported, not compared.
pub fn verify_degree12_formula(q: &Quartic) -> Result<Vec<IdentityReport>, Error> {
    let h = degree12_resolvent(q)?;
    let f = q.specialize(degree12_formula());
    let v = [Symbol::V1, Symbol::V2, Symbol::V3, Symbol::V4];
    let zero_v: Vec<(Symbol, MultiPoly)> = v.iter().map(|s| (*s, MultiPoly::zero())).collect();
    let at_zero = |e: &MultiPoly| e.substitute_all(&zero_v);
    let lin = |s: Symbol| at_zero(&f.coeff_in(s, 1));
    let quad = |s1: Symbol, s2: Symbol| at_zero(&f.coeff_in(s1, 1).coeff_in(s2, 1));
    let mut out = Vec::new();
    out.push(IdentityReport::zero(
        "closed form is symmetric in v1,v2 and in v3,v4",
        &(&(&lin(Symbol::V1) - &lin(Symbol::V2)) + &(&lin(Symbol::V3) - &lin(Symbol::V4))),
    ));
    let cross = &quad(Symbol::V1, Symbol::V4) - &quad(Symbol::V2, Symbol::V3);
    let stray = &quad(Symbol::V1, Symbol::V3) + &quad(Symbol::V2, Symbol::V4);
    out.push(IdentityReport::zero(
        "only v1*v2, v3*v4 and v1*v4 + v2*v3 occur quadratically",
        &(&cross + &stray),
    ));
    let pq = p1_p2(q);
    let predicted = &(&(&(&at_zero(&f) + &(&lin(Symbol::V1) * &pq.sum1))
        + &(&lin(Symbol::V3) * &pq.sum2))
        + &(&quad(Symbol::V1, Symbol::V2) * &pq.product1))
        + &(&quad(Symbol::V3, Symbol::V4) * &pq.product2);
    let x = Symbol::X;
    let mut residual = MultiPoly::zero();
    for e in (0..=12).filter(|&e| e != 1) {
        let d = &predicted.coeff_in(x, e) - &h.coeff_in(x, e);
        residual = &residual + &(&d * &MultiPoly::var(x).pow(e));
    }
    let implied = &h.coeff_in(x, 1) - &predicted.coeff_in(x, 1);
    out.push(
        IdentityReport::zero("closed form for h matches the elimination route (x^1 excluded)", &residual)
            .with_note(format!("implied v1*v4 + v2*v3 = {implied}")),
    );
    Ok(out)
}

/// Factor of q - u complementary to the curve equation.
pub const Q_MINUS_U_COFACTOR: &str = "-2*a^3*b + 4*a^3*w^2 - 18*a^2*b*z^2 - 27*a*b^2*z - 27*b^3 \
    + 27*b^2*w^2 + 27*b^2*z^3";

/// q - u = -27*(z^3+az+b-w^2)*G, so q = u on the curve. The shorter form
/// 9*(z^3+az+b-w^2)*(2az+2b+2z^3-2w^2) is not an identity; its residual is
/// attached as a note.
pub fn verify_q_minus_u(curve: &CurveSpec, p: &AffinePoint) -> IdentityReport {
    let name = "q - u = -27*(z^3+a*z+b-w^2)*G = 0 on the curve";
    let spec = |e: &MultiPoly| p.specialize(&curve.specialize(e));
    let q = spec(&poly(Q_DISPLAY));
    let u = spec(&poly("(27*b*z^3 - 9*a^2*z^2 - a^3)^2"));
    let diff = &q - &u;
    let factored = spec(&poly(&format!("-27*(z^3 + a*z + b - w^2)*({Q_MINUS_U_COFACTOR})")));
    let shape = &diff - &factored;
    if !shape.is_zero() {
        return IdentityReport::fail(name, shape.to_string());
    }
    let short = spec(&poly("9*(z^3 + a*z + b - w^2)*(2*a*z + 2*b + 2*z^3 - 2*w^2)"));
    let short_residual = &diff - &short;
    let rep = IdentityReport::zero(name, &p.reduce(curve, &diff));
    if short_residual.is_zero() {
        rep
    } else {
        rep.with_note(format!(
            "9*(z^3+a*z+b-w^2)*(2*a*z+2*b+2*z^3-2*w^2) differs from q - u by {short_residual}"
        ))
    }
}

/// D, d1, d2 of the origami octic against their closed forms modulo the
/// curve. Sign variants of the closed forms are recorded as notes.
pub fn verify_origami_discriminants(
    curve: &CurveSpec,
    p: &AffinePoint,
) -> Result<Vec<IdentityReport>, Error> {
    let q = Quartic::origami(curve, p)?;
    let spec = |e: &str| p.specialize(&curve.specialize(&poly(e)));
    let red = |e: &MultiPoly| p.reduce(curve, e);
    let qd = spec(Q_DISPLAY);
    let u = spec("(27*b*z^3 - 9*a^2*z^2 - a^3)^2");
    let d3 = curve.d().pow(3);
    let mut out = Vec::new();

    let disc = octic_discriminant(&q)?;
    let expected = &(&d3 * &qd.pow(2)).scale(&Rational::from(-(1i64 << 32)));
    out.push(IdentityReport::zero(
        "Disc(r(x^2)) = -2^32*(4*a^3+27*b^2)^3*q^2",
        &red(&(&disc - expected)),
    ));

    let pq = p1_p2(&q);
    let k14 = Rational::from(1i64 << 14);
    let d1_neg = (&d3 * &u).scale(&-k14.clone());
    let mut rep = IdentityReport::zero("d1 = -2^14*(4*a^3+27*b^2)^3*u", &red(&(&pq.d1 - &d1_neg)));
    let d1_q = (&d3 * &qd).scale(&k14);
    let r = red(&(&pq.d1 - &d1_q));
    if !r.is_zero() {
        rep = rep.with_note(format!("the form +2^14*(4*a^3+27*b^2)^3*q leaves residual {r}"));
    }
    out.push(rep);

    let d2_expected = (&(&d3 * &u) * &spec("(2*a*z + 3*b)^2")).scale(&-(k14 * Rational::from(9)));
    out.push(IdentityReport::zero(
        "d2 = -2^14*3^2*(2*a*z+3*b)^2*(4*a^3+27*b^2)^3*u",
        &red(&(&pq.d2 - &d2_expected)),
    ));
    Ok(out)
}
