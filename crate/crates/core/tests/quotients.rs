mod common;

use common::*;
use num_traits::Zero;
use origami_core::divpoly::{origami_quartic, AffinePoint, CurveSpec, Point};
use origami_core::elimination::{discriminant_rational, resultant};
use origami_core::exactnum::{same_square_class, squarefree_part, Rational, DEFAULT_EFFORT};
use origami_core::polyring::{poly, MultiPoly, Symbol};
use origami_core::quotients::*;
use origami_core::resolvent::galois::{quartic_galois_poly, QuarticGroup};
use origami_core::resolvent::modp;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn affine(c: &CurveSpec, p: &Point) -> Option<AffinePoint> {
    match p {
        Point::Affine(z, w) if !w.is_zero() => AffinePoint::numeric(z.clone(), w.clone(), c).ok(),
        _ => None,
    }
}

fn coeffs(p: &MultiPoly, s: Symbol) -> Vec<Rational> {
    p.univariate_rational(s).unwrap()
}

/// Random curves with b != 0 and a point of order > 2 on each.
fn samples(n: usize, seed: u64) -> Vec<(CurveSpec, AffinePoint)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < n {
        let (c, p1, p2) = random_curve_with_points(&mut rng);
        if let Some(pt) = sample_points(&c, &p1, &p2, 3).iter().find_map(|pt| affine(&c, pt)) {
            out.push((c, pt));
        }
    }
    out
}

#[test]
fn worked_example_83a1() {
    let qs = quotient_polys(&e83(), &p83()).unwrap();
    assert_eq!(qs.d, poly("2^8*3^12*83"));
    assert_eq!(qs.delta, poly("-2^12*3^12*83"));
    assert_eq!(qs.delta, qs.d.scale(&q(-16)));
    assert_eq!(qs.h1, poly("x^4 - 2^17*3^12*83*x^2 + 2^27*3^18*83*x - 2^32*3^24*7^2*83"));
    assert_eq!(qs.h2, poly("x^4 - 2^17*3^12*83*x^2 + 2^27*3^18*83*x + 2^30*3^25*83*181"));
    assert_eq!(qs.h3, poly("x^4 + 2^5*3^3*x^3 + 2^4*3^7*x^2 - 2^8*3^12*83"));
    assert_eq!(qs.g, poly("x^4 + 2^14*3^12*83*x + 2^14*3^16*47*83"));
    assert_eq!(
        qs.t4,
        poly(
            "x^12 - 2^2*3^6*199*x^10 + 2^8*3^13*11*83*x^8 - 2^11*3^18*83*199*x^6 \
             - 2^16*3^25*11*83^2*x^4 - 2^18*3^30*83^2*199*x^2 - 2^24*3^36*83^3"
        )
    );
    for (f, deg) in [(&qs.h1, 4), (&qs.h2, 4), (&qs.h3, 4), (&qs.g, 4), (&qs.t4, 12)] {
        assert_eq!(f.degree_in(Symbol::X), Some(deg));
        assert_eq!(f.coeff_in(Symbol::X, deg), MultiPoly::one());
    }
}

#[test]
fn beta_at_83a1() {
    let beta = beta_map(&e83(), &p83()).unwrap();
    assert_eq!(beta.denominator, poly("2*3^5*199"));
    assert_eq!(
        beta.as_poly().unwrap(),
        poly("(alpha^3 - 2^2*3^3*47*alpha^2 + 2^6*3^8*89*alpha + 2^12*3^13*83)/(2*3^5*199)")
    );
    // the printed 8a^2 would give a different alpha coefficient
    let printed = &(&poly("8*a^2 - 72*b*z")).substitute_all(&[
        (Symbol::A, poly("1269")),
        (Symbol::B, poly("-10746")),
        (Symbol::Z, poly("15")),
    ]);
    assert_ne!(printed, &poly("2^6*3^8*89"));
}

#[test]
fn beta_generic_shape() {
    let beta = beta_map(&CurveSpec::symbolic(), &AffinePoint::symbolic()).unwrap();
    assert_eq!(beta.denominator, poly("-9*b"));
    assert_eq!(beta.numerator.coeff_in(Symbol::Alpha, 3), MultiPoly::one());
    assert_eq!(beta.numerator.coeff_in(Symbol::Alpha, 0), poly("48*(4*a^3 + 27*b^2)"));
}

#[test]
fn symbolic_isomorphism_reduces_to_zero() {
    let w = verify_isomorphism(&CurveSpec::symbolic(), &AffinePoint::symbolic()).unwrap();
    for s in &w.stages {
        assert!(s.passed(), "{s:?}");
    }
    assert_eq!(w.stages.len(), 6);
    assert!(w.reduced.is_zero());
    assert_eq!(w.expansion.degree_in(Symbol::Alpha), Some(12));
    assert_eq!(w.coefficients[0], poly(stages::C3).to_string());
    let json = serde_json::to_value(&w).unwrap();
    assert!(json["stages"].as_array().unwrap().iter().all(|s| s["name"].is_string()));
}

#[test]
fn modular_roots_at_83a1() {
    let r = inverse_direction_check(&e83(), &p83()).unwrap();
    assert!(r.passed(), "{r:?}");
}

/// Independent modular oracle: evaluate h1 at beta(alpha) for every root alpha
/// of g mod p, straight from the rational coefficients.
fn modular_oracle(c: &CurveSpec, p: &AffinePoint) -> bool {
    let qs = quotient_polys(c, p).unwrap();
    let g = coeffs(&qs.g, Symbol::X);
    let h1 = coeffs(&qs.h1, Symbol::X);
    let beta = coeffs(&beta_map(c, p).unwrap().as_poly().unwrap(), Symbol::Alpha);
    let prime = (1_000_003u64..)
        .step_by(2)
        .filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .find(|&p| {
            let ok = beta.iter().chain(&g).chain(&h1).all(|r| r.mod_u64(p).is_some());
            ok && modp::roots(&modp::from_rationals(&g, p).unwrap(), p).len() == 4
        })
        .unwrap();
    let gp = modp::from_rationals(&g, prime).unwrap();
    let hp = modp::from_rationals(&h1, prime).unwrap();
    let bp = modp::from_rationals(&beta, prime).unwrap();
    let images: std::collections::BTreeSet<u64> = modp::roots(&gp, prime)
        .into_iter()
        .map(|a| modp::eval(&bp, a, prime))
        .collect();
    images.len() == 4 && images.iter().all(|&b| modp::eval(&hp, b, prime) == 0)
}

#[test]
fn random_curves() {
    let w = verify_isomorphism(&CurveSpec::symbolic(), &AffinePoint::symbolic()).unwrap();
    assert!(w.passed());
    for (c, p) in samples(20, 11) {
        let qs = quotient_polys(&c, &p).unwrap();
        let numeric = verify_isomorphism(&c, &p).unwrap();
        assert!(numeric.passed(), "{c:?} {p:?}");
        assert!(modular_oracle(&c, &p), "{c:?} {p:?}");

        let dg = discriminant_rational(&coeffs(&qs.g, Symbol::X)).unwrap();
        let dh = discriminant_rational(&coeffs(&qs.h1, Symbol::X)).unwrap();
        // equal squarefree parts, without factoring
        assert!(same_square_class(&dg, &dh));

        let from_divpoly = origami_quartic(&c, &p).unwrap().substitute(Symbol::Y, &MultiPoly::var(Symbol::X));
        assert_eq!(qs.h3, from_divpoly);
    }
}

#[test]
fn h3_is_the_origami_quartic() {
    let c = CurveSpec::symbolic();
    let p = AffinePoint::symbolic();
    let qs = quotient_polys(&c, &p).unwrap();
    let oq = origami_quartic(&c, &p).unwrap();
    assert_eq!(qs.h3, oq.substitute(Symbol::Y, &MultiPoly::var(Symbol::X)));
}

#[test]
fn t4_is_the_y_eliminant_of_psi4() {
    // roots of T4 are the y-coordinates of the points of exact order 4
    let sextic = poly("x^6 + 5*a*x^4 + 20*b*x^3 - 5*a^2*x^2 - 4*a*b*x - 8*b^2 - a^3");
    let curve = poly("x^3 + a*x + b - y^2");
    let r = resultant(&sextic, &curve, Symbol::X).unwrap();
    let qs = quotient_polys(&CurveSpec::symbolic(), &AffinePoint::symbolic()).unwrap();
    let lead = r.coeff_in(Symbol::Y, 12);
    let t4 = qs.t4.substitute(Symbol::X, &MultiPoly::var(Symbol::Y));
    assert_eq!(r, &t4 * &lead);
}

#[test]
fn galois_groups_are_s4_at_83a1() {
    let qs = quotient_polys(&e83(), &p83()).unwrap();
    for f in [&qs.h1, &qs.h2, &qs.h3, &qs.g] {
        assert_eq!(quartic_galois_poly(f, Symbol::X).unwrap(), QuarticGroup::S4, "{f}");
    }
    let sf = |f: &MultiPoly| {
        let d = discriminant_rational(&coeffs(f, Symbol::X)).unwrap();
        squarefree_part(&d, DEFAULT_EFFORT).unwrap()
    };
    assert_eq!(sf(&qs.g), sf(&qs.h1));
}

#[test]
fn b_zero_is_rejected() {
    let c = CurveSpec::numeric(q(-4), q(0)).unwrap();
    let p = AffinePoint::numeric(q(2), q(0), &c).unwrap();
    assert!(beta_map(&c, &p).unwrap_err().to_string().contains("divides by 9b"));
    assert!(verify_isomorphism(&c, &p).is_err());
    assert!(quotient_polys(&c, &p).is_ok());
}

#[test]
fn singular_curve_is_rejected() {
    assert!(CurveSpec::numeric(q(-3), q(2)).is_err());
}

#[test]
fn reducible_g_precondition() {
    // a = 0: g = x^4 - 4*Delta*x has the root 0
    let c = CurveSpec::numeric(q(0), q(1)).unwrap();
    let p = AffinePoint::numeric(q(2), q(3), &c).unwrap();
    let r = inverse_direction_check(&c, &p).unwrap();
    assert!(!r.passed());
    assert!(format!("{r:?}").contains("precondition"));
}

#[test]
fn beta_is_never_constant() {
    for (c, p) in samples(100, 5) {
        let beta = beta_map(&c, &p).unwrap().as_poly().unwrap();
        assert_eq!(beta.degree_in(Symbol::Alpha), Some(3));
    }
}
