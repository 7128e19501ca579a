use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use origami_core::elimination::{discriminant, resultant};
use origami_core::exactnum::{factor, is_probable_prime, is_square, squarefree_part, Rational};
use origami_core::polyring::{parse, reduce, Monomial, MultiPoly, RewriteRule, Symbol};
use proptest::prelude::*;

const VARS: [Symbol; 4] = [Symbol::X, Symbol::Y, Symbol::Z, Symbol::A];

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..200).prop_map(|(n, d)| Rational::new(n.into(), d.into()).unwrap())
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn reduced(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

fn term() -> impl Strategy<Value = (Monomial, Rational)> {
    (proptest::array::uniform4(0u16..4), -6i64..6, 1i64..4).prop_map(|(e, n, d)| {
        let mut m = Monomial::one();
        for (s, k) in VARS.iter().zip(e) {
            m = m.with_degree(*s, k);
        }
        (m, Rational::new(n.into(), d.into()).unwrap())
    })
}

fn small_poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec(term(), 0..6).prop_map(MultiPoly::from_terms)
}

/// Univariate in x with coefficients in a, degree exactly `deg`.
fn x_poly_over_a(deg: u32) -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((-4i64..4, -4i64..4), deg as usize + 1).prop_map(move |cs| {
        let coeffs: Vec<MultiPoly> = cs
            .iter()
            .enumerate()
            .map(|(i, &(c0, c1))| {
                let lead = i as u32 == deg && c0 == 0 && c1 == 0;
                let c0 = if lead { 1 } else { c0 };
                &MultiPoly::int(c0) + &MultiPoly::var(Symbol::A).scale(&Rational::from(c1))
            })
            .collect();
        MultiPoly::from_univariate(Symbol::X, &coeffs)
    })
}

fn int_x_poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec(-5i64..5, 2..5).prop_map(|mut cs| {
        if *cs.last().unwrap() == 0 {
            *cs.last_mut().unwrap() = 1;
        }
        let coeffs: Vec<MultiPoly> = cs.into_iter().map(MultiPoly::int).collect();
        MultiPoly::from_univariate(Symbol::X, &coeffs)
    })
}

fn x_gcd(mut f: MultiPoly, mut g: MultiPoly) -> MultiPoly {
    while !g.is_zero() {
        let (_, r) = f.div_rem(&g).unwrap();
        f = g;
        g = r;
    }
    f
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn field_axioms(p in rational(), q in rational(), r in rational()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p - &q) + &q, p.clone());
        for v in [&p + &q, &p - &q, &p * &q, -&p] {
            prop_assert!(reduced(&v));
        }
        if !q.is_zero() {
            let v = &p / &q;
            prop_assert!(reduced(&v));
            prop_assert_eq!(&v * &q, p.clone());
            prop_assert_eq!(&q * &q.recip().unwrap(), Rational::one());
        }
    }

    #[test]
    fn square_iff_unit_squarefree_part(p in nonzero_rational(), square in any::<bool>()) {
        let q = if square { &p * &p } else { p };
        let sf = squarefree_part(&q, 10_000).unwrap();
        prop_assert_eq!(is_square(&q), sf.is_one());
    }

    #[test]
    fn canonical_form_is_unique(p in small_poly(), q in small_poly()) {
        prop_assert_eq!((&p - &q).is_zero(), p.terms() == q.terms());
        prop_assert!(p.terms().iter().all(|(_, c)| !c.is_zero()));
        prop_assert!((&p - &p).terms().is_empty());
    }

    #[test]
    fn ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn text_round_trip(p in small_poly()) {
        let text = p.to_string();
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(parse(&p.render_wrapped(30)).unwrap(), p);
    }

    #[test]
    fn product_rule(p in small_poly(), q in small_poly()) {
        for s in VARS {
            let lhs = (&p * &q).derivative(s);
            let rhs = &(&p.derivative(s) * &q) + &(&p * &q.derivative(s));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn reduce_is_a_homomorphism(p in small_poly(), q in small_poly()) {
        let rules = [RewriteRule::curve_y()];
        let rp = reduce(&p, &rules);
        prop_assert_eq!(reduce(&rp, &rules), rp.clone());
        prop_assert!(rp.degree_in(Symbol::Y).unwrap_or(0) < 2);
        let rq = reduce(&q, &rules);
        prop_assert_eq!(reduce(&(&p * &q), &rules), reduce(&(&rp * &rq), &rules));
        prop_assert_eq!(reduce(&(&p + &q), &rules), &rp + &rq);
    }

    #[test]
    fn substitution_distributes(p in small_poly(), q in small_poly(), v in small_poly()) {
        let v = v.substitute(Symbol::X, &MultiPoly::zero());
        let sub = |f: &MultiPoly| f.substitute(Symbol::X, &v);
        prop_assert_eq!(sub(&(&p + &q)), &sub(&p) + &sub(&q));
        prop_assert_eq!(sub(&(&p * &q)), &sub(&p) * &sub(&q));
    }

    #[test]
    fn exact_division_inverts_multiplication(p in small_poly(), q in small_poly()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn resultant_antisymmetry(
        (a, b) in (1u32..4, 1u32..4).prop_flat_map(|(da, db)| (x_poly_over_a(da), x_poly_over_a(db)))
    ) {
        let (da, db) = (a.degree_in(Symbol::X).unwrap(), b.degree_in(Symbol::X).unwrap());
        let ab = resultant(&a, &b, Symbol::X).unwrap();
        let ba = resultant(&b, &a, Symbol::X).unwrap();
        let sign = if (da * db) % 2 == 1 { -ba } else { ba };
        prop_assert_eq!(ab, sign);
    }

    #[test]
    fn resultant_is_multiplicative(a in x_poly_over_a(2), c in x_poly_over_a(1), b in x_poly_over_a(2)) {
        let lhs = resultant(&(&a * &c), &b, Symbol::X).unwrap();
        let rhs = &resultant(&a, &b, Symbol::X).unwrap() * &resultant(&c, &b, Symbol::X).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn specialization_commutes(a in x_poly_over_a(3), b in x_poly_over_a(2), t in rational()) {
        let at = MultiPoly::constant(t.clone());
        let (sa, sb) = (a.substitute(Symbol::A, &at), b.substitute(Symbol::A, &at));
        prop_assume!(sa.degree_in(Symbol::X) == Some(3) && sb.degree_in(Symbol::X) == Some(2));
        let generic = resultant(&a, &b, Symbol::X).unwrap().substitute(Symbol::A, &at);
        prop_assert_eq!(generic, resultant(&sa, &sb, Symbol::X).unwrap());
    }

    #[test]
    fn discriminant_detects_repeated_roots(g in int_x_poly(), r in -4i64..4, k in 1u32..3) {
        let lin = &MultiPoly::var(Symbol::X) - &MultiPoly::int(r);
        let f = &g * &lin.pow(k);
        let d = discriminant(&f, Symbol::X).unwrap();
        let repeated = x_gcd(f.clone(), f.derivative(Symbol::X)).degree_in(Symbol::X).unwrap_or(0) > 0;
        prop_assert_eq!(d.is_zero(), repeated);
        if k == 2 {
            prop_assert!(d.is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn factor_multiplies_back(bytes in proptest::array::uniform32(any::<u8>()), neg in any::<bool>()) {
        let n = BigInt::from_bytes_be(if neg { Sign::Minus } else { Sign::Plus }, &bytes);
        prop_assume!(!n.is_zero());
        let f = factor(&n, 200);
        prop_assert_eq!(f.value(), n);
        prop_assert!(f.factors.iter().all(|(p, e)| *e > 0 && is_probable_prime(p)));
        prop_assert!(f.factors.windows(2).all(|w| w[0].0 < w[1].0));
    }
}
