use origami_core::divpoly::{
    origami_octic, origami_quartic, origami_quartic_via_resultant, preimage_poly_x,
    preimage_poly_xy, verify_coefficient_reductions, verify_s_identity, AffinePoint, CurveSpec,
    DivisionPolySet, PointSign,
};
use origami_core::elimination::discriminant_rational;
use origami_core::exactnum::{factor_rational_display, Rational};
use origami_core::polyring::{MultiPoly, Symbol};
use origami_core::quotients::{beta_map, inverse_direction_check, quotient_polys, verify_isomorphism};
use origami_core::report::IdentityReport;
use origami_core::resolvent::{
    classify_octic, cubic_galois, frobenius_report, irreducibility_certificate, normalizer_in_s8,
    p1_p2, two_set_resolvent, verify_degree12_formula,
    verify_h_factorization, verify_origami_discriminants, verify_q_minus_u, Quartic,
    QuadraticField,
};
use origami_core::resolvent::galois::quartic_galois_poly;
use origami_core::resolvent::perm::quaternion_q8;
use origami_core::{Error, Result};
use serde_json::{json, Value};

use crate::report::Report;

/// Curve and point as given on the command line.
#[derive(Clone, Debug, Default)]
pub struct CurveArgs {
    pub a: Option<Rational>,
    pub b: Option<Rational>,
    pub z: Option<Rational>,
    pub w: Option<Rational>,
}

impl CurveArgs {
    pub fn numeric(a: i64, b: i64, z: i64, w: i64) -> Self {
        CurveArgs {
            a: Some(a.into()),
            b: Some(b.into()),
            z: Some(z.into()),
            w: Some(w.into()),
        }
    }

    fn is_symbolic(&self) -> bool {
        self.a.is_none() && self.b.is_none() && self.z.is_none() && self.w.is_none()
    }

    /// Numeric curve and point; every value must be present.
    fn resolve(&self) -> Result<(CurveSpec, AffinePoint)> {
        let need = |v: &Option<Rational>, name: &str| {
            v.clone()
                .ok_or_else(|| Error::Invalid(format!("missing --{name}")))
        };
        let curve = CurveSpec::numeric(need(&self.a, "a")?, need(&self.b, "b")?)?;
        let p = AffinePoint::numeric(need(&self.z, "z")?, need(&self.w, "w")?, &curve)?;
        Ok((curve, p))
    }

    /// As `resolve`, or fully symbolic when no value is given.
    fn resolve_or_symbolic(&self) -> Result<(CurveSpec, AffinePoint)> {
        if self.is_symbolic() {
            Ok((CurveSpec::symbolic(), AffinePoint::symbolic()))
        } else {
            self.resolve()
        }
    }

    fn record(&self, r: &mut Report) {
        for (k, v) in [("a", &self.a), ("b", &self.b), ("z", &self.z), ("w", &self.w)] {
            r.input(k, v.as_ref().map_or_else(|| k.to_string(), |q| q.to_string()));
        }
    }
}

fn coeffs(p: &MultiPoly, s: Symbol) -> Result<Vec<Rational>> {
    p.univariate_rational(s)
        .ok_or_else(|| Error::Domain(format!("expected a numeric polynomial in {s}, got {p}")))
}

fn factored_disc(p: &MultiPoly, s: Symbol, effort: u64) -> Result<String> {
    let d = discriminant_rational(&coeffs(p, s)?)?;
    Ok(factor_rational_display(&d, effort))
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable report data")
}

pub fn preimage(args: &CurveArgs, n: i64, effort: u64) -> Result<Report> {
    let mut r = Report::new("preimage");
    args.record(&mut r);
    r.input("n", n);
    let (curve, p) = args.resolve()?;
    if !(2..=6).contains(&n) {
        return Err(Error::Invalid(format!("--n must be between 2 and 6, got {n}")));
    }
    let mut set = DivisionPolySet::new(&curve);
    let fx = preimage_poly_x(&mut set, n, &p)?;
    let fxy = preimage_poly_xy(&mut set, n, &p)?;
    let (a, b) = curve.numeric_values().expect("numeric curve");
    r.json("galois_x3_ax_b", to_json(&cubic_galois(&a, &b)?));
    r.poly("f_x", fx.clone());
    r.poly("f_xy", fxy);
    r.json(
        "f_x_irreducibility",
        to_json(&irreducibility_certificate(&coeffs(&fx, Symbol::X)?, 40)),
    );
    r.text("disc_f_x", factored_disc(&fx, Symbol::X, effort)?);
    if n == 2 {
        let fy = origami_quartic_via_resultant(&curve, &p)?;
        r.identity(IdentityReport::zero(
            "Res_x(f_x, f_xy)/(4096*d^2*w^4) = y^4 - 8*w*y^3 + 6*(2*a*z+3*b)*y^2 - d",
            &(&fy - &origami_quartic(&curve, &p)?),
        ));
        r.json("galois_f_x", to_json(&quartic_galois_poly(&fx, Symbol::X)?));
        r.json("galois_f_y", to_json(&quartic_galois_poly(&fy, Symbol::Y)?));
        r.text("disc_f_y", factored_disc(&fy, Symbol::Y, effort)?);
        r.poly("f_y", fy);
    }
    Ok(r)
}

pub fn origami(args: &CurveArgs, primes: usize, effort: u64) -> Result<Report> {
    let mut r = Report::new("origami");
    args.record(&mut r);
    r.input("primes", primes);
    let (curve, p) = args.resolve()?;
    let plus = origami_octic(&curve, &p, PointSign::Plus)?;
    let minus = origami_octic(&curve, &p, PointSign::Minus)?;
    let quartic = Quartic::origami(&curve, &p)?;
    r.poly("f_y", origami_quartic(&curve, &p)?);
    r.poly("f_E_Q8_P", plus.clone());
    r.poly("f_E_Q8_minus_P", minus);
    r.poly("k", two_set_resolvent(&quartic));

    let c = classify_octic(&quartic)?;
    r.text("verdict", c.verdict.to_string());
    r.text("disc", factor_rational_display(&c.discriminant, effort));
    r.text("d1", factor_rational_display(&c.d1, effort));
    r.text("d2", factor_rational_display(&c.d2, effort));
    r.json("octic_irreducible", to_json(&c.octic_irreducible));
    r.json("resolvent_cubic", to_json(&c.resolvent_cubic));
    if !c.notes.is_empty() {
        r.json("notes", to_json(&c.notes));
    }

    let freq = frobenius_report(&coeffs(&plus, Symbol::Y)?, primes)?;
    let hol = normalizer_in_s8(&quaternion_q8())?;
    let outside: Vec<String> = freq
        .outside(&origami_core::resolvent::cycle_type_set(&hol))
        .iter()
        .map(|m| origami_core::resolvent::frobenius::multiset_key(m))
        .collect();
    r.json(
        "frobenius",
        json!({
            "primes": freq.rows.len(),
            "patterns": freq.aggregate,
            "outside_hol_q8": outside,
        }),
    );

    r.identity(verify_s_identity(&curve, &p)?);
    for rep in verify_coefficient_reductions(&curve, &p)? {
        r.identity(rep);
    }
    r.identity(verify_q_minus_u(&curve, &p));
    for rep in verify_origami_discriminants(&curve, &p)? {
        r.identity(rep);
    }
    Ok(r)
}

pub fn quotients(args: &CurveArgs) -> Result<Report> {
    let mut r = Report::new("quotients");
    args.record(&mut r);
    let (curve, p) = args.resolve_or_symbolic()?;
    let qs = quotient_polys(&curve, &p)?;
    let beta = beta_map(&curve, &p)?;
    r.poly("d", qs.d);
    r.poly("delta", qs.delta);
    r.poly("h1", qs.h1);
    r.poly("h2", qs.h2);
    r.poly("h3", qs.h3);
    r.poly("g", qs.g);
    r.poly("T4", qs.t4);
    r.poly("beta_numerator", beta.numerator.clone());
    r.poly("beta_denominator", beta.denominator.clone());
    if let Some(bp) = beta.as_poly() {
        r.poly("beta", bp);
    }
    let witness = verify_isomorphism(&curve, &p)?;
    for s in witness.stages {
        r.identity(s);
    }
    if curve.is_numeric() {
        r.identity(inverse_direction_check(&curve, &p)?);
    }
    Ok(r)
}

pub fn classify(c3: &Rational, c2: &Rational, c1: &Rational, c0: &Rational, effort: u64) -> Result<Report> {
    let mut r = Report::new("classify");
    for (k, v) in [("c3", c3), ("c2", c2), ("c1", c1), ("c0", c0)] {
        r.input(k, v);
    }
    let q = Quartic::from_rationals(c3.clone(), c2.clone(), c1.clone(), c0.clone());
    r.poly("r", q.poly(Symbol::X));
    r.poly("octic", q.octic(Symbol::X));
    let c = classify_octic(&q)?;
    let pq = p1_p2(&q);
    r.poly("p1", pq.p1);
    r.poly("p2", pq.p2);
    r.text("verdict", c.verdict.to_string());
    r.text("disc", factor_rational_display(&c.discriminant, effort));
    r.text("d1", factor_rational_display(&c.d1, effort));
    r.text("d2", factor_rational_display(&c.d2, effort));
    r.json("octic_irreducible", to_json(&c.octic_irreducible));
    r.json("resolvent_cubic", to_json(&c.resolvent_cubic));
    if let Some(sf) = &c.squarefree {
        r.json("squarefree_parts", json!({"disc": sf[0], "d1": sf[1], "d2": sf[2]}));
    }
    if !c.notes.is_empty() {
        r.json("notes", to_json(&c.notes));
    }
    Ok(r)
}

/// Checks run by `verify`, in report order.
pub const CHECKS: &[&str] = &[
    "s-identity",
    "coefficient-reductions",
    "q-minus-u",
    "discriminants",
    "h-factorization",
    "isomorphism-stages",
    "degree12-formula",
    "quotients-83a1",
];

fn e83() -> Result<CurveSpec> {
    CurveSpec::numeric(1269.into(), (-10746).into())
}

fn p83(e: &CurveSpec) -> Result<AffinePoint> {
    AffinePoint::numeric(15.into(), (-108).into(), e)
}

/// Checks whose inputs `--inject-fault` can perturb.
pub const FAULTABLE: &[&str] = &[
    "s-identity",
    "coefficient-reductions",
    "q-minus-u",
    "discriminants",
    "h-factorization",
    "isomorphism-stages",
    "quotients-83a1",
];

/// The symbolic point, or one moved off the curve when the check is the
/// target of an injected fault.
fn point_for(check: &str, fault: Option<&str>) -> AffinePoint {
    let p = AffinePoint::symbolic();
    if fault == Some(check) {
        AffinePoint::unchecked(p.z.clone(), &p.w + &MultiPoly::one())
    } else {
        p
    }
}

fn run_check(check: &str, fault: Option<&str>) -> Result<Vec<IdentityReport>> {
    let curve = CurveSpec::symbolic();
    let p = point_for(check, fault);
    Ok(match check {
        "s-identity" => vec![verify_s_identity(&curve, &p)?],
        "coefficient-reductions" => verify_coefficient_reductions(&curve, &p)?,
        "q-minus-u" => vec![verify_q_minus_u(&curve, &p)],
        "discriminants" => verify_origami_discriminants(&curve, &p)?,
        "h-factorization" => {
            let q = Quartic::origami(&curve, &p)?;
            let field = QuadraticField::origami(&curve, &AffinePoint::symbolic());
            vec![verify_h_factorization(&q, &field)?.report]
        }
        "isomorphism-stages" => verify_isomorphism(&curve, &p)?.stages,
        "degree12-formula" => {
            let e = e83()?;
            let mut out = verify_degree12_formula(&Quartic::origami(&e, &p83(&e)?)?)?;
            out.extend(verify_degree12_formula(&Quartic::from_ints(-2, 2, 4, -4))?);
            out
        }
        "quotients-83a1" => {
            let e = e83()?;
            let p = if fault == Some(check) {
                AffinePoint::unchecked(MultiPoly::int(15), MultiPoly::int(-107))
            } else {
                p83(&e)?
            };
            let mut out = verify_isomorphism(&e, &p)?.stages;
            out.push(inverse_direction_check(&e, &p)?);
            out
        }
        other => return Err(Error::Invalid(format!("unknown check {other:?}"))),
    })
}

/// Every exact identity in one pass. Checks run concurrently; the report
/// keeps the order of [`CHECKS`].
pub fn verify(fault: Option<&str>) -> Result<Report> {
    let mut r = Report::new("verify");
    if let Some(f) = fault {
        if !FAULTABLE.contains(&f) {
            return Err(Error::Invalid(format!(
                "no fault hook for {f:?}; expected one of {}",
                FAULTABLE.join(", ")
            )));
        }
        r.input("inject_fault", f);
    }
    let results: Vec<Result<Vec<IdentityReport>>> = std::thread::scope(|s| {
        let handles: Vec<_> = CHECKS
            .iter()
            .map(|c| s.spawn(move || run_check(c, fault)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    });
    let mut counts = serde_json::Map::new();
    for (check, res) in CHECKS.iter().zip(results) {
        let reps = match res {
            Ok(reps) => reps,
            Err(e) => vec![IdentityReport::fail(format!("{check}: evaluation"), e.to_string())],
        };
        let passed = reps.iter().filter(|x| x.passed()).count();
        counts.insert((*check).into(), json!(format!("{passed}/{}", reps.len())));
        for mut rep in reps {
            rep.name = format!("[{check}] {}", rep.name);
            r.identity(rep);
        }
    }
    r.json("checks", Value::Object(counts));
    Ok(r)
}
