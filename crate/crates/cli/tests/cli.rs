use std::process::{Command, Output};

use origami_cli::commands::{self, CurveArgs};
use origami_cli::Report;
use origami_core::divpoly::{ec_mul, preimage_poly_x, CurveSpec, DivisionPolySet, Point, AffinePoint};
use origami_core::exactnum::{Rational, DEFAULT_EFFORT};
use origami_core::polyring::{MultiPoly, Symbol};
use proptest::prelude::*;
use serde_json::Value;

const E83: [&str; 8] = ["--a", "1269", "--b", "-10746", "--z", "15", "--w", "-108"];

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_origami"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v: Value = serde_json::from_slice(&out.stdout).expect("valid json");
    (v, out.status.code().unwrap())
}

fn without_timing(mut v: Value) -> Value {
    v["timing_ms"] = Value::from(0);
    v
}

fn keys(v: &Value) -> Vec<String> {
    v.as_object().unwrap().keys().cloned().collect()
}

fn assert_reparses(r: &Report) {
    for (name, p) in r.polys() {
        let back: MultiPoly = p.to_string().parse().unwrap();
        assert_eq!(&back, p, "{name} does not re-parse");
        let wrapped: MultiPoly = p.render_wrapped(40).parse().unwrap();
        assert_eq!(&wrapped, p, "{name} wrapped text does not re-parse");
    }
}

#[test]
fn preimage_83a1_text() {
    let out = run(&[&["preimage"][..], &E83[..]].concat());
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("x^4 - 60*x^3 - 2538*x^2 + 9828*x + 2255121"));
    assert!(text.contains("y^4 + 864*y^3 + 34992*y^2 - 11292058368"));
    assert!(text.contains("[PASS]"));
}

#[test]
fn preimage_83a1_json() {
    let (v, code) = run_json(&[&["preimage"][..], &E83[..]].concat());
    assert_eq!(code, 0);
    let o = &v["outputs"];
    let fxy: MultiPoly = o["f_xy"].as_str().unwrap().parse().unwrap();
    let printed: MultiPoly = "x^6 + 6345*x^4 + 864*x^3*y - 214920*x^3 - 8051805*x^2 + 1096416*x*y \
        + 54546696*x - 9284544*y - 2967360237"
        .parse()
        .unwrap();
    assert_eq!(fxy, printed);
    assert_eq!(o["galois_x3_ax_b"], "S3");
    assert_eq!(o["galois_f_y"]["group"], "S4");
    assert_eq!(o["galois_f_x"]["group"], "S4");
}

#[test]
fn golden_origami_83a1() {
    let (v, code) = run_json(&[&["origami"][..], &E83[..]].concat());
    assert_eq!(code, 0);
    let golden: Value = serde_json::from_str(include_str!("golden/origami_83a1.json")).unwrap();
    let v = without_timing(v);
    assert_eq!(keys(&v), ["command", "inputs", "outputs", "identities", "timing_ms"]);
    assert_eq!(keys(&v["outputs"]), keys(&golden["outputs"]));
    assert_eq!(v, golden);
}

#[test]
fn origami_reports_classification() {
    let r = commands::origami(&CurveArgs::numeric(1269, -10746, 15, -108), 50, DEFAULT_EFFORT).unwrap();
    assert!(r.passed());
    assert_reparses(&r);
    let Some(origami_cli::Output::Text(v)) = r.get("verdict") else { panic!() };
    assert_eq!(v, "HOL_Q8_COMPATIBLE");
}

#[test]
fn quotients_83a1() {
    let (v, code) = run_json(&[&["quotients"][..], &E83[..]].concat());
    assert_eq!(code, 0);
    let o = &v["outputs"];
    let h1: MultiPoly = o["h1"].as_str().unwrap().parse().unwrap();
    assert_eq!(h1, "x^4 - 2^17*3^12*83*x^2 + 2^27*3^18*83*x - 2^32*3^24*7^2*83".parse().unwrap());
    let beta: MultiPoly = o["beta"].as_str().unwrap().parse().unwrap();
    assert_eq!(
        beta,
        "(alpha^3 - 2^2*3^3*47*alpha^2 + 2^6*3^8*89*alpha + 2^12*3^13*83)/(2*3^5*199)"
            .parse()
            .unwrap()
    );
    let ids = v["identities"].as_array().unwrap();
    assert_eq!(ids.len(), 7);
    assert!(ids.iter().all(|i| i["status"] == "pass"));
}

#[test]
fn symbolic_quotients() {
    let r = commands::quotients(&CurveArgs::default()).unwrap();
    assert!(r.passed());
    assert_reparses(&r);
    assert!(r.get("beta").is_none());
}

#[test]
fn classify_verdicts() {
    let cases = [
        (["-2", "2", "4", "-4"], "WREATH"),
        (["864", "34992", "0", "-11292058368"], "HOL_Q8_COMPATIBLE"),
        (["0", "-5", "0", "4"], "INCONCLUSIVE"),
    ];
    for (c, verdict) in cases {
        let (v, code) = run_json(&["classify", "--c3", c[0], "--c2", c[1], "--c1", c[2], "--c0", c[3]]);
        assert_eq!(code, 0);
        assert_eq!(v["outputs"]["verdict"], verdict, "{c:?}");
    }
    let (v, _) = run_json(&["classify", "--c3", "-2", "--c2", "2", "--c1", "4", "--c0", "-4"]);
    assert_eq!(v["outputs"]["disc"], "-2^26 * 83^2");
}

#[test]
fn rationals_on_the_command_line() {
    let (v, code) = run_json(&["classify", "--c3", "1/2", "--c2", "-3/4", "--c1", "0", "--c0", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["inputs"]["c3"], "1/2");
    let r: MultiPoly = v["outputs"]["r"].as_str().unwrap().parse().unwrap();
    assert_eq!(r, "x^4 + x^3/2 - 3/4*x^2 + 5".parse().unwrap());
    let out = run(&["classify", "--c3", "0.5", "--c2", "0", "--c1", "0", "--c0", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validation_errors_exit_2() {
    let out = run(&["preimage", "--a", "1269", "--b", "-10746", "--z", "15", "--w", "-107"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("w^2 - (z^3 + a*z + b)"));

    let out = run(&["quotients", "--a", "-4", "--b", "0", "--z", "2", "--w", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("divides by 9b"));

    // (1, 0) is 2-torsion on y^2 = x^3 - 2x + 1
    let out = run(&["origami", "--a", "-2", "--b", "1", "--z", "1", "--w", "0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["origami", "--a", "1269", "--b", "-10746", "--z", "15"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["quotients", "--a", "-3", "--b", "2", "--z", "1", "--w", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_is_green_and_deterministic() {
    let (a, code) = run_json(&["verify"]);
    assert_eq!(code, 0);
    let (b, _) = run_json(&["verify"]);
    assert_eq!(without_timing(a.clone()), without_timing(b));
    let ids = a["identities"].as_array().unwrap();
    assert!(ids.len() >= 30);
    assert!(ids.iter().all(|i| i["status"] == "pass" && i.get("residual").is_none()));
}

#[test]
fn injected_fault_is_targeted() {
    for check in commands::FAULTABLE {
        let (v, code) = run_json(&["verify", "--inject-fault", check]);
        assert_eq!(code, 1, "{check}");
        let tag = format!("[{check}]");
        for id in v["identities"].as_array().unwrap() {
            let name = id["name"].as_str().unwrap();
            if id["status"] == "fail" {
                assert!(name.starts_with(&tag), "{check} broke {name}");
                assert!(id["residual"].is_string());
            }
        }
        assert_eq!(v["inputs"]["inject_fault"], *check);
    }
    let out = run(&["verify", "--inject-fault", "no-such-check"]);
    assert_eq!(out.status.code(), Some(2));
    let help = run(&["verify", "--help"]);
    assert!(!String::from_utf8_lossy(&help.stdout).contains("inject"));
}

#[test]
fn preimage_n4_composition_oracle() {
    // Q = (1, 1) on y^2 = x^3 - x + 1; the points [4]^-1 [4]Q include Q
    let a = Rational::from(-1);
    let b = Rational::from(1);
    let curve = CurveSpec::numeric(a.clone(), b.clone()).unwrap();
    let q = Point::Affine(Rational::from(1), Rational::from(1));
    let Point::Affine(z, w) = ec_mul(4, &q, &curve).unwrap() else { panic!() };
    let args = CurveArgs { a: Some(a), b: Some(b), z: Some(z.clone()), w: Some(w.clone()) };
    let r = commands::preimage(&args, 4, 2000).unwrap();
    assert_reparses(&r);
    let Some(origami_cli::Output::Poly(fx)) = r.get("f_x") else { panic!() };
    assert_eq!(fx.degree_in(Symbol::X), Some(16));
    assert_eq!(fx.eval(&[(Symbol::X, Rational::from(1))]), Some(Rational::from(0)));
    // same polynomial straight from the library
    let p = AffinePoint::numeric(z, w, &curve).unwrap();
    let direct = preimage_poly_x(&mut DivisionPolySet::new(&curve), 4, &p).unwrap();
    assert_eq!(fx, &direct);
    assert!(r.get("f_y").is_none());
}

#[test]
fn random_curve_smoke() {
    // (2, 4) on y^2 = x^3 - 2x + 12
    let args = CurveArgs::numeric(-2, 12, 2, 4);
    let r = commands::origami(&args, 30, 2000).unwrap();
    assert!(r.passed());
    assert_reparses(&r);
    let r = commands::quotients(&args).unwrap();
    assert!(r.passed());
    assert_reparses(&r);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn classify_output_reparses(c3 in -20i64..20, c2 in -20i64..20, c1 in -20i64..20, c0 in -20i64..20) {
        let q = |n: i64| Rational::from(n);
        if let Ok(r) = commands::classify(&q(c3), &q(c2), &q(c1), &q(c0), 2000) {
            assert_reparses(&r);
            let json = r.to_json();
            let text = serde_json::to_string(&json).unwrap();
            let back: Value = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back, json);
        }
    }
}
