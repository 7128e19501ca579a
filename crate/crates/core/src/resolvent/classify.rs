use num_traits::Zero;
use serde::Serialize;

use super::galois::{cubic_galois_poly, irreducibility_certificate, CubicGroup, Irreducibility};
use super::quartic::Quartic;
use super::resolvents::{p1_p2, resolvent_cubic};
use crate::elimination::discriminant_rational;
use crate::error::Error;
use crate::exactnum::{is_square, same_square_class, squarefree_part, Rational, DEFAULT_EFFORT};
use crate::polyring::Symbol;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    HolQ8Compatible,
    Wreath,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::HolQ8Compatible => "HOL_Q8_COMPATIBLE",
            Verdict::Wreath => "WREATH",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub octic_irreducible: Irreducibility,
    pub resolvent_cubic: Option<CubicGroup>,
    #[serde(serialize_with = "ser_rat")]
    pub discriminant: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub d1: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub d2: Rational,
    /// Squarefree parts of D, d1, d2 when the factorization finished.
    pub squarefree: Option<[String; 3]>,
    pub notes: Vec<String>,
}

fn ser_rat<S: serde::Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// Decides between Hol(Q8) and S2 wr S4 for r(x^2): h splits over Q(sqrt D)
/// exactly when d1 and d2 lie in the square class of D.
pub fn classify_octic(q: &Quartic) -> Result<Classification, Error> {
    let octic = q
        .octic_coeffs()
        .ok_or_else(|| Error::Domain("classify_octic needs rational coefficients".into()))?;
    let pq = p1_p2(q);
    let value = |p: &crate::polyring::MultiPoly| p.constant_value().unwrap_or_else(Rational::zero);
    let (d1, d2) = (value(&pq.d1), value(&pq.d2));
    let disc = discriminant_rational(&octic)?;
    let mut notes = Vec::new();

    let irreducible = irreducibility_certificate(&octic, 40);
    let rc = resolvent_cubic(q, Symbol::X)
        .univariate_rational(Symbol::X)
        .expect("numeric resolvent cubic");
    let cubic = cubic_galois_poly(&rc).ok();

    let squarefree = [&disc, &d1, &d2]
        .iter()
        .map(|v| squarefree_part(v, DEFAULT_EFFORT).map(|s| s.to_string()))
        .collect::<Result<Vec<_>, _>>()
        .ok()
        .map(|v| [v[0].clone(), v[1].clone(), v[2].clone()]);

    let mut inconclusive = false;
    if !irreducible.is_certified() {
        notes.push(format!("r(x^2) not certified irreducible: {irreducible:?}"));
        inconclusive = true;
    }
    if cubic != Some(CubicGroup::S3) {
        let group = cubic.map_or_else(|| "undetermined".to_string(), |g| format!("{g:?}"));
        notes.push(format!("resolvent cubic of r has group {group}, not S3"));
        inconclusive = true;
    }
    if disc.is_zero() || is_square(&disc) {
        notes.push("discriminant of r(x^2) is a square or zero".into());
        inconclusive = true;
    }
    if d1.is_zero() || d2.is_zero() {
        notes.push("degenerate discriminant: d1*d2 = 0".into());
        inconclusive = true;
    }

    let verdict = if inconclusive {
        Verdict::Inconclusive
    } else if same_square_class(&d1, &disc) && same_square_class(&d2, &disc) {
        Verdict::HolQ8Compatible
    } else {
        Verdict::Wreath
    };
    Ok(Classification {
        verdict,
        octic_irreducible: irreducible,
        resolvent_cubic: cubic,
        discriminant: disc,
        d1,
        d2,
        squarefree,
        notes,
    })
}
