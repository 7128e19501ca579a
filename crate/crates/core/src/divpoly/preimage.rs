use crate::elimination::resultant;
use crate::error::Error;
use crate::exactnum::Rational;
use crate::polyring::{poly, MultiPoly, Symbol};
use crate::report::IdentityReport;

use super::curve::{AffinePoint, CurveSpec};
use super::psi::DivisionPolySet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointSign {
    Plus,
    Minus,
}

/// Resultant Res_x(f_x, f_xy) as a polynomial in y, before any reduction by
/// the curve relation, divided by 4096·d². The display this reproduces is
/// stored in [`RAW_Y_RESULTANT`].
pub const RAW_Y_RESULTANT: &str = "y^4*w^4 - 8*y^3*a*z*w^3 - 8*y^3*b*w^3 - 8*y^3*z^3*w^3 \
    + 12*y^2*a^2*z^2*w^2 + 30*y^2*a*b*z*w^2 + 12*y^2*a*z^4*w^2 + 18*y^2*b^2*w^2 \
    + 18*y^2*b*z^3*w^2 - 4*a^5*z^2 - 8*a^4*b*z - 8*a^4*z^4 - 4*a^3*b^2 - 8*a^3*b*z^3 \
    - 4*a^3*z^6 - 27*a^2*b^2*z^2 - 54*a*b^3*z - 54*a*b^2*z^4 - 27*b^4 - 54*b^3*z^3 \
    - 27*b^2*z^6";

/// Res_x(f_x, y² − (x³+ax+b)) in the symbols a, b, z.
pub const R_DISPLAY: &str = "y^8 - 40*y^6*a*z - 28*y^6*b - 64*y^6*z^3 - 8*y^4*a^3 \
    + 144*y^4*a^2*z^2 + 432*y^4*a*b*z + 270*y^4*b^2 - 96*y^2*a^4*z - 144*y^2*a^3*b \
    - 648*y^2*a*b^2*z - 972*y^2*b^3 + 16*a^6 + 216*a^3*b^2 + 729*b^4";

fn check_n(n: i64) -> Result<(), Error> {
    if n < 2 {
        return Err(Error::Invalid(format!("preimage polynomials need n >= 2, got {n}")));
    }
    Ok(())
}

fn specialize(curve: &CurveSpec, p: &AffinePoint, e: &MultiPoly) -> MultiPoly {
    p.specialize(&curve.specialize(e))
}

/// f_x = φₙ − zψₙ², a polynomial of degree n² in x whose roots are the
/// x-coordinates of [n]⁻¹P.
pub fn preimage_poly_x(
    set: &mut DivisionPolySet,
    n: i64,
    p: &AffinePoint,
) -> Result<MultiPoly, Error> {
    check_n(n)?;
    let psi = set.psi(n)?;
    let t = &set.phi(n)? - &(&p.z * &psi.pow(2));
    Ok(crate::polyring::reduce(&t, &[set.curve().y_rule()]))
}

/// f_xy = ωₙ − wψₙ³ with y² eliminated, linear in y.
pub fn preimage_poly_xy(
    set: &mut DivisionPolySet,
    n: i64,
    p: &AffinePoint,
) -> Result<MultiPoly, Error> {
    check_n(n)?;
    let psi = set.psi(n)?;
    let t = &set.omega(n)? - &(&p.w * &psi.pow(3));
    Ok(crate::polyring::reduce(&t, &[set.curve().y_rule()]))
}

fn reject_two_torsion(p: &AffinePoint) -> Result<(), Error> {
    if p.w.is_zero() {
        return Err(Error::Domain(
            "2-torsion point: the y-coordinate polynomial is only defined after dividing by w^4"
                .into(),
        ));
    }
    Ok(())
}

/// y⁴ − 8wy³ + 6(2az+3b)y² − (4a³+27b²).
pub fn origami_quartic(curve: &CurveSpec, p: &AffinePoint) -> Result<MultiPoly, Error> {
    reject_two_torsion(p)?;
    Ok(specialize(
        curve,
        p,
        &poly("y^4 - 8*w*y^3 + 6*(2*a*z + 3*b)*y^2 - (4*a^3 + 27*b^2)"),
    ))
}

/// The exact cofactor 4096·(4a³+27b²)² separating Res_x(f_x, f_xy) from the
/// raw y-polynomial.
pub fn y_resultant_cofactor(curve: &CurveSpec) -> MultiPoly {
    curve.d().pow(2).scale(&Rational::from(4096))
}

/// Res_x(f_x, f_xy) for n = 2.
pub fn y_resultant(curve: &CurveSpec, p: &AffinePoint) -> Result<MultiPoly, Error> {
    let mut set = DivisionPolySet::new(curve);
    let fx = preimage_poly_x(&mut set, 2, p)?;
    let fxy = preimage_poly_xy(&mut set, 2, p)?;
    resultant(&fx, &fxy, Symbol::X)
}

/// Second route to the quartic: eliminate x, strip the cofactor, reduce by
/// w² = z³+az+b and divide out w⁴.
pub fn origami_quartic_via_resultant(
    curve: &CurveSpec,
    p: &AffinePoint,
) -> Result<MultiPoly, Error> {
    reject_two_torsion(p)?;
    let raw = y_resultant(curve, p)?.exact_div(&y_resultant_cofactor(curve))?;
    let reduced = p.reduce(curve, &raw);
    let w4 = p.reduce(curve, &p.w.pow(4));
    reduced.exact_div(&w4)
}

/// f_{E,Q₈,±P}: the quartic for ±P evaluated at y².
pub fn origami_octic(
    curve: &CurveSpec,
    p: &AffinePoint,
    sign: PointSign,
) -> Result<MultiPoly, Error> {
    let pt = match sign {
        PointSign::Plus => p.clone(),
        PointSign::Minus => p.negate(),
    };
    let y = MultiPoly::var(Symbol::Y);
    Ok(origami_quartic(curve, &pt)?.substitute(Symbol::Y, &y.pow(2)))
}

/// r = Res_x(f_x, y² − (x³+ax+b)).
pub fn r_poly(curve: &CurveSpec, p: &AffinePoint) -> Result<MultiPoly, Error> {
    let mut set = DivisionPolySet::new(curve);
    let fx = preimage_poly_x(&mut set, 2, p)?;
    let y = MultiPoly::var(Symbol::Y);
    let rel = &y.pow(2) - &curve.rhs(&MultiPoly::var(Symbol::X));
    resultant(&fx, &rel, Symbol::X)
}

/// s − f_P·f_{−P} = 64y¹²(w² − z³ − az − b), which vanishes on the curve.
pub fn verify_s_identity(curve: &CurveSpec, p: &AffinePoint) -> Result<IdentityReport, Error> {
    let name = "s - f_P*f_-P = 64*y^12*(w^2 - z^3 - a*z - b) = 0";
    let y = MultiPoly::var(Symbol::Y);
    let s = r_poly(curve, p)?.substitute(Symbol::Y, &y.pow(2));
    let prod = &origami_octic(curve, p, PointSign::Plus)?
        * &origami_octic(curve, p, PointSign::Minus)?;
    let diff = &s - &prod;
    let expected = &y.pow(12).scale(&Rational::from(64)) * &p.curve_defect(curve);
    let shape = &diff - &expected;
    if !shape.is_zero() {
        return Ok(IdentityReport::fail(name, shape.to_string())
            .with_note("difference does not have the form 64*y^12*(w^2 - z^3 - a*z - b)"));
    }
    Ok(IdentityReport::zero(name, &p.reduce(curve, &diff)))
}

/// The coefficient identities used to pass from the raw resultant to the
/// quartic, each checked modulo the curve relation.
pub fn verify_coefficient_reductions(
    curve: &CurveSpec,
    p: &AffinePoint,
) -> Result<Vec<IdentityReport>, Error> {
    let mut out = Vec::new();
    let res = y_resultant(curve, p)?;
    let display = specialize(curve, p, &poly(RAW_Y_RESULTANT));
    let cof = y_resultant_cofactor(curve);
    out.push(IdentityReport::zero(
        "Res_x(f_x, f_xy) = 4096*(4*a^3+27*b^2)^2 * raw y-polynomial",
        &(&res - &(&cof * &display)),
    ));
    let raw = res.exact_div(&cof)?;
    let w = &p.w;
    let red = |e: &MultiPoly| p.reduce(curve, e);
    let c = |k: u32| raw.coeff_in(Symbol::Y, k);

    out.push(IdentityReport::zero(
        "y^3 coefficient = -8*w^5 mod curve",
        &red(&(&c(3) + &w.pow(5).scale(&Rational::from(8)))),
    ));
    let y2 = specialize(curve, p, &poly("6*w^4*(2*a*z + 3*b)"));
    out.push(IdentityReport::zero(
        "y^2 coefficient = 6*w^4*(2*a*z+3*b) mod curve",
        &red(&(&c(2) - &y2)),
    ));
    out.push(IdentityReport::zero(
        "y coefficient = 0",
        &red(&c(1)),
    ));
    let neg = specialize(curve, p, &poly("-(4*a^3 + 27*b^2)*w^4"));
    let printed = specialize(curve, p, &poly("(-4*a^3 + 27*b^2)*w^4"));
    let res_neg = red(&(&c(0) - &neg));
    let res_printed = red(&(&c(0) - &printed));
    let mut rep = IdentityReport::zero("constant coefficient = -(4*a^3+27*b^2)*w^4 mod curve", &res_neg);
    if !res_printed.is_zero() {
        rep = rep.with_note(format!(
            "sign variant (-4*a^3+27*b^2)*w^4 leaves residual {res_printed}"
        ));
    }
    out.push(rep);
    Ok(out)
}
