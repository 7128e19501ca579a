use num_traits::{One, Zero};

use crate::divpoly::{origami_quartic, AffinePoint, CurveSpec};
use crate::error::Error;
use crate::exactnum::Rational;
use crate::polyring::{MultiPoly, Symbol};

/// Monic quartic x^4 + c3*x^3 + c2*x^2 + c1*x + c0 with coefficients that may
/// be numbers or polynomials in the curve parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct Quartic {
    pub c3: MultiPoly,
    pub c2: MultiPoly,
    pub c1: MultiPoly,
    pub c0: MultiPoly,
}

impl Quartic {
    pub fn new(c3: MultiPoly, c2: MultiPoly, c1: MultiPoly, c0: MultiPoly) -> Self {
        Quartic { c3, c2, c1, c0 }
    }

    pub fn from_rationals(c3: Rational, c2: Rational, c1: Rational, c0: Rational) -> Self {
        Quartic::new(
            MultiPoly::constant(c3),
            MultiPoly::constant(c2),
            MultiPoly::constant(c1),
            MultiPoly::constant(c0),
        )
    }

    pub fn from_ints(c3: i64, c2: i64, c1: i64, c0: i64) -> Self {
        Quartic::from_rationals(c3.into(), c2.into(), c1.into(), c0.into())
    }

    /// The quartic with the symbols c3, c2, c1, c0 as coefficients.
    pub fn generic() -> Self {
        Quartic::new(
            MultiPoly::var(Symbol::C3),
            MultiPoly::var(Symbol::C2),
            MultiPoly::var(Symbol::C1),
            MultiPoly::var(Symbol::C0),
        )
    }

    /// Reads a monic degree-4 polynomial in `var`.
    pub fn from_poly(p: &MultiPoly, var: Symbol) -> Result<Self, Error> {
        let c = p.to_univariate(var);
        if c.len() != 5 || !c[4].is_one() {
            return Err(Error::Invalid(format!("expected a monic quartic in {var}, got {p}")));
        }
        Ok(Quartic::new(c[3].clone(), c[2].clone(), c[1].clone(), c[0].clone()))
    }

    /// r(x) = x^4 - 8w*x^3 + 6(2az+3b)*x^2 - (4a^3+27b^2) for the point P.
    pub fn origami(curve: &CurveSpec, p: &AffinePoint) -> Result<Self, Error> {
        Quartic::from_poly(&origami_quartic(curve, p)?, Symbol::Y)
    }

    pub fn poly(&self, var: Symbol) -> MultiPoly {
        MultiPoly::from_univariate(
            var,
            &[self.c0.clone(), self.c1.clone(), self.c2.clone(), self.c3.clone(), MultiPoly::one()],
        )
    }

    /// r(x^2).
    pub fn octic(&self, var: Symbol) -> MultiPoly {
        let x = MultiPoly::var(var);
        self.poly(var).substitute(var, &x.pow(2))
    }

    /// e1..e4 of the roots.
    pub fn elementary(&self) -> [MultiPoly; 4] {
        [-&self.c3, self.c2.clone(), -&self.c1, self.c0.clone()]
    }

    /// (c3, c2, c1, c0) when all coefficients are numbers.
    pub fn rational_coeffs(&self) -> Option<[Rational; 4]> {
        Some([
            self.c3.constant_value()?,
            self.c2.constant_value()?,
            self.c1.constant_value()?,
            self.c0.constant_value()?,
        ])
    }

    pub fn is_numeric(&self) -> bool {
        self.rational_coeffs().is_some()
    }

    /// Coefficients of r lowest degree first, when numeric.
    pub fn coeffs_low_first(&self) -> Option<Vec<Rational>> {
        let [c3, c2, c1, c0] = self.rational_coeffs()?;
        Some(vec![c0, c1, c2, c3, Rational::one()])
    }

    /// Coefficients of r(x^2) lowest degree first, when numeric.
    pub fn octic_coeffs(&self) -> Option<Vec<Rational>> {
        let c = self.coeffs_low_first()?;
        let mut out = vec![Rational::zero(); 9];
        for (i, v) in c.into_iter().enumerate() {
            out[2 * i] = v;
        }
        Some(out)
    }

    /// λ^4 r(x/λ): the quartic whose roots are λ times those of r.
    pub fn scaled(&self, lambda: &Rational) -> Quartic {
        let l = MultiPoly::constant(lambda.clone());
        Quartic::new(
            &self.c3 * &l,
            &self.c2 * &l.pow(2),
            &self.c1 * &l.pow(3),
            &self.c0 * &l.pow(4),
        )
    }

    /// Substitutes this quartic's coefficients for c3..c0 in `formula`.
    pub fn specialize(&self, formula: &MultiPoly) -> MultiPoly {
        if *self == Quartic::generic() {
            return formula.clone();
        }
        // sequential substitution is fine unless a coefficient mentions c0..c3
        formula.substitute_all(&[
            (Symbol::C3, self.c3.clone()),
            (Symbol::C2, self.c2.clone()),
            (Symbol::C1, self.c1.clone()),
            (Symbol::C0, self.c0.clone()),
        ])
    }
}
