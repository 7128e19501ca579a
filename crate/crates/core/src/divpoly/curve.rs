use crate::error::Error;
use crate::exactnum::Rational;
use crate::polyring::{reduce, MultiPoly, RewriteRule, Symbol};

/// Weierstrass curve y² = x³ + ax + b. Numeric curves carry constant
/// polynomials, symbolic ones the symbols a and b, so both run through the
/// same code.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveSpec {
    pub a: MultiPoly,
    pub b: MultiPoly,
}

impl CurveSpec {
    pub fn symbolic() -> Self {
        CurveSpec {
            a: MultiPoly::var(Symbol::A),
            b: MultiPoly::var(Symbol::B),
        }
    }

    pub fn numeric(a: Rational, b: Rational) -> Result<Self, Error> {
        let c = CurveSpec {
            a: MultiPoly::constant(a),
            b: MultiPoly::constant(b),
        };
        if c.d().is_zero() {
            return Err(Error::Domain("singular curve: 4a^3 + 27b^2 = 0".into()));
        }
        Ok(c)
    }

    pub fn numeric_values(&self) -> Option<(Rational, Rational)> {
        Some((self.a.constant_value()?, self.b.constant_value()?))
    }

    pub fn is_numeric(&self) -> bool {
        self.numeric_values().is_some()
    }

    /// d = 4a³ + 27b².
    pub fn d(&self) -> MultiPoly {
        &self.a.pow(3).scale(&Rational::from(4)) + &self.b.pow(2).scale(&Rational::from(27))
    }

    /// t³ + a·t + b.
    pub fn rhs(&self, t: &MultiPoly) -> MultiPoly {
        &(&t.pow(3) + &(&self.a * t)) + &self.b
    }

    /// y² → x³ + ax + b.
    pub fn y_rule(&self) -> RewriteRule {
        RewriteRule::new(Symbol::Y, 2, self.rhs(&MultiPoly::var(Symbol::X)))
            .expect("curve rule is reducing")
    }

    /// Replaces the symbols a, b by this curve's coefficients.
    pub fn specialize(&self, p: &MultiPoly) -> MultiPoly {
        p.substitute(Symbol::A, &self.a).substitute(Symbol::B, &self.b)
    }
}

/// A point P = (z, w) other than the point at infinity.
#[derive(Clone, Debug, PartialEq)]
pub struct AffinePoint {
    pub z: MultiPoly,
    pub w: MultiPoly,
}

impl AffinePoint {
    pub fn symbolic() -> Self {
        AffinePoint {
            z: MultiPoly::var(Symbol::Z),
            w: MultiPoly::var(Symbol::W),
        }
    }

    /// A rational point, rejected unless w² = z³ + az + b.
    pub fn numeric(z: Rational, w: Rational, curve: &CurveSpec) -> Result<Self, Error> {
        let p = AffinePoint {
            z: MultiPoly::constant(z),
            w: MultiPoly::constant(w),
        };
        let defect = p.curve_defect(curve);
        if !defect.is_zero() {
            return Err(Error::Invalid(format!(
                "point not on curve: w^2 - (z^3 + a*z + b) = {defect}"
            )));
        }
        Ok(p)
    }

    /// No on-curve check; used to exercise failure paths.
    pub fn unchecked(z: MultiPoly, w: MultiPoly) -> Self {
        AffinePoint { z, w }
    }

    pub fn negate(&self) -> Self {
        AffinePoint {
            z: self.z.clone(),
            w: -&self.w,
        }
    }

    /// w² − (z³ + az + b), before any reduction.
    pub fn curve_defect(&self, curve: &CurveSpec) -> MultiPoly {
        &self.w.pow(2) - &curve.rhs(&self.z)
    }

    /// The relation w² → z³ + az + b when w is still the bare symbol.
    pub fn w_rules(&self, curve: &CurveSpec) -> Vec<RewriteRule> {
        if self.w == MultiPoly::var(Symbol::W) && !self.z.involves(Symbol::W) {
            vec![RewriteRule::new(Symbol::W, 2, curve.rhs(&self.z)).expect("reducing rule")]
        } else {
            Vec::new()
        }
    }

    /// Reduces modulo the curve relation for P (no-op for numeric points).
    pub fn reduce(&self, curve: &CurveSpec, p: &MultiPoly) -> MultiPoly {
        let rules = self.w_rules(curve);
        if rules.is_empty() {
            p.clone()
        } else {
            reduce(p, &rules)
        }
    }

    pub fn specialize(&self, p: &MultiPoly) -> MultiPoly {
        // substitute w first: z may itself be the symbol z
        p.substitute(Symbol::W, &self.w).substitute(Symbol::Z, &self.z)
    }

    pub fn numeric_values(&self) -> Option<(Rational, Rational)> {
        Some((self.z.constant_value()?, self.w.constant_value()?))
    }
}
