use std::collections::HashMap;

use crate::error::Error;
use crate::exactnum::Rational;
use crate::polyring::{poly, reduce, MultiPoly, RewriteRule, Symbol};

use super::curve::CurveSpec;

/// Division polynomials ψₙ, φₙ, ωₙ of one curve, kept in normal form with
/// y-degree at most one.
#[derive(Clone, Debug)]
pub struct DivisionPolySet {
    curve: CurveSpec,
    rule: RewriteRule,
    psi: Vec<MultiPoly>,
    phi: HashMap<i64, MultiPoly>,
    omega: HashMap<i64, MultiPoly>,
}

/// The standard ψ₄ = 4y(x⁶ + 5ax⁴ + 20bx³ − 5a²x² − 4abx − 8b² − a³) in the
/// symbols a, b.
pub fn psi4_generic() -> MultiPoly {
    poly("4*y*(x^6 + 5*a*x^4 + 20*b*x^3 - 5*a^2*x^2 - 4*a*b*x - 8*b^2 - a^3)")
}

impl DivisionPolySet {
    pub fn new(curve: &CurveSpec) -> Self {
        Self::with_psi4(curve, &psi4_generic())
    }

    /// Seeds the recursion with an arbitrary ψ₄ (in the symbols a, b).
    /// Only useful for testing alternative printed forms against the
    /// group law.
    pub fn with_psi4(curve: &CurveSpec, psi4: &MultiPoly) -> Self {
        let seeds = [
            poly("0"),
            poly("1"),
            poly("2*y"),
            poly("3*x^4 + 6*a*x^2 + 12*b*x - a^2"),
            psi4.clone(),
        ];
        DivisionPolySet {
            rule: curve.y_rule(),
            psi: seeds.iter().map(|p| curve.specialize(p)).collect(),
            curve: curve.clone(),
            phi: HashMap::new(),
            omega: HashMap::new(),
        }
    }

    pub fn curve(&self) -> &CurveSpec {
        &self.curve
    }

    fn red(&self, p: &MultiPoly) -> MultiPoly {
        reduce(p, std::slice::from_ref(&self.rule))
    }

    fn ensure(&mut self, n: usize) -> Result<(), Error> {
        while self.psi.len() <= n {
            let k = self.psi.len();
            let m = k / 2;
            let p = |i: usize| &self.psi[i];
            let next = if k % 2 == 1 {
                // ψ_{2m+1} = ψ_{m+2}ψ_m³ − ψ_{m−1}ψ_{m+1}³
                let t = &(p(m + 2) * &p(m).pow(3)) - &(p(m - 1) * &p(m + 1).pow(3));
                self.red(&t)
            } else {
                // ψ_{2m} = ψ_m/(2y) · (ψ_{m+2}ψ_{m−1}² − ψ_{m−2}ψ_{m+1}²)
                let inner = &(p(m + 2) * &p(m - 1).pow(2)) - &(p(m - 2) * &p(m + 1).pow(2));
                let t = (p(m) * &inner).exact_div(&poly("2*y")).map_err(|e| {
                    Error::Invariant(format!("psi_{k}: division by 2y not exact: {e}"))
                })?;
                self.red(&t)
            };
            self.psi.push(next);
        }
        Ok(())
    }

    /// ψₙ, with ψ₋ₙ = −ψₙ.
    pub fn psi(&mut self, n: i64) -> Result<MultiPoly, Error> {
        let k = n.unsigned_abs() as usize;
        self.ensure(k)?;
        let v = self.psi[k].clone();
        Ok(if n < 0 { -v } else { v })
    }

    /// φₙ = xψₙ² − ψₙ₊₁ψₙ₋₁.
    pub fn phi(&mut self, n: i64) -> Result<MultiPoly, Error> {
        if let Some(v) = self.phi.get(&n) {
            return Ok(v.clone());
        }
        let pn = self.psi(n)?;
        let t = &(&MultiPoly::var(Symbol::X) * &pn.pow(2)) - &(&self.psi(n + 1)? * &self.psi(n - 1)?);
        let v = self.red(&t);
        self.phi.insert(n, v.clone());
        Ok(v)
    }

    /// ωₙ = (ψₙ₊₂ψₙ₋₁² − ψₙ₋₂ψₙ₊₁²) / 4y, divided before reducing.
    pub fn omega(&mut self, n: i64) -> Result<MultiPoly, Error> {
        if let Some(v) = self.omega.get(&n) {
            return Ok(v.clone());
        }
        let num = &(&self.psi(n + 2)? * &self.psi(n - 1)?.pow(2))
            - &(&self.psi(n - 2)? * &self.psi(n + 1)?.pow(2));
        let v = num.exact_div(&poly("4*y")).map_err(|e| {
            Error::Invariant(format!("omega_{n}: division by 4y not exact: {e}"))
        })?;
        let v = self.red(&v);
        self.omega.insert(n, v.clone());
        Ok(v)
    }

    /// Values (φₙ/ψₙ², ωₙ/ψₙ³) at a rational point; `None` when ψₙ vanishes
    /// there, i.e. [n]Q is the point at infinity.
    pub fn eval_map(
        &mut self,
        n: i64,
        x: &Rational,
        y: &Rational,
    ) -> Result<Option<(Rational, Rational)>, Error> {
        let at = |p: &MultiPoly| -> Result<Rational, Error> {
            p.eval(&[(Symbol::X, x.clone()), (Symbol::Y, y.clone())])
                .ok_or_else(|| Error::Invalid("map evaluation needs a numeric curve".into()))
        };
        let psi = at(&self.psi(n)?)?;
        if num_traits::Zero::is_zero(&psi) {
            return Ok(None);
        }
        let phi = at(&self.phi(n)?)?;
        let omega = at(&self.omega(n)?)?;
        Ok(Some((&phi / &psi.pow(2), &omega / &psi.pow(3))))
    }
}
