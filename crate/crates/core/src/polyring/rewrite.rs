use super::poly::MultiPoly;
use super::symbol::Symbol;
use crate::error::Error;

/// Replaces `var^power` by `replacement` wherever it divides a term.
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule {
    pub var: Symbol,
    pub power: u32,
    pub replacement: MultiPoly,
}

impl RewriteRule {
    pub fn new(var: Symbol, power: u32, replacement: MultiPoly) -> Result<Self, Error> {
        if power == 0 {
            return Err(Error::Invalid("rewrite power must be positive".into()));
        }
        if replacement.degree_in(var).is_some_and(|d| d >= power) {
            return Err(Error::Invalid(format!(
                "replacement for {var}^{power} has degree >= {power} in {var}"
            )));
        }
        Ok(RewriteRule {
            var,
            power,
            replacement,
        })
    }

    /// `y^2 -> x^3 + a*x + b`.
    pub fn curve_y() -> Self {
        Self::curve(Symbol::Y, Symbol::X)
    }

    /// `w^2 -> z^3 + a*z + b`.
    pub fn curve_w() -> Self {
        Self::curve(Symbol::W, Symbol::Z)
    }

    fn curve(y: Symbol, x: Symbol) -> Self {
        let xp = MultiPoly::var(x);
        let rhs = &(&xp.pow(3) + &(&MultiPoly::var(Symbol::A) * &xp)) + &MultiPoly::var(Symbol::B);
        RewriteRule::new(y, 2, rhs).expect("valid curve rule")
    }

    fn apply(&self, p: &MultiPoly) -> Option<MultiPoly> {
        let n = self.power as usize;
        let mut coeffs = p.to_univariate(self.var);
        if coeffs.len() <= n {
            return None;
        }
        let repl = self.replacement.to_univariate(self.var);
        for e in (n..coeffs.len()).rev() {
            let c = std::mem::take(&mut coeffs[e]);
            if c.is_zero() {
                continue;
            }
            for (k, rc) in repl.iter().enumerate() {
                if rc.is_zero() {
                    continue;
                }
                let t = &c * rc;
                coeffs[e - n + k] = &coeffs[e - n + k] + &t;
            }
        }
        coeffs.truncate(n);
        Some(MultiPoly::from_univariate(self.var, &coeffs))
    }
}

/// Normal form under the rules: repeatedly lowers each rule's variable
/// below its power until nothing changes.
pub fn reduce(p: &MultiPoly, rules: &[RewriteRule]) -> MultiPoly {
    let mut cur = p.clone();
    loop {
        let mut changed = false;
        for r in rules {
            if let Some(next) = r.apply(&cur) {
                cur = next;
                changed = true;
            }
        }
        if !changed {
            return cur;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse;

    #[test]
    fn curve_relation() {
        let r = RewriteRule::curve_y();
        assert_eq!(reduce(&parse("y^2").unwrap(), &[r.clone()]), parse("x^3+a*x+b").unwrap());
        assert_eq!(
            reduce(&parse("y^5").unwrap(), &[r]),
            parse("y*(x^3+a*x+b)^2").unwrap()
        );
    }

    #[test]
    fn rejects_non_reducing_rule() {
        assert!(RewriteRule::new(Symbol::Y, 2, parse("y^3").unwrap()).is_err());
        assert!(RewriteRule::new(Symbol::Y, 0, parse("1").unwrap()).is_err());
    }

    #[test]
    fn both_curves() {
        let rules = [RewriteRule::curve_y(), RewriteRule::curve_w()];
        let got = reduce(&parse("y^2*w^3").unwrap(), &rules);
        assert_eq!(got, parse("(x^3+a*x+b)*(z^3+a*z+b)*w").unwrap());
    }
}
