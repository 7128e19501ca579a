use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::symbol::{Monomial, Symbol};
use crate::error::Error;
use crate::exactnum::Rational;

/// Sparse multivariate polynomial over Q.
///
/// Terms are stored in strictly decreasing monomial order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: vec![(Monomial::one(), c)],
        }
    }

    pub fn int(c: i64) -> Self {
        MultiPoly::constant(Rational::from(c))
    }

    pub fn var(s: Symbol) -> Self {
        MultiPoly::monomial(Monomial::var(s, 1), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rational::zero) += &c;
        }
        MultiPoly::from_sorted_map(acc)
    }

    fn from_sorted_map(acc: BTreeMap<Monomial, Rational>) -> Self {
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        MultiPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(k, _)| m.cmp(k))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn degree_in(&self, s: Symbol) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree(s) as u32).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    pub fn involves(&self, s: Symbol) -> bool {
        self.terms.iter().any(|(m, _)| m.degree(s) > 0)
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        Symbol::ALL.into_iter().filter(|s| self.involves(*s)).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    fn merge(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        MultiPoly { terms: out }
    }

    fn mul_impl(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        if let Some(c) = self.constant_value() {
            return other.scale(&c);
        }
        if let Some(c) = other.constant_value() {
            return self.scale(&c);
        }
        if self.terms.len() == 1 {
            return other.mul_monomial(&self.terms[0].0, &self.terms[0].1);
        }
        if other.terms.len() == 1 {
            return self.mul_monomial(&other.terms[0].0, &other.terms[0].1);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca * cb;
                acc.entry(ma.mul(mb))
                    .and_modify(|v| *v += &prod)
                    .or_insert(prod);
            }
        }
        let mut terms: Vec<(Monomial, Rational)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|x, y| y.0.cmp(&x.0));
        MultiPoly { terms }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Coefficients of `self` viewed as a polynomial in `s`, lowest power
    /// first. The zero polynomial gives an empty list.
    pub fn to_univariate(&self, s: Symbol) -> Vec<MultiPoly> {
        let Some(deg) = self.degree_in(s) else {
            return Vec::new();
        };
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); deg as usize + 1];
        for (m, c) in &self.terms {
            let e = m.degree(s) as usize;
            buckets[e].push((m.with_degree(s, 0), c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut ts| {
                // stripping one variable keeps relative order within a bucket
                ts.sort_unstable_by(|x, y| y.0.cmp(&x.0));
                MultiPoly { terms: ts }
            })
            .collect()
    }

    pub fn from_univariate(s: Symbol, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut terms = Vec::new();
        for (e, c) in coeffs.iter().enumerate() {
            let m = Monomial::var(s, e as u16);
            for (k, v) in &c.terms {
                terms.push((k.mul(&m), v.clone()));
            }
        }
        MultiPoly::from_terms(terms)
    }

    /// Coefficient of `s^e`.
    pub fn coeff_in(&self, s: Symbol, e: u32) -> MultiPoly {
        let terms: Vec<_> = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree(s) as u32 == e)
            .map(|(m, c)| (m.with_degree(s, 0), c.clone()))
            .collect();
        MultiPoly::from_terms(terms)
    }

    /// Ring homomorphism sending `s` to `value`, other symbols fixed.
    pub fn substitute(&self, s: Symbol, value: &MultiPoly) -> MultiPoly {
        if !self.involves(s) {
            return self.clone();
        }
        let coeffs = self.to_univariate(s);
        let mut acc = MultiPoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    pub fn substitute_all(&self, subs: &[(Symbol, MultiPoly)]) -> MultiPoly {
        let mut p = self.clone();
        for (s, v) in subs {
            p = p.substitute(*s, v);
        }
        p
    }

    /// Evaluate to a rational; `None` if some symbol remains unassigned.
    pub fn eval(&self, values: &[(Symbol, Rational)]) -> Option<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for s in Symbol::ALL {
                let e = m.degree(s);
                if e == 0 {
                    continue;
                }
                let v = values.iter().find(|(k, _)| *k == s)?;
                t *= &v.1.pow(e as u32);
            }
            total += &t;
        }
        Some(total)
    }

    pub fn derivative(&self, s: Symbol) -> MultiPoly {
        let terms: Vec<_> = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree(s) > 0)
            .map(|(m, c)| {
                let e = m.degree(s);
                (m.with_degree(s, e - 1), c * &Rational::from(e as i64))
            })
            .collect();
        // lowering one exponent can reorder terms
        MultiPoly::from_terms(terms)
    }

    /// Exact quotient `self / divisor`; fails with the remainder when the
    /// division leaves one.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Result<MultiPoly, Error> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision {
                remainder: r.to_string(),
            });
        }
        Ok(q)
    }

    /// Multivariate division by a single divisor in the lex order.
    pub fn div_rem(&self, divisor: &MultiPoly) -> Result<(MultiPoly, MultiPoly), Error> {
        let Some((lm, lc)) = divisor.leading().cloned() else {
            return Err(Error::Domain("division by the zero polynomial".into()));
        };
        if lm.is_one() {
            return Ok((self.scale(&lc.recip()?), MultiPoly::zero()));
        }
        let inv = lc.recip()?;
        let mut rem: BTreeMap<Monomial, Rational> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        let mut residue = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            match m.checked_div(&lm) {
                Some(qm) => {
                    let qc = &c * &inv;
                    for (tm, tc) in &divisor.terms[1..] {
                        let key = qm.mul(tm);
                        let delta = &qc * tc;
                        match rem.entry(key) {
                            std::collections::btree_map::Entry::Occupied(mut o) => {
                                *o.get_mut() -= &delta;
                                if o.get().is_zero() {
                                    o.remove();
                                }
                            }
                            std::collections::btree_map::Entry::Vacant(v) => {
                                v.insert(-delta);
                            }
                        }
                    }
                    quot.push((qm, qc));
                }
                None => residue.push((m, c)),
            }
        }
        Ok((MultiPoly { terms: quot }, MultiPoly { terms: residue }))
    }

    /// Square root of a perfect square, by peeling off leading terms.
    /// `None` when `self` is not the square of a polynomial over Q.
    pub fn sqrt_exact(&self) -> Option<MultiPoly> {
        let Some((lm, lc)) = self.leading().cloned() else {
            return Some(MultiPoly::zero());
        };
        if lm.0.iter().any(|e| e % 2 == 1) {
            return None;
        }
        let mut half = lm;
        for e in half.0.iter_mut() {
            *e /= 2;
        }
        let c = crate::exactnum::rational_sqrt(&lc)?;
        let twice = &c + &c;
        let mut root = MultiPoly::monomial(half, c);
        let mut rem = self - &root.pow(2);
        // each step fixes the leading term of the remainder
        for _ in 0..4 * self.len() + 16 {
            let Some((m, rc)) = rem.leading().cloned() else {
                return Some(root);
            };
            let tm = m.checked_div(&half)?;
            if tm >= half {
                return None;
            }
            let t = MultiPoly::monomial(tm, &rc / &twice);
            let cross = &(&root.scale(&Rational::from(2)) + &t) * &t;
            rem = &rem - &cross;
            root = &root + &t;
        }
        None
    }

    pub fn map_coefficients<F: Fn(&Rational) -> Rational>(&self, f: F) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Coefficients as `(exponent, value)` for a polynomial in `s` alone.
    pub fn univariate_rational(&self, s: Symbol) -> Option<Vec<Rational>> {
        let coeffs = self.to_univariate(s);
        coeffs.iter().map(|c| c.constant_value()).collect()
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_impl(rhs)
    }
}

macro_rules! forward_poly_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_poly_ops!(Add, add);
forward_poly_ops!(Sub, sub);
forward_poly_ops!(Mul, mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::int(c)
    }
}

impl From<Symbol> for MultiPoly {
    fn from(s: Symbol) -> Self {
        MultiPoly::var(s)
    }
}

fn write_monomial(out: &mut String, m: &Monomial) {
    let mut first = true;
    for s in Symbol::DISPLAY_ORDER {
        let e = m.degree(s);
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(s.name());
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

impl MultiPoly {
    /// Canonical text split into signed terms (`"- 8*w*y^6"`), used for wrapping.
    pub fn render_terms(&self) -> Vec<String> {
        if self.terms.is_empty() {
            return vec!["0".to_string()];
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mut s = String::new();
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { "- " } else { "+ " });
            }
            if m.is_one() {
                s.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    s.push_str(&mag.to_string());
                    s.push('*');
                }
                write_monomial(&mut s, m);
            }
            out.push(s);
        }
        out
    }

    /// Canonical text wrapped at term boundaries to at most `width` columns
    /// where possible.
    pub fn render_wrapped(&self, width: usize) -> String {
        let mut lines: Vec<String> = Vec::new();
        let mut cur = String::new();
        for t in self.render_terms() {
            if !cur.is_empty() && cur.len() + 1 + t.len() > width {
                lines.push(std::mem::take(&mut cur));
            }
            if !cur.is_empty() {
                cur.push(' ');
            }
            cur.push_str(&t);
        }
        lines.push(cur);
        lines.join("\n    ")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_terms().join(" "))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse;

    fn p(s: &str) -> MultiPoly {
        parse(s).unwrap()
    }

    #[test]
    fn ring_basics() {
        assert_eq!(&p("x+y") * &p("x-y"), p("x^2-y^2"));
        assert_eq!(p("3*x^2*a + 7").pow(0), MultiPoly::one());
        assert_eq!(p("2*y").pow(3), p("8*y^3"));
        assert!((&p("x+1") - &p("1+x")).is_zero());
    }

    #[test]
    fn substitution() {
        assert_eq!(
            p("y^4-8*w*y^3").substitute(Symbol::Y, &p("y^2")),
            p("y^8-8*w*y^6")
        );
        let q = p("x^3*w + a*x - b");
        assert_eq!(q.substitute(Symbol::W, &p("w")), q);
        assert_eq!(p("x^2+1").substitute(Symbol::X, &p("3")), p("10"));
    }

    #[test]
    fn exact_division() {
        assert_eq!(
            p("w^4*y^4 - 8*w^5*y^3").exact_div(&p("w^4")).unwrap(),
            p("y^4 - 8*w*y^3")
        );
        let q = p("x^3 + a*z - 5");
        assert_eq!(q.exact_div(&MultiPoly::one()).unwrap(), q);
        assert_eq!(p("x^2-1").exact_div(&p("x+1")).unwrap(), p("x-1"));
        match p("x^2+1").exact_div(&p("x+1")) {
            Err(Error::InexactDivision { remainder }) => assert_eq!(remainder, "2"),
            other => panic!("expected inexact division, got {other:?}"),
        }
        assert!(p("x").exact_div(&MultiPoly::zero()).is_err());
    }

    #[test]
    fn univariate_view() {
        let q = p("x^2*w + x + 1");
        assert_eq!(q.to_univariate(Symbol::X), vec![p("1"), p("1"), p("w")]);
        assert_eq!(p("a+b").to_univariate(Symbol::X), vec![p("a+b")]);
        assert_eq!(MultiPoly::from_univariate(Symbol::X, &q.to_univariate(Symbol::X)), q);
    }

    #[test]
    fn derivatives() {
        assert_eq!(
            p("x^8-8*w*x^6+6*(2*a*z+3*b)*x^4").derivative(Symbol::X),
            p("8*x^7-48*w*x^5+24*(2*a*z+3*b)*x^3")
        );
        assert!(p("a*b+7").derivative(Symbol::X).is_zero());
    }

    #[test]
    fn canonical_rendering() {
        let q = p("y^8 - 8*w*y^6 + 6*(2*a*z+3*b)*y^4 - (4*a^3+27*b^2)");
        assert_eq!(
            q.to_string(),
            "y^8 - 8*w*y^6 + 12*a*z*y^4 + 18*b*y^4 - 4*a^3 - 27*b^2"
        );
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(p("-x").to_string(), "-x");
        assert_eq!(p("x/2 - 3/4").to_string(), "1/2*x - 3/4");
    }

    #[test]
    fn evaluation() {
        let q = p("x^2*a - b");
        let v = q
            .eval(&[(Symbol::X, Rational::from(3)), (Symbol::A, Rational::from(2)), (Symbol::B, Rational::from(1))])
            .unwrap();
        assert_eq!(v, Rational::from(17));
        assert!(q.eval(&[(Symbol::X, Rational::from(3))]).is_none());
    }
}
