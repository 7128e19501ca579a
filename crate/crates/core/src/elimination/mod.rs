//! Resultants and discriminants via fraction-free determinant evaluation of
//! the Sylvester matrix.

use num_traits::Zero;

use crate::error::Error;
use crate::exactnum::Rational;
use crate::polyring::{MultiPoly, Symbol};

/// Two polynomials viewed as univariate in `var`, with their true degrees.
#[derive(Clone, Debug)]
pub struct SylvesterProblem {
    pub a: MultiPoly,
    pub b: MultiPoly,
    pub var: Symbol,
    pub deg_a: usize,
    pub deg_b: usize,
}

impl SylvesterProblem {
    pub fn new(a: &MultiPoly, b: &MultiPoly, var: Symbol) -> Result<Self, Error> {
        let deg = |p: &MultiPoly, which: &str| match p.degree_in(var) {
            Some(d) if d > 0 => Ok(d as usize),
            _ => Err(Error::Domain(format!(
                "resultant needs positive degree in {var}; {which} has degree 0"
            ))),
        };
        Ok(SylvesterProblem {
            deg_a: deg(a, "first argument")?,
            deg_b: deg(b, "second argument")?,
            a: a.clone(),
            b: b.clone(),
            var,
        })
    }

    /// The (degA+degB)-square Sylvester matrix, rows of A first, each row
    /// listing coefficients from the highest power down.
    pub fn matrix(&self) -> Vec<Vec<MultiPoly>> {
        let size = self.deg_a + self.deg_b;
        let ca = self.a.to_univariate(self.var);
        let cb = self.b.to_univariate(self.var);
        let mut rows = Vec::with_capacity(size);
        for (coeffs, deg, shifts) in [(&ca, self.deg_a, self.deg_b), (&cb, self.deg_b, self.deg_a)] {
            for s in 0..shifts {
                let mut row = vec![MultiPoly::zero(); size];
                for k in 0..=deg {
                    row[s + k] = coeffs[deg - k].clone();
                }
                rows.push(row);
            }
        }
        rows
    }

    pub fn resultant(&self) -> Result<MultiPoly, Error> {
        determinant(self.matrix())
    }
}

/// Determinant by Bareiss fraction-free elimination. Every intermediate
/// division is exact; a nonzero remainder means corrupted input and is
/// reported as an invariant violation.
pub fn determinant(mut m: Vec<Vec<MultiPoly>>) -> Result<MultiPoly, Error> {
    let n = m.len();
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Invalid("determinant of a non-square matrix".into()));
    }
    let mut negate = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // prefer the sparsest usable pivot to limit growth
            let pick = (k + 1..n)
                .filter(|&i| !m[i][k].is_zero())
                .min_by_key(|&i| m[i][k].len());
            match pick {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(MultiPoly::zero()),
            }
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        let update_row = |row: &mut Vec<MultiPoly>| -> Result<(), Error> {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let mut v = pivot * &row[j];
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    v = &v - &(&lead * &pivot_row[j]);
                }
                row[j] = if prev.is_one() {
                    v
                } else {
                    v.exact_div(&prev).map_err(|e| {
                        Error::Invariant(format!("Bareiss step {k} not exact: {e}"))
                    })?
                };
            }
            Ok(())
        };
        let heavy = rest.len() > 2 && pivot.len() * prev.len() > 64;
        if heavy {
            let update_row = &update_row;
            std::thread::scope(|s| {
                let handles: Vec<_> = rest
                    .iter_mut()
                    .map(|row| s.spawn(move || update_row(row)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("Bareiss worker panicked"))
                    .collect::<Result<Vec<()>, Error>>()
            })?;
        } else {
            for row in rest.iter_mut() {
                update_row(row)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Res_var(A, B) under the Sylvester convention with A's rows first.
pub fn resultant(a: &MultiPoly, b: &MultiPoly, var: Symbol) -> Result<MultiPoly, Error> {
    SylvesterProblem::new(a, b, var)?.resultant()
}

/// Disc_var(A) = (−1)^(n(n−1)/2) / a_n · Res_var(A, A').
pub fn discriminant(a: &MultiPoly, var: Symbol) -> Result<MultiPoly, Error> {
    let n = a.degree_in(var).unwrap_or(0);
    if n < 2 {
        return Err(Error::Domain(format!(
            "discriminant needs degree at least 2 in {var}"
        )));
    }
    let res = resultant(a, &a.derivative(var), var)?;
    let lead = a.coeff_in(var, n);
    let d = res
        .exact_div(&lead)
        .map_err(|e| Error::Invariant(format!("leading coefficient does not divide resultant: {e}")))?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

/// Discriminant of a univariate polynomial with rational coefficients,
/// given lowest degree first.
pub fn discriminant_rational(coeffs: &[Rational]) -> Result<Rational, Error> {
    let p = MultiPoly::from_univariate(
        Symbol::X,
        &coeffs.iter().cloned().map(MultiPoly::constant).collect::<Vec<_>>(),
    );
    let d = discriminant(&p, Symbol::X)?;
    Ok(d.constant_value().unwrap_or_else(Rational::zero))
}
