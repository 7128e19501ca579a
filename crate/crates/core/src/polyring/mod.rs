//! Exact sparse polynomials over Q in a fixed, ordered set of symbols.

mod parse;
mod poly;
mod rewrite;
mod symbol;

pub use parse::parse;
pub use poly::MultiPoly;
pub use rewrite::{reduce, RewriteRule};
pub use symbol::{Monomial, Symbol, NVARS};

/// Parses a polynomial literal known to be valid. Panics otherwise.
pub fn poly(src: &str) -> MultiPoly {
    parse(src).unwrap_or_else(|e| panic!("bad polynomial literal {src:?}: {e}"))
}
