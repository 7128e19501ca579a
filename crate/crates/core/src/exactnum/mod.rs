//! Exact integers and rationals, square tests and factored display.

mod factor;
mod rational;

pub use factor::{
    factor, factor_rational_display, is_probable_prime, is_square, isqrt, rational_sqrt,
    same_square_class,
    squarefree_part, FactoredInteger, DEFAULT_EFFORT,
};
pub use rational::{Integer, Rational};
