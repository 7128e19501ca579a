//! Exact symbolic machinery for elliptic-curve origami preimages: division
//! polynomials, resultant eliminations, resolvent-based Galois group tests
//! and the quotient polynomials attached to the octic.

pub mod error;
pub mod elimination;
pub mod divpoly;
pub mod exactnum;
pub mod polyring;
pub mod quotients;
pub mod report;
pub mod resolvent;

pub use error::{Error, Result};
