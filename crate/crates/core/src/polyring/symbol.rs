use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

pub const NVARS: usize = 16;

/// Every polynomial lives in Q[x, y, α, w, z, a, b] plus a few auxiliary
/// indeterminates used by the resolvent machinery. The discriminant of the
/// enum is the precedence slot: lower index means higher lex precedence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    X = 0,
    Y = 1,
    Alpha = 2,
    W = 3,
    Z = 4,
    A = 5,
    B = 6,
    /// Auxiliary variable for resultant eliminations.
    T = 7,
    C3 = 8,
    C2 = 9,
    C1 = 10,
    C0 = 11,
    /// Coefficients of the two sextic factors of the degree-12 resolvent.
    V1 = 12,
    V2 = 13,
    V3 = 14,
    V4 = 15,
}

impl Symbol {
    pub const ALL: [Symbol; NVARS] = [
        Symbol::X,
        Symbol::Y,
        Symbol::Alpha,
        Symbol::W,
        Symbol::Z,
        Symbol::A,
        Symbol::B,
        Symbol::T,
        Symbol::C3,
        Symbol::C2,
        Symbol::C1,
        Symbol::C0,
        Symbol::V1,
        Symbol::V2,
        Symbol::V3,
        Symbol::V4,
    ];

    /// Order of factors inside a rendered term: parameters first, the main
    /// variable last (`12*a*z*y^4`).
    pub const DISPLAY_ORDER: [Symbol; NVARS] = [
        Symbol::A,
        Symbol::B,
        Symbol::C0,
        Symbol::C1,
        Symbol::C2,
        Symbol::C3,
        Symbol::V1,
        Symbol::V2,
        Symbol::V3,
        Symbol::V4,
        Symbol::T,
        Symbol::Z,
        Symbol::W,
        Symbol::Alpha,
        Symbol::Y,
        Symbol::X,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::X => "x",
            Symbol::Y => "y",
            Symbol::Alpha => "alpha",
            Symbol::W => "w",
            Symbol::Z => "z",
            Symbol::A => "a",
            Symbol::B => "b",
            Symbol::T => "t",
            Symbol::C3 => "c3",
            Symbol::C2 => "c2",
            Symbol::C1 => "c1",
            Symbol::C0 => "c0",
            Symbol::V1 => "v1",
            Symbol::V2 => "v2",
            Symbol::V3 => "v3",
            Symbol::V4 => "v4",
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Symbol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let sym = match s {
            "x" => Symbol::X,
            "y" => Symbol::Y,
            "alpha" | "α" => Symbol::Alpha,
            "w" => Symbol::W,
            "z" => Symbol::Z,
            "a" => Symbol::A,
            "b" => Symbol::B,
            "t" => Symbol::T,
            "c3" => Symbol::C3,
            "c2" => Symbol::C2,
            "c1" => Symbol::C1,
            "c0" => Symbol::C0,
            "v1" => Symbol::V1,
            "v2" => Symbol::V2,
            "v3" => Symbol::V3,
            "v4" => Symbol::V4,
            _ => {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("unknown symbol {s:?}"),
                })
            }
        };
        Ok(sym)
    }
}

impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Exponent vector over the fixed symbol list. The derived `Ord` is the
/// lexicographic term order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(s: Symbol, e: u16) -> Self {
        let mut m = [0; NVARS];
        m[s.index()] = e;
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self, s: Symbol) -> u16 {
        self.0[s.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn with_degree(mut self, s: Symbol, e: u16) -> Self {
        self.0[s.index()] = e;
        self
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Monomial(m)
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial(m))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Symbol::DISPLAY_ORDER
            .iter()
            .filter(|s| self.degree(**s) > 0)
            .map(|s| match self.degree(*s) {
                1 => s.name().to_string(),
                e => format!("{}^{}", s.name(), e),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_precedence() {
        // x > y > alpha > w > z > a > b
        let order = [
            Symbol::X,
            Symbol::Y,
            Symbol::Alpha,
            Symbol::W,
            Symbol::Z,
            Symbol::A,
            Symbol::B,
        ];
        for pair in order.windows(2) {
            assert!(Monomial::var(pair[0], 1) > Monomial::var(pair[1], 5));
        }
    }

    #[test]
    fn names_round_trip() {
        for s in Symbol::ALL {
            assert_eq!(s.name().parse::<Symbol>().unwrap(), s);
        }
        assert_eq!("α".parse::<Symbol>().unwrap(), Symbol::Alpha);
        assert!("q".parse::<Symbol>().is_err());
    }
}
