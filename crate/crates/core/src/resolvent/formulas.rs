//! Closed forms for the resolvents of a monic quartic
//! x^4 + c3*x^3 + c2*x^2 + c1*x + c0. Strings in e1..e4 use the elementary
//! symmetric functions of the roots: e1 = -c3, e2 = c2, e3 = -c1, e4 = c0.

/// Product resolvent k(x), roots r_i*r_j.
pub const TWO_SET: &str = "x^6 - c2*x^5 + (c1*c3 - c0)*x^4 + (-c0*(c3^2 - 2*c2) - c1^2)*x^3 + c0*(c1*c3 - c0)*x^2 \
    - c0^2*c2*x + c0^3";

/// Degree-12 resolvent h(x) in c0..c3 and v1..v4, where h = (C + v1*x + v3)(C + v2*x + v4).
pub const DEGREE_12: &str = "x^12 - 6*c2*x^11 + (-10*c0 + 4*c1*c3 + 15*c2^2)*x^10 + (50*c0*c2 - 20*c1*c2*c3 - \
    20*c2^3)*x^9 + (55*c0^2 - 34*c0*c1*c3 - 106*c0*c2^2 + 2*c0*c2*c3^2 + 2*c1^2*c2 + \
    6*c1^2*c3^2 + 40*c1*c2^2*c3 + 15*c2^4)*x^8 + (-190*c0^2*c2 + 122*c0*c1*c2*c3 + \
    118*c0*c2^3 - 6*c0*c2^2*c3^2 - 6*c1^2*c2^2 - 22*c1^2*c2*c3^2 - 40*c1*c2^3*c3 - 6*c2^5 + \
    v1 + v2)*x^7 + (-150*c0^3 + 130*c0^2*c1*c3 + 270*c0^2*c2^2 - 10*c0^2*c2*c3^2 - \
    10*c0*c1^2*c2 - 38*c0*c1^2*c3^2 - 174*c0*c1*c2^2*c3 + 4*c0*c1*c2*c3^3 - 68*c0*c2^4 + \
    6*c0*c2^3*c3^2 + 4*c1^3*c2*c3 + 4*c1^3*c3^3 + 6*c1^2*c2^3 + 30*c1^2*c2^2*c3^2 + \
    20*c1*c2^4*c3 + c2^6 - 3*c2*v1 - 3*c2*v2 + v3 + v4)*x^6 + (300*c0^3*c2 - \
    260*c0^2*c1*c2*c3 - 190*c0^2*c2^3 + 20*c0^2*c2^2*c3^2 + 20*c0*c1^2*c2^2 + \
    76*c0*c1^2*c2*c3^2 + 118*c0*c1*c2^3*c3 - 8*c0*c1*c2^2*c3^3 + 16*c0*c2^5 - 2*c0*c2^4*c3^2 \
    - 5*c0*v1 - 5*c0*v2 - 8*c1^3*c2^2*c3 - 8*c1^3*c2*c3^3 - 2*c1^2*c2^4 - 18*c1^2*c2^3*c3^2 \
    - 4*c1*c2^5*c3 + 2*c1*c3*v1 + 2*c1*c3*v2 + 3*c2^2*v1 + 3*c2^2*v2 - 3*c2*v3 - \
    3*c2*v4)*x^5 + (225*c0^4 - 210*c0^3*c1*c3 - 240*c0^3*c2^2 + 30*c0^3*c2*c3^2 + \
    30*c0^2*c1^2*c2 + 79*c0^2*c1^2*c3^2 + 172*c0^2*c1*c2^2*c3 - 14*c0^2*c1*c2*c3^3 + \
    64*c0^2*c2^4 - 16*c0^2*c2^3*c3^2 + c0^2*c2^2*c3^4 - 14*c0*c1^3*c2*c3 - 14*c0*c1^3*c3^3 - \
    16*c0*c1^2*c2^3 - 42*c0*c1^2*c2^2*c3^2 + 2*c0*c1^2*c2*c3^4 - 32*c0*c1*c2^4*c3 + \
    4*c0*c1*c2^3*c3^3 + 10*c0*c2*v1 + 10*c0*c2*v2 - 5*c0*v3 - 5*c0*v4 + c1^4*c2^2 + \
    2*c1^4*c2*c3^2 + c1^4*c3^4 + 4*c1^3*c2^3*c3 + 4*c1^3*c2^2*c3^3 + 4*c1^2*c2^4*c3^2 - \
    4*c1*c2*c3*v1 - 4*c1*c2*c3*v2 + 2*c1*c3*v3 + 2*c1*c3*v4 - c2^3*v1 - c2^3*v2 + 3*c2^2*v3 \
    + 3*c2^2*v4)*x^4 + (15*c0^2*v1 + 15*c0^2*v2 - 7*c0*c1*c3*v1 - 7*c0*c1*c3*v2 - \
    8*c0*c2^2*v1 - 8*c0*c2^2*v2 + c0*c2*c3^2*v1 + c0*c2*c3^2*v2 + 10*c0*c2*v3 + 10*c0*c2*v4 \
    + c1^2*c2*v1 + c1^2*c2*v2 + c1^2*c3^2*v1 + c1^2*c3^2*v2 + 2*c1*c2^2*c3*v1 + \
    2*c1*c2^2*c3*v2 - 4*c1*c2*c3*v3 - 4*c1*c2*c3*v4 - c2^3*v3 - c2^3*v4)*x^3 + (15*c0^2*v3 + \
    15*c0^2*v4 - 7*c0*c1*c3*v3 - 7*c0*c1*c3*v4 - 8*c0*c2^2*v3 - 8*c0*c2^2*v4 + c0*c2*c3^2*v3 \
    + c0*c2*c3^2*v4 + c1^2*c2*v3 + c1^2*c2*v4 + c1^2*c3^2*v3 + c1^2*c3^2*v4 + \
    2*c1*c2^2*c3*v3 + 2*c1*c2^2*c3*v4 + v1*v2)*x^2 + (v1*v4 + v2*v3)*x + v3*v4";

/// v1 + v2.
pub const SUM1: &str = "-2*e1^2*e2^2*e4 - 2*e1^2*e2*e3^2 + 14*e1*e2*e3*e4 + 6*e2^3*e4 - 2*e2^2*e3^2 - 30*e2*e4^2";

/// v3 + v4.
pub const SUM2: &str = "-2*e1^4*e4^2 + 2*e1^3*e2*e3*e4 + 7*e1^2*e2*e4^2 - 4*e1^2*e3^2*e4 - 7*e1*e2^2*e3*e4 + \
    2*e1*e2*e3^3 - 2*e1*e3*e4^2 + 2*e2^2*e4^2 + 7*e2*e3^2*e4 - 2*e3^4 + 10*e4^3";

/// v3 * v4.
pub const PRODUCT2: &str = "e1^8*e4^4 - 2*e1^7*e2*e3*e4^3 + e1^6*e2^2*e3^2*e4^2 - 7*e1^6*e2*e4^4 + 4*e1^6*e3^2*e4^3 \
    + 14*e1^5*e2^2*e3*e4^3 - 6*e1^5*e2*e3^3*e4^2 + 2*e1^5*e3*e4^4 - 7*e1^4*e2^3*e3^2*e4^2 + \
    2*e1^4*e2^2*e3^4*e4 + 17*e1^4*e2^2*e4^4 - 23*e1^4*e2*e3^2*e4^3 + 6*e1^4*e3^4*e4^2 - \
    10*e1^4*e4^5 - 27*e1^3*e2^3*e3*e4^3 + 29*e1^3*e2^2*e3^3*e4^2 - 6*e1^3*e2*e3^5*e4 + \
    3*e1^3*e2*e3*e4^4 + 4*e1^3*e3^3*e4^3 + e1^2*e2^5*e4^3 + 12*e1^2*e2^4*e3^2*e4^2 - \
    7*e1^2*e2^3*e3^4*e4 - 29*e1^2*e2^3*e4^4 + e1^2*e2^2*e3^6 + 29*e1^2*e2^2*e3^2*e4^3 - \
    23*e1^2*e2*e3^4*e4^2 + 35*e1^2*e2*e4^5 + 4*e1^2*e3^6*e4 - 19*e1^2*e3^2*e4^4 + \
    13*e1*e2^4*e3*e4^3 - 27*e1*e2^3*e3^3*e4^2 + 14*e1*e2^2*e3^5*e4 + 11*e1*e2^2*e3*e4^4 - \
    2*e1*e2*e3^7 + 3*e1*e2*e3^3*e4^3 + 2*e1*e3^5*e4^2 - 10*e1*e3*e4^5 - 4*e2^6*e4^3 + \
    e2^5*e3^2*e4^2 + 33*e2^4*e4^4 - 29*e2^3*e3^2*e4^3 + 17*e2^2*e3^4*e4^2 - 54*e2^2*e4^5 - \
    7*e2*e3^6*e4 + 35*e2*e3^2*e4^4 + e3^8 - 10*e3^4*e4^3 + 25*e4^6";

pub const G2: &str = "-2*e1^6*e2*e4^3 - 2*e1^6*e3^2*e4^2 - 2*e1^5*e2^2*e3*e4^2 + 2*e1^5*e2*e3^3*e4 + \
    14*e1^5*e3*e4^3 + e1^4*e2^4*e4^2 + 6*e1^4*e2^3*e3^2*e4 + e1^4*e2^2*e3^4 + \
    23*e1^4*e2^2*e4^3 - 13*e1^4*e2*e3^2*e4^2 - 4*e1^4*e3^4*e4 - 3*e1^4*e4^4 - \
    23*e1^3*e2^3*e3*e4^2 - 25*e1^3*e2^2*e3^3*e4 + 2*e1^3*e2*e3^5 - 39*e1^3*e2*e3*e4^3 + \
    30*e1^3*e3^3*e4^2 - 6*e1^2*e2^5*e4^2 - 18*e1^2*e2^4*e3^2*e4 + 6*e1^2*e2^3*e3^4 - \
    20*e1^2*e2^3*e4^3 + 171*e1^2*e2^2*e3^2*e4^2 - 13*e1^2*e2*e3^4*e4 - 29*e1^2*e2*e4^4 - \
    2*e1^2*e3^6 - 30*e1^2*e3^2*e4^3 + 102*e1*e2^4*e3*e4^2 - 23*e1*e2^3*e3^3*e4 - \
    2*e1*e2^2*e3^5 - 213*e1*e2^2*e3*e4^3 - 39*e1*e2*e3^3*e4^2 + 14*e1*e3^5*e4 + \
    92*e1*e3*e4^4 + 9*e2^6*e4^2 - 6*e2^5*e3^2*e4 + e2^4*e3^4 - 122*e2^4*e4^3 - \
    20*e2^3*e3^2*e4^2 + 23*e2^2*e3^4*e4 + 303*e2^2*e4^4 - 2*e2*e3^6 - 29*e2*e3^2*e4^3 - \
    3*e3^4*e4^2 - 106*e4^5";

/// v1 * v2 = G2 - (v3 + v4) * PRODUCT1_FACTOR.
pub const PRODUCT1_FACTOR: &str = "15*c0^2 - 7*c0*c1*c3 - 8*c0*c2^2 + c0*c2*c3^2 + c1^2*c2 + c1^2*c3^2 + 2*c1*c2^2*c3";
