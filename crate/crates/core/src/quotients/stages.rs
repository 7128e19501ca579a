//! Stages of the expansion of 3^8 b^4 h1(beta) in alpha, used to localize a
//! mismatch in the isomorphism check.

/// Degree-12 expansion in alpha before any reduction.
pub const EXPANSION: &str = "alpha^12 - 2^4*a*alpha^11 + (2^5*5*a^2 - 2^5*3^2*b*z)*alpha^10 + (-2^8*a^3 + \
    2^7*3^3*a*b*z + 2^6*3^4*b^2)*alpha^9 + (-2^8*17*a^4 - 2^10*3^3*a^2*b*z - 2^8*3^5*a*b^2 + \
    2^7*3^5*b^2*z^2)*alpha^8 + (2^13*7*a^5 - 2^12*3^2*a^3*b*z + 2^11*3^5*a^2*b^2 - \
    2^10*3^5*a*b^2*z^2 - 2^9*3^7*b^3*z)*alpha^7 + (-2^14*5*a^6 + 2^15*3^3*a^4*b*z + \
    2^11*3^5*a^3*b^2 + 2^11*3^6*a^2*b^2*z^2 + 2^12*3^7*a*b^3*z + 2^12*3^7*b^4 - \
    2^11*3^6*b^3*z^3)*alpha^6 + (-2^17*5*a^7 - 2^18*3^3*a^5*b*z - 2^14*3^4*11*a^4*b^2 + \
    2^15*3^5*a^3*b^2*z^2 - 2^13*3^8*a^2*b^3*z - 2^15*3^7*a*b^4 + 2^13*3^6*a*b^3*z^3 + \
    2^12*3^9*b^4*z^2)*alpha^5 + (2^16*127*a^8 - 2^18*3^2*5*a^6*b*z + 2^15*3^6*5*a^5*b^2 - \
    2^15*3^5*5*a^4*b^2*z^2 - 2^15*3^6*11*a^3*b^3*z + 2^16*3^8*a^2*b^4 - 2^15*3^6*a^2*b^3*z^3 \
    - 2^14*3^9*a*b^4*z^2 - 2^16*3^9*b^5*z + 2^12*3^8*b^4*z^4)*alpha^4 + (2^20*3*a^9 + \
    2^20*3^4*a^7*b*z + 2^21*3^4*a^6*b^2 + 2^18*3^6*a^5*b^2*z^2 + 2^18*3^6*7*a^4*b^3*z + \
    2^16*3^7*13*a^3*b^4 - 2^17*3^7*a^3*b^3*z^3 - 2^17*3^6*a^3*b^3*w^2 + 2^16*3^9*a^2*b^4*z^2 \
    + 2^18*3^9*a*b^5*z + 2^15*3^11*b^6 - 2^15*3^10*b^5*z^3 - 2^15*3^9*b^5*w^2)*alpha^3 + \
    (-2^21*3^3*a^10 - 2^21*3^5*a^8*b*z - 2^19*3^4*31*a^7*b^2 + 2^19*3^7*a^6*b^2*z^2 - \
    2^19*3^6*17*a^5*b^3*z - 2^18*3^7*17*a^4*b^4 + 2^19*3^6*a^4*b^3*w^2 + \
    2^17*3^8*17*a^3*b^4*z^2 - 2^20*3^9*a^2*b^5*z - 2^17*3^11*a*b^6 + 2^17*3^9*a*b^5*w^2 + \
    2^18*3^11*b^6*z^2)*alpha^2 + (2^24*3^3*a^11 - 2^23*3^5*a^9*b*z + 2^25*3^5*a^8*b^2 - \
    2^24*3^7*a^6*b^3*z + 2^20*3^8*7*a^5*b^4 - 2^21*3^6*a^5*b^3*w^2 - 2^19*3^10*7*a^3*b^5*z + \
    2^20*3^8*a^3*b^4*z*w^2 + 2^19*3^11*a^2*b^6 - 2^19*3^9*a^2*b^5*w^2 - 2^18*3^13*b^7*z + \
    2^18*3^11*b^6*z*w^2)*alpha + 2^24*3^4*a^12 + 2^23*3^6*5*a^9*b^2 + 2^22*3^10*a^6*b^4 - \
    2^23*3^7*a^6*b^3*w^2 - 2^20*3^10*a^5*b^4*z^2 + 2^20*3^9*a^4*b^4*z*w^2 + \
    2^18*3^11*19*a^3*b^6 + 2^20*3^11*a^3*b^5*z^3 - 2^20*3^10*5*a^3*b^5*w^2 - \
    2^18*3^13*a^2*b^6*z^2 + 2^18*3^12*a*b^6*z*w^2 + 2^18*3^14*b^8 + 2^18*3^14*b^7*z^3 - \
    2^18*3^14*b^7*w^2";

/// Coefficient of alpha^3 after alpha^4 -> 4*Delta*alpha + 12*a*Delta.
pub const C3: &str = "2^17*3^6*a^4*b^3*z + 2^17*3^6*a^3*b^4 + 2^17*3^6*a^3*b^3*z^3 - 2^17*3^6*a^3*b^3*w^2 + \
    2^15*3^9*a*b^5*z + 2^15*3^9*b^6 + 2^15*3^9*b^5*z^3 - 2^15*3^9*b^5*w^2";

/// Coefficient of alpha^2 after alpha^4 -> 4*Delta*alpha + 12*a*Delta.
pub const C2: &str = "-2^19*3^6*a^5*b^3*z - 2^19*3^6*a^4*b^4 - 2^19*3^6*a^4*b^3*z^3 + 2^19*3^6*a^4*b^3*w^2 - \
    2^17*3^9*a^2*b^5*z - 2^17*3^9*a*b^6 - 2^17*3^9*a*b^5*z^3 + 2^17*3^9*a*b^5*w^2";

/// Coefficient of alpha^1 after alpha^4 -> 4*Delta*alpha + 12*a*Delta.
pub const C1: &str = "2^21*3^6*a^6*b^3*z + 2^21*3^6*a^5*b^4 + 2^21*3^6*a^5*b^3*z^3 - 2^21*3^6*a^5*b^3*w^2 - \
    2^20*3^8*a^4*b^4*z^2 + 2^19*3^8*a^3*b^5*z - 2^20*3^8*a^3*b^4*z^4 + \
    2^20*3^8*a^3*b^4*z*w^2 + 2^19*3^9*a^2*b^6 + 2^19*3^9*a^2*b^5*z^3 - 2^19*3^9*a^2*b^5*w^2 \
    - 2^18*3^11*a*b^6*z^2 - 2^18*3^11*b^7*z - 2^18*3^11*b^6*z^4 + 2^18*3^11*b^6*z*w^2";

/// Coefficient of alpha^0 after alpha^4 -> 4*Delta*alpha + 12*a*Delta.
pub const C0: &str = "2^23*3^7*a^7*b^3*z + 2^23*3^7*a^6*b^4 + 2^23*3^7*a^6*b^3*z^3 - 2^23*3^7*a^6*b^3*w^2 - \
    2^20*3^9*a^5*b^4*z^2 + 2^21*3^9*7*a^4*b^5*z - 2^20*3^9*a^4*b^4*z^4 + \
    2^20*3^9*a^4*b^4*z*w^2 + 2^20*3^10*5*a^3*b^6 + 2^20*3^10*5*a^3*b^5*z^3 - \
    2^20*3^10*5*a^3*b^5*w^2 - 2^18*3^12*a^2*b^6*z^2 + 2^21*3^12*a*b^7*z - \
    2^18*3^12*a*b^6*z^4 + 2^18*3^12*a*b^6*z*w^2 + 2^18*3^14*b^8 + 2^18*3^14*b^7*z^3 - \
    2^18*3^14*b^7*w^2";
