//! Resolvents of quartics r(x) and the octic r(x^2), the Hol(Q8) versus
//! S2 wr S4 test, small Galois certificates and permutation-group checks.

pub mod classify;
pub mod formulas;
pub mod frobenius;
pub mod galois;
pub mod modp;
pub mod perm;
pub mod quartic;
pub mod resolvents;
pub mod upoly;
pub mod zassenhaus;

pub use classify::{classify_octic, Classification, Verdict};
pub use frobenius::{frobenius_report, CycleTypeReport, FrobeniusRow};
pub use galois::{
    cubic_galois, cubic_galois_poly, irreducibility_certificate, quartic_galois, CubicGroup,
    Irreducibility, QuarticGroup,
};
pub use perm::{cycle_type_set, normalizer_in_s8, perm_closure, Perm, PermGroup};
pub use quartic::Quartic;
pub use resolvents::{
    common_sextic, degree12_resolvent, octic_discriminant, p1_p2, resolvent_cubic,
    two_set_resolvent, verify_degree12_formula, verify_h_factorization, verify_origami_discriminants,
    verify_q_minus_u, HFactorization, PairQuadratics, QuadraticField,
};
