//! Division polynomials, the multiplication-by-n maps, preimage polynomials
//! of a point and the origami octic.

mod curve;
mod group;
mod preimage;
mod psi;

pub use curve::{AffinePoint, CurveSpec};
pub use group::{ec_add, ec_mul, Point};
pub use preimage::{
    origami_octic, origami_quartic, origami_quartic_via_resultant, preimage_poly_x,
    preimage_poly_xy, r_poly, verify_coefficient_reductions, verify_s_identity, y_resultant,
    y_resultant_cofactor, PointSign, RAW_Y_RESULTANT, R_DISPLAY,
};
pub use psi::{psi4_generic, DivisionPolySet};
