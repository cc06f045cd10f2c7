//! Reduction theory at desk scale.
//!
//! [`minkowski_reduce`] puts positive binary forms into the classical
//! reduction domain of `SL(2, Z)`. For a hyperbolic generator `g` acting on
//! one sheet of `a x1^2 - b x2^2 > 0`, [`translate_locate`] finds which
//! translate `g^k Pi` contains a point and [`verify_fundamental_domain`]
//! checks the covering and disjoint-interiors axioms for a candidate `Pi`.

mod action;
mod form;
mod verify;

pub use action::{
    mat2_det, mat2_from_ints, mat2_identity, mat2_inverse, mat2_mul, mat2_pow, mat2_transpose, translate_locate,
    translate_locate_within, GroupAction2D, Mat2, DEFAULT_LOCATE_STEPS,
};
pub use form::{minkowski_reduce, IntegralForm, UnimodularMatrix};
pub use verify::{
    rational_pair, rational_string, sample_points, verify_fundamental_domain, DomainReport, Witness, MAX_WITNESSES,
    SAMPLE_BOX,
};
