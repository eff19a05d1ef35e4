//! Built-in instances: the quadric cone with a two-dimensional subtorus, and
//! the plane with the one-dimensional torus acting with weights `1, -1`.

use crate::action::SubtorusAction;
use crate::lattice::{ivec, IVec};
use crate::oracle::SearchBounds;
use crate::toric::{validate_fan, Fan, ToricDivisor};

pub fn quadric_rays() -> Vec<IVec> {
    vec![ivec(&[1, 0, 0]), ivec(&[0, 1, 0]), ivec(&[0, 1, 1]), ivec(&[1, 0, 1])]
}

/// The affine cone over a smooth quadric surface.
pub fn quadric_fan() -> Fan {
    validate_fan(3, &quadric_rays(), &[vec![0, 1, 2, 3]]).expect("quadric fan is valid")
}

/// `(1,0) -> (2,1,1)`, `(0,1) -> (0,2,1)`.
pub fn quadric_action() -> SubtorusAction {
    SubtorusAction::from_images(3, &[ivec(&[2, 1, 1]), ivec(&[0, 2, 1])]).expect("injective")
}

/// `-D_1 + 4 D_3 + 7 D_4`, whose semistable locus is `{[], [0], [2]}`.
pub fn quadric_divisor(fan: &Fan) -> ToricDivisor {
    ToricDivisor::new(fan, ivec(&[-1, 0, 4, 7])).expect("four coefficients")
}

pub fn quadric_bounds() -> SearchBounds {
    SearchBounds { n_max: 4, exponent_box: 16, degree_box: 2 }
}

/// The plane with rays `e_1`, `e_2`.
pub fn intro_fan() -> Fan {
    validate_fan(2, &[ivec(&[1, 0]), ivec(&[0, 1])], &[vec![0, 1]]).expect("plane fan is valid")
}

/// `t -> (t, t^{-1})`.
pub fn intro_action() -> SubtorusAction {
    SubtorusAction::from_images(2, &[ivec(&[1, -1])]).expect("injective")
}

/// `div(z) = D_{e_1}`.
pub fn intro_divisor(fan: &Fan) -> ToricDivisor {
    ToricDivisor::new(fan, ivec(&[1, 0])).expect("two coefficients")
}

pub fn intro_bounds() -> SearchBounds {
    SearchBounds { n_max: 2, exponent_box: 4, degree_box: 2 }
}
