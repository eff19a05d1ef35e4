//! Geometric invariant theory of subtorus actions on toric varieties, in
//! exact integer arithmetic.

pub mod action;
pub mod certificate;
pub mod cone;
pub mod fixtures;
pub mod hm;
pub mod lattice;
pub mod oracle;
pub mod quotient;
pub mod toric;
mod witness;

pub use action::{
    git_chambers, mumford_trivial_semistable, obstruction_report, semistable_divisor, semistable_group, weight_cone,
    weight_of, ActionError, Chamber, Linearization, ObstructionReport, SubtorusAction,
};
pub use certificate::{
    replay, replay_locus, CertificateKind, InvertibleWitness, ReplayContext, ReplayError, SemistabilityCertificate,
    SemistableLocus, Weights,
};
pub use cone::{feasible_strict, Cone, FeasibilitySystem};
pub use lattice::{
    cokernel_projection, kernel_basis, saturate, smith_normal_form, solve_integer, IVec, Int, IntMatrix, LatticeMap,
    SmithDecomposition, Sublattice,
};
pub use quotient::{
    build_quotient, is_saturated, is_separated, orbit_image, GluedQuotient, QuotientChart, QuotientError,
};
pub use toric::{
    ample_locus, cartier_locus, class_group, is_affine, is_cartier_on, validate_fan, ClassGroup, DivisorError,
    DivisorGroup, Face, Fan, FanError, SubfanLocus, ToricDivisor,
};
