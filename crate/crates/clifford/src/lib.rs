//! Exact spin representations of the Clifford algebras behind the 5-, 6- and
//! 8-dimensional solution constructions: the fiber modules, the action of
//! forms, the quadratic endomorphism `E_phi` and its identification `q(phi)`
//! as a differential form, and the fiber-level Dirac cancellation checks.

mod checks;
mod matrix;
mod quad;
mod rep;
mod spinor;

pub use checks::{
    action_checks_5d, energy_endo_checks, omega_action_checks_6d, omega_action_checks_8d,
    primitive_family_certificates, q_value_checks, rank_checks, structural_checks,
    verify_dirac_cancellation, CheckItem, CheckReport, DiracCase,
};
pub use matrix::ExactMat;
pub use quad::{
    clifford_preimage, form_space_basis, identification_rank, q_of_phi, QuadCase, QuadraticForm,
};
pub use rep::{clifford_one_form_on_form, BasisElement, Chirality, FiberRep, SpinDim};
pub use spinor::{clifford_1form, clifford_form, energy_endo, CliffordOp, Spinor};

#[derive(Debug, thiserror::Error)]
pub enum CliffordError {
    #[error(transparent)]
    Algebra(#[from] exalg::ExalgError),
    #[error("form is not purely anti-holomorphic")]
    NotAntiHolomorphic,
    #[error("action produced mixed chirality")]
    MixedChirality,
    #[error("no quadratic-term identification for this (dim, chirality) block")]
    UnsupportedBlock,
    #[error("preimage solve inconsistent; representation bug")]
    PreimageInconsistent,
    #[error("identity failed: {0}")]
    IdentityFailed(String),
}

pub type Result<T> = std::result::Result<T, CliffordError>;
