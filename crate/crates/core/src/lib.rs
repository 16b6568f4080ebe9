//! Entanglement invariants of symmetric multiqubit states through the
//! Majorana stellar representation.
//!
//! A symmetric state of `n` qubits is encoded by the `n` roots of its
//! Majorana polynomial, or equivalently by `n` points on the sphere. Local
//! unitary invariants are functions of the inner products between those
//! points ([`lu`]); SLOCC invariants are functions of cross-ratios of the
//! roots ([`slocc`]). The [`oracle`] module recomputes the standard
//! invariants in the full `2^n` Hilbert space as an independent check.

pub mod error;
pub mod linalg;
pub mod lu;
pub mod oracle;
pub mod par;
pub mod polyroots;
pub mod sampling;
pub mod slocc;
pub mod state;
pub mod transforms;

pub use error::{Error, Result};
pub use lu::{
    bloch_radius2, concurrence2, gram, lu_invariants3, slui_coefficients, InnerProductMatrix,
    LuInvariantSet, SymmetricCoefficients,
};
pub use oracle::{
    dicke_expand, oracle_lu_invariants3, three_tangle, wootters_concurrence, DenseState,
    DensityMatrix, Qubit,
};
pub use par::Execution;
pub use polyroots::{cluster, find_roots, Cluster};
pub use slocc::{
    anharmonic_orbit, canonical_representative, cross_ratio, degeneracy_class, i2_closed_n4,
    klein_j, lambda_vector, slocc_invariants, symmetrized_ik, symmetrized_ik_with,
    DegeneracyClass, SloccInvariantSet, SumOutcome, SymmetrizedSum,
};
pub use state::{
    chordal_distance, majorana_polynomial, multiset_distance, state_from_roots, to_sphere,
    MajoranaPolynomial, RiemannPoint, SphereVector, SymmetricState,
};
pub use transforms::{
    apply_mobius, ilo_operator, lu_unitary, mobius_from_ilo, rotation_from_h, time_reversal,
    y_theta, IloParameters, MobiusTransform, SpinOperators, SymmetricOperator,
};

/// Default chordal tolerance for clustering roots and classifying states.
pub const DEFAULT_TOL: f64 = 1e-7;

/// Residual tolerance used when computing roots for invariants.
pub const ROOT_TOL: f64 = 1e-12;

/// Majorana roots of a state.
pub fn roots_of(state: &SymmetricState) -> Result<Vec<RiemannPoint>> {
    find_roots(&state.majorana_polynomial(), ROOT_TOL)
}

/// Sphere points of a state's Majorana roots.
pub fn constellation(state: &SymmetricState) -> Result<Vec<SphereVector>> {
    Ok(roots_of(state)?.iter().map(|r| r.to_sphere()).collect())
}

/// Three-qubit LU invariants computed from the Majorana constellation.
pub fn majorana_lu_invariants3(state: &SymmetricState) -> Result<LuInvariantSet> {
    lu_invariants3(&gram(&constellation(state)?)?)
}
