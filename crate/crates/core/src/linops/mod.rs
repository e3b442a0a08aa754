//! Minimal dense complex linear algebra: Hermitian eigendecomposition,
//! tensor products, partial traces, and symmetric-subspace (Dicke) bases.
//!
//! Everything here is a pure function of its inputs; values are immutable
//! after construction and safe to share across threads.

mod dicke;
mod eig;
mod operator;
mod state;

pub use dicke::{dicke_basis, symmetric_projector};
pub use eig::{
    hermitian_eig, singular_trace_norm, trace_norm, SpectralDecomposition, OFF_DIAG_TOL,
};
pub use operator::{kron, outer, partial_trace, projector_sum, Operator, HERMITICITY_TOL};
pub use state::{bloch_state, StateVector, NORM_TOL};

/// Largest full-tensor dimension the library will allocate.
///
/// Protects the explicit-tensor code paths, which are only meant for small
/// copy counts, from accidental exponential blowup.
pub const DIM_CAP: usize = 1 << 14;
