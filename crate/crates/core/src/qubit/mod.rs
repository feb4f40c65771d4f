//! Small-dimension complex linear algebra for qubits and few-qubit registers.
//!
//! Every value here is immutable after construction. Dense matrices are
//! `nalgebra` matrices over [`C64`](crate::C64); single-qubit operators use the
//! fixed-size [`Op2`] and multi-qubit states the dynamic [`CMatrix`].

mod measures;
mod operators;
mod pauli;
mod state;

pub use measures::{
    entropy_of_spectrum, hermitian_eigenvalues, partial_trace, trace_distance,
    von_neumann_entropy, Subsystem,
};
pub use operators::{observable_from_angles, Effect, Observable};
pub use pauli::{
    anti_hermitian_residue, from_pauli, identity2, pauli_components, pauli_matrices, sigma_x,
    sigma_y, sigma_z,
};
pub use state::{bloch_to_density, density_to_bloch, BlochVector, DensityMatrix};

use crate::C64;

/// Single-qubit operator.
pub type Op2 = nalgebra::Matrix2<C64>;
/// Dense square matrix of dimension 2, 4 or 8.
pub type CMatrix = nalgebra::DMatrix<C64>;

/// Largest tolerated anti-Hermitian residue.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Largest tolerated deviation of a state's trace from one.
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalues down to `-PSD_TOL` count as non-negative.
pub const PSD_TOL: f64 = 1e-10;

pub(crate) fn op2_to_dyn(m: &Op2) -> CMatrix {
    CMatrix::from_column_slice(2, 2, m.as_slice())
}

pub(crate) fn dyn_to_op2(m: &CMatrix) -> Op2 {
    Op2::from_column_slice(m.as_slice())
}

/// Max-abs entry norm.
pub(crate) fn max_abs<R: nalgebra::Dim, C: nalgebra::Dim, S>(m: &nalgebra::Matrix<C64, R, C, S>) -> f64
where
    S: nalgebra::RawStorage<C64, R, C>,
{
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}
