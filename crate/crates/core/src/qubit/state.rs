use nalgebra::Vector3;

use super::measures::hermitian_eigenvalues;
use super::{
    dyn_to_op2, from_pauli, max_abs, op2_to_dyn, pauli_matrices, CMatrix, Op2, HERMITIAN_TOL,
    PSD_TOL, TRACE_TOL,
};
use crate::{Error, Result, C64};

const MAX_DIM: usize = 8;

/// A Hermitian, unit-trace, positive semidefinite matrix of dimension 2, 4 or 8.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: CMatrix,
}

impl DensityMatrix {
    /// Validates and stores `(m + m†)/2`.
    pub fn new(m: CMatrix) -> Result<Self> {
        let dim = m.nrows();
        if m.ncols() != dim {
            return Err(Error::InvalidState(format!(
                "matrix is {}x{}, not square",
                dim,
                m.ncols()
            )));
        }
        if !(2..=MAX_DIM).contains(&dim) || !dim.is_power_of_two() {
            return Err(Error::InvalidState(format!(
                "dimension {dim} is not one of 2, 4, 8"
            )));
        }
        let residual = max_abs(&(&m - m.adjoint())) * 0.5;
        if residual > HERMITIAN_TOL {
            return Err(Error::NotHermitian { residual });
        }
        let matrix = (&m + m.adjoint()) * C64::from(0.5);
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > TRACE_TOL {
            return Err(Error::InvalidState(format!("trace is {trace}, expected 1")));
        }
        let min_eig = hermitian_eigenvalues(&matrix)[0];
        if min_eig < -PSD_TOL {
            return Err(Error::InvalidState(format!(
                "negative eigenvalue {min_eig:.3e}"
            )));
        }
        Ok(Self { matrix })
    }

    pub fn from_qubit(m: &Op2) -> Result<Self> {
        Self::new(op2_to_dyn(m))
    }

    /// `½(𝟙 + r·σ)`.
    pub fn from_bloch(r: &BlochVector) -> Self {
        let m = from_pauli(0.5, &(r.0 * 0.5));
        Self {
            matrix: op2_to_dyn(&m),
        }
    }

    /// The pure state `cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`.
    pub fn pure_from_angles(theta: f64, phi: f64) -> Self {
        Self::from_bloch(&BlochVector::from_angles(theta, phi))
    }

    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        Self::new(CMatrix::identity(dim, dim) * C64::from(1.0 / dim as f64))
    }

    /// `|k⟩⟨k|` in dimension `dim`.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::InvalidState(format!("basis index {k} >= {dim}")));
        }
        let mut m = CMatrix::zeros(dim, dim);
        m[(k, k)] = C64::from(1.0);
        Self::new(m)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// The 2×2 matrix of a qubit state.
    pub fn qubit_matrix(&self) -> Result<Op2> {
        if self.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: self.dim(),
            });
        }
        Ok(dyn_to_op2(&self.matrix))
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.matrix)
    }

    pub fn kron(&self, other: &Self) -> Result<Self> {
        Self::new(self.matrix.kronecker(&other.matrix))
    }
}

/// Real 3-vector with `|r| ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector(Vector3<f64>);

impl BlochVector {
    pub const NORM_TOL: f64 = 1e-12;

    pub fn new(r: Vector3<f64>) -> Result<Self> {
        let n = r.norm();
        if !n.is_finite() || n > 1.0 + Self::NORM_TOL {
            return Err(Error::InvalidState(format!("Bloch vector norm {n} exceeds 1")));
        }
        Ok(Self(r))
    }

    /// `(sin θ cos φ, sin θ sin φ, cos θ)`.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        Self(Vector3::new(
            theta.sin() * phi.cos(),
            theta.sin() * phi.sin(),
            theta.cos(),
        ))
    }

    pub fn vector(&self) -> Vector3<f64> {
        self.0
    }
}

pub fn bloch_to_density(r: Vector3<f64>) -> Result<DensityMatrix> {
    Ok(DensityMatrix::from_bloch(&BlochVector::new(r)?))
}

/// `r_j = Tr(σ_j ρ)` for a qubit state.
pub fn density_to_bloch(rho: &DensityMatrix) -> Result<BlochVector> {
    let m = rho.qubit_matrix()?;
    let [sx, sy, sz] = pauli_matrices();
    let r = Vector3::new(
        (sx * m).trace().re,
        (sy * m).trace().re,
        (sz * m).trace().re,
    );
    BlochVector::new(r)
}
