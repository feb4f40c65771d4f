use nalgebra::SymmetricEigen;

use super::{CMatrix, DensityMatrix};
use crate::{Error, Result, C64};

/// Eigenvalues of `(H + H†)/2`, ascending.
pub fn hermitian_eigenvalues(h: &CMatrix) -> Vec<f64> {
    let sym = (h + h.adjoint()) * C64::from(0.5);
    let mut eig: Vec<f64> = SymmetricEigen::new(sym).eigenvalues.iter().copied().collect();
    eig.sort_by(f64::total_cmp);
    eig
}

/// Shannon entropy in bits of a spectrum, with `0 log 0 = 0`.
///
/// Eigenvalues in `[-1e-8, 0]` are treated as zero; anything more negative
/// is rejected.
pub fn entropy_of_spectrum(eigenvalues: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &l in eigenvalues {
        if l < -1e-8 {
            return Err(Error::InvalidState(format!("negative eigenvalue {l:.3e}")));
        }
        if l > 0.0 {
            s -= l * l.log2();
        }
    }
    Ok(s.max(0.0))
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    entropy_of_spectrum(&rho.eigenvalues())
}

/// `½‖ρ - σ‖₁`.
pub fn trace_distance(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            found: sigma.dim(),
        });
    }
    let diff = rho.matrix() - sigma.matrix();
    Ok(0.5 * hermitian_eigenvalues(&diff).iter().map(|l| l.abs()).sum::<f64>())
}

/// Which tensor factor of `A ⊗ B` to trace out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

/// Traces out one factor of a state on `A ⊗ B` with `dims = [dim A, dim B]`.
pub fn partial_trace(rho: &DensityMatrix, dims: [usize; 2], traced: Subsystem) -> Result<DensityMatrix> {
    let [da, db] = dims;
    if da * db != rho.dim() {
        return Err(Error::BadFactorization {
            dim: rho.dim(),
            left: da,
            right: db,
        });
    }
    let m = rho.matrix();
    let out = match traced {
        Subsystem::First => CMatrix::from_fn(db, db, |i, j| {
            (0..da).map(|k| m[(k * db + i, k * db + j)]).sum()
        }),
        Subsystem::Second => CMatrix::from_fn(da, da, |i, j| {
            (0..db).map(|k| m[(i * db + k, j * db + k)]).sum()
        }),
    };
    DensityMatrix::new(out)
}
