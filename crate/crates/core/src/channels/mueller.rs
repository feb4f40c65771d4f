use nalgebra::{Matrix3, Matrix4, Vector3, Vector4};

use super::KrausChannel;
use crate::qubit::{identity2, pauli_matrices};

/// Real 4×4 matrix of a qubit map acting on `(1, r)`.
///
/// For a trace-preserving channel the block form is
///
/// ```text
/// M = | 1  0 |
///     | t  Λ |
/// ```
///
/// and `t = 0` exactly when the channel is unital.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuellerMatrix {
    m: Matrix4<f64>,
}

impl MuellerMatrix {
    pub fn new(m: Matrix4<f64>) -> Self {
        Self { m }
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.m
    }

    /// First column below the corner.
    pub fn t(&self) -> Vector3<f64> {
        Vector3::new(self.m[(1, 0)], self.m[(2, 0)], self.m[(3, 0)])
    }

    /// Lower-right 3×3 block.
    pub fn lambda(&self) -> Matrix3<f64> {
        self.m.fixed_view::<3, 3>(1, 1).into_owned()
    }

    /// Whether the first row is `(1, 0, 0, 0)` within `tol`.
    pub fn is_trace_preserving(&self, tol: f64) -> bool {
        (self.m[(0, 0)] - 1.0).abs() <= tol && (1..4).all(|j| self.m[(0, j)].abs() <= tol)
    }

    /// Affine image `t + Λ r` of a Bloch vector.
    pub fn apply_bloch(&self, r: &Vector3<f64>) -> Vector3<f64> {
        let out = self.m * Vector4::new(1.0, r.x, r.y, r.z);
        Vector3::new(out[1], out[2], out[3])
    }
}

/// `M[i][j] = ½ Tr(σ_i ℰ[σ_j])` with `σ_0 = 𝟙`.
pub fn mueller_matrix(ch: &KrausChannel) -> MuellerMatrix {
    let [sx, sy, sz] = pauli_matrices();
    let basis = [identity2(), sx, sy, sz];
    let images: Vec<_> = basis.iter().map(|s| ch.sandwich(s)).collect();
    let m = Matrix4::from_fn(|i, j| 0.5 * (basis[i] * images[j]).trace().re);
    MuellerMatrix { m }
}

/// Mueller matrix of the conjugate channel: the transpose.
pub fn conjugate_mueller(m: &MuellerMatrix) -> MuellerMatrix {
    MuellerMatrix { m: m.m.transpose() }
}
