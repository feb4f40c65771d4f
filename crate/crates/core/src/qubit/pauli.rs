use nalgebra::Vector3;

use super::{max_abs, Op2, HERMITIAN_TOL};
use crate::{Error, Result, C64};

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

pub fn identity2() -> Op2 {
    Op2::identity()
}

pub fn sigma_x() -> Op2 {
    Op2::new(ZERO, ONE, ONE, ZERO)
}

pub fn sigma_y() -> Op2 {
    Op2::new(ZERO, -I, I, ZERO)
}

pub fn sigma_z() -> Op2 {
    Op2::new(ONE, ZERO, ZERO, -ONE)
}

/// `[σx, σy, σz]`.
pub fn pauli_matrices() -> [Op2; 3] {
    [sigma_x(), sigma_y(), sigma_z()]
}

/// Largest entry of `(H - H†)/2`.
pub fn anti_hermitian_residue(h: &Op2) -> f64 {
    max_abs(&((h - h.adjoint()) * C64::new(0.5, 0.0)))
}

/// Decomposes a Hermitian operator as `c0·𝟙 + c·σ`.
pub fn pauli_components(h: &Op2) -> Result<(f64, Vector3<f64>)> {
    let residual = anti_hermitian_residue(h);
    if residual > HERMITIAN_TOL {
        return Err(Error::NotHermitian { residual });
    }
    let c0 = 0.5 * h.trace().re;
    let [sx, sy, sz] = pauli_matrices();
    let c = Vector3::new(
        0.5 * (sx * h).trace().re,
        0.5 * (sy * h).trace().re,
        0.5 * (sz * h).trace().re,
    );
    Ok((c0, c))
}

/// Builds `c0·𝟙 + c·σ`.
pub fn from_pauli(c0: f64, c: &Vector3<f64>) -> Op2 {
    let [sx, sy, sz] = pauli_matrices();
    identity2() * C64::from(c0) + sx * C64::from(c.x) + sy * C64::from(c.y) + sz * C64::from(c.z)
}
