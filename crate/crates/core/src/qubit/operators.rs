use std::f64::consts::{PI, TAU};

use nalgebra::Vector3;

use super::measures::hermitian_eigenvalues;
use super::{
    anti_hermitian_residue, from_pauli, identity2, op2_to_dyn, pauli_components, Op2,
    HERMITIAN_TOL, PSD_TOL,
};
use crate::{Error, Result, C64};

/// Dichotomic observable
///
/// ```text
/// Q = | cos Θ           e^{iΦ} sin Θ |
///     | e^{-iΦ} sin Θ   -cos Θ       |
/// ```
///
/// with eigenvalues ±1 and eigenprojectors `Π± = ½(𝟙 ± Q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable {
    matrix: Op2,
    theta: f64,
    phi: f64,
}

impl Observable {
    pub fn matrix(&self) -> &Op2 {
        &self.matrix
    }

    /// Canonical angles, `Θ ∈ [0, π]` and `Φ ∈ [0, 2π)`.
    pub fn angles(&self) -> (f64, f64) {
        (self.theta, self.phi)
    }

    /// Unit vector `n̂` with `Q = n̂·σ`.
    pub fn direction(&self) -> Vector3<f64> {
        Vector3::new(
            self.theta.sin() * self.phi.cos(),
            -self.theta.sin() * self.phi.sin(),
            self.theta.cos(),
        )
    }

    /// `(Π+, Π-)`.
    pub fn projectors(&self) -> (Op2, Op2) {
        let half = C64::from(0.5);
        let id = identity2();
        ((id + self.matrix) * half, (id - self.matrix) * half)
    }
}

/// Builds the dichotomic observable for measurement angles `(Θ, Φ)`.
///
/// Out-of-range angles are wrapped; `Θ` outside `[0, π]` is folded back with
/// `Φ → Φ + π`, which describes the same operator.
pub fn observable_from_angles(theta: f64, phi: f64) -> Observable {
    let (c, s) = (theta.cos(), theta.sin());
    let e = C64::from_polar(1.0, phi);
    let matrix = Op2::new(C64::from(c), e * s, e.conj() * s, C64::from(-c));

    let mut t = theta.rem_euclid(TAU);
    let mut p = phi;
    if t > PI {
        t = TAU - t;
        p += PI;
    }
    Observable {
        matrix,
        theta: t,
        phi: p.rem_euclid(TAU),
    }
}

/// A POVM element: Hermitian with spectrum in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Effect {
    matrix: Op2,
}

impl Effect {
    pub fn new(m: Op2) -> Result<Self> {
        let residual = anti_hermitian_residue(&m);
        if residual > HERMITIAN_TOL {
            return Err(Error::NotHermitian { residual });
        }
        let matrix = (m + m.adjoint()) * C64::from(0.5);
        let eig = hermitian_eigenvalues(&op2_to_dyn(&matrix));
        if eig[0] < -PSD_TOL || eig[1] > 1.0 + PSD_TOL {
            return Err(Error::InvalidState(format!(
                "effect spectrum [{:.3e}, {:.3e}] leaves [0, 1]",
                eig[0], eig[1]
            )));
        }
        Ok(Self { matrix })
    }

    /// `E = ½[(1 + x)𝟙 + m·σ]`.
    pub fn from_bias_vector(x: f64, m: &Vector3<f64>) -> Result<Self> {
        Self::new(from_pauli(0.5 * (1.0 + x), &(m * 0.5)))
    }

    pub fn identity() -> Self {
        Self { matrix: identity2() }
    }

    pub fn matrix(&self) -> &Op2 {
        &self.matrix
    }

    /// `(c0, c)` with `E = c0·𝟙 + c·σ`.
    pub fn pauli(&self) -> (f64, Vector3<f64>) {
        pauli_components(&self.matrix).expect("effects are Hermitian")
    }

    pub fn eigenvalues(&self) -> [f64; 2] {
        let e = hermitian_eigenvalues(&op2_to_dyn(&self.matrix));
        [e[0], e[1]]
    }

    /// `𝟙 - E`.
    pub fn complement(&self) -> Self {
        Self {
            matrix: identity2() - self.matrix,
        }
    }
}
