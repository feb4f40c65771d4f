//! Kraus-operator qubit channels.
//!
//! A channel acts as `ρ ↦ Σ K ρ K†`; its conjugate (Heisenberg picture) acts
//! on operators as `A ↦ Σ K† A K`. The conjugate of a trace-preserving channel
//! is unital.

mod catalog;
mod kernels;
mod mueller;

pub use catalog::{
    amplitude_damping, amplitude_damping_memory, catalog, depolarizing,
    generalized_amplitude_damping, generalized_amplitude_damping_printed, phase_damping,
    phase_damping_printed, rtn, ChannelFamily, ChannelKind, ChannelSpec, ConstantFamily,
    TimeFamily,
};
pub use kernels::{ad_memory_kernel, rtn_kernel};
pub use mueller::{conjugate_mueller, mueller_matrix, MuellerMatrix};

use nalgebra::{Matrix4, SymmetricEigen};

use crate::qubit::{
    anti_hermitian_residue, identity2, max_abs, DensityMatrix, Op2, HERMITIAN_TOL, PSD_TOL,
};
use crate::{Error, Result, C64};

/// Completeness and unitality are accepted up to this max-abs residual.
pub const COMPLETENESS_TOL: f64 = 1e-10;

/// An ordered list of 2×2 Kraus operators.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    label: String,
    ops: Vec<Op2>,
}

impl KrausChannel {
    /// Wraps a Kraus list. No CPTP check happens here; see [`validate_cptp`].
    pub fn new(label: impl Into<String>, ops: Vec<Op2>) -> Result<Self> {
        if ops.is_empty() {
            return Err(Error::EmptyChannel);
        }
        Ok(Self {
            label: label.into(),
            ops,
        })
    }

    pub fn identity() -> Self {
        Self {
            label: "identity".into(),
            ops: vec![identity2()],
        }
    }

    /// `ρ ↦ Σ p_i U_i ρ U_i†`.
    pub fn unitary_mixture(weights: &[f64], unitaries: &[Op2]) -> Result<Self> {
        if weights.len() != unitaries.len() {
            return Err(Error::DimensionMismatch {
                expected: weights.len(),
                found: unitaries.len(),
            });
        }
        let total: f64 = weights.iter().sum();
        if weights.iter().any(|&w| !(0.0..=1.0).contains(&w)) || (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameter {
                name: "weights",
                value: total,
                reason: "must be probabilities summing to 1",
            });
        }
        for u in unitaries {
            if max_abs(&(u.adjoint() * u - identity2())) > 1e-12 {
                return Err(Error::InvalidParameter {
                    name: "unitaries",
                    value: max_abs(&(u.adjoint() * u - identity2())),
                    reason: "operator is not unitary",
                });
            }
        }
        let ops = weights
            .iter()
            .zip(unitaries)
            .map(|(&w, u)| u * C64::from(w.sqrt()))
            .collect();
        Self::new("unitary mixture", ops)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ops(&self) -> &[Op2] {
        &self.ops
    }

    /// Number of Kraus operators.
    pub fn rank(&self) -> usize {
        self.ops.len()
    }

    /// The Kraus list `{K†}`, which represents the conjugate map.
    pub fn adjoint(&self) -> Self {
        Self {
            label: format!("{} (conjugate)", self.label),
            ops: self.ops.iter().map(|k| k.adjoint()).collect(),
        }
    }

    /// `Σ K A K†` on an arbitrary operator.
    pub fn sandwich(&self, a: &Op2) -> Op2 {
        self.ops.iter().map(|k| k * a * k.adjoint()).sum()
    }

    /// `Σ K† A K` on an arbitrary operator.
    pub fn conjugate_sandwich(&self, a: &Op2) -> Op2 {
        self.ops.iter().map(|k| k.adjoint() * a * k).sum()
    }

    /// Returns an error unless the channel is completely positive and trace preserving.
    pub fn ensure_cptp(&self) -> Result<CptpDiagnosis> {
        let d = validate_cptp(self);
        if d.is_cptp() {
            Ok(d)
        } else {
            Err(Error::NotCptp {
                label: self.label.clone(),
                completeness_residual: d.completeness_residual,
                choi_min_eig: d.choi_min_eig,
            })
        }
    }
}

/// Outcome of [`validate_cptp`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CptpDiagnosis {
    /// `Σ K†K = 𝟙` within [`COMPLETENESS_TOL`].
    pub complete: bool,
    /// Same as `complete`; kept separate because callers read it by name.
    pub trace_preserving: bool,
    /// `Σ K K† = 𝟙` within [`COMPLETENESS_TOL`].
    pub unital: bool,
    /// Smallest eigenvalue of the Choi matrix.
    pub choi_min_eig: f64,
    pub completeness_residual: f64,
    pub unitality_residual: f64,
}

impl CptpDiagnosis {
    pub fn is_cptp(&self) -> bool {
        self.complete && self.choi_min_eig >= -PSD_TOL
    }
}

/// Checks completeness, unitality and complete positivity of a Kraus list.
pub fn validate_cptp(ch: &KrausChannel) -> CptpDiagnosis {
    let id = identity2();
    let completeness: Op2 = ch.ops.iter().map(|k| k.adjoint() * k).sum();
    let unitality: Op2 = ch.ops.iter().map(|k| k * k.adjoint()).sum();
    let completeness_residual = max_abs(&(completeness - id));
    let unitality_residual = max_abs(&(unitality - id));
    let complete = completeness_residual <= COMPLETENESS_TOL;
    CptpDiagnosis {
        complete,
        trace_preserving: complete,
        unital: unitality_residual <= COMPLETENESS_TOL,
        choi_min_eig: choi_min_eigenvalue(ch),
        completeness_residual,
        unitality_residual,
    }
}

// Column-stacking convention: C = Σ vec(K) vec(K)†.
fn choi_min_eigenvalue(ch: &KrausChannel) -> f64 {
    let mut choi = Matrix4::<C64>::zeros();
    for k in &ch.ops {
        let v = nalgebra::Vector4::from_column_slice(k.as_slice());
        choi += v * v.adjoint();
    }
    SymmetricEigen::new(choi)
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// `ℰ[ρ] = Σ K ρ K†` for a qubit state.
pub fn apply(ch: &KrausChannel, rho: &DensityMatrix) -> Result<DensityMatrix> {
    ch.ensure_cptp()?;
    let m = rho.qubit_matrix()?;
    DensityMatrix::from_qubit(&ch.sandwich(&m))
}

/// Heisenberg-picture image `ℰ†[A] = Σ K† A K` of a Hermitian operator.
pub fn apply_conjugate(ch: &KrausChannel, a: &Op2) -> Result<Op2> {
    let residual = anti_hermitian_residue(a);
    if residual > HERMITIAN_TOL {
        return Err(Error::NotHermitian { residual });
    }
    let out = ch.conjugate_sandwich(a);
    Ok((out + out.adjoint()) * C64::from(0.5))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qubit::{sigma_x, sigma_z};

    #[test]
    fn identity_channel_diagnosis() {
        let d = validate_cptp(&KrausChannel::identity());
        assert!(d.complete && d.unital && d.trace_preserving);
        assert!(d.choi_min_eig.abs() < 1e-14);
    }

    #[test]
    fn empty_channel_rejected() {
        assert_eq!(KrausChannel::new("none", vec![]), Err(Error::EmptyChannel));
    }

    #[test]
    fn printed_phase_damping_pair_is_incomplete() {
        let ch = phase_damping_printed(0.3).unwrap();
        let d = validate_cptp(&ch);
        assert!(!d.complete);
        // Σ K†K = diag(2, 1)
        assert!((d.completeness_residual - 1.0).abs() < 1e-12);
        assert!(matches!(ch.ensure_cptp(), Err(Error::NotCptp { .. })));
        let rho = DensityMatrix::maximally_mixed(2).unwrap();
        assert!(apply(&ch, &rho).is_err());
    }

    #[test]
    fn apply_examples() {
        let rho = DensityMatrix::pure_from_angles(0.9, 2.0);
        let out = apply(&KrausChannel::identity(), &rho).unwrap();
        assert!(max_abs(&(out.matrix() - rho.matrix())) < 1e-15);

        let out = apply(&depolarizing(0.75).unwrap(), &rho).unwrap();
        let mixed = DensityMatrix::maximally_mixed(2).unwrap();
        assert!(max_abs(&(out.matrix() - mixed.matrix())) < 1e-15);

        let excited = DensityMatrix::basis(2, 1).unwrap();
        let out = apply(&amplitude_damping(0.0).unwrap(), &excited).unwrap();
        let ground = DensityMatrix::basis(2, 0).unwrap();
        assert!(max_abs(&(out.matrix() - ground.matrix())) < 1e-15);
    }

    #[test]
    fn conjugate_examples() {
        let ad = amplitude_damping(0.36).unwrap();
        let img = apply_conjugate(&ad, &identity2()).unwrap();
        assert!(max_abs(&(img - identity2())) < 1e-15);

        // ℰ†[σz] = (1 - γ)𝟙 + γσz
        let img = apply_conjugate(&ad, &sigma_z()).unwrap();
        let expected = identity2() * C64::from(0.64) + sigma_z() * C64::from(0.36);
        assert!(max_abs(&(img - expected)) < 1e-15);

        let lambda = 0.37;
        let img = apply_conjugate(&rtn(lambda).unwrap(), &sigma_x()).unwrap();
        assert!(max_abs(&(img - sigma_x() * C64::from(lambda))) < 1e-15);

        let bad = sigma_x() * C64::new(0.0, 1.0);
        assert!(apply_conjugate(&ad, &bad).is_err());
    }

    #[test]
    fn unitary_mixture_validation() {
        let ch = KrausChannel::unitary_mixture(&[0.25, 0.75], &[identity2(), sigma_x()]).unwrap();
        let d = validate_cptp(&ch);
        assert!(d.is_cptp() && d.unital);
        assert!(KrausChannel::unitary_mixture(&[0.5, 0.6], &[identity2(), sigma_x()]).is_err());
        assert!(KrausChannel::unitary_mixture(&[1.0], &[identity2() * C64::from(2.0)]).is_err());
    }
}
