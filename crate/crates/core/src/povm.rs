//! Projective measurements evolved into dichotomic POVMs.
//!
//! Under the conjugate of a trace-preserving channel the projectors `Π±` of
//! an observable become effects
//!
//! ```text
//! E± = ½[(1 ± x)𝟙 ± m·σ]
//! ```
//!
//! with bias `x` and effect vector `m`; `|m|` is the sharpness.

use std::f64::consts::TAU;

use nalgebra::{Matrix3, Vector3};

use crate::channels::{apply_conjugate, ChannelSpec, KrausChannel};
use crate::channels::{ad_memory_kernel, rtn_kernel};
use crate::qubit::{observable_from_angles, pauli_components, pauli_matrices, DensityMatrix, Effect};
use crate::{Error, Result};

/// Bias, effect vector and sharpness of an effect `E+`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BiasSharpness {
    pub x: f64,
    pub m: Vector3<f64>,
    pub sharpness: f64,
}

/// Evolves the projectors of the observable at `(Θ, Φ)` under the conjugate channel.
pub fn heisenberg_effects(ch: &KrausChannel, theta: f64, phi: f64) -> Result<(Effect, Effect)> {
    ch.ensure_cptp()?;
    let (plus, minus) = observable_from_angles(theta, phi).projectors();
    Ok((
        Effect::new(apply_conjugate(ch, &plus)?)?,
        Effect::new(apply_conjugate(ch, &minus)?)?,
    ))
}

/// Reads `x = Tr E - 1` and `m_j = Tr(σ_j E)` off `E+`.
pub fn extract_bias_sharpness(e_plus: &Effect) -> BiasSharpness {
    let (c0, c) = e_plus.pauli();
    let m = c * 2.0;
    BiasSharpness {
        x: 2.0 * c0 - 1.0,
        m,
        sharpness: m.norm(),
    }
}

/// [`heisenberg_effects`] followed by [`extract_bias_sharpness`] on `E+`.
pub fn evolve(ch: &KrausChannel, theta: f64, phi: f64) -> Result<BiasSharpness> {
    let (plus, _) = heisenberg_effects(ch, theta, phi)?;
    Ok(extract_bias_sharpness(&plus))
}

/// Affine action `s± = A± r + T±` of the two measurement branches on the
/// (unnormalized) Pauli vector of a state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMeasurementMap {
    pub a_plus: Matrix3<f64>,
    pub a_minus: Matrix3<f64>,
    pub t_plus: Vector3<f64>,
    pub t_minus: Vector3<f64>,
}

impl AffineMeasurementMap {
    pub fn new(e_plus: &Effect, e_minus: &Effect) -> Self {
        let (a_plus, t_plus) = affine_measurement_map(e_plus);
        let (a_minus, t_minus) = affine_measurement_map(e_minus);
        Self {
            a_plus,
            a_minus,
            t_plus,
            t_minus,
        }
    }
}

/// `A_ij = ½Tr(σ_i E σ_j E†)`, `T_i = ½Tr(σ_i E E†)`.
pub fn affine_measurement_map(e: &Effect) -> (Matrix3<f64>, Vector3<f64>) {
    let sigma = pauli_matrices();
    let m = e.matrix();
    let a = Matrix3::from_fn(|i, j| 0.5 * (sigma[i] * m * sigma[j] * m.adjoint()).trace().re);
    let eet = m * m.adjoint();
    let t = Vector3::from_fn(|i, _| 0.5 * (sigma[i] * eet).trace().re);
    (a, t)
}

/// Normalized post-measurement state `EρE†/Tr(EρE†)` and outcome probability `Tr(Eρ)`.
pub fn post_measurement_state(e: &Effect, rho: &DensityMatrix) -> Result<(DensityMatrix, f64)> {
    let r = rho.qubit_matrix()?;
    let m = e.matrix();
    let probability = (m * r).trace().re;
    let image = m * r * m.adjoint();
    let norm = image.trace().re;
    if probability <= 1e-14 || norm <= 1e-14 {
        return Err(Error::OutcomeImpossible { probability });
    }
    Ok((DensityMatrix::from_qubit(&(image / crate::C64::from(norm)))?, probability))
}

/// Pauli vector `Tr(σ_j EρE†)` of the unnormalized post-measurement operator.
pub fn unnormalized_image_vector(e: &Effect, rho: &DensityMatrix) -> Result<Vector3<f64>> {
    let r = rho.qubit_matrix()?;
    let m = e.matrix();
    let (_, c) = pauli_components(&(m * r * m.adjoint()))?;
    Ok(c * 2.0)
}

/// Whether a tabulated closed form agrees with the Kraus operators it is listed with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryStatus {
    /// Agrees with the conjugate-Kraus computation.
    Verified,
    /// Known to disagree; reported but not enforced.
    Informational,
}

impl EntryStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            EntryStatus::Verified => "verified",
            EntryStatus::Informational => "informational",
        }
    }
}

/// Tabulated bias and sharpness of a catalog channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrintedEntry {
    pub bias: f64,
    pub sharpness: f64,
    pub bias_status: EntryStatus,
    pub sharpness_status: EntryStatus,
}

/// Closed-form bias and sharpness as tabulated for each catalog channel.
///
/// `t` is `ν` for RTN and `τ` for amplitude damping with memory. The amplitude
/// damping entries, the memory-kernel bias and the generalized amplitude
/// damping sharpness do not follow from the listed Kraus operators; they are
/// returned as printed and marked [`EntryStatus::Informational`].
pub fn tabulated_closed_form(spec: &ChannelSpec, theta: f64, t: f64) -> Result<PrintedEntry> {
    use EntryStatus::*;
    let (s2, c2) = (theta.sin().powi(2), theta.cos().powi(2));
    let (cos, sin) = (theta.cos(), theta.sin());
    spec.validate()?;
    let entry = |bias, sharpness, bias_status, sharpness_status| PrintedEntry {
        bias,
        sharpness,
        bias_status,
        sharpness_status,
    };
    Ok(match *spec {
        ChannelSpec::Rtn { .. } => {
            let l = rtn_kernel(t, spec.rtn_coupling().expect("rtn"))?;
            entry(0.0, (c2 + l * l * s2).sqrt(), Verified, Verified)
        }
        ChannelSpec::Pd { lambda } => entry(0.0, (1.0 - lambda * s2).sqrt(), Verified, Verified),
        ChannelSpec::Depolarizing { q } => entry(0.0, 1.0 - 4.0 * q / 3.0, Verified, Verified),
        ChannelSpec::Ad { gamma } => entry(
            (gamma * cos).abs(),
            (1.0 - gamma).sqrt() * sin,
            Informational,
            Informational,
        ),
        ChannelSpec::AdMemory { r } => {
            let g = ad_memory_kernel(t, r)?;
            entry(
                (g * g * cos - 1.0).abs(),
                g.abs() * (s2 + g * g * c2).sqrt(),
                Informational,
                Verified,
            )
        }
        ChannelSpec::Gad { p, gamma } => entry(
            ((2.0 * p - 1.0) * gamma * cos).abs(),
            ((1.0 - gamma) * (1.0 - gamma * s2)).sqrt(),
            Verified,
            Informational,
        ),
    })
}

/// Side-by-side of the conjugate-Kraus computation and the tabulated form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableComparison {
    pub derived: BiasSharpness,
    pub printed: PrintedEntry,
    /// `||x| - printed bias|`
    pub bias_deviation: f64,
    /// `||m| - |printed sharpness||`
    pub sharpness_deviation: f64,
    /// Spread of the derived sharpness over 16 values of `Φ`.
    pub phi_spread: f64,
}

pub fn compare_with_table(spec: &ChannelSpec, theta: f64, phi: f64, t: f64) -> Result<TableComparison> {
    let family = crate::channels::catalog(*spec)?;
    let ch = family.at(t)?;
    let derived = evolve(&ch, theta, phi)?;
    let printed = tabulated_closed_form(spec, theta, t)?;
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for k in 0..16 {
        let s = evolve(&ch, theta, TAU * k as f64 / 16.0)?.sharpness;
        lo = lo.min(s);
        hi = hi.max(s);
    }
    Ok(TableComparison {
        derived,
        printed,
        bias_deviation: (derived.x.abs() - printed.bias).abs(),
        sharpness_deviation: (derived.sharpness - printed.sharpness.abs()).abs(),
        phi_spread: hi - lo,
    })
}
