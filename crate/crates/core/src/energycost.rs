//! Energy cost of a biased, unsharp measurement.
//!
//! A system qubit `S` (Hamiltonian `ω_S σz`, initially `½𝟙`) is coupled by a
//! controlled flip to memory qubit `M_A`, which is then read out with the
//! effects `E± = ((1 - λ ± x)/2)𝟙 + λΠ±`; `M_B` is a spectator. Joint states
//! use the ordering `S ⊗ M_A ⊗ M_B`, so basis index `4s + 2a + b`.
//!
//! The cost is `E_cost = ΔE_S + ΔS_M/β` with the memory entropy in bits.

use std::f64::consts::LN_2;

use rayon::prelude::*;

use crate::channels::ad_memory_kernel;
use crate::qubit::{
    identity2, observable_from_angles, partial_trace, sigma_z,
    von_neumann_entropy, CMatrix, DensityMatrix, Effect, Subsystem,
};
use crate::{Error, Result, C64};

const JOINT_DIM: usize = 8;

/// Parameters of the measurement experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementModel {
    pub omega_s: f64,
    pub beta: f64,
    pub x: f64,
    pub lambda: f64,
    pub theta: f64,
    pub phi: f64,
}

impl MeasurementModel {
    /// Readout `(x, λ)` with `ω_S = β = 1` and `θ = φ = 0`.
    pub fn new(x: f64, lambda: f64) -> Self {
        Self {
            omega_s: 1.0,
            beta: 1.0,
            x,
            lambda,
            theta: 0.0,
            phi: 0.0,
        }
    }

    pub fn with_angles(self, theta: f64, phi: f64) -> Self {
        Self { theta, phi, ..self }
    }

    pub fn with_thermal(self, omega_s: f64, beta: f64) -> Self {
        Self { omega_s, beta, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("omega_s", self.omega_s),
            ("beta", self.beta),
            ("x", self.x),
            ("lambda", self.lambda),
            ("theta", self.theta),
            ("phi", self.phi),
        ];
        if let Some((name, v)) = fields.iter().find(|(_, v)| !v.is_finite()) {
            return Err(Error::InvalidModel(format!("{name} = {v} is not finite")));
        }
        for (name, v) in [("x", self.x), ("lambda", self.lambda)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidModel(format!("{name} = {v} must lie in [0, 1]")));
            }
        }
        if self.x + self.lambda > 1.0 + 1e-12 {
            return Err(Error::InvalidModel(format!(
                "x + lambda = {} exceeds 1; the readout effects would not be positive",
                self.x + self.lambda
            )));
        }
        Ok(())
    }
}

/// Initial states, coupling and readout of a model.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelOperators {
    pub rho_s: DensityMatrix,
    pub rho_m: DensityMatrix,
    pub u_sm: CMatrix,
    pub effects: (Effect, Effect),
}

pub fn build_model_operators(model: &MeasurementModel) -> Result<ModelOperators> {
    model.validate()?;
    let rho_s = DensityMatrix::maximally_mixed(2)?;
    let rho_m = DensityMatrix::basis(2, 0)?.kron(&DensityMatrix::maximally_mixed(2)?)?;

    // |s, a, b⟩ ↦ |s, a ⊕ s, b⟩
    let mut u_sm = CMatrix::zeros(JOINT_DIM, JOINT_DIM);
    for s in 0..2 {
        for a in 0..2 {
            for b in 0..2 {
                u_sm[(4 * s + 2 * (a ^ s) + b, 4 * s + 2 * a + b)] = C64::from(1.0);
            }
        }
    }

    let (plus, minus) = observable_from_angles(model.theta, model.phi).projectors();
    let (x, l) = (model.x, model.lambda);
    let e = |sign: f64, proj| identity2() * C64::from((1.0 - l + sign * x) / 2.0) + proj * C64::from(l);
    let effects = (Effect::new(e(1.0, plus))?, Effect::new(e(-1.0, minus))?);

    Ok(ModelOperators {
        rho_s,
        rho_m,
        u_sm,
        effects,
    })
}

/// `𝟙_S ⊗ E ⊗ 𝟙_B`.
fn lift_to_joint(e: &Effect) -> CMatrix {
    let m = e.matrix();
    CMatrix::from_fn(JOINT_DIM, JOINT_DIM, |i, j| {
        let (s, a, b) = (i / 4, (i / 2) % 2, i % 2);
        let (s2, a2, b2) = (j / 4, (j / 2) % 2, j % 2);
        if s == s2 && b == b2 {
            m[(a, a2)]
        } else {
            C64::from(0.0)
        }
    })
}

/// Normalized reduced states after the readout, and the outcome weights.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationResult {
    pub rho_s_out: DensityMatrix,
    pub rho_m_out: DensityMatrix,
    pub p_plus: f64,
    pub p_minus: f64,
}

pub fn simulate_measurement(model: &MeasurementModel) -> Result<SimulationResult> {
    let ops = build_model_operators(model)?;
    let joint = ops.rho_s.kron(&ops.rho_m)?;
    let coupled = &ops.u_sm * joint.matrix() * ops.u_sm.adjoint();

    let branches: Vec<CMatrix> = [&ops.effects.0, &ops.effects.1]
        .iter()
        .map(|e| {
            let p = lift_to_joint(e);
            &p * &coupled * p.adjoint()
        })
        .collect();
    let weights: Vec<f64> = branches.iter().map(|b| b.trace().re).collect();
    let total: f64 = weights.iter().sum();
    if total < 1e-14 {
        return Err(Error::InvalidModel(format!("post-measurement trace {total:.3e} vanishes")));
    }

    let out = DensityMatrix::new((&branches[0] + &branches[1]) / C64::from(total))?;
    Ok(SimulationResult {
        rho_s_out: partial_trace(&out, [2, 4], Subsystem::Second)?,
        rho_m_out: partial_trace(&out, [2, 4], Subsystem::First)?,
        p_plus: weights[0] / total,
        p_minus: weights[1] / total,
    })
}

fn delta_s_m_from(sim: &SimulationResult) -> Result<f64> {
    let rho_m = DensityMatrix::basis(2, 0)?.kron(&DensityMatrix::maximally_mixed(2)?)?;
    Ok(von_neumann_entropy(&sim.rho_m_out)? - von_neumann_entropy(&rho_m)?)
}

fn delta_e_s_from(model: &MeasurementModel, sim: &SimulationResult) -> Result<f64> {
    let h = sigma_z() * C64::from(model.omega_s);
    let before = DensityMatrix::maximally_mixed(2)?.qubit_matrix()?;
    let after = sim.rho_s_out.qubit_matrix()?;
    Ok((h * (after - before)).trace().re)
}

/// Memory entropy change in bits.
pub fn delta_s_m(model: &MeasurementModel) -> Result<f64> {
    delta_s_m_from(&simulate_measurement(model)?)
}

/// System energy change `Tr[H_S(ρ'_S - ρ_S)]`.
pub fn delta_e_s(model: &MeasurementModel) -> Result<f64> {
    delta_e_s_from(model, &simulate_measurement(model)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EntropyUnit {
    #[default]
    Bits,
    Nats,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyReport {
    pub delta_s_m: f64,
    pub delta_e_s: f64,
    pub e_cost: f64,
    /// Ascending.
    pub memory_eigenvalues: [f64; 4],
    pub p_plus: f64,
    pub p_minus: f64,
    pub unit: EntropyUnit,
}

pub fn energy_cost(model: &MeasurementModel) -> Result<EnergyReport> {
    energy_cost_in(model, EntropyUnit::Bits)
}

/// As [`energy_cost`], with `ΔS_M` (and hence its share of `E_cost`) in the given unit.
pub fn energy_cost_in(model: &MeasurementModel, unit: EntropyUnit) -> Result<EnergyReport> {
    model.validate()?;
    if model.beta <= 0.0 {
        return Err(Error::InvalidModel(format!("beta = {} must be positive", model.beta)));
    }
    let sim = simulate_measurement(model)?;
    let scale = match unit {
        EntropyUnit::Bits => 1.0,
        EntropyUnit::Nats => LN_2,
    };
    let delta_s_m = delta_s_m_from(&sim)? * scale;
    let delta_e_s = delta_e_s_from(model, &sim)?;
    let eig = sim.rho_m_out.eigenvalues();
    Ok(EnergyReport {
        delta_s_m,
        delta_e_s,
        e_cost: delta_e_s + delta_s_m / model.beta,
        memory_eigenvalues: [eig[0], eig[1], eig[2], eig[3]],
        p_plus: sim.p_plus,
        p_minus: sim.p_minus,
        unit,
    })
}

/// Analytic values the simulation should reproduce.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedForm {
    /// Population gap `2xλ/(1 + x² + λ²)`.
    pub gap: f64,
    pub memory_eigenvalues: [f64; 4],
    pub delta_s_m: f64,
    pub delta_e_s: f64,
}

pub fn closed_form(model: &MeasurementModel) -> ClosedForm {
    let (x, l) = (model.x, model.lambda);
    let gap = 2.0 * x * l / (1.0 + x * x + l * l);
    let lo = 0.25 * (1.0 - gap);
    let hi = 0.25 * (1.0 + gap);
    let memory_eigenvalues = [lo, lo, hi, hi];
    let entropy = crate::qubit::entropy_of_spectrum(&memory_eigenvalues).expect("non-negative");
    ClosedForm {
        gap,
        memory_eigenvalues,
        delta_s_m: entropy - 1.0,
        delta_e_s: model.omega_s * gap * model.theta.cos(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub x: f64,
    pub lambda: f64,
    pub report: EnergyReport,
}

/// Evaluates every `(i, j)/(n - 1)` with `i + j ≤ n - 1`, rows ordered by `i` then `j`.
pub fn triangle_sweep(n: usize, template: &MeasurementModel, unit: EntropyUnit) -> Result<Vec<SweepRow>> {
    if n < 2 {
        return Err(Error::InvalidGrid(format!("sweep needs at least 2 points per axis, got {n}")));
    }
    let h = (n - 1) as f64;
    let points: Vec<(f64, f64)> = (0..n)
        .flat_map(|i| (0..n - i).map(move |j| (i as f64 / h, j as f64 / h)))
        .collect();
    points
        .par_iter()
        .map(|&(x, lambda)| {
            let model = MeasurementModel { x, lambda, ..*template };
            Ok(SweepRow {
                x,
                lambda,
                report: energy_cost_in(&model, unit)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdEnergyRow {
    pub tau: f64,
    pub g: f64,
    pub x: f64,
    pub lambda: f64,
    pub e_cost: f64,
}

/// Energy cost along the amplitude-damping-with-memory evolution at `θ = 0`,
/// with `x = 1 - G²` and `λ = G²`.
pub fn ad_energy_trajectory(r: f64, beta: f64, omega_s: f64, grid: &[f64]) -> Result<Vec<AdEnergyRow>> {
    if grid.is_empty() || grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid("times must be non-empty and strictly increasing".into()));
    }
    grid.par_iter()
        .map(|&tau| {
            let g = ad_memory_kernel(tau, r)?;
            let lambda = g * g;
            let x = 1.0 - lambda;
            let model = MeasurementModel::new(x, lambda).with_thermal(omega_s, beta);
            Ok(AdEnergyRow {
                tau,
                g,
                x,
                lambda,
                e_cost: energy_cost(&model)?.e_cost,
            })
        })
        .collect()
}
