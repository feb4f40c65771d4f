//! Seeded runtime property checks.
//!
//! Each check samples random inputs from a ChaCha stream, records the worst
//! deviation from its invariant and passes if that stays within tolerance.

use std::f64::consts::{PI, TAU};

use nalgebra::Vector3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::channels::{
    amplitude_damping, amplitude_damping_memory, apply, apply_conjugate, depolarizing,
    generalized_amplitude_damping, mueller_matrix, phase_damping, rtn, validate_cptp,
    KrausChannel,
};
use crate::energycost::{closed_form, energy_cost, MeasurementModel};
use crate::povm::evolve;
use crate::qubit::{density_to_bloch, trace_distance, DensityMatrix};
use crate::random;
use crate::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub samples: usize,
    pub worst: f64,
    pub tolerance: f64,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.worst <= self.tolerance
    }
}

struct Worst(f64);

impl Worst {
    fn see(&mut self, v: f64) {
        // NaN must fail the check
        if v.is_nan() || v > self.0 {
            self.0 = if v.is_nan() { f64::INFINITY } else { v };
        }
    }
}

fn check(
    name: &'static str,
    samples: usize,
    tolerance: f64,
    rng: &mut ChaCha8Rng,
    mut f: impl FnMut(&mut ChaCha8Rng) -> Result<f64>,
) -> Result<CheckOutcome> {
    let mut worst = Worst(0.0);
    for _ in 0..samples {
        worst.see(f(rng)?);
    }
    Ok(CheckOutcome {
        name,
        samples,
        worst: worst.0,
        tolerance,
    })
}

fn random_catalog_channel(rng: &mut ChaCha8Rng) -> Result<KrausChannel> {
    let u: f64 = rng.random();
    let v: f64 = rng.random();
    match rng.random_range(0..7) {
        0 => rtn(2.0 * u - 1.0),
        1 => phase_damping(u),
        2 => depolarizing(u),
        3 => amplitude_damping(u),
        4 => amplitude_damping_memory(2.0 * u - 1.0),
        5 => generalized_amplitude_damping(u, v),
        _ => Ok(random::unitary_mixture(rng)),
    }
}

fn random_model(rng: &mut ChaCha8Rng) -> MeasurementModel {
    let x: f64 = rng.random();
    let lambda = rng.random::<f64>() * (1.0 - x);
    MeasurementModel::new(x, lambda)
        .with_angles(rng.random_range(0.0..PI), rng.random_range(0.0..TAU))
        .with_thermal(rng.random_range(0.1..3.0), rng.random_range(0.1..3.0))
}

/// Runs every check with `samples` draws each.
pub fn run(seed: u64, samples: usize) -> Result<Vec<CheckOutcome>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rng = &mut rng;
    Ok(vec![
        check("duality Tr(A E[rho]) = Tr(E*[A] rho)", samples, 1e-12, rng, |rng| {
            let ch = random_catalog_channel(rng)?;
            let rho = random::qubit_state(rng);
            let a = random::hermitian(rng);
            let lhs = (a * apply(&ch, &rho)?.qubit_matrix()?).trace();
            let rhs = (apply_conjugate(&ch, &a)? * rho.qubit_matrix()?).trace();
            Ok((lhs - rhs).norm())
        })?,
        check("mueller matrix reproduces the Kraus action", samples, 1e-12, rng, |rng| {
            let ch = random_catalog_channel(rng)?;
            let rho = random::qubit_state(rng);
            let direct = density_to_bloch(&apply(&ch, &rho)?)?.vector();
            let affine = mueller_matrix(&ch).apply_bloch(&density_to_bloch(&rho)?.vector());
            Ok((direct - affine).norm())
        })?,
        check("catalog channels are CPTP", samples, 1e-10, rng, |rng| {
            let d = validate_cptp(&random_catalog_channel(rng)?);
            Ok(d.completeness_residual.max(-d.choi_min_eig))
        })?,
        check("unital channels give unbiased effects", samples, 1e-10, rng, |rng| {
            let ch = random::unitary_mixture(rng);
            let n = random::unit_vector(rng);
            let (theta, phi) = (n.z.clamp(-1.0, 1.0).acos(), n.y.atan2(n.x));
            Ok(evolve(&ch, theta, phi)?.x.abs())
        })?,
        check("effects are positive: |x| + |m| <= 1", samples, 1e-10, rng, |rng| {
            let ch = random_catalog_channel(rng)?;
            let bs = evolve(&ch, rng.random_range(0.0..PI), rng.random_range(0.0..TAU))?;
            Ok((bs.x.abs() + bs.sharpness - 1.0).max(0.0))
        })?,
        check("rtn sharpness follows the kernel", samples, 1e-12, rng, |rng| {
            let l = rng.random_range(-1.0..=1.0);
            let theta: f64 = rng.random_range(0.0..PI);
            let bs = evolve(&rtn(l)?, theta, rng.random_range(0.0..TAU))?;
            let expected = (theta.cos().powi(2) + l * l * theta.sin().powi(2)).sqrt();
            Ok((bs.sharpness - expected).abs().max(bs.x.abs()))
        })?,
        check("trace distance contracts under channels", samples, 1e-12, rng, |rng| {
            let ch = random_catalog_channel(rng)?;
            let (a, b) = (random::qubit_state(rng), random::qubit_state(rng));
            let before = trace_distance(&a, &b)?;
            let after = trace_distance(&apply(&ch, &a)?, &apply(&ch, &b)?)?;
            Ok((after - before).max(0.0))
        })?,
        check("trace distance to the mixed state is half the Bloch length", samples, 1e-12, rng, |rng| {
            let r = random::bloch_vector(rng);
            let d = trace_distance(&DensityMatrix::from_bloch(&r), &DensityMatrix::maximally_mixed(2)?)?;
            Ok((d - 0.5 * r.vector().norm()).abs())
        })?,
        check("energy simulation matches the closed forms", samples, 1e-10, rng, |rng| {
            let m = random_model(rng);
            let (r, c) = (energy_cost(&m)?, closed_form(&m));
            let eig = r
                .memory_eigenvalues
                .iter()
                .zip(c.memory_eigenvalues)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            Ok(eig.max((r.delta_s_m - c.delta_s_m).abs()).max((r.delta_e_s - c.delta_e_s).abs()))
        })?,
        check("energy report is symmetric in (x, lambda)", samples, 1e-10, rng, |rng| {
            let m = random_model(rng);
            let swapped = MeasurementModel { x: m.lambda, lambda: m.x, ..m };
            let (a, b) = (energy_cost(&m)?, energy_cost(&swapped)?);
            Ok((a.e_cost - b.e_cost).abs().max((a.delta_s_m - b.delta_s_m).abs()))
        })?,
        check("bloch round trip", samples, 1e-14, rng, |rng| {
            let r: Vector3<f64> = random::bloch_vector(rng).vector();
            let back = density_to_bloch(&DensityMatrix::from_bloch(&crate::qubit::BlochVector::new(r)?))?;
            Ok((back.vector() - r).norm())
        })?,
    ])
}
