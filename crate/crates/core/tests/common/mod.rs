#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use nalgebra::Vector3;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unsharp::channels::{
    amplitude_damping, amplitude_damping_memory, depolarizing, generalized_amplitude_damping,
    phase_damping, rtn, KrausChannel,
};
use unsharp::qubit::{BlochVector, DensityMatrix, Op2};
use unsharp::random;

/// A catalog channel at sampled parameters.
pub fn catalog_channel() -> impl Strategy<Value = KrausChannel> {
    prop_oneof![
        (-1.0..=1.0f64).prop_map(|l| rtn(l).unwrap()),
        (0.0..=1.0f64).prop_map(|l| phase_damping(l).unwrap()),
        (0.0..=1.0f64).prop_map(|q| depolarizing(q).unwrap()),
        (0.0..=1.0f64).prop_map(|g| amplitude_damping(g).unwrap()),
        (-1.0..=1.0f64).prop_map(|g| amplitude_damping_memory(g).unwrap()),
        (0.0..=1.0f64, 0.0..=1.0f64).prop_map(|(p, g)| generalized_amplitude_damping(p, g).unwrap()),
    ]
}

pub fn angles() -> impl Strategy<Value = (f64, f64)> {
    (0.0..PI, 0.0..TAU)
}

pub fn bloch() -> impl Strategy<Value = Vector3<f64>> {
    (0.0..PI, 0.0..TAU, 0.0..=1.0f64).prop_map(|(t, p, r)| {
        Vector3::new(t.sin() * p.cos(), t.sin() * p.sin(), t.cos()) * r
    })
}

pub fn state() -> impl Strategy<Value = DensityMatrix> {
    bloch().prop_map(|r| DensityMatrix::from_bloch(&BlochVector::new(r).unwrap()))
}

pub fn hermitian() -> impl Strategy<Value = Op2> {
    any::<u64>().prop_map(|s| random::hermitian(&mut ChaCha8Rng::seed_from_u64(s)))
}

pub fn unitary_mixture() -> impl Strategy<Value = KrausChannel> {
    any::<u64>().prop_map(|s| random::unitary_mixture(&mut ChaCha8Rng::seed_from_u64(s)))
}

pub fn unitary() -> impl Strategy<Value = Op2> {
    any::<u64>().prop_map(|s| random::unitary(&mut ChaCha8Rng::seed_from_u64(s)))
}

/// Telegraph-noise kernel straight from its defining expression,
/// `e^{-ν}[cosh μν + sinh μν / μ]` with `μ = √(1 - (4aτ)²)`.
pub fn rtn_kernel_oracle(nu: f64, a_tau: f64) -> f64 {
    let mu = Complex64::from(1.0 - a_tau * a_tau).sqrt();
    if mu.norm() < 1e-12 {
        return (-nu).exp() * (1.0 + nu);
    }
    let z = mu * nu;
    ((-nu).exp() * (z.cosh() + z.sinh() / mu)).re
}

/// Memory kernel `e^{-τ/2}[cosh(dτ/2) + sinh(dτ/2)/d]` with `d = √(1 - 2R)`.
pub fn ad_kernel_oracle(tau: f64, r: f64) -> f64 {
    let d = Complex64::from(1.0 - 2.0 * r).sqrt();
    if d.norm() < 1e-12 {
        return (-tau / 2.0).exp() * (1.0 + tau / 2.0);
    }
    let z = d * tau / 2.0;
    ((-tau / 2.0).exp() * (z.cosh() + z.sinh() / d)).re
}

pub fn max_abs(m: &Op2) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
