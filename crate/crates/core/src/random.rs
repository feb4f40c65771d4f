//! Random states, unitaries and channels for property checks.

use nalgebra::Vector3;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::channels::KrausChannel;
use crate::qubit::{BlochVector, DensityMatrix, Op2};
use crate::C64;

fn normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    StandardNormal.sample(rng)
}

/// Uniformly distributed unit vector.
pub fn unit_vector<R: Rng + ?Sized>(rng: &mut R) -> Vector3<f64> {
    loop {
        let v = Vector3::new(normal(rng), normal(rng), normal(rng));
        let n = v.norm();
        if n > 1e-9 {
            return v / n;
        }
    }
}

/// Uniform point in the Bloch ball.
pub fn bloch_vector<R: Rng + ?Sized>(rng: &mut R) -> BlochVector {
    let radius = rng.random::<f64>().cbrt();
    BlochVector::new(unit_vector(rng) * radius).expect("inside the ball")
}

pub fn qubit_state<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    DensityMatrix::from_bloch(&bloch_vector(rng))
}

/// Random Hermitian 2×2 operator with standard normal entries.
pub fn hermitian<R: Rng + ?Sized>(rng: &mut R) -> Op2 {
    let m = Op2::from_fn(|_, _| C64::new(normal(rng), normal(rng)));
    (m + m.adjoint()) * C64::from(0.5)
}

/// Haar-random element of U(2).
pub fn unitary<R: Rng + ?Sized>(rng: &mut R) -> Op2 {
    // a uniform point on S³ is a Haar-random SU(2) element
    let mut q = [normal(rng), normal(rng), normal(rng), normal(rng)];
    let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
    q.iter_mut().for_each(|x| *x /= n);
    let (a, b) = (C64::new(q[0], q[1]), C64::new(q[2], q[3]));
    let phase = C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
    Op2::new(a, b, -b.conj(), a.conj()) * phase
}

/// Mixture of 2 to 4 Haar-random unitaries with random weights.
pub fn unitary_mixture<R: Rng + ?Sized>(rng: &mut R) -> KrausChannel {
    let n = rng.random_range(2..=4);
    let raw: Vec<f64> = (0..n).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = raw.iter().sum();
    let weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
    let unitaries: Vec<Op2> = (0..n).map(|_| unitary(rng)).collect();
    KrausChannel::unitary_mixture(&weights, &unitaries).expect("valid mixture")
}
