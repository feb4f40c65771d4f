//! Qubit quantum channels seen from the Heisenberg picture.
//!
//! A projective measurement evolved under the conjugate of a qubit channel
//! becomes a dichotomic POVM characterised by a bias `x` and an effect vector
//! `m` whose length is the sharpness. This crate provides:
//!
//! * [`qubit`]: dense 2ⁿ×2ⁿ states, Pauli decompositions, entropy, trace
//!   distance and partial trace.
//! * [`channels`]: Kraus channels, CPTP checks, conjugate channels, Mueller
//!   matrices and a catalog of noise channels with memory kernels.
//! * [`povm`]: evolved effects, bias/sharpness extraction and the affine
//!   post-measurement map.
//! * [`markovianity`]: sharpness and trace-distance scans with revival
//!   detection.
//! * [`energycost`]: energy cost of a biased, unsharp measurement on a
//!   system coupled to a two-qubit memory.

pub mod channels;
pub mod energycost;
mod error;
pub mod markovianity;
pub mod povm;
pub mod qubit;
pub mod random;
pub mod selftest;

pub use error::{Error, Result};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
