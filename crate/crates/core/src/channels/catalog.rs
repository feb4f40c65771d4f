//! The noise-channel catalog and its JSON description.
//!
//! | kind           | Kraus operators                                               |
//! |----------------|---------------------------------------------------------------|
//! | `rtn`          | `√((1+Λ)/2) 𝟙`, `√((1-Λ)/2) σz`                               |
//! | `pd`           | `diag(1, √(1-λ))`, `diag(0, √λ)`                              |
//! | `depolarizing` | `√(1-q) 𝟙`, `√(q/3) σ_i`                                      |
//! | `ad`           | `diag(1, √γ)`, `√(1-γ) |0⟩⟨1|`                                 |
//! | `ad_memory`    | `diag(1, G)`, `√(1-G²) |0⟩⟨1|`                                 |
//! | `gad`          | `√p diag(1, √(1-γ))`, `√(pγ) |0⟩⟨1|`, `√(1-p) diag(√(1-γ), 1)`, `√((1-p)γ) |1⟩⟨0|` |
//!
//! Note that `ad` follows the survival convention: `γ = 1` is the identity.

use serde::{Deserialize, Serialize};

use super::kernels::{ad_memory_kernel, rtn_kernel};
use super::KrausChannel;
use crate::qubit::{identity2, sigma_x, sigma_y, sigma_z, Op2};
use crate::{Error, Result, C64};

fn c(x: f64) -> C64 {
    C64::from(x)
}

fn real2(a: f64, b: f64, cc: f64, d: f64) -> Op2 {
    Op2::new(c(a), c(b), c(cc), c(d))
}

fn check_unit(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must lie in [0, 1]",
        })
    }
}

fn check_non_negative(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite and non-negative",
        })
    }
}

/// Random telegraph noise at kernel value `Λ ∈ [-1, 1]`.
pub fn rtn(kernel: f64) -> Result<KrausChannel> {
    if !(-1.0..=1.0).contains(&kernel) {
        return Err(Error::InvalidParameter {
            name: "kernel",
            value: kernel,
            reason: "must lie in [-1, 1]",
        });
    }
    KrausChannel::new(
        "rtn",
        vec![
            identity2() * c(((1.0 + kernel) / 2.0).sqrt()),
            sigma_z() * c(((1.0 - kernel) / 2.0).sqrt()),
        ],
    )
}

pub fn phase_damping(lambda: f64) -> Result<KrausChannel> {
    check_unit("lambda", lambda)?;
    KrausChannel::new(
        "pd",
        vec![
            real2(1.0, 0.0, 0.0, (1.0 - lambda).sqrt()),
            real2(0.0, 0.0, 0.0, lambda.sqrt()),
        ],
    )
}

/// The historical pair `diag(1, √(1-λ))`, `diag(1, √λ)`. It is not trace
/// preserving and exists so that validation can reject it.
pub fn phase_damping_printed(lambda: f64) -> Result<KrausChannel> {
    check_unit("lambda", lambda)?;
    KrausChannel::new(
        "pd (printed)",
        vec![
            real2(1.0, 0.0, 0.0, (1.0 - lambda).sqrt()),
            real2(1.0, 0.0, 0.0, lambda.sqrt()),
        ],
    )
}

pub fn depolarizing(q: f64) -> Result<KrausChannel> {
    check_unit("q", q)?;
    let w = c((q / 3.0).sqrt());
    KrausChannel::new(
        "depolarizing",
        vec![
            identity2() * c((1.0 - q).sqrt()),
            sigma_x() * w,
            sigma_y() * w,
            sigma_z() * w,
        ],
    )
}

pub fn amplitude_damping(gamma: f64) -> Result<KrausChannel> {
    check_unit("gamma", gamma)?;
    KrausChannel::new(
        "ad",
        vec![
            real2(1.0, 0.0, 0.0, gamma.sqrt()),
            real2(0.0, (1.0 - gamma).sqrt(), 0.0, 0.0),
        ],
    )
}

/// Amplitude damping with memory at kernel value `G ∈ [-1, 1]`.
pub fn amplitude_damping_memory(g: f64) -> Result<KrausChannel> {
    if !(-1.0..=1.0).contains(&g) {
        return Err(Error::InvalidParameter {
            name: "G",
            value: g,
            reason: "must lie in [-1, 1]",
        });
    }
    KrausChannel::new(
        "ad_memory",
        vec![
            real2(1.0, 0.0, 0.0, g),
            real2(0.0, (1.0 - g * g).max(0.0).sqrt(), 0.0, 0.0),
        ],
    )
}

pub fn generalized_amplitude_damping(p: f64, gamma: f64) -> Result<KrausChannel> {
    check_unit("p", p)?;
    check_unit("gamma", gamma)?;
    let s = (1.0 - gamma).sqrt();
    let (sp, sq) = (p.sqrt(), (1.0 - p).sqrt());
    KrausChannel::new(
        "gad",
        vec![
            real2(sp, 0.0, 0.0, sp * s),
            real2(0.0, (p * gamma).sqrt(), 0.0, 0.0),
            real2(sq * s, 0.0, 0.0, sq),
            real2(0.0, 0.0, ((1.0 - p) * gamma).sqrt(), 0.0),
        ],
    )
}

/// Generalized amplitude damping with the third operator printed as
/// `diag(√((1-p)(1-γ)), 1)`. Not trace preserving for `p > 0`.
pub fn generalized_amplitude_damping_printed(p: f64, gamma: f64) -> Result<KrausChannel> {
    let mut ops = generalized_amplitude_damping(p, gamma)?.ops().to_vec();
    ops[2][(1, 1)] = c(1.0);
    KrausChannel::new("gad (printed)", ops)
}

/// Catalog channel kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChannelKind {
    Rtn,
    PhaseDamping,
    Depolarizing,
    AmplitudeDamping,
    AmplitudeDampingMemory,
    GeneralizedAmplitudeDamping,
}

impl ChannelKind {
    pub fn name(self) -> &'static str {
        match self {
            ChannelKind::Rtn => "rtn",
            ChannelKind::PhaseDamping => "pd",
            ChannelKind::Depolarizing => "depolarizing",
            ChannelKind::AmplitudeDamping => "ad",
            ChannelKind::AmplitudeDampingMemory => "ad_memory",
            ChannelKind::GeneralizedAmplitudeDamping => "gad",
        }
    }
}

/// JSON channel description, e.g. `{"kind":"rtn","a":0.6,"gamma_rate":0.1}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ChannelSpec {
    /// Telegraph noise with coupling `a` and switching rate `γ`; `4aτ = 2a/γ`.
    Rtn { a: f64, gamma_rate: f64 },
    Pd { lambda: f64 },
    Depolarizing { q: f64 },
    Ad { gamma: f64 },
    AdMemory {
        #[serde(rename = "R")]
        r: f64,
    },
    Gad { p: f64, gamma: f64 },
}

impl ChannelSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: Self = serde_json::from_str(text).map_err(|e| Error::Spec(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    /// RTN spec with a given `4aτ` and unit switching rate.
    pub fn rtn_with_coupling(a_tau: f64) -> Self {
        ChannelSpec::Rtn {
            a: a_tau / 2.0,
            gamma_rate: 1.0,
        }
    }

    pub fn kind(&self) -> ChannelKind {
        match self {
            ChannelSpec::Rtn { .. } => ChannelKind::Rtn,
            ChannelSpec::Pd { .. } => ChannelKind::PhaseDamping,
            ChannelSpec::Depolarizing { .. } => ChannelKind::Depolarizing,
            ChannelSpec::Ad { .. } => ChannelKind::AmplitudeDamping,
            ChannelSpec::AdMemory { .. } => ChannelKind::AmplitudeDampingMemory,
            ChannelSpec::Gad { .. } => ChannelKind::GeneralizedAmplitudeDamping,
        }
    }

    /// Named parameters in declaration order.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match *self {
            ChannelSpec::Rtn { a, gamma_rate } => vec![("a", a), ("gamma_rate", gamma_rate)],
            ChannelSpec::Pd { lambda } => vec![("lambda", lambda)],
            ChannelSpec::Depolarizing { q } => vec![("q", q)],
            ChannelSpec::Ad { gamma } => vec![("gamma", gamma)],
            ChannelSpec::AdMemory { r } => vec![("R", r)],
            ChannelSpec::Gad { p, gamma } => vec![("p", p), ("gamma", gamma)],
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            ChannelSpec::Rtn { a, gamma_rate } => {
                check_non_negative("a", a)?;
                if !(gamma_rate.is_finite() && gamma_rate > 0.0) {
                    return Err(Error::InvalidParameter {
                        name: "gamma_rate",
                        value: gamma_rate,
                        reason: "must be finite and positive",
                    });
                }
                Ok(())
            }
            ChannelSpec::Pd { lambda } => check_unit("lambda", lambda),
            ChannelSpec::Depolarizing { q } => check_unit("q", q),
            ChannelSpec::Ad { gamma } => check_unit("gamma", gamma),
            ChannelSpec::AdMemory { r } => check_non_negative("R", r),
            ChannelSpec::Gad { p, gamma } => {
                check_unit("p", p)?;
                check_unit("gamma", gamma)
            }
        }
    }

    /// `4aτ` for RTN.
    pub fn rtn_coupling(&self) -> Option<f64> {
        match *self {
            ChannelSpec::Rtn { a, gamma_rate } => Some(2.0 * a / gamma_rate),
            _ => None,
        }
    }
}

/// Anything that yields a channel at each (dimensionless) time.
pub trait TimeFamily: Sync {
    fn channel_at(&self, t: f64) -> Result<KrausChannel>;
}

/// A catalog channel as a stateless function of time.
///
/// Time is `ν` for RTN and `τ` for amplitude damping with memory; the other
/// kinds are time independent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelFamily {
    spec: ChannelSpec,
}

/// Validates `spec` and returns its family.
pub fn catalog(spec: ChannelSpec) -> Result<ChannelFamily> {
    spec.validate()?;
    Ok(ChannelFamily { spec })
}

impl ChannelFamily {
    pub fn spec(&self) -> &ChannelSpec {
        &self.spec
    }

    pub fn kind(&self) -> ChannelKind {
        self.spec.kind()
    }

    /// Memory kernel value `Λ(t)` or `G(t)` for the kinds that have one.
    pub fn kernel(&self, t: f64) -> Result<Option<f64>> {
        match self.spec {
            ChannelSpec::Rtn { .. } => {
                let a_tau = self.spec.rtn_coupling().expect("rtn");
                rtn_kernel(t, a_tau).map(Some)
            }
            ChannelSpec::AdMemory { r } => ad_memory_kernel(t, r).map(Some),
            _ => Ok(None),
        }
    }

    pub fn at(&self, t: f64) -> Result<KrausChannel> {
        let kernel = self.kernel(t)?;
        match self.spec {
            ChannelSpec::Rtn { .. } => rtn(kernel.expect("rtn kernel").clamp(-1.0, 1.0)),
            ChannelSpec::AdMemory { .. } => {
                amplitude_damping_memory(kernel.expect("ad kernel").clamp(-1.0, 1.0))
            }
            ChannelSpec::Pd { lambda } => phase_damping(lambda),
            ChannelSpec::Depolarizing { q } => depolarizing(q),
            ChannelSpec::Ad { gamma } => amplitude_damping(gamma),
            ChannelSpec::Gad { p, gamma } => generalized_amplitude_damping(p, gamma),
        }
    }

    /// Kraus operators exactly as tabulated, including the two incomplete sets.
    pub fn printed_at(&self, t: f64) -> Result<KrausChannel> {
        match self.spec {
            ChannelSpec::Pd { lambda } => phase_damping_printed(lambda),
            ChannelSpec::Gad { p, gamma } => generalized_amplitude_damping_printed(p, gamma),
            _ => self.at(t),
        }
    }
}

impl TimeFamily for ChannelFamily {
    fn channel_at(&self, t: f64) -> Result<KrausChannel> {
        self.at(t)
    }
}

/// The same channel at every time.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantFamily(pub KrausChannel);

impl TimeFamily for ConstantFamily {
    fn channel_at(&self, _t: f64) -> Result<KrausChannel> {
        Ok(self.0.clone())
    }
}
