//! Time scans of sharpness and trace distance, and the revival witness.
//!
//! Under P-divisible dynamics the sharpness of an evolved projective
//! measurement cannot grow. A revival on a sampled grid therefore witnesses
//! P-indivisibility. The converse does not hold: a monotone scan proves nothing,
//! and refining the grid is the only way to gain confidence.

use rayon::prelude::*;

use crate::channels::{apply, TimeFamily};
use crate::povm::evolve;
use crate::qubit::{trace_distance, DensityMatrix};
use crate::{Error, Result};

pub const DEFAULT_REVIVAL_TOL: f64 = 1e-9;

pub const ONE_WAY_NOTE: &str =
    "revivals imply P-indivisibility; a monotone scan on a finite grid proves nothing";

/// Sampled time series.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    times: Vec<f64>,
    values: Vec<f64>,
}

impl Trajectory {
    pub fn new(times: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if times.len() != values.len() {
            return Err(Error::DimensionMismatch {
                expected: times.len(),
                found: values.len(),
            });
        }
        check_grid(&times)?;
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidGrid(format!("non-finite value {v}")));
        }
        Ok(Self { times, values })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

fn check_grid(times: &[f64]) -> Result<()> {
    if times.is_empty() {
        return Err(Error::InvalidGrid("empty time grid".into()));
    }
    if times.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidGrid("non-finite time".into()));
    }
    if times.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid("times must be strictly increasing".into()));
    }
    Ok(())
}

/// `n` evenly spaced points from `start` to `stop` inclusive.
pub fn linspace(start: f64, stop: f64, n: usize) -> Result<Vec<f64>> {
    if n == 0 || !(start.is_finite() && stop.is_finite()) || start > stop || (n > 1 && start == stop) {
        return Err(Error::InvalidGrid(format!(
            "need n >= 1 and start < stop, got {n} points on [{start}, {stop}]"
        )));
    }
    if n == 1 {
        return Ok(vec![start]);
    }
    let step = (stop - start) / (n - 1) as f64;
    Ok((0..n)
        .map(|i| if i == n - 1 { stop } else { start + step * i as f64 })
        .collect())
}

fn scan<G>(grid: &[f64], f: G) -> Result<Trajectory>
where
    G: Fn(f64) -> Result<f64> + Sync + Send,
{
    check_grid(grid)?;
    let values = grid.par_iter().map(|&t| f(t)).collect::<Result<Vec<_>>>()?;
    Trajectory::new(grid.to_vec(), values)
}

/// Sharpness of the evolved observable at `(Θ, Φ)` along the grid.
pub fn sharpness_trajectory<F: TimeFamily + ?Sized>(
    family: &F,
    theta: f64,
    phi: f64,
    grid: &[f64],
) -> Result<Trajectory> {
    scan(grid, |t| Ok(evolve(&family.channel_at(t)?, theta, phi)?.sharpness))
}

/// Bias of the evolved observable at `(Θ, Φ)` along the grid.
pub fn bias_trajectory<F: TimeFamily + ?Sized>(
    family: &F,
    theta: f64,
    phi: f64,
    grid: &[f64],
) -> Result<Trajectory> {
    scan(grid, |t| Ok(evolve(&family.channel_at(t)?, theta, phi)?.x))
}

/// Trace distance between the images of two states along the grid.
pub fn trace_distance_trajectory<F: TimeFamily + ?Sized>(
    family: &F,
    rho1: &DensityMatrix,
    rho2: &DensityMatrix,
    grid: &[f64],
) -> Result<Trajectory> {
    if rho1.dim() != rho2.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho1.dim(),
            found: rho2.dim(),
        });
    }
    scan(grid, |t| {
        let ch = family.channel_at(t)?;
        trace_distance(&apply(&ch, rho1)?, &apply(&ch, rho2)?)
    })
}

/// A maximal stretch of strictly increasing samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Revival {
    pub t_start: f64,
    pub t_end: f64,
    pub rise: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessVerdict {
    pub monotone: bool,
    pub revivals: Vec<Revival>,
    pub max_rise: f64,
}

/// Finds every maximal run of increases whose cumulative rise exceeds `tol`.
pub fn detect_revivals(traj: &Trajectory, tol: f64) -> WitnessVerdict {
    let (t, v) = (traj.times(), traj.values());
    let mut revivals = Vec::new();
    let mut i = 0;
    while i + 1 < v.len() {
        if v[i + 1] > v[i] {
            let start = i;
            while i + 1 < v.len() && v[i + 1] > v[i] {
                i += 1;
            }
            let rise = v[i] - v[start];
            if rise > tol {
                revivals.push(Revival {
                    t_start: t[start],
                    t_end: t[i],
                    rise,
                });
            }
        } else {
            i += 1;
        }
    }
    let max_rise = revivals.iter().map(|r| r.rise).fold(0.0, f64::max);
    WitnessVerdict {
        monotone: revivals.is_empty(),
        revivals,
        max_rise,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessReport {
    /// `(Θ, verdict)` in input order.
    pub verdicts: Vec<(f64, WitnessVerdict)>,
    pub p_indivisible: bool,
    pub note: &'static str,
}

/// Runs the sharpness witness for every `Θ` in `thetas`.
pub fn witness_report<F: TimeFamily + ?Sized>(
    family: &F,
    thetas: &[f64],
    phi: f64,
    grid: &[f64],
) -> Result<WitnessReport> {
    if thetas.is_empty() {
        return Err(Error::InvalidGrid("empty angle grid".into()));
    }
    let verdicts = thetas
        .iter()
        .map(|&theta| {
            let traj = sharpness_trajectory(family, theta, phi, grid)?;
            Ok((theta, detect_revivals(&traj, DEFAULT_REVIVAL_TOL)))
        })
        .collect::<Result<Vec<_>>>()?;
    let p_indivisible = verdicts.iter().any(|(_, v)| !v.monotone);
    Ok(WitnessReport {
        verdicts,
        p_indivisible,
        note: ONE_WAY_NOTE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{catalog, rtn_kernel, ChannelSpec, ConstantFamily, KrausChannel};
    use std::f64::consts::FRAC_PI_2;

    fn traj(values: &[f64]) -> Trajectory {
        Trajectory::new((0..values.len()).map(|i| i as f64).collect(), values.to_vec()).unwrap()
    }

    #[test]
    fn trajectory_validation() {
        assert!(Trajectory::new(vec![0.0, 0.0], vec![1.0, 1.0]).is_err());
        assert!(Trajectory::new(vec![0.0, 1.0], vec![1.0]).is_err());
        assert!(Trajectory::new(vec![0.0, 1.0], vec![1.0, f64::NAN]).is_err());
        assert!(Trajectory::new(vec![], vec![]).is_err());
    }

    #[test]
    fn linspace_endpoints() {
        let g = linspace(0.0, 10.0, 1001).unwrap();
        assert_eq!(g.len(), 1001);
        assert_eq!((g[0], g[1000]), (0.0, 10.0));
        assert!((g[1] - 0.01).abs() < 1e-15);
        assert!(linspace(1.0, 0.0, 3).is_err() && linspace(0.0, 1.0, 0).is_err());
        assert_eq!(linspace(2.0, 2.0, 1).unwrap(), vec![2.0]);
    }

    #[test]
    fn revival_detection() {
        assert!(detect_revivals(&traj(&[0.5; 5]), 1e-9).monotone);
        assert!(detect_revivals(&traj(&[1.0, 0.6, 0.3, 0.1]), 1e-9).monotone);
        assert!(detect_revivals(&traj(&[1.0, 1.0 + 1e-12, 0.9, 0.9 + 1e-12]), 1e-9).monotone);

        let v = detect_revivals(&traj(&[1.0, 0.2, 0.3, 0.5, 0.1, 0.15]), 1e-9);
        assert_eq!(v.revivals.len(), 2);
        assert_eq!((v.revivals[0].t_start, v.revivals[0].t_end), (1.0, 3.0));
        assert!((v.max_rise - 0.3).abs() < 1e-15);
    }

    #[test]
    fn identity_family_is_flat() {
        let fam = ConstantFamily(KrausChannel::identity());
        let grid = linspace(0.0, 1.0, 11).unwrap();
        let s = sharpness_trajectory(&fam, 0.7, 0.2, &grid).unwrap();
        assert!(s.values().iter().all(|v| (v - 1.0).abs() < 1e-14));
        let rho1 = DensityMatrix::pure_from_angles(0.3, 0.0);
        let rho2 = DensityMatrix::pure_from_angles(2.0, 1.0);
        let d0 = trace_distance(&rho1, &rho2).unwrap();
        let d = trace_distance_trajectory(&fam, &rho1, &rho2, &grid).unwrap();
        assert!(d.values().iter().all(|v| (v - d0).abs() < 1e-14));
    }

    #[test]
    fn rtn_regimes() {
        let grid = linspace(0.0, 6.0, 600).unwrap();
        let damped = catalog(ChannelSpec::rtn_with_coupling(0.5)).unwrap();
        let oscillating = catalog(ChannelSpec::rtn_with_coupling(4.0)).unwrap();
        let v = detect_revivals(&sharpness_trajectory(&damped, FRAC_PI_2, 0.0, &grid).unwrap(), 1e-9);
        assert!(v.monotone);
        let v = detect_revivals(&sharpness_trajectory(&oscillating, FRAC_PI_2, 0.0, &grid).unwrap(), 1e-9);
        assert!(!v.monotone && v.max_rise > 0.01);
        // σz commutes with dephasing noise
        let v = detect_revivals(&sharpness_trajectory(&oscillating, 0.0, 0.0, &grid).unwrap(), 1e-9);
        assert!(v.monotone);
    }

    #[test]
    fn rtn_trace_distance_follows_kernel() {
        let fam = catalog(ChannelSpec::rtn_with_coupling(0.5)).unwrap();
        let grid = linspace(0.0, 5.0, 51).unwrap();
        let plus = DensityMatrix::pure_from_angles(FRAC_PI_2, 0.0);
        let mixed = DensityMatrix::maximally_mixed(2).unwrap();
        let d = trace_distance_trajectory(&fam, &plus, &mixed, &grid).unwrap();
        for (t, v) in d.times().iter().zip(d.values()) {
            assert!((v - 0.5 * rtn_kernel(*t, 0.5).unwrap().abs()).abs() < 1e-12);
        }
    }

    #[test]
    fn reports() {
        let grid = linspace(0.0, 10.0, 400).unwrap();
        let thetas = [0.0, 0.5, 1.0, FRAC_PI_2];
        let r = witness_report(&catalog(ChannelSpec::rtn_with_coupling(0.5)).unwrap(), &thetas, 0.0, &grid).unwrap();
        assert!(!r.p_indivisible && r.verdicts.len() == 4);
        let r = witness_report(&catalog(ChannelSpec::rtn_with_coupling(4.0)).unwrap(), &thetas, 0.0, &grid).unwrap();
        assert!(r.p_indivisible);
        let r = witness_report(&catalog(ChannelSpec::Pd { lambda: 0.3 }).unwrap(), &thetas, 0.0, &grid).unwrap();
        assert!(!r.p_indivisible);
        assert!(witness_report(&ConstantFamily(KrausChannel::identity()), &[], 0.0, &grid).is_err());
    }
}
