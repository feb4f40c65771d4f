//! Memory kernels of the random-telegraph-noise and damped amplitude-damping
//! channels.
//!
//! Both are instances of `e^{-s}[cosh(κs) + sinh(κs)/κ]` with `κ² ≤ 1`. For
//! `κ² < 0` the hyperbolic functions turn into oscillating trigonometric ones,
//! and `κ = 0` is the removable limit `e^{-s}(1 + s)`. The expression is
//! evaluated in complex arithmetic through decaying exponentials so it stays
//! finite for large `s`.

use crate::{Error, Result, C64};

/// Below this `|κs|` the Taylor series is used instead of the exponential form.
const SERIES_RADIUS: f64 = 1e-3;

fn damped_kernel(s: f64, kappa_sq: f64) -> f64 {
    let kappa = C64::from(kappa_sq).sqrt();
    let z = kappa * s;
    let value = if z.norm() < SERIES_RADIUS {
        let z2 = z * z;
        let cosh = 1.0 + z2 / 2.0 + z2 * z2 / 24.0 + z2 * z2 * z2 / 720.0;
        let sinhc = 1.0 + z2 / 6.0 + z2 * z2 / 120.0 + z2 * z2 * z2 / 5040.0;
        (cosh + sinhc * s) * (-s).exp()
    } else {
        let inv = kappa.inv();
        let grow = ((kappa - 1.0) * s).exp() * (1.0 + inv);
        let decay = (-(kappa + 1.0) * s).exp() * (1.0 - inv);
        (grow + decay) * 0.5
    };
    debug_assert!(
        value.im.abs() <= 1e-12 * value.norm().max(1.0),
        "kernel has imaginary part {}",
        value.im
    );
    value.re
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

/// RTN memory kernel `Λ(ν) = e^{-ν}[cos(μν) + sin(μν)/μ]`, `μ = √((4aτ)² - 1)`.
///
/// `a_tau` is the product `4aτ`. Values below 1 give monotone decay, values
/// above 1 damped oscillations in `[-1, 1]`.
pub fn rtn_kernel(nu: f64, a_tau: f64) -> Result<f64> {
    check_non_negative("nu", nu)?;
    check_non_negative("a_tau", a_tau)?;
    Ok(damped_kernel(nu, 1.0 - a_tau * a_tau))
}

/// Damped amplitude-damping kernel
/// `G(τ) = e^{-τ/2}[cosh(√(1-2R)τ/2) + sinh(√(1-2R)τ/2)/√(1-2R)]`.
///
/// `2R ≤ 1` is monotone; `2R > 1` oscillates and takes negative values.
pub fn ad_memory_kernel(tau: f64, r: f64) -> Result<f64> {
    check_non_negative("tau", tau)?;
    check_non_negative("R", r)?;
    Ok(damped_kernel(0.5 * tau, 1.0 - 2.0 * r))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Direct real-arithmetic evaluation of the oscillatory RTN formula.
    fn rtn_oscillatory(nu: f64, mu: f64) -> f64 {
        (-nu).exp() * ((mu * nu).cos() + (mu * nu).sin() / mu)
    }

    #[test]
    fn kernels_start_at_one() {
        for c in [0.0, 0.3, 1.0, 4.0, 12.0] {
            assert!((rtn_kernel(0.0, c).unwrap() - 1.0).abs() < 1e-15);
            assert!((ad_memory_kernel(0.0, c).unwrap() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn critical_rtn_limit() {
        let v = rtn_kernel(1.0, 1.0).unwrap();
        assert!((v - 2.0 / std::f64::consts::E).abs() < 1e-15);
        assert!((v - 0.7357588823428847).abs() < 1e-12);
        // a nearly-critical coupling agrees with the general formula at small μ
        assert!((v - rtn_oscillatory(1.0, 1e-6)).abs() < 1e-9);
        // and the function is continuous across the critical point
        for eps in [1e-7, 1e-5, 1e-3] {
            let below = rtn_kernel(1.0, 1.0 - eps).unwrap();
            let above = rtn_kernel(1.0, 1.0 + eps).unwrap();
            assert!((below - v).abs() < 10.0 * eps && (above - v).abs() < 10.0 * eps);
        }
    }

    #[test]
    fn rtn_matches_real_formulas() {
        for &a_tau in &[1.5, 2.0, 4.0] {
            let mu = (a_tau * a_tau - 1.0_f64).sqrt();
            for i in 0..50 {
                let nu = 0.1 * i as f64;
                let v = rtn_kernel(nu, a_tau).unwrap();
                assert!((v - rtn_oscillatory(nu, mu)).abs() < 1e-13);
            }
        }
        // damped branch: cosh/sinh form
        let k = (1.0 - 0.25_f64).sqrt();
        for i in 0..50 {
            let nu = 0.2 * i as f64;
            let direct = (-nu).exp() * ((k * nu).cosh() + (k * nu).sinh() / k);
            assert!((rtn_kernel(nu, 0.5).unwrap() - direct).abs() < 1e-13);
        }
    }

    #[test]
    fn rtn_oscillates_when_strongly_coupled() {
        let min = (1..=500)
            .map(|i| rtn_kernel(0.01 * i as f64, 2.0).unwrap())
            .fold(f64::INFINITY, f64::min);
        assert!(min < 0.0);
    }

    #[test]
    fn ad_memory_examples() {
        for i in 0..20 {
            let tau = 0.5 * i as f64;
            assert!((ad_memory_kernel(tau, 0.0).unwrap() - 1.0).abs() < 1e-14);
        }
        let min = (1..=1000)
            .map(|i| ad_memory_kernel(0.01 * i as f64, 5.0).unwrap())
            .fold(f64::INFINITY, f64::min);
        assert!(min < 0.0);
        // 2R > 1 agrees with e^{-τ/2}[cos(ωτ/2) + sin(ωτ/2)/ω], ω = √(2R - 1)
        let w = 3.0;
        for i in 0..40 {
            let tau = 0.25 * i as f64;
            let direct = (-tau / 2.0).exp() * ((w * tau / 2.0).cos() + (w * tau / 2.0).sin() / w);
            assert!((ad_memory_kernel(tau, 5.0).unwrap() - direct).abs() < 1e-13);
        }
    }

    #[test]
    fn large_times_stay_finite() {
        for v in [rtn_kernel(2000.0, 0.1).unwrap(), ad_memory_kernel(5000.0, 0.2).unwrap()] {
            assert!(v.is_finite() && (0.0..1e-4).contains(&v));
        }
        assert!(rtn_kernel(2000.0, 3.0).unwrap().abs() < 1e-300);
    }

    #[test]
    fn negative_arguments_rejected() {
        assert!(rtn_kernel(-0.1, 1.0).is_err());
        assert!(rtn_kernel(0.1, -1.0).is_err());
        assert!(ad_memory_kernel(-1.0, 1.0).is_err());
        assert!(ad_memory_kernel(f64::NAN, 1.0).is_err());
    }
}
