//! Stationary oscillator Wigner functions and the eigenstate densities.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::field::WignerField;
use crate::oscillator::{OscillatorParams, PhasePoint, PolarPoint};
use crate::quadrature::{line_integral, Estimate, QuadratureSpec};
use crate::special::{hermite_unchecked, laguerre_coefficients, laguerre_unchecked, log_weight, PolyOrder};
use crate::{Error, Result};

/// Eigenstate number `n ≤ 64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateIndex(PolyOrder);

impl StateIndex {
    pub const MAX: u32 = PolyOrder::MAX;

    pub fn new(n: u32) -> Result<Self> {
        PolyOrder::new(n).map(Self)
    }

    pub fn get(self) -> u32 {
        self.0.get()
    }

    pub fn order(self) -> PolyOrder {
        self.0
    }

    /// `(−1)^n`
    pub fn sign(self) -> f64 {
        if self.get() % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }
}

impl From<StateIndex> for PolyOrder {
    fn from(n: StateIndex) -> Self {
        n.0
    }
}

/// `((−1)^n / πħ) e^{−2ε} L_n(4ε)`: the stationary kernel as a function of energy.
pub fn radial_kernel(params: &OscillatorParams, n: StateIndex, eps: f64) -> f64 {
    n.sign() / (PI * params.hbar()) * (-2.0 * eps).exp() * laguerre_unchecked(n.get(), 4.0 * eps)
}

pub fn wigner_stationary(params: &OscillatorParams, n: StateIndex, pt: PhasePoint) -> f64 {
    radial_kernel(params, n, params.energy(pt))
}

/// `|Ψ_n(x̄)|²` at unshifted position `x`.
pub fn position_density(params: &OscillatorParams, n: StateIndex, x: f64) -> f64 {
    let sigma = params.position_scale();
    hermite_density(n, params.shifted_x(x) / sigma, sigma)
}

/// `|Ψ̃_n(p)|²`, the mirror of the position density under `x̄/√(ħ/mω) ↔ p/√(mħω)`.
pub fn momentum_density(params: &OscillatorParams, n: StateIndex, p: f64) -> f64 {
    let sigma = params.momentum_scale();
    hermite_density(n, p / sigma, sigma)
}

/// `e^{−y²} H_n(y)² / (2^n n! √π σ)`, assembled in log space.
fn hermite_density(n: StateIndex, y: f64, sigma: f64) -> f64 {
    let h = hermite_unchecked(n.get(), y);
    if h == 0.0 {
        return 0.0;
    }
    if !h.is_finite() {
        return 0.0;
    }
    let log = log_weight(n.order()) - 0.5 * PI.ln() - sigma.ln() - y * y + 2.0 * h.abs().ln();
    log.exp()
}

/// Real eigenfunction `Ψ_n(x̄)` at unshifted position `x`.
pub fn wavefunction(params: &OscillatorParams, n: StateIndex, x: f64) -> f64 {
    let sigma = params.position_scale();
    let y = params.shifted_x(x) / sigma;
    let h = hermite_unchecked(n.get(), y);
    if h == 0.0 || !h.is_finite() {
        return 0.0;
    }
    let log = 0.5 * log_weight(n.order()) - 0.25 * PI.ln() - 0.5 * sigma.ln() - 0.5 * y * y + h.abs().ln();
    log.exp().copysign(h)
}

/// `W_n(x, p)` from the Fourier integral of `Ψ_n(x̄ + s/2) Ψ_n(x̄ − s/2)`.
///
/// The eigenfunctions are real, so the product is even in `s` and only the
/// cosine part of `e^{−ips/ħ}` survives.
pub fn wigner_from_wavefunction(
    params: &OscillatorParams,
    n: StateIndex,
    pt: PhasePoint,
    quad: &QuadratureSpec,
) -> Result<Estimate> {
    quad.validate(params)?;
    let hbar = params.hbar();
    let half = 2.0 * quad.line_window * params.position_scale();
    let integrand = |s: f64| {
        (pt.p * s / hbar).cos()
            * wavefunction(params, n, pt.x + 0.5 * s)
            * wavefunction(params, n, pt.x - 0.5 * s)
    };
    let scale = 1.0 / (2.0 * PI * hbar);
    let raw = line_integral(integrand, -half, half, quad.n_line, quad.tol / scale)?;
    Ok(Estimate {
        value: raw.value * scale,
        error: raw.error * scale,
        coarse: raw.coarse * scale,
    })
}

/// Largest state for which [`StationaryWigner::p_derivative`] is offered.
pub const EXACT_DERIVATIVE_MAX_STATE: u32 = 16;

/// `W_n` as a (time-independent) field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StationaryWigner {
    params: OscillatorParams,
    n: StateIndex,
}

impl StationaryWigner {
    pub fn new(params: OscillatorParams, n: StateIndex) -> Self {
        Self { params, n }
    }

    pub fn state(&self) -> StateIndex {
        self.n
    }

    /// Exact `∂^k W_n / ∂p^k` at `pt`.
    ///
    /// Writes `W_n = c e^{−2β} e^{−2a p²} P(p)` with `a = 1/(2mħω)`,
    /// `β = mωx̄²/(2ħ)` and `P = L_n(4β + 4a p²)`, then applies
    /// `D(e^{−2ap²} P) = e^{−2ap²} (P′ − 4a p P)` k times on the coefficients.
    pub fn p_derivative(&self, pt: PhasePoint, order: u32) -> Result<f64> {
        if self.n.get() > EXACT_DERIVATIVE_MAX_STATE {
            return Err(Error::Configuration(alloc::format!(
                "exact p-derivatives are limited to n <= {EXACT_DERIVATIVE_MAX_STATE}"
            )));
        }
        let params = &self.params;
        let a = 1.0 / (2.0 * params.m() * params.hbar() * params.omega());
        let x_bar = params.shifted_x(pt.x);
        let beta = params.m() * params.omega() * x_bar * x_bar / (2.0 * params.hbar());

        // Horner composition: P(p) = Σ l_k (4β + 4a p²)^k
        let q = [4.0 * beta, 0.0, 4.0 * a];
        let mut poly: Vec<f64> = vec![0.0];
        for &lk in laguerre_coefficients(self.n.order()).iter().rev() {
            poly = poly_mul(&poly, &q);
            poly[0] += lk;
        }
        for _ in 0..order {
            let mut next = vec![0.0; poly.len() + 1];
            for (k, &c) in poly.iter().enumerate().skip(1) {
                next[k - 1] += k as f64 * c;
            }
            for (k, &c) in poly.iter().enumerate() {
                next[k + 1] -= 4.0 * a * c;
            }
            poly = next;
        }
        let value = poly.iter().rev().fold(0.0, |acc, &c| acc * pt.p + c);
        let envelope = (-2.0 * beta - 2.0 * a * pt.p * pt.p).exp();
        Ok(self.n.sign() / (PI * params.hbar()) * envelope * value)
    }
}

fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

impl WignerField for StationaryWigner {
    fn params(&self) -> &OscillatorParams {
        &self.params
    }

    fn value(&self, pt: PhasePoint, _t: f64) -> f64 {
        wigner_stationary(&self.params, self.n, pt)
    }

    fn value_polar(&self, pt: PolarPoint, _t: f64) -> f64 {
        radial_kernel(&self.params, self.n, self.params.energy_from_rho(pt.rho()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{marginal_over_p, marginal_over_x, trapezoid};
    use approx::assert_relative_eq;
    use core::f64::consts::{FRAC_1_PI, TAU};

    fn nat() -> OscillatorParams {
        OscillatorParams::natural()
    }

    fn st(n: u32) -> StateIndex {
        StateIndex::new(n).unwrap()
    }

    #[test]
    fn stationary_examples() {
        let o = PhasePoint::default();
        assert_eq!(wigner_stationary(&nat(), st(0), o), FRAC_1_PI);
        assert_eq!(wigner_stationary(&nat(), st(1), o), -FRAC_1_PI);
        // L_2(2) = -1 -> -e^{-1}/π; mpmath value
        assert_relative_eq!(
            wigner_stationary(&nat(), st(2), PhasePoint::new(1.0, 0.0)),
            -0.11709966304863832,
            epsilon = 1e-15
        );
    }

    #[test]
    fn origin_sign_structure() {
        let params = OscillatorParams::new(1.3, 0.7, 2.0, 0.4).unwrap();
        let origin = PhasePoint::new(params.unshifted_x(0.0), 0.0);
        for n in 0..=64 {
            let expected = st(n).sign() / (PI * params.hbar());
            assert_eq!(wigner_stationary(&params, st(n), origin), expected);
        }
    }

    #[test]
    fn density_examples() {
        let inv_sqrt_pi = 1.0 / PI.sqrt();
        assert_relative_eq!(position_density(&nat(), st(0), 0.0), inv_sqrt_pi, epsilon = 1e-15);
        assert_eq!(position_density(&nat(), st(1), 0.0), 0.0);
        assert_relative_eq!(momentum_density(&nat(), st(0), 0.0), inv_sqrt_pi, epsilon = 1e-15);
        assert_eq!(momentum_density(&nat(), st(1), 0.0), 0.0);
    }

    #[test]
    fn densities_are_normalized_and_non_negative() {
        let params = OscillatorParams::new(2.0, 0.5, 1.5, -1.0).unwrap();
        for n in [0, 1, 2, 5, 8, 20, 64] {
            let sx = params.position_scale();
            let lo = params.unshifted_x(-14.0 * sx);
            let hi = params.unshifted_x(14.0 * sx);
            let norm_x = trapezoid(|x| position_density(&params, st(n), x), lo, hi, 8192);
            assert!((norm_x - 1.0).abs() < 1e-8, "n={n} {norm_x}");
            let sp = params.momentum_scale();
            let norm_p = trapezoid(|p| momentum_density(&params, st(n), p), -14.0 * sp, 14.0 * sp, 8192);
            assert!((norm_p - 1.0).abs() < 1e-8, "n={n} {norm_p}");
            for k in 0..200 {
                let y = -10.0 + 0.1 * k as f64;
                assert!(position_density(&params, st(n), y) >= 0.0);
                assert!(momentum_density(&params, st(n), y) >= 0.0);
            }
        }
    }

    #[test]
    fn densities_match_stationary_marginals() {
        // The momentum density is not printed explicitly; check it (and the
        // position density) against direct integration of W_n.
        let params = OscillatorParams::new(1.5, 0.8, 1.2, 0.6).unwrap();
        let quad = QuadratureSpec::for_params(&params);
        for n in [0, 1, 3, 6] {
            let w = StationaryWigner::new(params, st(n));
            for k in 0..9 {
                let s = -2.0 + 0.5 * k as f64;
                let x = params.unshifted_x(s * params.position_scale());
                let m = marginal_over_p(&w, x, 0.0, &quad).unwrap();
                assert!((m.value - position_density(&params, st(n), x)).abs() < 1e-10);
                let p = s * params.momentum_scale();
                let m = marginal_over_x(&w, p, 0.0, &quad).unwrap();
                assert!((m.value - momentum_density(&params, st(n), p)).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn fourier_oracle_examples() {
        let quad = QuadratureSpec::default();
        let o = PhasePoint::default();
        let w0 = wigner_from_wavefunction(&nat(), st(0), o, &quad).unwrap();
        assert!((w0.value - FRAC_1_PI).abs() < 1e-8);
        let w1 = wigner_from_wavefunction(&nat(), st(1), o, &quad).unwrap();
        assert!((w1.value + FRAC_1_PI).abs() < 1e-8);
        let pt = PhasePoint::new(0.7, -1.1);
        let w3 = wigner_from_wavefunction(&nat(), st(3), pt, &quad).unwrap();
        assert!((w3.value - wigner_stationary(&nat(), st(3), pt)).abs() < 1e-7);
    }

    #[test]
    fn fourier_oracle_general_params() {
        let params = OscillatorParams::new(0.5, 2.0, 0.8, 1.5).unwrap();
        let quad = QuadratureSpec::for_params(&params);
        for n in [0, 2, 4] {
            let pt = PhasePoint::new(params.unshifted_x(0.3), 0.4);
            let w = wigner_from_wavefunction(&params, st(n), pt, &quad).unwrap();
            assert!((w.value - wigner_stationary(&params, st(n), pt)).abs() < 1e-7);
        }
    }

    #[test]
    fn wavefunction_is_normalized() {
        for n in [0, 3, 10] {
            let norm = trapezoid(|x| wavefunction(&nat(), st(n), x).powi(2), -12.0, 12.0, 4096);
            assert!((norm - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn radial_symmetry_on_energy_circle() {
        let params = OscillatorParams::new(1.0, 1.0, 1.0, 0.5).unwrap();
        for n in [0, 3, 7] {
            let w = StationaryWigner::new(params, st(n));
            let reference = w.value_polar(PolarPoint::new(1.3, 0.0).unwrap(), 0.0);
            for k in 0..64 {
                let phi = TAU * (k as f64 + 0.37) / 64.0;
                let pt = params.from_polar(PolarPoint::new(1.3, phi).unwrap());
                let v = w.value(pt, 0.0);
                assert!((v - reference).abs() < 1e-12, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn exact_p_derivative_matches_finite_differences() {
        let params = OscillatorParams::new(1.2, 0.9, 1.1, 0.3).unwrap();
        for n in [0, 1, 4] {
            let w = StationaryWigner::new(params, st(n));
            let pt = PhasePoint::new(0.4, -0.7);
            assert_relative_eq!(
                w.p_derivative(pt, 0).unwrap(),
                w.value(pt, 0.0),
                epsilon = 1e-14,
                max_relative = 1e-12
            );
            let h = 1e-4;
            let at = |dp: f64| w.value(PhasePoint::new(pt.x, pt.p + dp), 0.0);
            let d1 = (at(h) - at(-h)) / (2.0 * h);
            assert!((w.p_derivative(pt, 1).unwrap() - d1).abs() < 1e-7);
            let h = 1e-3;
            let d3 = (at(2.0 * h) - 2.0 * at(h) + 2.0 * at(-h) - at(-2.0 * h)) / (2.0 * h.powi(3));
            assert!((w.p_derivative(pt, 3).unwrap() - d3).abs() < 1e-4);
        }
        let too_big = StationaryWigner::new(params, st(EXACT_DERIVATIVE_MAX_STATE + 1));
        assert!(too_big.p_derivative(PhasePoint::default(), 1).is_err());
    }
}
