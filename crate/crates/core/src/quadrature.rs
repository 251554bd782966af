//! Phase-space integrals: normalization, marginals and mean energy.
//!
//! Polar integrals use the Jacobian `dx̄ dp = (m/ω) ρ dρ dφ` with a periodic
//! trapezoid rule in `φ` and composite Gauss–Legendre in `ρ`. Marginals are
//! taken along Cartesian lines so that the integration path never meets the
//! coordinate singularity of the polar map except when it passes through
//! the origin itself. Every integral is evaluated on two meshes (the
//! requested one and one with half the panels); the difference is reported
//! as the error estimate.

use alloc::vec::Vec;
use core::f64::consts::TAU;

#[allow(unused_imports)]
use num_traits::Float;

use crate::field::WignerField;
use crate::oscillator::{OscillatorParams, PhasePoint, PolarPoint};
use crate::special::{laguerre_unchecked, PolyOrder};
use crate::{Error, Result};

/// Order of the Gauss–Legendre rule used on each radial panel.
pub const RADIAL_GL_ORDER: usize = 4;

/// Upper limit of the energy integral in [`laguerre_energy_identity`].
pub const ENERGY_IDENTITY_CUTOFF: f64 = 40.0;

/// Ratio `e^{−mρ²/ħω}` the truncated tail must stay below.
const TAIL_RATIO: f64 = 1e-14;

/// Discretization of the phase-space integrals.
///
/// `rho_max` is a physical radius (units of velocity, like `ρ`); the line
/// window is measured in Gaussian widths `√(ħ/mω)` for `x̄` and `√(mħω)` for `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub rho_max: f64,
    pub n_rho: usize,
    pub n_phi: usize,
    pub line_window: f64,
    pub n_line: usize,
    pub tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rho_max: 7.0,
            n_rho: 512,
            n_phi: 512,
            line_window: 9.0,
            n_line: 2048,
            tol: 1e-8,
        }
    }
}

impl QuadratureSpec {
    /// Defaults with `rho_max` rescaled to `7 √(ħω/m)`.
    pub fn for_params(params: &OscillatorParams) -> Self {
        Self {
            rho_max: 7.0 * params.rho_scale(),
            ..Self::default()
        }
    }

    pub fn with_tol(self, tol: f64) -> Self {
        Self { tol, ..self }
    }

    pub fn validate(&self, params: &OscillatorParams) -> Result<()> {
        for (name, count) in [
            ("n_rho", self.n_rho),
            ("n_phi", self.n_phi),
            ("n_line", self.n_line),
        ] {
            if count < 8 {
                return Err(Error::InvalidParameter {
                    name,
                    value: count as f64,
                    reason: "panel counts must be at least 8",
                });
            }
        }
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            return Err(Error::InvalidParameter {
                name: "tol",
                value: self.tol,
                reason: "must be finite and positive",
            });
        }
        let scaled = self.rho_max / params.rho_scale();
        if !scaled.is_finite() || (-scaled * scaled).exp() >= TAIL_RATIO {
            return Err(Error::InvalidParameter {
                name: "rho_max",
                value: self.rho_max,
                reason: "Gaussian tail at rho_max must be below 1e-14 of the peak",
            });
        }
        let window = self.line_window;
        if !window.is_finite() || (-window * window).exp() >= TAIL_RATIO {
            return Err(Error::InvalidParameter {
                name: "line_window",
                value: window,
                reason: "Gaussian tail at the window edge must be below 1e-14 of the peak",
            });
        }
        Ok(())
    }
}

/// An integral value with its mesh-halving error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
    /// Value on the coarse (half-panel) mesh.
    pub coarse: f64,
}

/// Neumaier-compensated running sum; summation order is the call order.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = Self::default();
        for x in iter {
            s.add(x);
        }
        s
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`, by Newton iteration on `P_k`.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(order >= 1, "Gauss-Legendre order must be positive");
    let k = order as f64;
    let mut nodes = Vec::with_capacity(order);
    let mut weights = Vec::with_capacity(order);
    for i in 1..=order {
        let mut x = (core::f64::consts::PI * (i as f64 - 0.25) / (k + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(order, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(order, x);
        if d != 0.0 {
            dp = d;
        }
        nodes.push(x);
        weights.push(2.0 / ((1.0 - x * x) * dp * dp));
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for j in 2..=n {
        let j = j as f64;
        let p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
    }
    let n = n as f64;
    let d = n * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Composite Gauss–Legendre rule on `[a, b]`.
pub fn composite_gauss_legendre<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    panels: usize,
    order: usize,
) -> f64 {
    let (nodes, weights) = gauss_legendre(order);
    let h = (b - a) / panels as f64;
    let mut total = CompensatedSum::default();
    for i in 0..panels {
        let mid = a + (i as f64 + 0.5) * h;
        for (x, w) in nodes.iter().zip(&weights) {
            total.add(0.5 * h * w * f(mid + 0.5 * h * x));
        }
    }
    total.total()
}

/// Composite trapezoid rule with `panels` panels on `[a, b]`.
pub fn trapezoid<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut total = CompensatedSum::default();
    total.add(0.5 * f(a));
    for i in 1..panels {
        total.add(f(a + i as f64 * h));
    }
    total.add(0.5 * f(b));
    h * total.total()
}

/// Mean of a `2π`-periodic function over one period, sampled at `panels` points.
pub fn periodic_mean<F: FnMut(f64) -> f64>(mut f: F, panels: usize) -> f64 {
    let h = TAU / panels as f64;
    let total: CompensatedSum = (0..panels).map(|j| f(j as f64 * h)).collect();
    total.total() / panels as f64
}

/// Evaluate `rule(n)` and `rule(n/2)`; refine once to `2n` if they disagree by more than `tol`.
fn with_halving<R: FnMut(usize) -> f64>(mut rule: R, n: usize, tol: f64) -> Result<Estimate> {
    let coarse = rule(n / 2);
    let fine = rule(n);
    let error = (fine - coarse).abs();
    if error <= tol {
        return Ok(Estimate {
            value: fine,
            error,
            coarse,
        });
    }
    let finer = rule(2 * n);
    let error = (finer - fine).abs();
    if error <= tol {
        Ok(Estimate {
            value: finer,
            error,
            coarse: fine,
        })
    } else {
        Err(Error::Accuracy {
            estimate: error,
            tol,
        })
    }
}

/// Trapezoid line integral on `[a, b]` with a mesh-halving error estimate.
pub fn line_integral<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    panels: usize,
    tol: f64,
) -> Result<Estimate> {
    with_halving(|n| trapezoid(&mut f, a, b, n), panels, tol)
}

/// `∬ weight(ρ, φ) dx̄ dp` over the disk `ρ ≤ rho_max`, on an `n_rho × n_phi` mesh.
fn polar_sum<F: FnMut(PolarPoint) -> f64>(
    params: &OscillatorParams,
    rho_max: f64,
    n_rho: usize,
    n_phi: usize,
    f: &mut F,
) -> f64 {
    let jacobian = params.m() / params.omega();
    let dphi = TAU / n_phi as f64;
    let ring = |rho: f64, f: &mut F| -> f64 {
        let s: CompensatedSum = (0..n_phi)
            .map(|j| f(PolarPoint::new(rho, j as f64 * dphi).expect("valid polar node")))
            .collect();
        s.total() * dphi
    };
    jacobian * composite_gauss_legendre(|rho| rho * ring(rho, f), 0.0, rho_max, n_rho, RADIAL_GL_ORDER)
}

fn polar_integral<F: FnMut(PolarPoint) -> f64>(
    params: &OscillatorParams,
    quad: &QuadratureSpec,
    mut f: F,
) -> Result<Estimate> {
    quad.validate(params)?;
    let (n_rho, n_phi) = (quad.n_rho, quad.n_phi);
    let mut rule = |k: usize| {
        // k counts radial panels; angular panels scale with it.
        let phi_panels = (n_phi * k) / n_rho;
        polar_sum(params, quad.rho_max, k, phi_panels.max(4), &mut f)
    };
    with_halving(&mut rule, n_rho, quad.tol)
}

/// `∬ W(x̄, p, t) dx̄ dp`.
pub fn phase_space_integral<W: WignerField + ?Sized>(
    field: &W,
    t: f64,
    quad: &QuadratureSpec,
) -> Result<Estimate> {
    let params = *field.params();
    polar_integral(&params, quad, |pt| field.value_polar(pt, t))
}

/// `∬ ε(x̄, p) W(x̄, p, t) dx̄ dp`, dimensionless (multiply by `ħω` for energy).
pub fn mean_energy<W: WignerField + ?Sized>(
    field: &W,
    t: f64,
    quad: &QuadratureSpec,
) -> Result<Estimate> {
    let params = *field.params();
    polar_integral(&params, quad, |pt| {
        params.energy_from_rho(pt.rho()) * field.value_polar(pt, t)
    })
}

/// `∫ W(x, p, t) dp` at fixed (unshifted) `x`.
pub fn marginal_over_p<W: WignerField + ?Sized>(
    field: &W,
    x: f64,
    t: f64,
    quad: &QuadratureSpec,
) -> Result<Estimate> {
    let params = field.params();
    quad.validate(params)?;
    let half = quad.line_window * params.momentum_scale();
    line_integral(
        |p| field.value(PhasePoint::new(x, p), t),
        -half,
        half,
        quad.n_line,
        quad.tol,
    )
}

/// `∫ W(x, p, t) dx̄` at fixed `p`.
pub fn marginal_over_x<W: WignerField + ?Sized>(
    field: &W,
    p: f64,
    t: f64,
    quad: &QuadratureSpec,
) -> Result<Estimate> {
    let params = *field.params();
    quad.validate(&params)?;
    let half = quad.line_window * params.position_scale();
    line_integral(
        |x_bar| field.value(PhasePoint::new(params.unshifted_x(x_bar), p), t),
        -half,
        half,
        quad.n_line,
        quad.tol,
    )
}

/// `∫₀^40 e^{−2ε} L_n(4ε) ε dε`, which equals `(−1)^n (2n+1)/4` in the limit.
pub fn laguerre_energy_identity(n: PolyOrder, quad: &QuadratureSpec) -> Result<Estimate> {
    let order = n.get();
    let f = |eps: f64| (-2.0 * eps).exp() * laguerre_unchecked(order, 4.0 * eps) * eps;
    with_halving(
        |k| composite_gauss_legendre(f, 0.0, ENERGY_IDENTITY_CUTOFF, k, RADIAL_GL_ORDER),
        quad.n_rho,
        quad.tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        for order in 1..=8 {
            let (x, w) = gauss_legendre(order);
            assert_relative_eq!(w.iter().sum::<f64>(), 2.0, epsilon = 1e-14);
            for degree in 0..(2 * order) {
                let approx: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(degree as i32)).sum();
                let exact = if degree % 2 == 1 {
                    0.0
                } else {
                    2.0 / (degree as f64 + 1.0)
                };
                assert!((approx - exact).abs() < 1e-14, "order {order} degree {degree}");
            }
        }
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let s: CompensatedSum = [1.0, 1e100, 1.0, -1e100].into_iter().collect();
        assert_eq!(s.total(), 2.0);
    }

    #[test]
    fn periodic_mean_of_trig() {
        assert!(periodic_mean(|x| x.sin(), 64).abs() < 1e-15);
        assert_relative_eq!(periodic_mean(|x| 1.0 + x.sin(), 64), 1.0, epsilon = 1e-15);
        assert_relative_eq!(periodic_mean(|x| x.cos().powi(2), 64), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn energy_identity_examples() {
        let quad = QuadratureSpec::default();
        let e0 = laguerre_energy_identity(PolyOrder::new(0).unwrap(), &quad).unwrap();
        assert!((e0.value - 0.25).abs() < 1e-10);
        let e1 = laguerre_energy_identity(PolyOrder::new(1).unwrap(), &quad).unwrap();
        assert!((e1.value + 0.75).abs() < 1e-9);
        let e5 = laguerre_energy_identity(PolyOrder::new(5).unwrap(), &quad).unwrap();
        assert!((e5.value + 2.75).abs() < 1e-9, "{}", e5.value);
    }

    #[test]
    fn spec_validation() {
        let params = OscillatorParams::natural();
        assert!(QuadratureSpec::default().validate(&params).is_ok());
        let small = QuadratureSpec {
            rho_max: 4.0,
            ..QuadratureSpec::default()
        };
        assert!(small.validate(&params).is_err());
        let few = QuadratureSpec {
            n_phi: 4,
            ..QuadratureSpec::default()
        };
        assert!(few.validate(&params).is_err());
        // rho_max is physical: a stiffer oscillator needs a larger radius.
        let heavy = OscillatorParams::new(1.0, 4.0, 1.0, 0.0).unwrap();
        assert!(QuadratureSpec::default().validate(&heavy).is_err());
        assert!(QuadratureSpec::for_params(&heavy).validate(&heavy).is_ok());
    }

    #[test]
    fn halving_reports_accuracy_failure() {
        // A kink the trapezoid rule resolves only at O(h^2).
        let r = line_integral(|x| x.abs(), -1.0, 0.3, 8, 1e-12);
        assert!(matches!(r, Err(Error::Accuracy { .. })));
    }
}
