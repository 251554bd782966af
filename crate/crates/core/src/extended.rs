//! Time-dependent extended Wigner functions.
//!
//! The stationary kernel `W_n(ρ)` is modulated by an angular factor that
//! rotates with the oscillator:
//!
//! ```text
//! W(ρ, φ, t) = N · W_n(ρ) · [C + f(Ωt + κφ) + g(Ωt − κφ)],   Ω = ωκ,
//! ```
//!
//! where `f` and `g` are `2πκ`-periodic and `N = 1/(C + ⟨f⟩ + ⟨g⟩)`. At the
//! origin the angular factor has no limit; the value there is taken on the
//! node line, `N · C · W_n(0)`.
//!
//! The standing wave `f(θ) = A sin θ`, `g(θ) = −A sin θ` with `κ = 2ℓ`
//! gives `Φ = 2A cos(Ωt) sin(2ℓφ)`, which is odd in both `x̄` and `p`, so
//! its marginals reproduce the eigenstate densities.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};
use core::fmt;

#[allow(unused_imports)]
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::WignerField;
use crate::oscillator::{Axis, OscillatorParams, PhasePoint, PolarPoint};
use crate::quadrature::{periodic_mean, QuadratureSpec};
use crate::wigner::{radial_kernel, StateIndex};
use crate::{Error, Result};

/// Panels of the periodic trapezoid rule used for `⟨f⟩` and `⟨g⟩`.
pub const MEAN_PANELS: usize = 4096;

/// Seed for the randomized periodicity and parity checks.
pub const DEFAULT_SEED: u64 = 0x5EED_0F_1D_2024;

const PERIODICITY_SAMPLES: usize = 128;
const PERIODICITY_TOL: f64 = 1e-10;
const DEGENERATE_TOL: f64 = 1e-12;

pub type ProfileFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Angular modulation `(f, g, C, κ)`; immutable once built.
#[derive(Clone)]
pub struct WaveProfile {
    f: ProfileFn,
    g: ProfileFn,
    c: f64,
    kappa: u32,
}

impl fmt::Debug for WaveProfile {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt.debug_struct("WaveProfile")
            .field("c", &self.c)
            .field("kappa", &self.kappa)
            .finish_non_exhaustive()
    }
}

impl WaveProfile {
    /// Build a profile, verifying `2πκ`-periodicity of `f` and `g` by sampling.
    pub fn new<F, G>(f: F, g: G, c: f64, kappa: u32) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        G: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        if kappa == 0 {
            return Err(Error::InvalidParameter {
                name: "kappa",
                value: 0.0,
                reason: "wave number must be a positive integer",
            });
        }
        if !c.is_finite() {
            return Err(Error::InvalidParameter {
                name: "C",
                value: c,
                reason: "must be finite",
            });
        }
        let profile = Self {
            f: Arc::new(f),
            g: Arc::new(g),
            c,
            kappa,
        };
        profile.check_periodic("f", &profile.f)?;
        profile.check_periodic("g", &profile.g)?;
        Ok(profile)
    }

    /// `f = g = 0`, `C = 1`: the stationary solution.
    pub fn stationary() -> Self {
        Self::new(|_| 0.0, |_| 0.0, 1.0, 1).expect("zero profile is periodic")
    }

    /// Running wave `A cos(Ωt − κφ)` (carried by `g`).
    pub fn running_wave(amplitude: f64, c: f64, kappa: u32) -> Result<Self> {
        Self::new(|_| 0.0, move |theta: f64| amplitude * theta.cos(), c, kappa)
    }

    fn check_periodic(&self, which: &'static str, h: &ProfileFn) -> Result<()> {
        let period = TAU * f64::from(self.kappa);
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
        for _ in 0..PERIODICITY_SAMPLES {
            let theta: f64 = rng.random_range(-4.0 * period..4.0 * period);
            let deviation = (h(theta + period) - h(theta)).abs();
            if !(deviation < PERIODICITY_TOL) {
                return Err(Error::NonPeriodicProfile {
                    which,
                    theta,
                    deviation,
                });
            }
        }
        Ok(())
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    /// `Ω = ωκ`
    pub fn frequency(&self, omega: f64) -> f64 {
        omega * f64::from(self.kappa)
    }

    pub fn f(&self, theta: f64) -> f64 {
        (self.f)(theta)
    }

    pub fn g(&self, theta: f64) -> f64 {
        (self.g)(theta)
    }

    /// `Φ = f(Ωt + κφ) + g(Ωt − κφ)` for a given phase `Ωt`.
    pub fn angular(&self, phase: f64, phi: f64) -> f64 {
        let k = f64::from(self.kappa) * phi;
        self.f(phase + k) + self.g(phase - k)
    }

    fn means_at(&self, phase: f64) -> (f64, f64) {
        let k = f64::from(self.kappa);
        (
            periodic_mean(|phi| self.f(phase + k * phi), MEAN_PANELS),
            periodic_mean(|phi| self.g(phase - k * phi), MEAN_PANELS),
        )
    }

    /// `N = 1/(C + ⟨f⟩ + ⟨g⟩)`, with the means taken over `φ ∈ [0, 2π]`.
    ///
    /// The means are computed at two phases `Ωt`; they must agree within
    /// `quad.tol`.
    pub fn normalization(&self, quad: &QuadratureSpec) -> Result<Normalization> {
        let (mean_f, mean_g) = self.means_at(0.0);
        let (later_f, later_g) = self.means_at(1.0);
        let first = mean_f + mean_g;
        let second = later_f + later_g;
        if (first - second).abs() > quad.tol * first.abs().max(1.0) {
            return Err(Error::TimeDependentNormalization { first, second });
        }
        let denominator = self.c + mean_f + mean_g;
        if denominator.abs() < DEGENERATE_TOL {
            return Err(Error::DegenerateProfile { denominator });
        }
        Ok(Normalization {
            n: 1.0 / denominator,
            mean_f,
            mean_g,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Normalization {
    pub n: f64,
    pub mean_f: f64,
    pub mean_g: f64,
}

/// The extended Wigner function for a given state and profile.
#[derive(Debug, Clone)]
pub struct ExtendedWigner {
    params: OscillatorParams,
    n: StateIndex,
    profile: WaveProfile,
    norm: Normalization,
}

impl ExtendedWigner {
    pub fn new(
        params: OscillatorParams,
        n: StateIndex,
        profile: WaveProfile,
        quad: &QuadratureSpec,
    ) -> Result<Self> {
        let norm = profile.normalization(quad)?;
        Ok(Self {
            params,
            n,
            profile,
            norm,
        })
    }

    pub fn normalization(&self) -> Normalization {
        self.norm
    }

    pub fn profile(&self) -> &WaveProfile {
        &self.profile
    }

    pub fn state(&self) -> StateIndex {
        self.n
    }

    fn eval(&self, eps: f64, rho: f64, phi: f64, t: f64) -> f64 {
        let kernel = radial_kernel(&self.params, self.n, eps);
        if rho == 0.0 {
            return self.norm.n * self.profile.c * kernel;
        }
        let phase = self.profile.frequency(self.params.omega()) * t;
        self.norm.n * kernel * (self.profile.c + self.profile.angular(phase, phi))
    }

    /// Angular factor `Φ(x̄, p, t)` at a phase point.
    pub fn angular_at(&self, pt: PhasePoint, t: f64) -> f64 {
        let polar = self.params.to_polar(pt);
        let phase = self.profile.frequency(self.params.omega()) * t;
        self.profile.angular(phase, polar.phi())
    }
}

impl WignerField for ExtendedWigner {
    fn params(&self) -> &OscillatorParams {
        &self.params
    }

    fn value(&self, pt: PhasePoint, t: f64) -> f64 {
        let polar = self.params.to_polar(pt);
        self.eval(self.params.energy(pt), polar.rho(), polar.phi(), t)
    }

    fn value_polar(&self, pt: PolarPoint, t: f64) -> f64 {
        self.eval(self.params.energy_from_rho(pt.rho()), pt.rho(), pt.phi(), t)
    }
}

/// One-shot evaluation of the extended function (normalizes the profile each call).
pub fn extended_eval(
    params: &OscillatorParams,
    n: StateIndex,
    profile: &WaveProfile,
    pt: PhasePoint,
    t: f64,
    quad: &QuadratureSpec,
) -> Result<f64> {
    let w = ExtendedWigner::new(*params, n, profile.clone(), quad)?;
    Ok(w.value(pt, t))
}

/// Standing wave `(ℓ, A, C)`: `κ = 2ℓ`, `Ω = 2ωℓ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StandingWaveSpec {
    ell: u32,
    amplitude: f64,
    c: f64,
}

impl StandingWaveSpec {
    pub fn new(ell: u32, amplitude: f64, c: f64) -> Result<Self> {
        if ell == 0 {
            return Err(Error::InvalidParameter {
                name: "ell",
                value: 0.0,
                reason: "must be at least 1",
            });
        }
        if !amplitude.is_finite() {
            return Err(Error::InvalidParameter {
                name: "A",
                value: amplitude,
                reason: "must be finite",
            });
        }
        if !c.is_finite() || c <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "C",
                value: c,
                reason: "must be finite and positive",
            });
        }
        Ok(Self { ell, amplitude, c })
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn kappa(&self) -> u32 {
        2 * self.ell
    }

    /// `Ω = 2ωℓ`
    pub fn frequency(&self, omega: f64) -> f64 {
        2.0 * omega * f64::from(self.ell)
    }

    /// `T = 2π/Ω`
    pub fn period(&self, omega: f64) -> f64 {
        TAU / self.frequency(omega)
    }

    /// `f(θ) = A sin θ`, `g(θ) = −A sin θ`, `κ = 2ℓ`.
    pub fn profile(&self) -> WaveProfile {
        let a = self.amplitude;
        WaveProfile::new(
            move |theta: f64| a * theta.sin(),
            move |theta: f64| -a * theta.sin(),
            self.c,
            self.kappa(),
        )
        .expect("sine profiles are 2π-periodic")
    }
}

/// `Φ̄(φ, t) = 2A cos(Ωt) sin(2ℓφ)`.
pub fn phi_standing(spec: &StandingWaveSpec, phi: f64, t: f64, omega: f64) -> f64 {
    2.0 * spec.amplitude * (spec.frequency(omega) * t).cos() * (f64::from(spec.kappa()) * phi).sin()
}

/// Standing-wave extended function with `N = 1/C` folded in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StandingWave {
    params: OscillatorParams,
    n: StateIndex,
    spec: StandingWaveSpec,
}

impl StandingWave {
    pub fn new(params: OscillatorParams, n: StateIndex, spec: StandingWaveSpec) -> Self {
        Self { params, n, spec }
    }

    pub fn spec(&self) -> &StandingWaveSpec {
        &self.spec
    }

    pub fn state(&self) -> StateIndex {
        self.n
    }

    pub fn period(&self) -> f64 {
        self.spec.period(self.params.omega())
    }

    fn eval(&self, eps: f64, rho: f64, phi: f64, t: f64) -> f64 {
        let kernel = radial_kernel(&self.params, self.n, eps);
        if rho == 0.0 {
            return kernel;
        }
        kernel * (1.0 + phi_standing(&self.spec, phi, t, self.params.omega()) / self.spec.c)
    }
}

impl WignerField for StandingWave {
    fn params(&self) -> &OscillatorParams {
        &self.params
    }

    fn value(&self, pt: PhasePoint, t: f64) -> f64 {
        let polar = self.params.to_polar(pt);
        self.eval(self.params.energy(pt), polar.rho(), polar.phi(), t)
    }

    fn value_polar(&self, pt: PolarPoint, t: f64) -> f64 {
        self.eval(self.params.energy_from_rho(pt.rho()), pt.rho(), pt.phi(), t)
    }
}

pub fn standing_wave_eval(
    params: &OscillatorParams,
    n: StateIndex,
    spec: &StandingWaveSpec,
    pt: PhasePoint,
    t: f64,
) -> f64 {
    StandingWave::new(*params, n, *spec).value(pt, t)
}

/// Node angles `πk/(2ℓ)`, `k = 0 … 4ℓ−1`.
pub fn node_angles(spec: &StandingWaveSpec) -> Vec<f64> {
    let ell = f64::from(spec.ell);
    (0..4 * spec.ell)
        .map(|k| PI * f64::from(k) / (2.0 * ell))
        .collect()
}

/// Antinode angles `π(2k+1)/(4ℓ)`, `k = 0 … 4ℓ−1`.
pub fn antinode_angles(spec: &StandingWaveSpec) -> Vec<f64> {
    let ell = f64::from(spec.ell);
    (0..4 * spec.ell)
        .map(|k| PI * f64::from(2 * k + 1) / (4.0 * ell))
        .collect()
}

/// Outcome of a randomized parity check of `Φ` under `x̄ → −x̄` and `p → −p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParityReport {
    pub seed: u64,
    pub samples: usize,
    pub times: usize,
    pub tol: f64,
    pub max_x_violation: f64,
    pub max_p_violation: f64,
    pub x_odd: bool,
    pub p_odd: bool,
}

impl ParityReport {
    pub fn passed(&self) -> bool {
        self.x_odd && self.p_odd
    }
}

/// Parity check with [`DEFAULT_SEED`].
pub fn check_parity(
    params: &OscillatorParams,
    profile: &WaveProfile,
    samples: usize,
    tol: f64,
) -> ParityReport {
    check_parity_seeded(params, profile, samples, tol, DEFAULT_SEED)
}

/// Evaluate `Φ` at random points in a `±3`-width box and at their mirror
/// images, at four times spread over one period `2π/Ω`.
pub fn check_parity_seeded(
    params: &OscillatorParams,
    profile: &WaveProfile,
    samples: usize,
    tol: f64,
    seed: u64,
) -> ParityReport {
    let samples = samples.max(1);
    let omega_wave = profile.frequency(params.omega());
    let period = TAU / omega_wave;
    let times = [0.0, 0.13 * period, 0.37 * period, 0.71 * period];
    let phi_at = |pt: PhasePoint, t: f64| {
        profile.angular(omega_wave * t, params.to_polar(pt).phi())
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (sx, sp) = (params.position_scale(), params.momentum_scale());
    let mut max_x: f64 = 0.0;
    let mut max_p: f64 = 0.0;
    for _ in 0..samples {
        let x_bar = rng.random_range(-3.0..3.0) * sx;
        let p = rng.random_range(-3.0..3.0) * sp;
        let pt = PhasePoint::new(params.unshifted_x(x_bar), p);
        let rx = params.reflect(pt, Axis::XBar);
        let rp = params.reflect(pt, Axis::P);
        for &t in &times {
            let here = phi_at(pt, t);
            max_x = max_x.max((phi_at(rx, t) + here).abs());
            max_p = max_p.max((phi_at(rp, t) + here).abs());
        }
    }
    ParityReport {
        seed,
        samples,
        times: times.len(),
        tol,
        max_x_violation: max_x,
        max_p_violation: max_p,
        x_odd: max_x <= tol,
        p_odd: max_p <= tol,
    }
}
