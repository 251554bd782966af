//! Oscillator parameters and the phase-plane coordinate maps.
//!
//! With the shifted coordinate `x̄ = x + α/(mω²)` the potential
//! `mω²x²/2 + αx + α²/(2mω²)` becomes `mω²x̄²/2`. The scaled velocities
//! `u = ωx̄`, `v = p/m` turn the classical orbits into circles of radius
//! `ρ = √(u² + v²)`, and `φ` is the polar angle of `(u, v)`.

use core::f64::consts::{PI, TAU};

#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorParams {
    m: f64,
    omega: f64,
    hbar: f64,
    alpha: f64,
}

impl Default for OscillatorParams {
    /// Natural units: `m = ω = ħ = 1`, `α = 0`.
    fn default() -> Self {
        Self {
            m: 1.0,
            omega: 1.0,
            hbar: 1.0,
            alpha: 0.0,
        }
    }
}

fn positive(name: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() || value <= 0.0 {
        return Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite and strictly positive",
        });
    }
    Ok(value)
}

impl OscillatorParams {
    pub fn new(m: f64, omega: f64, hbar: f64, alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::InvalidParameter {
                name: "alpha",
                value: alpha,
                reason: "must be finite",
            });
        }
        Ok(Self {
            m: positive("m", m)?,
            omega: positive("omega", omega)?,
            hbar: positive("hbar", hbar)?,
            alpha,
        })
    }

    pub fn natural() -> Self {
        Self::default()
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Offset `α/(mω²)` between `x̄` and `x`.
    pub fn shift(&self) -> f64 {
        self.alpha / (self.m * self.omega * self.omega)
    }

    pub fn shifted_x(&self, x: f64) -> f64 {
        x + self.shift()
    }

    pub fn unshifted_x(&self, x_bar: f64) -> f64 {
        x_bar - self.shift()
    }

    /// Radius `√(ħω/m)` at which `mρ²/(ħω) = 1`; the natural length of ρ.
    pub fn rho_scale(&self) -> f64 {
        (self.hbar * self.omega / self.m).sqrt()
    }

    /// Width `√(ħ/(mω))` of the ground-state Gaussian in `x̄`.
    pub fn position_scale(&self) -> f64 {
        (self.hbar / (self.m * self.omega)).sqrt()
    }

    /// Width `√(mħω)` of the ground-state Gaussian in `p`.
    pub fn momentum_scale(&self) -> f64 {
        (self.m * self.hbar * self.omega).sqrt()
    }

    /// `(x, p) ↦ (ρ, φ)` with `u = ωx̄`, `v = p/m`; the angle is 0 at the origin.
    pub fn to_polar(&self, pt: PhasePoint) -> PolarPoint {
        let u = self.omega * self.shifted_x(pt.x);
        let v = pt.p / self.m;
        let rho = u.hypot(v);
        if rho == 0.0 {
            return PolarPoint { rho: 0.0, phi: 0.0 };
        }
        PolarPoint {
            rho,
            phi: normalize_angle(v.atan2(u)),
        }
    }

    pub fn from_polar(&self, pt: PolarPoint) -> PhasePoint {
        let (s, c) = pt.phi.sin_cos();
        PhasePoint {
            x: pt.rho / self.omega * c - self.shift(),
            p: self.m * pt.rho * s,
        }
    }

    /// Dimensionless energy `ε = (p²/2m + mω²x̄²/2) / (ħω)`.
    pub fn energy(&self, pt: PhasePoint) -> f64 {
        let x_bar = self.shifted_x(pt.x);
        let kinetic = pt.p * pt.p / (2.0 * self.m);
        let potential = 0.5 * self.m * self.omega * self.omega * x_bar * x_bar;
        (kinetic + potential) / (self.hbar * self.omega)
    }

    /// `ε = mρ²/(2ħω)`.
    pub fn energy_from_rho(&self, rho: f64) -> f64 {
        self.m * rho * rho / (2.0 * self.hbar * self.omega)
    }

    /// Mirror a point in `x̄`, `p`, or both, about the origin of the shifted plane.
    pub fn reflect(&self, pt: PhasePoint, axis: Axis) -> PhasePoint {
        let x_bar = self.shifted_x(pt.x);
        let (x_bar, p) = match axis {
            Axis::XBar => (-x_bar, pt.p),
            Axis::P => (x_bar, -pt.p),
            Axis::Both => (-x_bar, -pt.p),
        };
        PhasePoint {
            x: self.unshifted_x(x_bar),
            p,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    XBar,
    P,
    Both,
}

/// A point `(x, p)` in unshifted phase-space coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PhasePoint {
    pub x: f64,
    pub p: f64,
}

impl PhasePoint {
    pub fn new(x: f64, p: f64) -> Self {
        Self { x, p }
    }
}

/// Polar image `(ρ, φ)` of a phase point, `φ ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PolarPoint {
    rho: f64,
    phi: f64,
}

impl PolarPoint {
    pub fn new(rho: f64, phi: f64) -> Result<Self> {
        if !rho.is_finite() || rho < 0.0 {
            return Err(Error::InvalidParameter {
                name: "rho",
                value: rho,
                reason: "must be finite and non-negative",
            });
        }
        if !phi.is_finite() {
            return Err(Error::Domain {
                what: "phi",
                value: phi,
            });
        }
        Ok(Self {
            rho,
            phi: normalize_angle(phi),
        })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// Reduce an angle into `[0, 2π)`.
pub fn normalize_angle(phi: f64) -> f64 {
    let r = phi - TAU * (phi / TAU).floor();
    // rounds up to exactly 2π for tiny negative inputs
    if r >= TAU || r < 0.0 {
        0.0
    } else {
        r
    }
}

/// Two-branch angle `arctan(p/x̄)` (+π when `x̄ < 0`), exposed
/// for tests that compare against the explicit two-branch formula.
pub fn branch_angle(u: f64, v: f64) -> f64 {
    if u == 0.0 {
        return if v > 0.0 {
            PI / 2.0
        } else if v < 0.0 {
            1.5 * PI
        } else {
            0.0
        };
    }
    let base = (v / u).atan();
    normalize_angle(if u < 0.0 { PI + base } else { base })
}
