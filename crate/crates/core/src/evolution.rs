//! Phase-plane dynamics of the oscillator.
//!
//! In polar variables the Liouville equation reduces to the angular
//! transport equation `W_t = ω W_φ`, whose solution is the rigid rotation
//! `W(ρ, φ, t) = W0(ρ, φ + ωt)`: the flow turns clockwise in `(u, v)`, so
//! a fixed feature moves to smaller `φ`. Differentiating once more in time
//! gives the wave equation `W_tt = ω² W_φφ`, which also admits the
//! counter-rotating chirality; the residual operators here measure both.

mod fd;
mod moyal;
mod residual;

use alloc::vec::Vec;
use core::f64::consts::TAU;

use crate::field::WignerField;
use crate::oscillator::{OscillatorParams, PhasePoint, PolarPoint};
use crate::{Error, Result};

pub use fd::{evolve_fd, FdRun};
pub use moyal::{
    fd_weights, moyal_rhs, poly_derivative, FiniteDifferenceP, PDerivatives, PolynomialPotential,
    MAX_POTENTIAL_DEGREE,
};
pub use residual::{transport_residual, wave_residual};

/// Polar sampling grid: `ρ_i = i·ρ_max/(n_rho−1)`, `φ_j = 2πj/n_phi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub rho_max: f64,
    pub n_rho: usize,
    pub n_phi: usize,
    /// Time step of the finite-difference solver.
    pub dt: f64,
}

/// Minimum angular resolution for the solver and the residual stencils.
pub const MIN_PDE_PHI: usize = 16;

impl GridSpec {
    pub fn new(rho_max: f64, n_rho: usize, n_phi: usize, dt: f64) -> Result<Self> {
        let grid = Self {
            rho_max,
            n_rho,
            n_phi,
            dt,
        };
        grid.validate()?;
        Ok(grid)
    }

    /// Grid with the largest `dt` at a given CFL number `ω dt / Δφ`.
    pub fn with_cfl(
        params: &OscillatorParams,
        rho_max: f64,
        n_rho: usize,
        n_phi: usize,
        cfl: f64,
    ) -> Result<Self> {
        let dphi = TAU / n_phi.max(1) as f64;
        Self::new(rho_max, n_rho, n_phi, cfl * dphi / params.omega())
    }

    pub fn validate(&self) -> Result<()> {
        if !self.rho_max.is_finite() || self.rho_max <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "rho_max",
                value: self.rho_max,
                reason: "must be finite and positive",
            });
        }
        if self.n_rho == 0 || self.n_phi == 0 {
            return Err(Error::Configuration("grid needs at least one node per axis".into()));
        }
        if !self.dt.is_finite() || self.dt <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "dt",
                value: self.dt,
                reason: "must be finite and positive",
            });
        }
        Ok(())
    }

    /// Stricter checks for the angular PDE operators.
    pub fn validate_for_pde(&self) -> Result<()> {
        self.validate()?;
        if self.n_phi < MIN_PDE_PHI {
            return Err(Error::Configuration(alloc::format!(
                "n_phi = {} is below the PDE minimum of {MIN_PDE_PHI}",
                self.n_phi
            )));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.n_rho * self.n_phi
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn rho(&self, i: usize) -> f64 {
        if self.n_rho == 1 {
            0.0
        } else {
            self.rho_max * i as f64 / (self.n_rho - 1) as f64
        }
    }

    pub fn dphi(&self) -> f64 {
        TAU / self.n_phi as f64
    }

    pub fn phi(&self, j: usize) -> f64 {
        self.dphi() * j as f64
    }

    /// `ω dt / Δφ`
    pub fn cfl(&self, params: &OscillatorParams) -> f64 {
        params.omega() * self.dt / self.dphi()
    }

    pub fn node(&self, i: usize, j: usize) -> PolarPoint {
        PolarPoint::new(self.rho(i), self.phi(j)).expect("grid nodes are valid polar points")
    }
}

/// Field values on a [`GridSpec`], stored ρ-major (each ring is contiguous).
#[derive(Debug, Clone, PartialEq)]
pub struct Field2D {
    grid: GridSpec,
    values: Vec<f64>,
    time: f64,
}

impl Field2D {
    pub fn new(grid: GridSpec, values: Vec<f64>, time: f64) -> Result<Self> {
        grid.validate()?;
        if values.len() != grid.len() {
            return Err(Error::Configuration(alloc::format!(
                "field has {} values, grid needs {}",
                values.len(),
                grid.len()
            )));
        }
        if let Some(k) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteSample {
                rho_index: k / grid.n_phi,
                phi_index: k % grid.n_phi,
            });
        }
        Ok(Self { grid, values, time })
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.grid.n_phi + j]
    }

    pub fn ring(&self, i: usize) -> &[f64] {
        let n = self.grid.n_phi;
        &self.values[i * n..(i + 1) * n]
    }

    pub fn rings(&self) -> impl Iterator<Item = &[f64]> {
        self.values.chunks_exact(self.grid.n_phi)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Largest pointwise difference; the grids must match.
    pub fn max_abs_diff(&self, other: &Field2D) -> Result<f64> {
        if self.grid != other.grid {
            return Err(Error::Configuration("grid mismatch".into()));
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs())))
    }

    /// Sum of each ring's values.
    pub fn ring_sums(&self) -> Vec<f64> {
        self.rings()
            .map(|r| r.iter().copied().collect::<crate::quadrature::CompensatedSum>().total())
            .collect()
    }

    pub(crate) fn into_parts(self) -> (GridSpec, Vec<f64>, f64) {
        (self.grid, self.values, self.time)
    }
}

/// Sample `W(ρ_i, φ_j, t)` on every node, ρ-major.
pub fn sample_field<W: WignerField + ?Sized>(field: &W, grid: &GridSpec, t: f64) -> Result<Field2D> {
    grid.validate()?;
    let mut values = Vec::with_capacity(grid.len());
    for i in 0..grid.n_rho {
        for j in 0..grid.n_phi {
            let v = field.value_polar(grid.node(i, j), t);
            if !v.is_finite() {
                return Err(Error::NonFiniteSample {
                    rho_index: i,
                    phi_index: j,
                });
            }
            values.push(v);
        }
    }
    Field2D::new(*grid, values, t)
}

/// Exact solution of `W_t = ω W_φ` from the snapshot `W0 = initial(·, 0)`.
#[derive(Debug, Clone)]
pub struct Propagated<F> {
    initial: F,
    offset: f64,
}

/// The rotated field `W(ρ, φ, t) = W0(ρ, φ + ωt)`; evaluating the result at
/// time `τ` gives the state at `t + τ`.
pub fn propagate_exact<F: WignerField>(initial: F, t: f64) -> Propagated<F> {
    Propagated { initial, offset: t }
}

impl<F: WignerField> WignerField for Propagated<F> {
    fn params(&self) -> &OscillatorParams {
        self.initial.params()
    }

    fn value(&self, pt: PhasePoint, t: f64) -> f64 {
        self.value_polar(self.params().to_polar(pt), t)
    }

    fn value_polar(&self, pt: PolarPoint, t: f64) -> f64 {
        let turn = self.params().omega() * (self.offset + t);
        let rotated = PolarPoint::new(pt.rho(), pt.phi() + turn).expect("rotation keeps rho");
        self.initial.value_polar(rotated, 0.0)
    }
}
