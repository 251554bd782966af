//! First-order upwind solver for `W_t = ω W_φ` on periodic rings.
//!
//! Written as `W_t + a W_φ = 0` the advection speed is `a = −ω < 0`, so the
//! upwind neighbour is `j + 1`:
//!
//! ```text
//! W_j ← W_j + ν (W_{j+1} − W_j),   ν = ω dt / Δφ ≤ 1
//! ```
//!
//! Forward Euler in time. Numerical diffusion therefore acts along the
//! clockwise flow. Each ring evolves independently and is stored
//! contiguously.

use alloc::vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::{Field2D, GridSpec};
use crate::oscillator::OscillatorParams;
use crate::{Error, Result};

/// Result of [`evolve_fd`]: the final field and the stepping actually used.
#[derive(Debug, Clone, PartialEq)]
pub struct FdRun {
    pub field: Field2D,
    pub steps: usize,
    /// Step size used; `≤ grid.dt` so that the steps land on `t_final`.
    pub dt: f64,
    pub cfl: f64,
}

pub fn evolve_fd(initial: &Field2D, params: &OscillatorParams, t_final: f64) -> Result<FdRun> {
    let grid: GridSpec = *initial.grid();
    grid.validate_for_pde()?;
    let cfl_max = grid.cfl(params);
    if cfl_max > 1.0 {
        return Err(Error::Configuration(alloc::format!(
            "CFL number {cfl_max} exceeds 1 (dt = {}, dphi = {})",
            grid.dt,
            grid.dphi()
        )));
    }
    if !t_final.is_finite() || t_final < 0.0 {
        return Err(Error::InvalidParameter {
            name: "t_final",
            value: t_final,
            reason: "must be finite and non-negative",
        });
    }

    let steps = (t_final / grid.dt - 1e-9).ceil().max(0.0) as usize;
    let dt = if steps == 0 { grid.dt } else { t_final / steps as f64 };
    let nu = params.omega() * dt / grid.dphi();

    let (_, mut values, t0) = initial.clone().into_parts();
    let n_phi = grid.n_phi;
    let mut scratch = vec![0.0; n_phi];
    for step in 0..steps {
        for ring in values.chunks_exact_mut(n_phi) {
            for j in 0..n_phi {
                let next = ring[(j + 1) % n_phi];
                scratch[j] = ring[j] + nu * (next - ring[j]);
            }
            ring.copy_from_slice(&scratch);
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NumericalBlowup { step: step + 1 });
        }
    }
    Ok(FdRun {
        field: Field2D::new(grid, values, t0 + t_final)?,
        steps,
        dt,
        cfl: nu,
    })
}
