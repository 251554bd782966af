//! Central-difference residuals of the wave and transport equations from
//! three snapshots `t − dt`, `t`, `t + dt` on the same grid.
//!
//! The origin ring and the outer ring are excluded and left at zero.

use alloc::vec;


use super::{Field2D, GridSpec};
use crate::oscillator::OscillatorParams;
use crate::{Error, Result};

fn check_sequence(fields: &[Field2D; 3]) -> Result<(GridSpec, f64)> {
    let grid = *fields[0].grid();
    if fields.iter().any(|f| *f.grid() != grid) {
        return Err(Error::Configuration("residual snapshots are on different grids".into()));
    }
    grid.validate_for_pde()?;
    let dt0 = fields[1].time() - fields[0].time();
    let dt1 = fields[2].time() - fields[1].time();
    if !(dt0 > 0.0) || (dt0 - dt1).abs() > 1e-9 * dt0.abs().max(dt1.abs()) {
        return Err(Error::Configuration(alloc::format!(
            "snapshot times must be equally spaced and increasing (steps {dt0}, {dt1})"
        )));
    }
    Ok((grid, 0.5 * (dt0 + dt1)))
}

fn residual_with<F>(fields: &[Field2D; 3], mut stencil: F) -> Result<Field2D>
where
    F: FnMut(&[f64; 3], f64, f64, f64) -> f64,
{
    let (grid, dt) = check_sequence(fields)?;
    let n_phi = grid.n_phi;
    let mut values = vec![0.0; grid.len()];
    for i in 1..grid.n_rho.saturating_sub(1) {
        let (prev, cur, next) = (fields[0].ring(i), fields[1].ring(i), fields[2].ring(i));
        let out = &mut values[i * n_phi..(i + 1) * n_phi];
        for j in 0..n_phi {
            let left = cur[(j + n_phi - 1) % n_phi];
            let right = cur[(j + 1) % n_phi];
            let in_time = [prev[j], cur[j], next[j]];
            out[j] = stencil(&in_time, left, right, dt);
        }
    }
    Field2D::new(grid, values, fields[1].time())
}

/// `W_tt − ω² W_φφ` at interior rings.
pub fn wave_residual(fields: &[Field2D; 3], params: &OscillatorParams) -> Result<Field2D> {
    let omega2 = params.omega() * params.omega();
    let dphi = fields[1].grid().dphi();
    residual_with(fields, |w, left, right, dt| {
        let w_tt = (w[2] - 2.0 * w[1] + w[0]) / (dt * dt);
        let w_pp = (right - 2.0 * w[1] + left) / (dphi * dphi);
        w_tt - omega2 * w_pp
    })
}

/// `W_t − ω W_φ` at interior rings.
pub fn transport_residual(fields: &[Field2D; 3], params: &OscillatorParams) -> Result<Field2D> {
    let omega = params.omega();
    let dphi = fields[1].grid().dphi();
    residual_with(fields, |w, left, right, dt| {
        let w_t = (w[2] - w[0]) / (2.0 * dt);
        let w_p = (right - left) / (2.0 * dphi);
        w_t - omega * w_p
    })
}
