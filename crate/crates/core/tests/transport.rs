use core::f64::consts::TAU;

use phasewave_core::{
    evolve_fd, propagate_exact, sample_field, transport_residual, wave_residual, GridSpec,
    OscillatorParams, PolarFnField, PolarPoint, StandingWave, StandingWaveSpec, StateIndex,
    StationaryWigner, WignerField,
};

fn modulated(params: OscillatorParams) -> impl WignerField + Clone {
    let kernel = StationaryWigner::new(params, StateIndex::new(0).unwrap());
    PolarFnField::new(params, move |pt: PolarPoint, t| {
        kernel.value_polar(pt, t) * (1.0 + 0.5 * (2.0 * pt.phi()).sin())
    })
}

fn fd_error(params: &OscillatorParams, n_phi: usize) -> f64 {
    let w = modulated(*params);
    let grid = GridSpec::with_cfl(params, 3.0 * params.rho_scale(), 12, n_phi, 0.5).unwrap();
    let period = TAU / params.omega();
    let f0 = sample_field(&w, &grid, 0.0).unwrap();
    let run = evolve_fd(&f0, params, period).unwrap();
    let exact = sample_field(&propagate_exact(w, period), &grid, 0.0).unwrap();
    run.field.max_abs_diff(&exact).unwrap()
}

#[test]
fn upwind_solver_is_first_order() {
    for params in [OscillatorParams::natural(), OscillatorParams::new(2.0, 1.5, 0.7, -0.3).unwrap()] {
        let errs: Vec<f64> = [256, 512, 1024].iter().map(|&n| fd_error(&params, n)).collect();
        for pair in errs.windows(2) {
            let order = (pair[0] / pair[1]).log2();
            assert!((0.8..=1.2).contains(&order), "{errs:?}");
        }
    }
}

#[test]
fn standing_wave_residuals_discriminate_the_two_equations() {
    let params = OscillatorParams::new(1.0, 0.9, 1.0, 0.4).unwrap();
    let spec = StandingWaveSpec::new(2, 2.0, 5.0).unwrap();
    let w = StandingWave::new(params, StateIndex::new(1).unwrap(), spec);
    let mut wave = Vec::new();
    let mut transport = Vec::new();
    for n_phi in [64, 128, 256] {
        let grid = GridSpec::with_cfl(&params, 2.5 * params.rho_scale(), 8, n_phi, 0.5).unwrap();
        let t = 0.17 * spec.period(params.omega());
        let snaps = [t - grid.dt, t, t + grid.dt].map(|s| sample_field(&w, &grid, s).unwrap());
        wave.push(wave_residual(&snaps, &params).unwrap().max_abs());
        transport.push(transport_residual(&snaps, &params).unwrap().max_abs());
    }
    assert!(wave[0] / wave[1] >= 3.5 && wave[1] / wave[2] >= 3.5, "{wave:?}");
    assert!(transport[2] > 0.1 * transport[0], "{transport:?}");
}
