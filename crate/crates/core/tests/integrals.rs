use phasewave_core::quadrature::trapezoid;
use phasewave_core::{
    check_parity, marginal_over_p, marginal_over_x, mean_energy, momentum_density,
    phase_space_integral, position_density, wigner_stationary, ExtendedWigner, OscillatorParams,
    PhasePoint, QuadratureSpec, StandingWave, StandingWaveSpec, StateIndex, StationaryWigner,
    WaveProfile, WignerField,
};

fn st(n: u32) -> StateIndex {
    StateIndex::new(n).unwrap()
}

fn general() -> OscillatorParams {
    OscillatorParams::new(1.7, 0.6, 0.8, 0.35).unwrap()
}

// Tensor-product trapezoid over x̄ and p, both windows ±9 widths.
fn cartesian_integral(params: &OscillatorParams, n: StateIndex, panels: usize) -> f64 {
    let (sx, sp) = (9.0 * params.position_scale(), 9.0 * params.momentum_scale());
    trapezoid(
        |x_bar| {
            let x = params.unshifted_x(x_bar);
            trapezoid(|p| wigner_stationary(params, n, PhasePoint::new(x, p)), -sp, sp, panels)
        },
        -sx,
        sx,
        panels,
    )
}

#[test]
fn polar_and_cartesian_integrals_agree() {
    for params in [OscillatorParams::natural(), general()] {
        let quad = QuadratureSpec::for_params(&params);
        for n in [0, 3] {
            let polar = phase_space_integral(&StationaryWigner::new(params, st(n)), 0.0, &quad)
                .unwrap()
                .value;
            let cart = cartesian_integral(&params, st(n), 600);
            assert!((polar - cart).abs() < 1e-8, "n={n}: {polar} vs {cart}");
            assert!((polar - 1.0).abs() < 1e-8);
        }
    }
}

#[test]
fn error_estimates_bound_the_mesh_difference() {
    let params = general();
    let quad = QuadratureSpec::for_params(&params);
    let w = StationaryWigner::new(params, st(4));
    for est in [
        phase_space_integral(&w, 0.0, &quad).unwrap(),
        mean_energy(&w, 0.0, &quad).unwrap(),
        marginal_over_p(&w, 0.4, 0.0, &quad).unwrap(),
    ] {
        assert!((est.value - est.coarse).abs() <= est.error);
        assert!(est.error <= quad.tol);
    }
}

#[test]
fn stationary_energy_in_general_units() {
    let params = general();
    let quad = QuadratureSpec::for_params(&params);
    for n in [0, 2, 7] {
        let e = mean_energy(&StationaryWigner::new(params, st(n)), 0.0, &quad).unwrap();
        assert!((e.value - (n as f64 + 0.5)).abs() < 1e-6, "n={n}: {}", e.value);
    }
}

#[test]
fn standing_wave_is_normalized_and_has_the_stationary_energy() {
    let params = general();
    let quad = QuadratureSpec::for_params(&params);
    let spec = StandingWaveSpec::new(2, 1.5, 4.0).unwrap();
    let w = StandingWave::new(params, st(3), spec);
    let period = spec.period(params.omega());
    for frac in [0.0, 0.1, 0.3, 0.55] {
        let t = frac * period;
        let norm = phase_space_integral(&w, t, &quad).unwrap().value;
        let e = mean_energy(&w, t, &quad).unwrap().value;
        assert!((norm - 1.0).abs() < 1e-8, "t={t}: {norm}");
        assert!((e - 3.5).abs() < 1e-6, "t={t}: {e}");
    }
}

#[test]
fn marginals_of_a_shifted_standing_wave() {
    let params = general();
    let quad = QuadratureSpec::for_params(&params);
    let spec = StandingWaveSpec::new(3, 2.0, 5.0).unwrap();
    let n = st(2);
    let w = StandingWave::new(params, n, spec);
    let t = 0.2 * spec.period(params.omega());
    for k in -4..=4 {
        let x = params.unshifted_x(0.5 * k as f64 * params.position_scale());
        let p = 0.5 * k as f64 * params.momentum_scale();
        let mx = marginal_over_p(&w, x, t, &quad).unwrap().value;
        let mp = marginal_over_x(&w, p, t, &quad).unwrap().value;
        assert!((mx - position_density(&params, n, x)).abs() < 1e-6);
        assert!((mp - momentum_density(&params, n, p)).abs() < 1e-6);
    }
}

// A parity-passing profile has angular marginals that vanish on every line.
#[test]
fn parity_passing_profiles_have_vanishing_angular_marginals() {
    let params = OscillatorParams::natural();
    let quad = QuadratureSpec::default();
    let amp = 0.7;
    let profile = WaveProfile::new(
        move |th: f64| amp * th.sin() + 0.3 * (2.0 * th).sin(),
        move |th: f64| -amp * th.sin() - 0.3 * (2.0 * th).sin(),
        2.0,
        6,
    )
    .unwrap();
    assert!(check_parity(&params, &profile, 256, 1e-12).passed());
    let ext = ExtendedWigner::new(params, st(1), profile, &quad).unwrap();
    let kernel = StationaryWigner::new(params, st(1));
    // Kernel·Φ on its own.
    let angular = phasewave_core::FnField::new(params, |pt: PhasePoint, t: f64| {
        kernel.value(pt, t) * ext.angular_at(pt, t)
    });
    for t in [0.0, 0.21, 0.9] {
        for k in -3..=3 {
            let s = 0.7 * k as f64;
            let mx = marginal_over_p(&angular, s, t, &quad).unwrap().value;
            let mp = marginal_over_x(&angular, s, t, &quad).unwrap().value;
            assert!(mx.abs() < 1e-8 && mp.abs() < 1e-8, "t={t} s={s}: {mx} {mp}");
        }
    }
}
