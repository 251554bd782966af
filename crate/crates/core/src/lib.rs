//! Phase-space machinery for the quantum harmonic oscillator.
//!
//! The crate builds the stationary oscillator Wigner functions `W_n`, the
//! time-dependent extended family obtained by modulating the stationary
//! kernel with angular waves that rotate with the oscillator, and the
//! numerical tooling used to check them: polar and Cartesian quadrature,
//! an exact characteristic propagator plus an upwind solver for the angular
//! transport equation, finite-difference residuals, and the Moyal series
//! right-hand side for polynomial potentials.
//!
//! Everything here is `no_std` + `alloc`; IO, file formats and the command
//! line live in the `phasewave` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod evolution;
pub mod extended;
pub mod field;
pub mod oscillator;
pub mod quadrature;
pub mod special;
pub mod wigner;

pub use error::{Error, Result};
pub use evolution::{
    evolve_fd, moyal_rhs, poly_derivative, propagate_exact, sample_field, transport_residual,
    wave_residual, FdRun, Field2D, FiniteDifferenceP, GridSpec, PDerivatives, PolynomialPotential,
    Propagated,
};
pub use extended::{
    antinode_angles, check_parity, check_parity_seeded, extended_eval, node_angles, phi_standing,
    standing_wave_eval, ExtendedWigner, Normalization, ParityReport, StandingWave,
    StandingWaveSpec, WaveProfile,
};
pub use field::{FnField, PolarFnField, WignerField};
pub use oscillator::{Axis, OscillatorParams, PhasePoint, PolarPoint};
pub use quadrature::{
    laguerre_energy_identity, marginal_over_p, marginal_over_x, mean_energy,
    phase_space_integral, Estimate, QuadratureSpec,
};
pub use special::{hermite, laguerre, log_weight, PolyOrder};
pub use wigner::{
    momentum_density, position_density, wigner_from_wavefunction, wigner_stationary, StateIndex,
    StationaryWigner,
};
