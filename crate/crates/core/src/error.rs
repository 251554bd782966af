use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{what}: non-finite input {value}")]
    Domain { what: &'static str, value: f64 },

    #[error("polynomial order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: u32, max: u32 },

    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("profile `{which}` is not 2πκ-periodic: |h(θ+2πκ) − h(θ)| = {deviation:e} at θ = {theta}")]
    NonPeriodicProfile {
        which: &'static str,
        theta: f64,
        deviation: f64,
    },

    #[error("degenerate profile: C + <f> + <g> = {denominator:e}")]
    DegenerateProfile { denominator: f64 },

    #[error("profile mean depends on time: {first} vs {second}")]
    TimeDependentNormalization { first: f64, second: f64 },

    #[error("quadrature did not reach tolerance: estimated error {estimate:e} > {tol:e}")]
    Accuracy { estimate: f64, tol: f64 },

    #[error("configuration error: {0}")]
    Configuration(String),

    #[error("numerical blow-up at step {step}")]
    NumericalBlowup { step: usize },

    #[error("non-finite field value at node (rho index {rho_index}, phi index {phi_index})")]
    NonFiniteSample { rho_index: usize, phi_index: usize },
}
