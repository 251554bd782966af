use crate::oscillator::{OscillatorParams, PhasePoint, PolarPoint};

/// A time-dependent phase-space function `W(x, p, t)`.
///
/// Implementors whose natural coordinates are polar should override
/// [`WignerField::value_polar`] so that quadrature and sampling on polar
/// grids do not pay for (or round through) a coordinate round trip.
pub trait WignerField {
    fn params(&self) -> &OscillatorParams;

    fn value(&self, pt: PhasePoint, t: f64) -> f64;

    fn value_polar(&self, pt: PolarPoint, t: f64) -> f64 {
        self.value(self.params().from_polar(pt), t)
    }
}

impl<F: WignerField + ?Sized> WignerField for &F {
    fn params(&self) -> &OscillatorParams {
        (**self).params()
    }

    fn value(&self, pt: PhasePoint, t: f64) -> f64 {
        (**self).value(pt, t)
    }

    fn value_polar(&self, pt: PolarPoint, t: f64) -> f64 {
        (**self).value_polar(pt, t)
    }
}

/// Closure-backed field in Cartesian coordinates.
#[derive(Clone)]
pub struct FnField<F> {
    params: OscillatorParams,
    f: F,
}

impl<F: Fn(PhasePoint, f64) -> f64> FnField<F> {
    pub fn new(params: OscillatorParams, f: F) -> Self {
        Self { params, f }
    }
}

impl<F: Fn(PhasePoint, f64) -> f64> WignerField for FnField<F> {
    fn params(&self) -> &OscillatorParams {
        &self.params
    }

    fn value(&self, pt: PhasePoint, t: f64) -> f64 {
        (self.f)(pt, t)
    }
}

/// Closure-backed field in polar coordinates `(ρ, φ)`.
#[derive(Clone)]
pub struct PolarFnField<F> {
    params: OscillatorParams,
    f: F,
}

impl<F: Fn(PolarPoint, f64) -> f64> PolarFnField<F> {
    pub fn new(params: OscillatorParams, f: F) -> Self {
        Self { params, f }
    }
}

impl<F: Fn(PolarPoint, f64) -> f64> WignerField for PolarFnField<F> {
    fn params(&self) -> &OscillatorParams {
        &self.params
    }

    fn value(&self, pt: PhasePoint, t: f64) -> f64 {
        (self.f)(self.params.to_polar(pt), t)
    }

    fn value_polar(&self, pt: PolarPoint, t: f64) -> f64 {
        (self.f)(pt, t)
    }
}
