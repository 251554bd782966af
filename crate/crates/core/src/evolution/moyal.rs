//! Right-hand side of the Moyal equation for polynomial potentials:
//!
//! ```text
//! Σ_{n≥1} (−1)^n (ħ/2)^{2n} / (2n+1)! · U^{(2n+1)}(x) · ∂^{2n+1}W/∂p^{2n+1}
//! ```
//!
//! The series stops once `2n+1` exceeds the degree of `U`, so for quadratic
//! potentials no term is ever formed and the result is exactly zero.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::field::WignerField;
use crate::oscillator::{OscillatorParams, PhasePoint};
use crate::wigner::StationaryWigner;
use crate::{Error, Result};

pub const MAX_POTENTIAL_DEGREE: usize = 12;

/// `U(x) = Σ c_k x^k`, trailing zero coefficients dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialPotential {
    coeffs: Vec<f64>,
}

impl PolynomialPotential {
    pub fn new(mut coeffs: Vec<f64>) -> Result<Self> {
        if let Some(&bad) = coeffs.iter().find(|c| !c.is_finite()) {
            return Err(Error::Domain {
                what: "potential coefficient",
                value: bad,
            });
        }
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.len() > MAX_POTENTIAL_DEGREE + 1 {
            return Err(Error::Configuration(alloc::format!(
                "potential degree {} exceeds {MAX_POTENTIAL_DEGREE}",
                coeffs.len() - 1
            )));
        }
        Ok(Self { coeffs })
    }

    /// `mω²x²/2 + αx + α²/(2mω²)`
    pub fn harmonic(params: &OscillatorParams) -> Self {
        let k = params.m() * params.omega() * params.omega();
        let a = params.alpha();
        Self::new(vec![a * a / (2.0 * k), a, 0.5 * k]).expect("finite harmonic coefficients")
    }

    /// Monomial `x^k`.
    pub fn monomial(k: usize) -> Result<Self> {
        let mut coeffs = vec![0.0; k + 1];
        coeffs[k] = 1.0;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self, order: usize) -> Self {
        poly_derivative(self, order)
    }
}

/// Exact `order`-th derivative by coefficient shifting.
pub fn poly_derivative(u: &PolynomialPotential, order: usize) -> PolynomialPotential {
    let coeffs = u
        .coeffs
        .iter()
        .enumerate()
        .skip(order)
        .map(|(k, &c)| {
            let falling: f64 = ((k - order + 1)..=k).map(|j| j as f64).product();
            c * falling
        })
        .collect();
    PolynomialPotential { coeffs }
}

/// Source of `∂^k W / ∂p^k` at a phase point.
pub trait PDerivatives {
    fn p_derivative(&self, pt: PhasePoint, order: u32) -> Result<f64>;
}

impl PDerivatives for StationaryWigner {
    fn p_derivative(&self, pt: PhasePoint, order: u32) -> Result<f64> {
        StationaryWigner::p_derivative(self, pt, order)
    }
}

/// Central-difference p-derivatives of a field at a fixed time, fourth-order accurate.
///
/// Step rule: `h = max(h_k σ_p, 10⁻³|p|)` with `σ_p = √(mħω)`, `h_k = 10⁻³`
/// for orders up to 3 and `h_k = ε^{1/(k+4)}` above (balances the `h⁴`
/// truncation against `ε/h^k` rounding).
#[derive(Debug, Clone)]
pub struct FiniteDifferenceP<W> {
    field: W,
    t: f64,
}

impl<W: WignerField> FiniteDifferenceP<W> {
    pub fn new(field: W, t: f64) -> Self {
        Self { field, t }
    }

    pub fn step(&self, p: f64, order: u32) -> f64 {
        let base = if order <= 3 {
            1e-3
        } else {
            f64::EPSILON.powf(1.0 / (f64::from(order) + 4.0))
        };
        (base * self.field.params().momentum_scale()).max(1e-3 * p.abs())
    }
}

impl<W: WignerField> PDerivatives for FiniteDifferenceP<W> {
    fn p_derivative(&self, pt: PhasePoint, order: u32) -> Result<f64> {
        if order == 0 {
            return Ok(self.field.value(pt, self.t));
        }
        let half_width = (order as i64 + 1) / 2 + 1;
        let offsets: Vec<f64> = (-half_width..=half_width).map(|k| k as f64).collect();
        let weights = fd_weights(order as usize, &offsets);
        let h = self.step(pt.p, order);
        let mut acc = 0.0;
        for (&s, &w) in offsets.iter().zip(&weights) {
            if w != 0.0 {
                acc += w * self.field.value(PhasePoint::new(pt.x, pt.p + s * h), self.t);
            }
        }
        Ok(acc / h.powi(order as i32))
    }
}

/// Finite-difference weights for the `order`-th derivative at 0 on unit-spaced
/// (or arbitrary) `offsets`, by Fornberg's recursion.
pub fn fd_weights(order: usize, offsets: &[f64]) -> Vec<f64> {
    let n = offsets.len();
    assert!(n > order, "need more stencil points than the derivative order");
    // c[j][k]: weight of node j for derivative k
    let mut c = vec![vec![0.0; order + 1]; n];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = offsets[0];
    for i in 1..n {
        let mn = i.min(order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = offsets[i];
        for j in 0..i {
            let c3 = offsets[i] - offsets[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.into_iter().map(|row| row[order]).collect()
}

/// Moyal series right-hand side at `pt`.
pub fn moyal_rhs<D: PDerivatives + ?Sized>(
    potential: &PolynomialPotential,
    field: &D,
    pt: PhasePoint,
    hbar: f64,
) -> Result<f64> {
    if potential.degree() > MAX_POTENTIAL_DEGREE {
        return Err(Error::Configuration("potential degree exceeds 12".into()));
    }
    let half_hbar2 = (0.5 * hbar) * (0.5 * hbar);
    let mut total = 0.0;
    let mut n = 1usize;
    while 2 * n + 1 <= potential.degree() {
        let order = 2 * n + 1;
        let du = potential.derivative(order).eval(pt.x);
        let factorial: f64 = (1..=order).map(|k| k as f64).product();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let coeff = sign * half_hbar2.powi(n as i32) / factorial;
        total += coeff * du * field.p_derivative(pt, order as u32)?;
        n += 1;
    }
    Ok(total)
}
