//! Laguerre and Hermite polynomials by three-term recurrence.
//!
//! Orders are capped at [`PolyOrder::MAX`]; the Wigner kernels evaluated in
//! this crate never need more and the recurrences are validated up to it.

use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

/// Non-negative polynomial order, at most [`PolyOrder::MAX`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolyOrder(u32);

impl PolyOrder {
    pub const MAX: u32 = 64;

    pub fn new(n: u32) -> Result<Self> {
        if n > Self::MAX {
            return Err(Error::OrderTooLarge {
                order: n,
                max: Self::MAX,
            });
        }
        Ok(Self(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for PolyOrder {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        Self::new(n)
    }
}

fn finite(what: &'static str, x: f64) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::Domain { what, value: x })
    }
}

/// `L_n(x)` from `(k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}`.
pub fn laguerre(n: PolyOrder, x: f64) -> Result<f64> {
    let x = finite("laguerre", x)?;
    Ok(laguerre_unchecked(n.get(), x))
}

pub(crate) fn laguerre_unchecked(n: u32, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 - x;
    for k in 1..n {
        let k = f64::from(k);
        let next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Physicists' Hermite polynomial `H_n(x)` from `H_{k+1} = 2x H_k - 2k H_{k-1}`.
pub fn hermite(n: PolyOrder, x: f64) -> Result<f64> {
    let x = finite("hermite", x)?;
    Ok(hermite_unchecked(n.get(), x))
}

pub(crate) fn hermite_unchecked(n: u32, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * f64::from(k) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `ln(1 / (2^n n!))`, summed in log space.
pub fn log_weight(n: PolyOrder) -> f64 {
    let n = n.get();
    let log_factorial: f64 = (2..=n).map(|k| f64::from(k).ln()).sum();
    -f64::from(n) * core::f64::consts::LN_2 - log_factorial
}

/// Power-series coefficients of `L_n`, `c_k = (-1)^k C(n,k) / k!`.
///
/// Only suitable for small `n`: the alternating series cancels badly for
/// large arguments. Used where exact polynomial algebra is needed.
pub fn laguerre_coefficients(n: PolyOrder) -> Vec<f64> {
    let n = n.get();
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    let mut c = 1.0;
    coeffs.push(c);
    for k in 0..n {
        // c_{k+1} / c_k = -(n - k) / (k + 1)^2
        let k = f64::from(k);
        c *= -(f64::from(n) - k) / ((k + 1.0) * (k + 1.0));
        coeffs.push(c);
    }
    coeffs
}
