//! Scalar special functions and the generic numerical routines (adaptive
//! quadrature, monotone bisection) that every bound is assembled from.
//!
//! Everything here is a pure function of its arguments.

mod beta;
mod bisection;
mod gamma;
mod normal;
mod quadrature;

pub use beta::{cap_fraction, cap_fraction_from_cos, ln_beta, regularized_incomplete_beta};
pub use bisection::{bisect_increasing, Bisection, BisectionError, Root};
pub use gamma::{
    chi_log_density, ln_regularized_upper_gamma, log_gamma, regularized_lower_gamma,
    regularized_upper_gamma,
};
pub use normal::{gaussian_density, log_q_function, q_function};
pub use quadrature::{
    integrate, integrate_with_breakpoints, Integral, QuadratureError, QuadratureSpec,
};

use thiserror::Error;

/// An argument fell outside the domain of a special function.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{function}: argument out of domain ({detail})")]
pub struct DomainError {
    pub function: &'static str,
    pub detail: String,
}

impl DomainError {
    pub(crate) fn new(function: &'static str, detail: impl Into<String>) -> Self {
        Self {
            function,
            detail: detail.into(),
        }
    }
}

/// Iteration cap shared by the series and continued-fraction expansions.
const MAX_ITERATIONS: usize = 100_000;
const TINY: f64 = 1e-300;
