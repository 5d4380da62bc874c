//! Single-parameter Gallager-first-bound framework.
//!
//! A [`GallagerFamily`] describes nested regions `R(r)` through two scalar
//! functions: the density `g(r)` of the parameter induced by the received
//! vector, and a bound `f_u(r)` on the error probability conditioned on the
//! received vector lying on `∂R(r)`. For any `r*`,
//!
//! ```text
//! Pr{E} <= ∫_{lo}^{r*} f_u(r) g(r) dr + ∫_{r*}^{hi} g(r) dr
//! ```
//!
//! and the tightest such bound over all measurable acceptance sets is
//! `∫ min{f_u(r), 1} g(r) dr`. When `f_u` is nondecreasing the minimizing
//! `r*` is the crossing `f_u(r*) = 1` (or the top of the support if `f_u`
//! never reaches one).

use std::fmt;

use thiserror::Error;

use crate::special::{
    integrate_with_breakpoints, Bisection, BisectionError, QuadratureError, QuadratureSpec, Root,
};

/// A nested family of Gallager regions indexed by a real parameter.
pub trait GallagerFamily: Sync {
    /// Density `g(r)` of the region parameter.
    fn density(&self, r: f64) -> f64;

    /// Conditional bound `f_u(r)`; may exceed one.
    fn conditional_bound(&self, r: f64) -> f64;

    /// Index interval `[lo, hi]`, infinite ends allowed.
    fn support(&self) -> (f64, f64);

    /// Whether `f_u` is claimed to be nondecreasing and continuous.
    fn is_monotone(&self) -> bool {
        true
    }

    /// Points where `f_u` or `g` has a kink or jump; quadrature panels are
    /// split there.
    fn breakpoints(&self) -> Vec<f64> {
        Vec::new()
    }

    /// Closed form of `∫_r^{hi} g`, if one is known.
    fn tail_mass(&self, _r: f64) -> Option<f64> {
        None
    }

    /// A finite point below the crossing `f_u = 1`, used to seed the root
    /// search when the support is unbounded below.
    fn search_start(&self) -> Option<f64> {
        None
    }
}

/// A family assembled from closures.
pub struct FnFamily<G, F> {
    pub density: G,
    pub conditional_bound: F,
    pub support_lo: f64,
    pub support_hi: f64,
    pub monotone: bool,
    pub breakpoints: Vec<f64>,
}

impl<G, F> FnFamily<G, F>
where
    G: Fn(f64) -> f64 + Sync,
    F: Fn(f64) -> f64 + Sync,
{
    pub fn new(density: G, conditional_bound: F, support_lo: f64, support_hi: f64) -> Self {
        Self {
            density,
            conditional_bound,
            support_lo,
            support_hi,
            monotone: true,
            breakpoints: Vec::new(),
        }
    }

    pub fn non_monotone(mut self) -> Self {
        self.monotone = false;
        self
    }

    pub fn with_breakpoints(mut self, points: Vec<f64>) -> Self {
        self.breakpoints = points;
        self
    }
}

impl<G, F> GallagerFamily for FnFamily<G, F>
where
    G: Fn(f64) -> f64 + Sync,
    F: Fn(f64) -> f64 + Sync,
{
    fn density(&self, r: f64) -> f64 {
        (self.density)(r)
    }
    fn conditional_bound(&self, r: f64) -> f64 {
        (self.conditional_bound)(r)
    }
    fn support(&self) -> (f64, f64) {
        (self.support_lo, self.support_hi)
    }
    fn is_monotone(&self) -> bool {
        self.monotone
    }
    fn breakpoints(&self) -> Vec<f64> {
        self.breakpoints.clone()
    }
}

/// How a [`BoundResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Two-term bound evaluated at a given parameter.
    TwoTerm,
    /// `∫ min{f_u, 1} g`, split at the crossing point.
    MinForm,
    /// `∫ min{f_u, 1} g` without a crossing point (non-monotone `f_u`).
    MinFormGeneral,
    /// Plain sum of pairwise terms, no region.
    Union,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::TwoTerm => "two-term",
            Method::MinForm => "min-form",
            Method::MinFormGeneral => "min-form-general",
            Method::Union => "union",
        })
    }
}

/// A bound value with the parameter that produced it and its two pieces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundResult {
    pub value: f64,
    /// `r*` (or `z*`); `+inf` when the optimum is the top of an unbounded
    /// support, `NaN` when no single crossing exists.
    pub optimal_parameter: f64,
    /// Mass of `f_u g` over the accepted region.
    pub inside_term: f64,
    /// Mass of `g` outside the accepted region.
    pub outside_term: f64,
    pub method: Method,
}

impl BoundResult {
    pub(crate) fn from_terms(inside: f64, outside: f64, parameter: f64, method: Method) -> Self {
        Self {
            value: inside + outside,
            optimal_parameter: parameter,
            inside_term: inside,
            outside_term: outside,
            method,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GallagerError {
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
    #[error(transparent)]
    Bisection(#[from] BisectionError),
    #[error(
        "conditional bound is not nondecreasing near r = {at}; use the min-form bound instead"
    )]
    NotMonotone { at: f64 },
    #[error("parameter {0} is outside the support")]
    OutOfSupport(f64),
}

/// Numerical settings shared by every GFBT evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GfbtSolver {
    pub quadrature: QuadratureSpec,
    pub bisection: Bisection,
    pub monotonicity_probes: usize,
}

impl Default for GfbtSolver {
    fn default() -> Self {
        Self {
            quadrature: QuadratureSpec {
                absolute_tolerance: f64::MIN_POSITIVE,
                ..QuadratureSpec::default()
            },
            bisection: Bisection::default(),
            monotonicity_probes: 64,
        }
    }
}

impl GfbtSolver {
    /// Two-term bound at `r_star`. `f_u` is not clipped, so a poor `r_star`
    /// can give a value above the min-form bound (or above one).
    pub fn evaluate_at<F: GallagerFamily + ?Sized>(
        &self,
        family: &F,
        r_star: f64,
    ) -> Result<BoundResult, GallagerError> {
        let (lo, hi) = family.support();
        if r_star.is_nan() {
            return Err(GallagerError::OutOfSupport(r_star));
        }
        let cut = r_star.clamp(lo, hi);
        let breaks = family.breakpoints();
        let inside = if cut > lo {
            integrate_with_breakpoints(
                |r| family.conditional_bound(r) * family.density(r),
                lo,
                cut,
                &breaks,
                &self.quadrature,
            )?
            .value
        } else {
            0.0
        };
        let outside = if cut >= hi {
            0.0
        } else {
            match family.tail_mass(cut) {
                Some(mass) => mass,
                None => {
                    integrate_with_breakpoints(
                        |r| family.density(r),
                        cut,
                        hi,
                        &breaks,
                        &self.quadrature,
                    )?
                    .value
                }
            }
        };
        Ok(BoundResult::from_terms(
            inside,
            outside,
            r_star,
            Method::TwoTerm,
        ))
    }

    fn probe_points(lo: f64, hi: f64, count: usize) -> Vec<f64> {
        let count = count.max(2);
        (0..count)
            .map(|i| {
                let t = (i as f64 + 0.5) / count as f64;
                match (lo.is_finite(), hi.is_finite()) {
                    (true, true) => lo + t * (hi - lo),
                    (true, false) => lo + t / (1.0 - t),
                    (false, true) => hi - (1.0 - t) / t,
                    (false, false) => (std::f64::consts::PI * (t - 0.5)).tan(),
                }
            })
            .collect()
    }

    /// Returns the first probe where `f_u` decreases, if any.
    fn monotonicity_violation<F: GallagerFamily + ?Sized>(&self, family: &F) -> Option<f64> {
        let (lo, hi) = family.support();
        let points = Self::probe_points(lo, hi, self.monotonicity_probes);
        let values: Vec<f64> = points
            .iter()
            .map(|&r| family.conditional_bound(r))
            .collect();
        values
            .windows(2)
            .zip(&points[1..])
            .find(|(w, _)| w[1] < w[0] - 1e-12 * w[0].abs().max(1.0))
            .map(|(_, &r)| r)
    }

    /// The parameter minimizing the two-term bound for a nondecreasing
    /// `f_u`: the solution of `f_u(r) = 1`, or the top of the support when
    /// `f_u < 1` everywhere.
    pub fn optimal_parameter<F: GallagerFamily + ?Sized>(
        &self,
        family: &F,
    ) -> Result<f64, GallagerError> {
        let (lo, hi) = family.support();
        if !family.is_monotone() {
            return Err(GallagerError::NotMonotone { at: f64::NAN });
        }
        if let Some(at) = self.monotonicity_violation(family) {
            return Err(GallagerError::NotMonotone { at });
        }
        let f = |r: f64| family.conditional_bound(r);

        let mut start = if lo.is_finite() {
            lo
        } else {
            family
                .search_start()
                .unwrap_or(if hi.is_finite() { hi - 1.0 } else { 0.0 })
        };
        if f(start) > 1.0 {
            if lo.is_finite() {
                // f_u already exceeds one on the whole support: accept nothing
                return Ok(lo);
            }
            let mut step = 1.0;
            while f(start) > 1.0 {
                start -= step;
                step *= 2.0;
                if !start.is_finite() || step > 1e300 {
                    return Ok(lo);
                }
            }
        }
        if hi.is_finite() && f(hi) < 1.0 {
            return Ok(hi);
        }
        let bisection = Bisection {
            ceiling: if hi.is_finite() {
                hi
            } else {
                self.bisection.ceiling
            },
            ..self.bisection
        };
        let first_hi = if hi.is_finite() { hi } else { start + 1.0 };
        match bisection.solve(f, 1.0, start, first_hi)? {
            Root::At(r) => Ok(r),
            Root::Supremum => Ok(hi),
        }
    }

    /// `∫ min{f_u, 1} g` over the support. Requires no monotonicity; when
    /// `f_u` is nondecreasing the integral is split at the crossing point.
    pub fn min_form_bound<F: GallagerFamily + ?Sized>(
        &self,
        family: &F,
    ) -> Result<BoundResult, GallagerError> {
        let (lo, hi) = family.support();
        let breaks = family.breakpoints();
        let clipped = |r: f64| family.conditional_bound(r).min(1.0) * family.density(r);

        let crossing = if family.is_monotone() {
            match self.optimal_parameter(family) {
                Ok(r) => Some(r),
                Err(GallagerError::NotMonotone { .. }) => None,
                Err(e) => return Err(e),
            }
        } else {
            None
        };

        match crossing {
            Some(r1) => {
                let cut = r1.clamp(lo, hi);
                let inside = if cut > lo {
                    integrate_with_breakpoints(clipped, lo, cut, &breaks, &self.quadrature)?.value
                } else {
                    0.0
                };
                let outside = if cut < hi {
                    integrate_with_breakpoints(clipped, cut, hi, &breaks, &self.quadrature)?.value
                } else {
                    0.0
                };
                Ok(BoundResult::from_terms(
                    inside,
                    outside,
                    r1,
                    Method::MinForm,
                ))
            }
            None => {
                let inside = integrate_with_breakpoints(
                    |r| {
                        let fu = family.conditional_bound(r);
                        if fu < 1.0 {
                            fu * family.density(r)
                        } else {
                            0.0
                        }
                    },
                    lo,
                    hi,
                    &breaks,
                    &self.quadrature,
                )?
                .value;
                let outside = integrate_with_breakpoints(
                    |r| {
                        if family.conditional_bound(r) >= 1.0 {
                            family.density(r)
                        } else {
                            0.0
                        }
                    },
                    lo,
                    hi,
                    &breaks,
                    &self.quadrature,
                )?
                .value;
                Ok(BoundResult::from_terms(
                    inside,
                    outside,
                    f64::NAN,
                    Method::MinFormGeneral,
                ))
            }
        }
    }
}

/// [`GfbtSolver::evaluate_at`] with default settings.
pub fn evaluate_at<F: GallagerFamily + ?Sized>(
    family: &F,
    r_star: f64,
) -> Result<BoundResult, GallagerError> {
    GfbtSolver::default().evaluate_at(family, r_star)
}

/// [`GfbtSolver::optimal_parameter`] with default settings.
pub fn optimal_parameter<F: GallagerFamily + ?Sized>(family: &F) -> Result<f64, GallagerError> {
    GfbtSolver::default().optimal_parameter(family)
}

/// [`GfbtSolver::min_form_bound`] with default settings.
pub fn min_form_bound<F: GallagerFamily + ?Sized>(
    family: &F,
) -> Result<BoundResult, GallagerError> {
    GfbtSolver::default().min_form_bound(family)
}
