//! Union, sphere (SB), tangential (TB) and tangential-sphere (TSB) bounds
//! on the ML frame-error probability over BPSK/AWGN, each built as a
//! [`GallagerFamily`] and evaluated by the [`GfbtSolver`].
//!
//! Conventions: the all-zero codeword is sent as the all-(+1) vector, noise
//! has standard deviation `sigma` per dimension, and a weight-`d` codeword
//! sits at Euclidean distance `2√d` from the transmitted point.

use std::sync::atomic::{AtomicUsize, Ordering};

use thiserror::Error;

use crate::code::WeightEnumerator;
use crate::gallager::{BoundResult, GallagerError, GallagerFamily, GfbtSolver, Method};
use crate::special::{
    self, chi_log_density, gaussian_density, integrate_with_breakpoints, q_function,
    regularized_upper_gamma, Bisection, BisectionError, DomainError, QuadratureError, Root,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("spectrum length n = {spectrum} does not match channel length n = {channel}")]
    LengthMismatch { spectrum: usize, channel: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid channel parameters: {0}")]
    Channel(String),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Numerical(#[from] GallagerError),
}

impl From<QuadratureError> for BoundError {
    fn from(e: QuadratureError) -> Self {
        BoundError::Numerical(e.into())
    }
}

impl From<BisectionError> for BoundError {
    fn from(e: BisectionError) -> Self {
        BoundError::Numerical(e.into())
    }
}

impl BoundError {
    /// True for failures of the numerics rather than of the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(self, BoundError::Numerical(_))
    }
}

/// Noise level of a BPSK/AWGN channel carrying a length-`n`, rate-`rate` code.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    pub sigma: f64,
    pub n: usize,
    pub rate: f64,
}

impl ChannelParams {
    pub fn new(sigma: f64, n: usize, rate: f64) -> Result<Self, BoundError> {
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(BoundError::Channel(format!(
                "sigma = {sigma} must be finite and > 0"
            )));
        }
        if !(rate > 0.0 && rate <= 1.0) {
            return Err(BoundError::Channel(format!(
                "rate = {rate} must lie in (0, 1]"
            )));
        }
        if n == 0 {
            return Err(BoundError::Channel("block length must be >= 1".into()));
        }
        Ok(Self { sigma, n, rate })
    }

    /// Channel at a given Eb/N0 in dB with unit-energy symbols:
    /// `σ = 1/√(2 R 10^{EbN0/10})`.
    pub fn from_ebn0_db(ebn0_db: f64, n: usize, rate: f64) -> Result<Self, BoundError> {
        Self::new(sigma_from_ebn0_db(ebn0_db, rate), n, rate)
    }

    /// Channel matching a spectrum's length and rate.
    pub fn for_spectrum(w: &WeightEnumerator, ebn0_db: f64) -> Result<Self, BoundError> {
        Self::from_ebn0_db(ebn0_db, w.n(), w.rate())
    }

    /// Eb/N0 (linear) `= 1/(2 R σ²)`.
    pub fn ebn0_linear(&self) -> f64 {
        1.0 / (2.0 * self.rate * self.sigma * self.sigma)
    }

    pub fn ebn0_db(&self) -> f64 {
        10.0 * self.ebn0_linear().log10()
    }
}

pub fn sigma_from_ebn0_db(ebn0_db: f64, rate: f64) -> f64 {
    1.0 / (2.0 * rate * 10f64.powf(ebn0_db / 10.0)).sqrt()
}

/// Numerical settings and evaluation path for the bounds.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BoundOptions {
    pub solver: GfbtSolver,
    /// Evaluate the two-term form at the optimal parameter instead of the
    /// min-form integral.
    pub two_term: bool,
}

impl BoundOptions {
    pub fn two_term() -> Self {
        Self {
            two_term: true,
            ..Self::default()
        }
    }

    pub fn with_relative_tolerance(mut self, rel: f64) -> Self {
        self.solver.quadrature.relative_tolerance = rel;
        self
    }
}

/// `(d, A_d)` pairs as floats.
fn terms(w: &WeightEnumerator) -> Vec<(usize, f64)> {
    w.iter().map(|(d, c)| (d, c as f64)).collect()
}

fn check_length(w: &WeightEnumerator, ch: &ChannelParams) -> Result<(), BoundError> {
    if w.n() != ch.n {
        return Err(BoundError::LengthMismatch {
            spectrum: w.n(),
            channel: ch.n,
        });
    }
    Ok(())
}

/// TB and TSB need at least three nonzero codewords and a codeword other
/// than the all-ones word.
fn check_tangential(w: &WeightEnumerator, name: &str) -> Result<(), BoundError> {
    let n = w.n();
    if n < 3 {
        return Err(BoundError::Precondition(format!("{name} needs n >= 3")));
    }
    match w.d_min() {
        Some(d) if d < n => {}
        _ => {
            return Err(BoundError::Precondition(format!(
                "{name} needs d_min < n (a nonzero codeword other than the all-ones word)"
            )))
        }
    }
    if w.total() < 3 {
        return Err(BoundError::Precondition(format!(
            "{name} needs k > 1 (at least three nonzero codewords)"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------- union ----

/// `Σ_d A_d Q(√d/σ)`, not clipped at one.
pub fn union_bound(w: &WeightEnumerator, ch: &ChannelParams) -> Result<f64, BoundError> {
    check_length(w, ch)?;
    Ok(terms(w)
        .iter()
        .map(|&(d, a)| a * q_function((d as f64).sqrt() / ch.sigma))
        .sum())
}

// --------------------------------------------------------------- sphere ----

/// Probability that a point uniform on the radius-`r` sphere around the
/// transmitted signal is at least as close to a weight-`d` codeword: the
/// cap fraction with `cos θ = √d / r`, zero for `r <= √d`.
pub fn sb_pairwise(r: f64, d: usize, n: usize) -> Result<f64, BoundError> {
    if n < 3 || d == 0 || d > n {
        return Err(BoundError::Precondition(format!(
            "sb_pairwise needs 1 <= d <= n and n >= 3 (d = {d}, n = {n})"
        )));
    }
    if !(r >= 0.0) {
        return Err(BoundError::Precondition(format!("radius {r} must be >= 0")));
    }
    Ok(sb_pairwise_unchecked(r, d as f64, n))
}

fn sb_pairwise_unchecked(r: f64, d: f64, n: usize) -> f64 {
    let rd = d.sqrt();
    if r <= rd {
        return 0.0;
    }
    if r.is_infinite() {
        return 0.5;
    }
    special::cap_fraction_from_cos(n, rd / r).expect("cos in [0, 1)")
}

/// Conditional union bound on the radius-`r` sphere, `Σ A_d p_2(r, d)`.
/// Independent of the noise level.
pub fn sb_conditional_union_bound(w: &WeightEnumerator, r: f64) -> f64 {
    let n = w.n();
    w.iter()
        .map(|(d, a)| a as f64 * sb_pairwise_unchecked(r, d as f64, n))
        .sum()
}

/// Spheres centered on the transmitted signal, indexed by radius.
pub struct SphereFamily {
    terms: Vec<(usize, f64)>,
    n: usize,
    sigma: f64,
}

impl SphereFamily {
    pub fn new(w: &WeightEnumerator, ch: &ChannelParams) -> Result<Self, BoundError> {
        check_length(w, ch)?;
        if w.n() < 3 {
            return Err(BoundError::Precondition("sphere bound needs n >= 3".into()));
        }
        Ok(Self {
            terms: terms(w),
            n: w.n(),
            sigma: ch.sigma,
        })
    }
}

impl GallagerFamily for SphereFamily {
    fn density(&self, r: f64) -> f64 {
        chi_log_density(r, self.n as f64, self.sigma).exp()
    }

    fn conditional_bound(&self, r: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(d, a)| a * sb_pairwise_unchecked(r, d as f64, self.n))
            .sum()
    }

    fn support(&self) -> (f64, f64) {
        (0.0, f64::INFINITY)
    }

    fn breakpoints(&self) -> Vec<f64> {
        let mut b: Vec<f64> = self.terms.iter().map(|&(d, _)| (d as f64).sqrt()).collect();
        b.push(self.sigma * (self.n as f64 - 1.0).sqrt());
        b
    }

    fn tail_mass(&self, r: f64) -> Option<f64> {
        let x = r * r / (2.0 * self.sigma * self.sigma);
        regularized_upper_gamma(0.5 * self.n as f64, x).ok()
    }
}

/// Optimal sphere radius: the solution of `Σ A_d p_2(r, d) = 1`, or
/// [`Root::Supremum`] when `Σ A_d / 2 < 1`. Depends only on the spectrum.
pub fn sb_radius(w: &WeightEnumerator) -> Result<Root, BoundError> {
    sb_radius_with(w, &Bisection::default())
}

fn sb_radius_with(w: &WeightEnumerator, bisection: &Bisection) -> Result<Root, BoundError> {
    if w.n() < 3 {
        return Err(BoundError::Precondition("sphere bound needs n >= 3".into()));
    }
    let Some(d_min) = w.d_min() else {
        return Ok(Root::Supremum);
    };
    let lo = (d_min as f64).sqrt();
    Ok(bisection.solve(|r| sb_conditional_union_bound(w, r), 1.0, lo, lo + 1.0)?)
}

/// Sphere bound `∫_0^∞ min{f_u(r), 1} g(r) dr` with `g` the chi density
/// (n degrees of freedom, scale σ) and `f_u` the conditional union bound.
pub fn sphere_bound(w: &WeightEnumerator, ch: &ChannelParams) -> Result<BoundResult, BoundError> {
    sphere_bound_with(w, ch, &BoundOptions::default())
}

pub fn sphere_bound_with(
    w: &WeightEnumerator,
    ch: &ChannelParams,
    opts: &BoundOptions,
) -> Result<BoundResult, BoundError> {
    let family = SphereFamily::new(w, ch)?;
    let r1 = sb_radius_with(w, &opts.solver.bisection)?.value();
    two_term_or_min_form(&family, r1, opts)
}

/// Shared tail of SB and TB: the crossing point is already known, so both
/// paths integrate around it without a second root search.
fn two_term_or_min_form<F: GallagerFamily>(
    family: &F,
    crossing: f64,
    opts: &BoundOptions,
) -> Result<BoundResult, BoundError> {
    let solver = &opts.solver;
    if opts.two_term {
        return Ok(solver.evaluate_at(family, crossing)?);
    }
    let (lo, hi) = family.support();
    let breaks = family.breakpoints();
    let clipped = |r: f64| family.conditional_bound(r).min(1.0) * family.density(r);
    let cut = crossing.clamp(lo, hi);
    let inside = if cut > lo {
        integrate_with_breakpoints(clipped, lo, cut, &breaks, &solver.quadrature)?.value
    } else {
        0.0
    };
    let outside = if cut < hi {
        integrate_with_breakpoints(clipped, cut, hi, &breaks, &solver.quadrature)?.value
    } else {
        0.0
    };
    Ok(BoundResult::from_terms(
        inside,
        outside,
        crossing,
        Method::MinForm,
    ))
}

// ----------------------------------------------------------- tangential ----

/// Pairwise error probability given the radial noise component `z`:
/// `Q(√d (√n - z) / (σ √(n - d)))`, for `1 <= d < n`.
pub fn tb_pairwise(z: f64, d: usize, n: usize, sigma: f64) -> Result<f64, BoundError> {
    if d == 0 || d >= n {
        return Err(BoundError::Precondition(format!(
            "tb_pairwise needs 1 <= d < n (d = {d}, n = {n})"
        )));
    }
    if !(sigma > 0.0) {
        return Err(BoundError::Channel(format!("sigma = {sigma} must be > 0")));
    }
    Ok(tb_pairwise_unchecked(z, d, n, sigma))
}

fn tb_pairwise_unchecked(z: f64, d: usize, n: usize, sigma: f64) -> f64 {
    let sqrt_n = (n as f64).sqrt();
    if d == n {
        // all-ones codeword: limit of the formula as d -> n
        return if z >= sqrt_n { 0.5 } else { 0.0 };
    }
    if z == f64::NEG_INFINITY {
        return 0.0;
    }
    let arg = (d as f64).sqrt() * (sqrt_n - z) / (sigma * ((n - d) as f64).sqrt());
    q_function(arg)
}

/// Conditional union bound given the radial component, `Σ A_d p_2(z, d)`.
pub fn tb_conditional_union_bound(w: &WeightEnumerator, z: f64, sigma: f64) -> f64 {
    let n = w.n();
    w.iter()
        .map(|(d, a)| a as f64 * tb_pairwise_unchecked(z, d, n, sigma))
        .sum()
}

/// Half-spaces `{Z_1 <= z}` along the direction of the transmitted signal.
pub struct TangentialFamily {
    terms: Vec<(usize, f64)>,
    n: usize,
    sigma: f64,
}

impl TangentialFamily {
    pub fn new(w: &WeightEnumerator, ch: &ChannelParams) -> Result<Self, BoundError> {
        check_length(w, ch)?;
        check_tangential(w, "tangential bound")?;
        Ok(Self {
            terms: terms(w),
            n: w.n(),
            sigma: ch.sigma,
        })
    }
}

impl GallagerFamily for TangentialFamily {
    fn density(&self, z: f64) -> f64 {
        gaussian_density(z, self.sigma)
    }

    fn conditional_bound(&self, z: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(d, a)| a * tb_pairwise_unchecked(z, d, self.n, self.sigma))
            .sum()
    }

    fn support(&self) -> (f64, f64) {
        (f64::NEG_INFINITY, f64::INFINITY)
    }

    fn breakpoints(&self) -> Vec<f64> {
        vec![(self.n as f64).sqrt(), 0.0]
    }

    fn tail_mass(&self, z: f64) -> Option<f64> {
        Some(q_function(z / self.sigma))
    }

    fn search_start(&self) -> Option<f64> {
        Some((self.n as f64).sqrt() - self.sigma)
    }
}

/// Optimal half-space offset `z* <= √n` solving `Σ A_d p_2(z, d) = 1`.
/// Unlike the sphere radius this depends on σ.
pub fn tb_offset(w: &WeightEnumerator, ch: &ChannelParams) -> Result<f64, BoundError> {
    tb_offset_with(&TangentialFamily::new(w, ch)?, &Bisection::default())
}

fn tb_offset_with(family: &TangentialFamily, bisection: &Bisection) -> Result<f64, BoundError> {
    let sqrt_n = (family.n as f64).sqrt();
    let f = |z: f64| family.conditional_bound(z);
    let mut lo = sqrt_n - family.sigma;
    let mut step = family.sigma;
    while f(lo) > 1.0 {
        lo -= step;
        step *= 2.0;
        if !lo.is_finite() {
            return Err(BoundError::Precondition(
                "no finite tangential crossing".into(),
            ));
        }
    }
    let bisection = Bisection {
        ceiling: sqrt_n,
        ..*bisection
    };
    match bisection.solve(f, 1.0, lo, sqrt_n)? {
        Root::At(z) => Ok(z),
        Root::Supremum => Ok(sqrt_n),
    }
}

/// Tangential bound `∫ min{f_u(z), 1} g(z) dz` with Gaussian `g`.
pub fn tangential_bound(
    w: &WeightEnumerator,
    ch: &ChannelParams,
) -> Result<BoundResult, BoundError> {
    tangential_bound_with(w, ch, &BoundOptions::default())
}

pub fn tangential_bound_with(
    w: &WeightEnumerator,
    ch: &ChannelParams,
    opts: &BoundOptions,
) -> Result<BoundResult, BoundError> {
    let family = TangentialFamily::new(w, ch)?;
    let z_star = tb_offset_with(&family, &opts.solver.bisection)?;
    two_term_or_min_form(&family, z_star, opts)
}

// ---------------------------------------------------- tangential-sphere ----

/// Distance from the cone axis at which a weight-`d` codeword starts to win
/// inside the hyperplane through the transmitted point: `√(n d / (n - d))`.
fn tsb_threshold(d: usize, n: usize) -> f64 {
    ((n * d) as f64 / (n - d) as f64).sqrt()
}

/// Inner conditional union bound in the (n-1)-dimensional hyperplane,
/// `Σ_{r > √(nd/(n-d))} A_d C(n-1, arccos(√(nd/(n-d))/r))`. The all-ones
/// word never qualifies.
pub fn tsb_inner_union_bound(w: &WeightEnumerator, r: f64) -> f64 {
    tsb_inner_terms(&terms(w), w.n(), r)
}

fn tsb_inner_terms(terms: &[(usize, f64)], n: usize, r: f64) -> f64 {
    terms
        .iter()
        .filter(|&&(d, _)| d < n)
        .map(|&(d, a)| {
            let t = tsb_threshold(d, n);
            if r <= t {
                0.0
            } else if r.is_infinite() {
                0.5 * a
            } else {
                a * special::cap_fraction_from_cos(n - 1, t / r).expect("cos in [0, 1)")
            }
        })
        .sum()
}

/// Radius of the inner sphere solving `tsb_inner_union_bound(r) = 1`.
/// Contains no noise parameter, so one radius serves every SNR.
pub fn tsb_inner_radius(w: &WeightEnumerator, n: usize) -> Result<Root, BoundError> {
    tsb_inner_radius_with(w, n, &Bisection::default())
}

fn tsb_inner_radius_with(
    w: &WeightEnumerator,
    n: usize,
    bisection: &Bisection,
) -> Result<Root, BoundError> {
    if n != w.n() {
        return Err(BoundError::LengthMismatch {
            spectrum: w.n(),
            channel: n,
        });
    }
    check_tangential(w, "tangential-sphere bound")?;
    let d_min = w.d_min().expect("checked above");
    let lo = tsb_threshold(d_min, n);
    let terms = terms(w);
    Ok(bisection.solve(|r| tsb_inner_terms(&terms, n, r), 1.0, lo, lo + 1.0)?)
}

/// Half-spaces `{Z_1 <= z}` whose conditional bound is itself a sphere
/// bound in the orthogonal hyperplane (a half-cone overall).
pub struct TangentialSphereFamily {
    terms: Vec<(usize, f64)>,
    n: usize,
    sigma: f64,
    inner_radius: f64,
    inner_spec: special::QuadratureSpec,
    inner_failures: AtomicUsize,
}

/// Lower truncation of the outer integral in units of σ; the neglected
/// Gaussian mass is `Q(12) < 2e-33`.
pub const TSB_LOWER_CUTOFF_SIGMAS: f64 = 12.0;

impl TangentialSphereFamily {
    pub fn new(w: &WeightEnumerator, ch: &ChannelParams) -> Result<Self, BoundError> {
        Self::with_solver(w, ch, &GfbtSolver::default())
    }

    pub fn with_solver(
        w: &WeightEnumerator,
        ch: &ChannelParams,
        solver: &GfbtSolver,
    ) -> Result<Self, BoundError> {
        check_length(w, ch)?;
        let inner_radius = tsb_inner_radius_with(w, w.n(), &solver.bisection)?.value();
        Ok(Self {
            terms: terms(w),
            n: w.n(),
            sigma: ch.sigma,
            inner_radius,
            inner_spec: solver.quadrature.tightened(10.0),
            inner_failures: AtomicUsize::new(0),
        })
    }

    pub fn inner_radius(&self) -> f64 {
        self.inner_radius
    }

    /// Conditional sphere bound given `Z_1 = z`; exactly one for `z >= √n`.
    pub fn conditional(&self, z: f64) -> Result<f64, QuadratureError> {
        let sqrt_n = (self.n as f64).sqrt();
        if z >= sqrt_n {
            return Ok(1.0);
        }
        let sigma_t = sqrt_n * self.sigma / (sqrt_n - z);
        let dof = (self.n - 1) as f64;
        let r1 = self.inner_radius;
        let lo = self
            .terms
            .iter()
            .filter(|&&(d, _)| d < self.n)
            .map(|&(d, _)| tsb_threshold(d, self.n))
            .fold(f64::INFINITY, f64::min);
        let mut breaks: Vec<f64> = self
            .terms
            .iter()
            .filter(|&&(d, _)| d < self.n)
            .map(|&(d, _)| tsb_threshold(d, self.n))
            .collect();
        breaks.push(sigma_t * (dof - 1.0).max(0.0).sqrt());
        let inside = if r1 > lo {
            integrate_with_breakpoints(
                |r| {
                    tsb_inner_terms(&self.terms, self.n, r) * chi_log_density(r, dof, sigma_t).exp()
                },
                lo,
                r1,
                &breaks,
                &self.inner_spec,
            )?
            .value
        } else {
            0.0
        };
        let tail = if r1.is_finite() {
            regularized_upper_gamma(0.5 * dof, r1 * r1 / (2.0 * sigma_t * sigma_t))
                .expect("arguments in domain")
        } else {
            0.0
        };
        Ok(inside + tail)
    }

    fn take_failures(&self) -> usize {
        self.inner_failures.swap(0, Ordering::Relaxed)
    }
}

impl GallagerFamily for TangentialSphereFamily {
    fn density(&self, z: f64) -> f64 {
        gaussian_density(z, self.sigma)
    }

    fn conditional_bound(&self, z: f64) -> f64 {
        match self.conditional(z) {
            Ok(v) => v,
            Err(QuadratureError::NotConverged { value, .. }) => {
                self.inner_failures.fetch_add(1, Ordering::Relaxed);
                value
            }
            Err(_) => {
                self.inner_failures.fetch_add(1, Ordering::Relaxed);
                1.0
            }
        }
    }

    fn support(&self) -> (f64, f64) {
        (-TSB_LOWER_CUTOFF_SIGMAS * self.sigma, f64::INFINITY)
    }

    fn breakpoints(&self) -> Vec<f64> {
        vec![(self.n as f64).sqrt()]
    }

    fn tail_mass(&self, z: f64) -> Option<f64> {
        Some(q_function(z / self.sigma))
    }
}

/// Conditional sphere bound of the TSB at radial offset `z`, given the
/// inner radius `r1` from [`tsb_inner_radius`].
pub fn tsb_conditional_bound(
    z: f64,
    r1: f64,
    w: &WeightEnumerator,
    ch: &ChannelParams,
) -> Result<f64, BoundError> {
    check_length(w, ch)?;
    check_tangential(w, "tangential-sphere bound")?;
    let family = TangentialSphereFamily {
        terms: terms(w),
        n: w.n(),
        sigma: ch.sigma,
        inner_radius: r1,
        inner_spec: GfbtSolver::default().quadrature.tightened(10.0),
        inner_failures: AtomicUsize::new(0),
    };
    Ok(family.conditional(z)?)
}

/// Tangential-sphere bound
/// `∫_{-∞}^{√n} f_u(z) g(z) dz + Q(√n/σ)`, with the optimal offset at `√n`.
pub fn tangential_sphere_bound(
    w: &WeightEnumerator,
    ch: &ChannelParams,
) -> Result<BoundResult, BoundError> {
    tangential_sphere_bound_with(w, ch, &BoundOptions::default())
}

pub fn tangential_sphere_bound_with(
    w: &WeightEnumerator,
    ch: &ChannelParams,
    opts: &BoundOptions,
) -> Result<BoundResult, BoundError> {
    let family = TangentialSphereFamily::with_solver(w, ch, &opts.solver)?;
    let sqrt_n = (w.n() as f64).sqrt();
    let result = if opts.two_term {
        opts.solver.evaluate_at(&family, sqrt_n)?
    } else {
        let (lo, hi) = family.support();
        let clipped = |z: f64| family.conditional_bound(z).min(1.0) * family.density(z);
        let quad = &opts.solver.quadrature;
        let inside = integrate_with_breakpoints(clipped, lo, sqrt_n, &[], quad)?.value;
        let outside = integrate_with_breakpoints(clipped, sqrt_n, hi, &[], quad)?.value;
        BoundResult::from_terms(inside, outside, sqrt_n, Method::MinForm)
    };
    let failures = family.take_failures();
    if failures > 0 {
        return Err(BoundError::Numerical(GallagerError::Quadrature(
            QuadratureError::NotConverged {
                value: result.value,
                error: f64::NAN,
                subdivisions: failures,
            },
        )));
    }
    Ok(result)
}

/// All four bounds at one channel point; entries fail independently.
#[derive(Debug, Clone)]
pub struct BoundSet {
    pub union: Result<f64, BoundError>,
    pub sphere: Result<BoundResult, BoundError>,
    pub tangential: Result<BoundResult, BoundError>,
    pub tangential_sphere: Result<BoundResult, BoundError>,
}

impl BoundSet {
    pub fn compute(w: &WeightEnumerator, ch: &ChannelParams, opts: &BoundOptions) -> Self {
        Self {
            union: union_bound(w, ch),
            sphere: sphere_bound_with(w, ch, opts),
            tangential: tangential_bound_with(w, ch, opts),
            tangential_sphere: tangential_sphere_bound_with(w, ch, opts),
        }
    }
}
