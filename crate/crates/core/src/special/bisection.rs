use thiserror::Error;

/// Outcome of a monotone root search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Root {
    /// `f` crosses the target inside a bracket narrower than the tolerance
    /// around this point.
    At(f64),
    /// `f` stays below the target up to the search ceiling.
    Supremum,
}

impl Root {
    /// The root as a number, with the supremum case encoded as `+inf`.
    pub fn value(self) -> f64 {
        match self {
            Root::At(x) => x,
            Root::Supremum => f64::INFINITY,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BisectionError {
    #[error("invalid bracket: f({lo}) = {f_lo} already exceeds the target {target}")]
    InvalidBracket { lo: f64, f_lo: f64, target: f64 },
    #[error("bisection parameters invalid: {0}")]
    InvalidParameters(String),
    #[error("function returned a non-finite value at {x}")]
    NonFinite { x: f64 },
}

/// Bisection for nondecreasing continuous functions.
///
/// When `f(hi)` is still below the target the upper end is pushed outward
/// (doubling the bracket width) until it exceeds `ceiling`; if the target is
/// never reached the search reports [`Root::Supremum`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bisection {
    pub tolerance: f64,
    pub ceiling: f64,
    pub max_iterations: usize,
}

impl Default for Bisection {
    fn default() -> Self {
        Self {
            tolerance: 1e-12,
            ceiling: 1e9,
            max_iterations: 400,
        }
    }
}

impl Bisection {
    pub fn with_tolerance(tolerance: f64) -> Self {
        Self {
            tolerance,
            ..Self::default()
        }
    }

    pub fn solve<F: Fn(f64) -> f64>(
        &self,
        f: F,
        target: f64,
        lo: f64,
        hi: f64,
    ) -> Result<Root, BisectionError> {
        if !(self.tolerance > 0.0) || !lo.is_finite() || !hi.is_finite() || lo > hi {
            return Err(BisectionError::InvalidParameters(format!(
                "tolerance {}, bracket [{lo}, {hi}]",
                self.tolerance
            )));
        }
        let eval = |x: f64| {
            let y = f(x);
            if y.is_nan() {
                Err(BisectionError::NonFinite { x })
            } else {
                Ok(y)
            }
        };
        let f_lo = eval(lo)?;
        if f_lo > target {
            return Err(BisectionError::InvalidBracket { lo, f_lo, target });
        }
        let mut lo = lo;
        let mut hi = hi;
        let mut width = (hi - lo).max(self.tolerance);
        while eval(hi)? < target {
            if hi >= self.ceiling {
                return Ok(Root::Supremum);
            }
            lo = hi;
            width *= 2.0;
            hi = (lo + width).min(self.ceiling.max(lo));
            if hi <= lo {
                return Ok(Root::Supremum);
            }
        }
        for _ in 0..self.max_iterations {
            if hi - lo <= self.tolerance {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if eval(mid)? < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(Root::At(0.5 * (lo + hi)))
    }
}

/// Finds `r` in `[lo, hi]` (extending `hi` if needed) with `f(r) = target`
/// to within a bracket of width `tol`.
pub fn bisect_increasing<F: Fn(f64) -> f64>(
    f: F,
    target: f64,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<Root, BisectionError> {
    Bisection::with_tolerance(tol).solve(f, target, lo, hi)
}
