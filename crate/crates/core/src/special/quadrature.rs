//! Globally adaptive Gauss–Kronrod (7/15-point) quadrature.
//!
//! Semi-infinite segments are mapped onto `[0, 1)` with `x = a + t/(1 - t)`
//! (or its mirror image) before the adaptive loop, so tails are handled by the
//! same tolerance control as finite panels.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use thiserror::Error;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the odd-indexed Kronrod nodes (XGK[1], XGK[3], XGK[5], XGK[7]).
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Tolerances and work budget for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub relative_tolerance: f64,
    pub absolute_tolerance: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            relative_tolerance: 1e-10,
            absolute_tolerance: 1e-14,
            max_subdivisions: 2000,
        }
    }
}

impl QuadratureSpec {
    pub fn new(
        relative_tolerance: f64,
        absolute_tolerance: f64,
        max_subdivisions: usize,
    ) -> Result<Self, QuadratureError> {
        let spec = Self {
            relative_tolerance,
            absolute_tolerance,
            max_subdivisions,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), QuadratureError> {
        if !(self.relative_tolerance > 0.0) || !(self.absolute_tolerance > 0.0) {
            return Err(QuadratureError::InvalidSpec(format!(
                "tolerances must be > 0 (rel {}, abs {})",
                self.relative_tolerance, self.absolute_tolerance
            )));
        }
        if self.max_subdivisions == 0 {
            return Err(QuadratureError::InvalidSpec(
                "max_subdivisions must be >= 1".into(),
            ));
        }
        Ok(())
    }

    /// Same budget with both tolerances divided by `factor`.
    pub fn tightened(self, factor: f64) -> Self {
        Self {
            relative_tolerance: self.relative_tolerance / factor,
            absolute_tolerance: self.absolute_tolerance / factor,
            ..self
        }
    }

    fn accepts(&self, error: f64, value: f64) -> bool {
        error
            <= self
                .absolute_tolerance
                .max(self.relative_tolerance * value.abs())
    }
}

/// A converged integral with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error: f64,
    pub subdivisions: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error("invalid quadrature spec: {0}")]
    InvalidSpec(String),
    #[error("invalid integration interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },
    #[error("integrand returned a non-finite value at x = {x}")]
    NonFinite { x: f64 },
    #[error("quadrature did not converge after {subdivisions} subdivisions (estimate {value:e}, error {error:e})")]
    NotConverged {
        value: f64,
        error: f64,
        subdivisions: usize,
    },
}

#[derive(Debug, Clone, Copy)]
enum Map {
    Finite,
    /// `x = origin + t/(1-t)`, t in [0, 1)
    Upper(f64),
    /// `x = origin - t/(1-t)`, t in [0, 1)
    Lower(f64),
}

impl Map {
    /// Returns `(x, dx/dt)`, or `None` at the singular endpoint.
    #[inline]
    fn apply(self, t: f64) -> Option<(f64, f64)> {
        match self {
            Map::Finite => Some((t, 1.0)),
            Map::Upper(o) | Map::Lower(o) => {
                let s = 1.0 - t;
                if s <= 0.0 {
                    return None;
                }
                let u = t / s;
                let jac = 1.0 / (s * s);
                match self {
                    Map::Upper(_) => Some((o + u, jac)),
                    _ => Some((o - u, jac)),
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    map: Map,
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(
    f: &F,
    map: Map,
    a: f64,
    b: f64,
) -> Result<Panel, QuadratureError> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let eval = |t: f64| -> Result<f64, QuadratureError> {
        match map.apply(t) {
            None => Ok(0.0),
            Some((x, jac)) => {
                let y = f(x);
                if !y.is_finite() {
                    return Err(QuadratureError::NonFinite { x });
                }
                let v = y * jac;
                if v.is_finite() {
                    Ok(v)
                } else if y == 0.0 {
                    Ok(0.0)
                } else {
                    Err(QuadratureError::NonFinite { x })
                }
            }
        }
    };
    let fc = eval(center)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = eval(center - dx)? + eval(center + dx)?;
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Ok(Panel {
        map,
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).abs(),
    })
}

/// Integrates `f` over `[lo, hi]`; either endpoint may be infinite.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    spec: &QuadratureSpec,
) -> Result<Integral, QuadratureError> {
    integrate_with_breakpoints(f, lo, hi, &[], spec)
}

/// Like [`integrate`], but the interval is first split at every breakpoint
/// strictly inside `(lo, hi)`. Kinks and jumps of the integrand belong there.
pub fn integrate_with_breakpoints<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    breakpoints: &[f64],
    spec: &QuadratureSpec,
) -> Result<Integral, QuadratureError> {
    spec.validate()?;
    if lo.is_nan() || hi.is_nan() || lo > hi {
        return Err(QuadratureError::InvalidInterval { lo, hi });
    }
    if lo == hi {
        return Ok(Integral {
            value: 0.0,
            error: 0.0,
            subdivisions: 0,
        });
    }

    let mut points = vec![lo];
    let mut inner: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|p| p.is_finite() && *p > lo && *p < hi)
        .collect();
    inner.sort_by(f64::total_cmp);
    inner.dedup();
    if inner.is_empty() && lo.is_infinite() && hi.is_infinite() {
        inner.push(0.0);
    }
    points.extend(inner);
    points.push(hi);

    let mut heap = BinaryHeap::new();
    for w in points.windows(2) {
        let (a, b) = (w[0], w[1]);
        let panel = match (a.is_infinite(), b.is_infinite()) {
            (false, false) => gauss_kronrod(&f, Map::Finite, a, b)?,
            (false, true) => gauss_kronrod(&f, Map::Upper(a), 0.0, 1.0)?,
            (true, false) => gauss_kronrod(&f, Map::Lower(b), 0.0, 1.0)?,
            (true, true) => unreachable!("doubly infinite segment is always split"),
        };
        heap.push(panel);
    }

    let mut frozen: Vec<Panel> = Vec::new();
    let mut subdivisions = 0;
    let totals = |heap: &BinaryHeap<Panel>, frozen: &[Panel]| {
        heap.iter()
            .chain(frozen.iter())
            .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error))
    };

    loop {
        let (value, error) = totals(&heap, &frozen);
        if spec.accepts(error, value) {
            return Ok(Integral {
                value,
                error,
                subdivisions,
            });
        }
        if subdivisions >= spec.max_subdivisions || heap.is_empty() {
            return Err(QuadratureError::NotConverged {
                value,
                error,
                subdivisions,
            });
        }
        let worst = heap.pop().expect("heap is non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            frozen.push(worst);
            continue;
        }
        heap.push(gauss_kronrod(&f, worst.map, worst.a, mid)?);
        heap.push(gauss_kronrod(&f, worst.map, mid, worst.b)?);
        subdivisions += 1;
    }
}
