use super::gamma::ln_gamma_unchecked;
use super::{DomainError, MAX_ITERATIONS, TINY};

/// ln B(a, b).
pub fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma_unchecked(a) + ln_gamma_unchecked(b) - ln_gamma_unchecked(a + b)
}

/// Continued fraction of the incomplete beta function (modified Lentz).
fn beta_continued_fraction(x: f64, a: f64, b: f64) -> f64 {
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..MAX_ITERATIONS {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < f64::EPSILON * 0.5 {
            break;
        }
    }
    h
}

/// I_x(a, b) given both `x` and its complement `y = 1 - x`, so callers that
/// know `y` more accurately than `1 - x` (e.g. `cos²θ`) keep the digits.
pub(crate) fn incomplete_beta_split(x: f64, y: f64, a: f64, b: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if y <= 0.0 {
        return 1.0;
    }
    let ln_front = a * x.ln() + b * y.ln() - ln_beta(a, b);
    if x < (a + 1.0) / (a + b + 2.0) {
        (ln_front.exp() * beta_continued_fraction(x, a, b) / a).clamp(0.0, 1.0)
    } else {
        (1.0 - ln_front.exp() * beta_continued_fraction(y, b, a) / b).clamp(0.0, 1.0)
    }
}

/// Regularized incomplete beta function I_x(a, b).
pub fn regularized_incomplete_beta(x: f64, a: f64, b: f64) -> Result<f64, DomainError> {
    if !(0.0..=1.0).contains(&x) {
        return Err(DomainError::new(
            "regularized_incomplete_beta",
            format!("x = {x} outside [0, 1]"),
        ));
    }
    if !(a > 0.0 && a.is_finite() && b > 0.0 && b.is_finite()) {
        return Err(DomainError::new(
            "regularized_incomplete_beta",
            format!("shape parameters a = {a}, b = {b} must be finite and > 0"),
        ));
    }
    Ok(incomplete_beta_split(x, 1.0 - x, a, b))
}

/// Fraction of the surface of the unit sphere in R^n that lies inside a cap
/// of half-angle `theta`.
///
/// For θ ≤ π/2 this is `½ I_{sin²θ}((n-1)/2, ½)`; larger angles use the
/// complement. `cap_fraction(n, π/2)` is exactly ½.
pub fn cap_fraction(n: usize, theta: f64) -> Result<f64, DomainError> {
    if n < 2 {
        return Err(DomainError::new(
            "cap_fraction",
            format!("dimension n = {n} must be >= 2"),
        ));
    }
    let pi = std::f64::consts::PI;
    if !(0.0..=pi).contains(&theta) {
        return Err(DomainError::new(
            "cap_fraction",
            format!("theta = {theta} outside [0, pi]"),
        ));
    }
    // cos(π/2) rounds to 6e-17, not zero
    if theta == std::f64::consts::FRAC_PI_2 {
        return Ok(0.5);
    }
    if theta > std::f64::consts::FRAC_PI_2 {
        return Ok(1.0 - half_cap(n, (pi - theta).sin(), (pi - theta).cos()));
    }
    Ok(half_cap(n, theta.sin(), theta.cos()))
}

/// [`cap_fraction`] parameterized by `cos θ` instead of θ, which avoids the
/// `arccos` round trip when the cap is defined by a distance ratio.
pub fn cap_fraction_from_cos(n: usize, cos_theta: f64) -> Result<f64, DomainError> {
    if n < 2 {
        return Err(DomainError::new(
            "cap_fraction",
            format!("dimension n = {n} must be >= 2"),
        ));
    }
    if !(-1.0..=1.0).contains(&cos_theta) {
        return Err(DomainError::new(
            "cap_fraction",
            format!("cos theta = {cos_theta} outside [-1, 1]"),
        ));
    }
    Ok(cap_from_cos_unchecked(n, cos_theta))
}

pub(crate) fn cap_from_cos_unchecked(n: usize, c: f64) -> f64 {
    if c < 0.0 {
        return 1.0 - cap_from_cos_unchecked(n, -c);
    }
    let sin2 = (1.0 - c) * (1.0 + c);
    0.5 * incomplete_beta_split(sin2, c * c, 0.5 * (n as f64 - 1.0), 0.5)
}

fn half_cap(n: usize, sin: f64, cos: f64) -> f64 {
    0.5 * incomplete_beta_split(sin * sin, cos * cos, 0.5 * (n as f64 - 1.0), 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    #[test]
    fn incomplete_beta_endpoints() {
        for &(a, b) in &[(0.5, 0.5), (2.0, 3.0), (11.0, 0.5), (400.0, 0.5)] {
            assert_eq!(regularized_incomplete_beta(0.0, a, b).unwrap(), 0.0);
            assert_eq!(regularized_incomplete_beta(1.0, a, b).unwrap(), 1.0);
        }
        assert!((regularized_incomplete_beta(0.5, 1.0, 1.0).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn incomplete_beta_closed_forms() {
        // I_x(a, 1) = x^a and I_x(1, b) = 1 - (1 - x)^b
        for &x in &[0.01, 0.3, 0.77, 0.999] {
            let v = regularized_incomplete_beta(x, 3.5, 1.0).unwrap();
            assert!((v - x.powf(3.5)).abs() < 1e-14);
            let w = regularized_incomplete_beta(x, 1.0, 2.5).unwrap();
            assert!((w - (1.0 - (1.0 - x).powf(2.5))).abs() < 1e-14);
        }
    }

    #[test]
    fn incomplete_beta_domain() {
        assert!(regularized_incomplete_beta(-0.1, 1.0, 1.0).is_err());
        assert!(regularized_incomplete_beta(1.1, 1.0, 1.0).is_err());
        assert!(regularized_incomplete_beta(0.5, 0.0, 1.0).is_err());
        assert!(regularized_incomplete_beta(0.5, 1.0, -2.0).is_err());
    }

    #[test]
    fn cap_fraction_examples() {
        for n in 2..200 {
            assert_eq!(cap_fraction(n, FRAC_PI_2).unwrap(), 0.5);
            assert_eq!(cap_fraction(n, 0.0).unwrap(), 0.0);
            assert_eq!(cap_fraction(n, PI).unwrap(), 1.0);
        }
        assert!((cap_fraction(3, FRAC_PI_3).unwrap() - 0.25).abs() < 1e-15);
        // n = 2: arc length fraction θ/π
        assert!((cap_fraction(2, 1.0).unwrap() - 1.0 / PI).abs() < 1e-15);
    }

    #[test]
    fn cap_fraction_cos_agrees_with_angle_form() {
        for n in [2usize, 3, 7, 23, 128, 1024] {
            for &t in &[0.05, 0.4, 1.2, 1.9, 3.0] {
                let a = cap_fraction(n, t).unwrap();
                let b = cap_fraction_from_cos(n, t.cos()).unwrap();
                assert!((a - b).abs() < 1e-13, "n={n} t={t} {a} {b}");
            }
        }
    }

    #[test]
    fn cap_fraction_domain() {
        assert!(cap_fraction(1, 0.3).is_err());
        assert!(cap_fraction(3, -0.1).is_err());
        assert!(cap_fraction(3, 3.2).is_err());
        assert!(cap_fraction_from_cos(3, 1.5).is_err());
    }
}
