use super::gamma::{ln_regularized_upper_gamma, regularized_upper_gamma};

/// Gaussian upper-tail probability `Q(x) = Pr{N(0,1) > x}`.
///
/// Evaluated as `½ Q(½, x²/2)` through the incomplete gamma expansions, which
/// is the complementary error function `½ erfc(x/√2)`.
pub fn q_function(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x == f64::INFINITY {
        return 0.0;
    }
    if x == f64::NEG_INFINITY {
        return 1.0;
    }
    if x < 0.0 {
        return 1.0 - q_function(-x);
    }
    0.5 * regularized_upper_gamma(0.5, 0.5 * x * x).expect("arguments in domain")
}

/// `ln Q(x)`; stays finite where `Q(x)` itself underflows (x ≳ 38).
pub fn log_q_function(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x == f64::INFINITY {
        return f64::NEG_INFINITY;
    }
    if x < 0.0 {
        return (-q_function(-x)).ln_1p();
    }
    -std::f64::consts::LN_2
        + ln_regularized_upper_gamma(0.5, 0.5 * x * x).expect("arguments in domain")
}

/// Density of N(0, σ²) at `x`.
pub fn gaussian_density(x: f64, sigma: f64) -> f64 {
    let u = x / sigma;
    (-0.5 * u * u).exp() / (sigma * (2.0 * std::f64::consts::PI).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_values() {
        assert_eq!(q_function(0.0), 0.5);
        assert_eq!(q_function(f64::INFINITY), 0.0);
        assert_eq!(q_function(f64::NEG_INFINITY), 1.0);
    }

    #[test]
    fn symmetry() {
        for &x in &[0.1, 0.7, 1.0, 2.5, 5.0, 9.0] {
            assert!((q_function(x) + q_function(-x) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn log_domain_far_tail() {
        // Mills-ratio asymptotics: ln Q(x) ≈ -x²/2 - ln(x√(2π)) + ln(1 - 1/x² + 3/x⁴ - 15/x⁶)
        let x: f64 = 40.0;
        let series = 1.0 - 1.0 / x.powi(2) + 3.0 / x.powi(4) - 15.0 / x.powi(6) + 105.0 / x.powi(8);
        let approx = -0.5 * x * x - (x * (2.0 * std::f64::consts::PI).sqrt()).ln() + series.ln();
        let lq = log_q_function(x);
        assert!(((lq - approx) / approx).abs() < 1e-12, "{lq} vs {approx}");
        assert_eq!(q_function(x), 0.0);
    }

    #[test]
    fn log_matches_linear_where_representable() {
        for &x in &[-3.0, -0.5, 0.0, 0.5, 1.0, 4.0, 12.0, 30.0] {
            let q = q_function(x);
            assert!(((q.ln() - log_q_function(x)) / q.ln().abs().max(1.0)).abs() < 1e-13);
        }
    }
}
