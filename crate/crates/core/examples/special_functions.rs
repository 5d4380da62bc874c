//! Tour of the scalar special functions the bounds are built from.
//!
//! Run with `cargo run --example special_functions`.

use std::f64::consts::PI;

use gfbt::special::{
    cap_fraction, integrate, log_q_function, q_function, regularized_incomplete_beta,
    regularized_upper_gamma, QuadratureSpec,
};

fn main() {
    println!("Gaussian tail Q(x) and its logarithm:");
    for x in [0.0, 1.0, 3.0, 10.0, 40.0] {
        println!(
            "  x = {x:>4}: Q = {:.6e}  ln Q = {:.6}",
            q_function(x),
            log_q_function(x)
        );
    }

    println!("\nCap fraction of the unit sphere at θ = π/3:");
    for n in [3, 7, 23, 128] {
        println!("  n = {n:>3}: {:.6e}", cap_fraction(n, PI / 3.0).unwrap());
    }

    let i = regularized_incomplete_beta(0.3, 2.5, 0.5).unwrap();
    let q = regularized_upper_gamma(2.5, 3.7).unwrap();
    println!("\nI_0.3(2.5, 0.5) = {i:.12}");
    println!("Q_γ(2.5, 3.7)   = {q:.12}");

    let spec = QuadratureSpec::default();
    let gauss = integrate(
        |x| (-0.5 * x * x).exp(),
        f64::NEG_INFINITY,
        f64::INFINITY,
        &spec,
    )
    .unwrap();
    println!(
        "\n∫ exp(-x²/2) dx = {:.15} (√(2π) = {:.15}), {} panels",
        gauss.value,
        (2.0 * PI).sqrt(),
        gauss.subdivisions
    );
}
