//! The generic bounding engine on a hand-made region family: a Rayleigh
//! radius with a conditional bound that crosses one at r = 1.
//!
//! Run with `cargo run --example gallager_framework`.

use gfbt::gallager::{FnFamily, GfbtSolver};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let family = FnFamily::new(
        |r: f64| 2.0 * r * (-r * r).exp(),
        |r: f64| r * r,
        0.0,
        f64::INFINITY,
    );
    let solver = GfbtSolver::default();

    let r1 = solver.optimal_parameter(&family)?;
    println!("optimal parameter: {r1:.12}");

    for r in [0.5, 0.9, r1, 1.1, 2.0] {
        let b = solver.evaluate_at(&family, r)?;
        println!(
            "two-term at r = {r:.3}: {:.12} (inside {:.6}, outside {:.6})",
            b.value, b.inside_term, b.outside_term
        );
    }

    let m = solver.min_form_bound(&family)?;
    println!("min-form: {:.12} via {}", m.value, m.method);

    // a conditional bound that never reaches one puts the optimum at the
    // top of the support
    let flat = FnFamily::new(
        |r: f64| 2.0 * r * (-r * r).exp(),
        |_| 0.3,
        0.0,
        f64::INFINITY,
    );
    println!("flat family: r1 = {}", solver.optimal_parameter(&flat)?);
    Ok(())
}
