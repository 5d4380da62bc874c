//! Simulated ML frame-error rate of the Hamming code compared with its
//! tangential-sphere bound.
//!
//! Run with `cargo run --release --example monte_carlo`.

use gfbt::bounds::{tangential_sphere_bound, ChannelParams};
use gfbt::code::canned_code;
use gfbt::montecarlo::Simulator;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = canned_code("hamming_7_4")?;
    let w = g.weight_enumerator()?;
    let sim = Simulator::new(&g)?;
    println!("{:>6} {:>12} {:>12} {:>12}", "Eb/N0", "fer", "ci95", "TSB");
    for db in [0.0, 2.0, 4.0, 6.0] {
        let ch = ChannelParams::for_spectrum(&w, db)?;
        let est = sim.simulate(ch.sigma, 1_000_000, 1, None)?;
        let tsb = tangential_sphere_bound(&w, &ch)?.value;
        println!(
            "{db:>6} {:>12.4e} {:>12.2e} {:>12.4e}",
            est.fer, est.ci95_half_width, tsb
        );
    }
    Ok(())
}
