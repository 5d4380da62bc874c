//! Tangential bound for the Golay code. Unlike the sphere radius, the
//! optimal offset z* moves with the noise level.
//!
//! Run with `cargo run --example tangential_bound`.

use gfbt::bounds::{tangential_bound, tangential_bound_with, BoundOptions, ChannelParams};
use gfbt::code::canned_code;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = canned_code("golay_23_12")?.weight_enumerator()?;
    println!(
        "{:>6} {:>10} {:>14} {:>14}",
        "Eb/N0", "z*", "min-form", "two-term"
    );
    for db in 0..=7 {
        let ch = ChannelParams::for_spectrum(&w, db as f64)?;
        let tb = tangential_bound(&w, &ch)?;
        let two = tangential_bound_with(&w, &ch, &BoundOptions::two_term())?;
        println!(
            "{db:>6} {:>10.6} {:>14.8e} {:>14.8e}",
            tb.optimal_parameter, tb.value, two.value
        );
    }
    Ok(())
}
