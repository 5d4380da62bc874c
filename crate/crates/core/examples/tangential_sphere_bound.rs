//! Tangential-sphere bound next to the other three for the extended
//! Hamming code.
//!
//! Run with `cargo run --example tangential_sphere_bound`.

use gfbt::bounds::{tsb_inner_radius, BoundOptions, BoundSet, ChannelParams};
use gfbt::code::canned_code;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = canned_code("ext_hamming_8_4")?.weight_enumerator()?;
    println!(
        "inner radius (any SNR): {:.12}",
        tsb_inner_radius(&w, w.n())?.value()
    );
    println!(
        "{:>6} {:>12} {:>12} {:>12} {:>12}",
        "Eb/N0", "union", "SB", "TB", "TSB"
    );
    for db in 0..=8 {
        let ch = ChannelParams::for_spectrum(&w, db as f64)?;
        let set = BoundSet::compute(&w, &ch, &BoundOptions::default());
        println!(
            "{db:>6} {:>12.4e} {:>12.4e} {:>12.4e} {:>12.4e}",
            set.union?, set.sphere?.value, set.tangential?.value, set.tangential_sphere?.value
        );
    }
    Ok(())
}
