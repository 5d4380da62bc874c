//! Sphere bound for the [7,4] Hamming code: the radius is a property of
//! the spectrum alone, the bound itself falls with SNR.
//!
//! Run with `cargo run --example sphere_bound`.

use gfbt::bounds::{
    sb_conditional_union_bound, sb_radius, sphere_bound, union_bound, ChannelParams,
};
use gfbt::code::canned_code;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = canned_code("hamming_7_4")?.weight_enumerator()?;
    let r1 = sb_radius(&w)?.value();
    println!(
        "r1 = {r1:.12}, f_u(r1) = {:.12}",
        sb_conditional_union_bound(&w, r1)
    );

    println!("{:>6} {:>14} {:>14}", "Eb/N0", "union", "sphere");
    for db in 0..=8 {
        let ch = ChannelParams::for_spectrum(&w, db as f64)?;
        let sb = sphere_bound(&w, &ch)?;
        println!(
            "{db:>6} {:>14.6e} {:>14.6e}",
            union_bound(&w, &ch)?,
            sb.value
        );
    }

    // one nonzero codeword: f_u never reaches one and SB collapses to Q(√3/σ)
    let rep = canned_code("repetition_3")?.weight_enumerator()?;
    let ch = ChannelParams::new(1.0, 3, 1.0 / 3.0)?;
    let sb = sphere_bound(&rep, &ch)?;
    println!(
        "\nrepetition_3 at σ = 1: r1 = {}, SB = {:.12}",
        sb.optimal_parameter, sb.value
    );
    Ok(())
}
