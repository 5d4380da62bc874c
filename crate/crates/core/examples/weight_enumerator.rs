//! Enumerate weight spectra of the built-in codes and of a matrix given
//! as text, then round-trip one through JSON.
//!
//! Run with `cargo run --example weight_enumerator`.

use gfbt::code::{canned_code, GeneratorMatrix, WeightEnumerator};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in [
        "hamming_7_4",
        "ext_hamming_8_4",
        "hamming_15_11",
        "golay_23_12",
        "repetition_5",
        "spc_6",
    ] {
        let g = canned_code(name)?;
        let w = g.weight_enumerator()?;
        println!(
            "{name:<16} [{}, {}]  d_min {:?}  {}",
            g.n(),
            g.k(),
            w.d_min(),
            w.describe()
        );
    }

    // a [6,3] shortened Hamming code typed in directly
    let g = GeneratorMatrix::parse("3 6\n100110\n010011\n001101\n")?;
    let w = g.weight_enumerator()?;
    let json = w.to_json();
    println!("\nfrom text: {json}");
    assert_eq!(WeightEnumerator::from_json(&json)?, w);
    Ok(())
}
