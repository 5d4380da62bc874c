//! Drive the `sweep` command in-process and print its CSV, as the `gfbt`
//! binary would.
//!
//! Run with `cargo run --example snr_sweep [-- extra sweep flags]`.

fn main() {
    let mut args = vec![
        "gfbt".to_string(),
        "sweep".into(),
        "--code".into(),
        "golay_23_12".into(),
        "--ebn0-stop".into(),
        "6".into(),
    ];
    args.extend(std::env::args().skip(1));
    let code = gfbt::cli::run(args, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
