//! Acceptance checks, one PASS/FAIL line per criterion. Runs as a plain
//! binary so the lines are always printed; exits non-zero if any fails.

use std::f64::consts::{FRAC_PI_2, PI};
use std::process::Command;
use std::time::Instant;

use gfbt::bounds::{
    sb_conditional_union_bound, sphere_bound_with, tangential_bound_with,
    tangential_sphere_bound_with, tb_conditional_union_bound, tsb_inner_union_bound, union_bound,
    BoundOptions, ChannelParams, SphereFamily, TangentialSphereFamily,
};
use gfbt::code::{canned_code, WeightEnumerator};
use gfbt::gallager::GallagerFamily;
use gfbt::montecarlo::Simulator;
use gfbt::special::{
    cap_fraction, chi_log_density, integrate, q_function, regularized_upper_gamma, QuadratureSpec,
};
use rand::{Rng, SeedableRng};

const CODES: [&str; 3] = ["hamming_7_4", "ext_hamming_8_4", "golay_23_12"];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn spectrum(name: &str) -> WeightEnumerator {
    canned_code(name).unwrap().weight_enumerator().unwrap()
}

fn channel(w: &WeightEnumerator, ebn0: f64) -> ChannelParams {
    ChannelParams::for_spectrum(w, ebn0).unwrap()
}

/// 0, 0.5, ..., 8 dB.
fn grid() -> Vec<f64> {
    (0..=16).map(|i| 0.5 * i as f64).collect()
}

fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let n = panels * 2;
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        s += if i % 2 == 1 { 4.0 } else { 2.0 } * f(a + i as f64 * h);
    }
    s * h / 3.0
}

fn check(ok: bool, failure: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(failure())
    }
}

fn oracle_dominance() -> Outcome {
    let start = Instant::now();
    let opts = BoundOptions::default();
    let mut tightest = f64::INFINITY;
    for name in CODES {
        let g = canned_code(name).unwrap();
        let w = g.weight_enumerator().unwrap();
        let sim = Simulator::new(&g).map_err(|e| e.to_string())?;
        for db in [2.0, 4.0, 6.0] {
            let ch = channel(&w, db);
            let est = sim
                .simulate(ch.sigma, 1_000_000, 20_240_601, None)
                .map_err(|e| e.to_string())?;
            let floor = est.lower_check();
            let bounds = [
                (
                    "min(UB,1)",
                    union_bound(&w, &ch).map_err(|e| e.to_string())?.min(1.0),
                ),
                (
                    "SB",
                    sphere_bound_with(&w, &ch, &opts)
                        .map_err(|e| e.to_string())?
                        .value,
                ),
                (
                    "TB",
                    tangential_bound_with(&w, &ch, &opts)
                        .map_err(|e| e.to_string())?
                        .value,
                ),
                (
                    "TSB",
                    tangential_sphere_bound_with(&w, &ch, &opts)
                        .map_err(|e| e.to_string())?
                        .value,
                ),
            ];
            for (label, b) in bounds {
                check(b >= floor, || {
                    format!("{name} {db} dB: {label} {b:.6e} < fer - 3ci {floor:.6e}")
                })?;
                tightest = tightest.min(b / est.fer.max(f64::MIN_POSITIVE));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    check(secs < 180.0, || format!("took {secs:.1} s"))?;
    Ok(format!(
        "9 code/SNR points, 10^6 trials each, {secs:.1} s; smallest bound/fer ratio {tightest:.4}"
    ))
}

fn form_equivalence() -> Outcome {
    let (min, two) = (BoundOptions::default(), BoundOptions::two_term());
    let mut worst: f64 = 0.0;
    for name in CODES {
        let w = spectrum(name);
        for db in grid() {
            let ch = channel(&w, db);
            let pairs = [
                (
                    "SB",
                    sphere_bound_with(&w, &ch, &min)
                        .map_err(|e| e.to_string())?
                        .value,
                    sphere_bound_with(&w, &ch, &two)
                        .map_err(|e| e.to_string())?
                        .value,
                ),
                (
                    "TB",
                    tangential_bound_with(&w, &ch, &min)
                        .map_err(|e| e.to_string())?
                        .value,
                    tangential_bound_with(&w, &ch, &two)
                        .map_err(|e| e.to_string())?
                        .value,
                ),
            ];
            for (label, a, b) in pairs {
                let rel = (a - b).abs() / a;
                worst = worst.max(rel);
                check(rel <= 1e-8, || {
                    format!("{name} {db} dB {label}: min-form {a:e} two-term {b:e}")
                })?;
            }
        }
    }
    Ok(format!(
        "worst relative gap {worst:.2e} over 3 codes x 17 points"
    ))
}

fn snr_independence() -> Outcome {
    let mut worst: f64 = 0.0;
    for name in CODES {
        let w = spectrum(name);
        let mut sb = Vec::new();
        let mut tsb = Vec::new();
        for sigma in [0.3, 0.5, 1.0, 2.0] {
            let ch = ChannelParams::new(sigma, w.n(), w.rate()).unwrap();
            sb.push(
                sphere_bound_with(&w, &ch, &BoundOptions::default())
                    .map_err(|e| e.to_string())?
                    .optimal_parameter,
            );
            tsb.push(
                TangentialSphereFamily::new(&w, &ch)
                    .map_err(|e| e.to_string())?
                    .inner_radius(),
            );
        }
        for (label, radii) in [("SB r1", &sb), ("TSB inner r1", &tsb)] {
            let spread = radii
                .iter()
                .fold(0.0f64, |m, r| m.max((r - radii[0]).abs()));
            worst = worst.max(spread);
            check(spread <= 1e-9, || {
                format!("{name} {label} varies: {radii:?}")
            })?;
        }
    }
    Ok(format!("largest spread {worst:.1e}"))
}

fn root_condition() -> Outcome {
    let mut worst: f64 = 0.0;
    for name in CODES {
        let w = spectrum(name);
        for sigma in [0.3, 0.5, 1.0, 2.0] {
            let ch = ChannelParams::new(sigma, w.n(), w.rate()).unwrap();
            let r1 = sphere_bound_with(&w, &ch, &BoundOptions::default())
                .map_err(|e| e.to_string())?
                .optimal_parameter;
            let z = tangential_bound_with(&w, &ch, &BoundOptions::default())
                .map_err(|e| e.to_string())?
                .optimal_parameter;
            let inner = TangentialSphereFamily::new(&w, &ch)
                .map_err(|e| e.to_string())?
                .inner_radius();
            let values = [
                ("SB", sb_conditional_union_bound(&w, r1)),
                ("TB", tb_conditional_union_bound(&w, z, ch.sigma)),
                ("TSB", tsb_inner_union_bound(&w, inner)),
            ];
            for (label, v) in values {
                worst = worst.max((v - 1.0).abs());
                check((v - 1.0).abs() <= 1e-8, || {
                    format!("{name} σ={sigma} {label}: sum = {v}")
                })?;
            }
        }
    }
    Ok(format!("largest |sum - 1| = {worst:.1e}"))
}

fn bound_ordering() -> Outcome {
    let opts = BoundOptions::default();
    let mut informational = Vec::new();
    for name in CODES {
        let w = spectrum(name);
        let mut series: [Vec<f64>; 4] = Default::default();
        let mut tsb_above_min = 0;
        for db in grid() {
            let ch = channel(&w, db);
            let ub = union_bound(&w, &ch).map_err(|e| e.to_string())?;
            let sb = sphere_bound_with(&w, &ch, &opts)
                .map_err(|e| e.to_string())?
                .value;
            let tb = tangential_bound_with(&w, &ch, &opts)
                .map_err(|e| e.to_string())?
                .value;
            let tsb = tangential_sphere_bound_with(&w, &ch, &opts)
                .map_err(|e| e.to_string())?
                .value;
            for (label, v) in [("SB", sb), ("TB", tb), ("TSB", tsb)] {
                check(v <= ub.min(1.0) + 1e-8, || {
                    format!("{name} {db} dB: {label} {v:e} > min(UB,1) {ub:e}")
                })?;
            }
            if tsb > sb.min(tb) {
                tsb_above_min += 1;
            }
            for (s, v) in series.iter_mut().zip([ub, sb, tb, tsb]) {
                s.push(v);
            }
        }
        for (label, s) in ["UB", "SB", "TB", "TSB"].iter().zip(&series) {
            for (i, p) in s.windows(2).enumerate() {
                check(p[1] < p[0] * (1.0 - 1e-12), || {
                    format!(
                        "{name} {label} not strictly decreasing at step {i}: {:e} -> {:e}",
                        p[0], p[1]
                    )
                })?;
            }
        }
        informational.push(format!(
            "{name}: TSB > min(TB,SB) at {tsb_above_min} points"
        ));
    }
    Ok(format!("3 codes x 17 points; {}", informational.join(", ")))
}

fn special_functions() -> Outcome {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let theta = rng.random_range(0.0..PI);
        let v = cap_fraction(3, theta).map_err(|e| e.to_string())?;
        let exact = (1.0 - theta.cos()) / 2.0;
        check((v - exact).abs() <= 1e-12, || {
            format!("cap_fraction(3, {theta}) = {v}, want {exact}")
        })?;
    }
    for n in 3..=128 {
        let v = cap_fraction(n, FRAC_PI_2).map_err(|e| e.to_string())?;
        check((v - 0.5).abs() <= 1e-13, || {
            format!("cap_fraction({n}, π/2) = {v}")
        })?;
    }
    let mut worst: f64 = 0.0;
    for (n, sigma) in [(7usize, 0.6), (8, 1.0), (23, 0.5), (23, 0.9), (64, 0.3)] {
        let dof = n as f64;
        let mode = sigma * (dof - 1.0).sqrt();
        for frac in [0.5, 0.9, 1.0, 1.3, 1.8] {
            let r = mode * frac;
            let closed = regularized_upper_gamma(0.5 * dof, r * r / (2.0 * sigma * sigma))
                .map_err(|e| e.to_string())?;
            let oracle = simpson(
                |t| chi_log_density(t, dof, sigma).exp(),
                r,
                mode + 40.0 * sigma,
                100_000,
            );
            worst = worst.max((closed - oracle).abs());
            check((closed - oracle).abs() <= 1e-10, || {
                format!("chi tail n={n} σ={sigma} r={r}: {closed} vs {oracle}")
            })?;
        }
    }
    Ok(format!(
        "cap identities hold; chi tail worst gap {worst:.1e}"
    ))
}

fn spectrum_correctness() -> Outcome {
    // null space of H = [Pᵀ | I] for the systematic [7,4] generator
    let h: [u32; 3] = [0b0011101, 0b0100111, 0b1001110];
    let mut oracle = std::collections::BTreeMap::new();
    for x in 1u32..128 {
        if h.iter().all(|c| (c & x).count_ones() % 2 == 0) {
            *oracle.entry(x.count_ones() as usize).or_insert(0u128) += 1;
        }
    }
    let ham: std::collections::BTreeMap<usize, u128> = spectrum("hamming_7_4").iter().collect();
    check(ham == oracle, || {
        format!("enumerated {ham:?}, parity-check {oracle:?}")
    })?;
    let want = std::collections::BTreeMap::from([(3, 7u128), (4, 7), (7, 1)]);
    check(ham == want, || format!("[7,4] spectrum {ham:?}"))?;
    let golay = spectrum("golay_23_12");
    check(golay.count(23) == 1, || "A_23 != 1".into())?;
    for d in 1..23 {
        check(golay.count(d) == golay.count(23 - d), || {
            format!("A_{d} != A_{}", 23 - d)
        })?;
    }
    check(golay.total() == 4095, || {
        format!("Golay sum {}", golay.total())
    })?;
    Ok("[7,4] = {3:7, 4:7, 7:1} by both enumerations; Golay symmetric, sum 4095".into())
}

fn sup_case() -> Outcome {
    let w = spectrum("repetition_3");
    let spec = QuadratureSpec::new(1e-13, 1e-300, 4000).unwrap();
    let mut worst: f64 = 0.0;
    for sigma in [0.5, 1.0] {
        let ch = ChannelParams::new(sigma, 3, 1.0 / 3.0).unwrap();
        let family = SphereFamily::new(&w, &ch).map_err(|e| e.to_string())?;
        let unclipped = integrate(
            |r| family.conditional_bound(r) * family.density(r),
            0.0,
            f64::INFINITY,
            &spec,
        )
        .map_err(|e| e.to_string())?
        .value;
        let closed = q_function(3f64.sqrt() / sigma);
        for opts in [BoundOptions::default(), BoundOptions::two_term()] {
            let sb = sphere_bound_with(&w, &ch, &opts).map_err(|e| e.to_string())?;
            check(sb.optimal_parameter.is_infinite(), || {
                format!("r1 = {} is finite", sb.optimal_parameter)
            })?;
            for (label, target) in [("Q(√3/σ)", closed), ("∫ f_u g", unclipped)] {
                worst = worst.max((sb.value - target).abs());
                check((sb.value - target).abs() <= 1e-8, || {
                    format!("σ={sigma}: SB {} vs {label} {target}", sb.value)
                })?;
            }
        }
    }
    Ok(format!("r1 = +inf, worst gap {worst:.1e}"))
}

fn reproducibility() -> Outcome {
    let mut seen = Vec::new();
    for workers in ["1", "2", "8"] {
        let out = Command::new(env!("CARGO_BIN_EXE_gfbt"))
            .args([
                "simulate",
                "--code",
                "golay_23_12",
                "--ebn0",
                "2",
                "--trials",
                "200000",
                "--seed",
                "77",
            ])
            .args(["--workers", workers])
            .output()
            .map_err(|e| e.to_string())?;
        check(out.status.success(), || {
            String::from_utf8_lossy(&out.stderr).into_owned()
        })?;
        let json: serde_json::Value =
            serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        seen.push(json["errors"].as_u64().ok_or("no error count")?);
    }
    check(seen.windows(2).all(|p| p[0] == p[1]), || {
        format!("error counts differ: {seen:?}")
    })?;
    Ok(format!("{} errors with 1, 2 and 8 workers", seen[0]))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("oracle dominance", oracle_dominance),
        ("form equivalence", form_equivalence),
        ("SNR independence of radii", snr_independence),
        ("root condition", root_condition),
        ("bound ordering and monotonicity", bound_ordering),
        ("special functions", special_functions),
        ("spectrum correctness", spectrum_correctness),
        ("sup-case behavior", sup_case),
        ("simulation reproducibility", reproducibility),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
