use std::collections::BTreeMap;

use gfbt::code::{bpsk_modulate, canned_code, CodeError, GeneratorMatrix, WeightEnumerator};
use proptest::prelude::*;

/// Spectrum from the null space of a parity-check matrix: every length-n
/// word is tested against `H x = 0`. Shares no code with the generator-side
/// enumeration.
fn spectrum_from_parity_check(h: &[&str]) -> BTreeMap<usize, u128> {
    let n = h[0].len();
    let checks: Vec<u32> = h
        .iter()
        .map(|row| {
            row.bytes()
                .enumerate()
                .fold(0u32, |m, (i, b)| m | (((b - b'0') as u32) << i))
        })
        .collect();
    let mut spectrum = BTreeMap::new();
    for x in 1u32..(1 << n) {
        if checks.iter().all(|c| (c & x).count_ones() % 2 == 0) {
            *spectrum.entry(x.count_ones() as usize).or_insert(0) += 1;
        }
    }
    spectrum
}

fn spectrum_of(name: &str) -> WeightEnumerator {
    canned_code(name).unwrap().weight_enumerator().unwrap()
}

fn as_map(w: &WeightEnumerator) -> BTreeMap<usize, u128> {
    w.iter().collect()
}

#[test]
fn hamming_spectrum_matches_parity_check_enumeration() {
    // G = [I | P] with P rows 110, 011, 111, 101, so H = [Pᵀ | I].
    let g = canned_code("hamming_7_4").unwrap();
    assert_eq!(g.row_bits(0), vec![1, 0, 0, 0, 1, 1, 0]);
    let h = ["1011100", "1110010", "0111001"];
    let oracle = spectrum_from_parity_check(&h);
    assert_eq!(oracle, BTreeMap::from([(3, 7), (4, 7), (7, 1)]));
    assert_eq!(as_map(&spectrum_of("hamming_7_4")), oracle);
}

#[test]
fn extended_hamming_matches_parity_check_enumeration() {
    let w = spectrum_of("ext_hamming_8_4");
    assert_eq!(as_map(&w), BTreeMap::from([(4, 14), (8, 1)]));
    // the extended code is self-dual, so its generator rows are also checks
    let g = canned_code("ext_hamming_8_4").unwrap();
    let rows: Vec<String> = (0..4)
        .map(|i| g.row_bits(i).iter().map(|b| char::from(b'0' + b)).collect())
        .collect();
    let refs: Vec<&str> = rows.iter().map(String::as_str).collect();
    assert_eq!(spectrum_from_parity_check(&refs), as_map(&w));
}

#[test]
fn golay_spectrum_is_symmetric_and_complete() {
    let w = spectrum_of("golay_23_12");
    // the zero word is not stored, so A_0 = 1 pairs with A_23 separately
    assert_eq!(w.count(23), 1);
    for d in 1..23 {
        assert_eq!(w.count(d), w.count(23 - d), "A_{d} != A_{}", 23 - d);
    }
    assert_eq!(w.total(), 4095);
    assert_eq!(w.d_min(), Some(7));
    let expected = BTreeMap::from([
        (7, 253),
        (8, 506),
        (11, 1288),
        (12, 1288),
        (15, 506),
        (16, 253),
        (23, 1),
    ]);
    assert_eq!(as_map(&w), expected);
}

#[test]
fn small_codes() {
    assert_eq!(
        as_map(&spectrum_of("repetition_3")),
        BTreeMap::from([(3, 1)])
    );
    assert_eq!(spectrum_of("repetition_3").d_min(), Some(3));
    let spc = GeneratorMatrix::from_strs(&["101", "011"]).unwrap();
    let w = spc.weight_enumerator().unwrap();
    assert_eq!(as_map(&w), BTreeMap::from([(2, 3)]));
    assert_eq!(w.d_min(), Some(2));
}

#[test]
fn canned_shapes_and_ranks() {
    for (name, k, n) in [
        ("hamming_7_4", 4, 7),
        ("golay_23_12", 12, 23),
        ("repetition_5", 1, 5),
        ("hamming_15_11", 11, 15),
    ] {
        let g = canned_code(name).unwrap();
        assert_eq!((g.k(), g.n(), g.rank()), (k, n, k), "{name}");
    }
    assert_eq!(canned_code("repetition_5").unwrap().row_bits(0), vec![1; 5]);
}

#[test]
fn bpsk_examples() {
    assert_eq!(bpsk_modulate(&[0; 7]), vec![1.0; 7]);
    assert_eq!(bpsk_modulate(&[1, 0, 1]), vec![-1.0, 1.0, -1.0]);
}

#[test]
fn malformed_generator_files() {
    assert!(matches!(
        GeneratorMatrix::parse("2 3\n101\n01\n"),
        Err(CodeError::RowLength { .. })
    ));
    assert!(matches!(
        GeneratorMatrix::parse("2 3\n101\n101\n"),
        Err(CodeError::RankDeficient { .. })
    ));
    assert!(GeneratorMatrix::parse("2 3\n101\n").is_err());
    assert!(GeneratorMatrix::parse("2 3\n1x1\n011\n").is_err());
}

#[test]
fn spectrum_json_round_trip() {
    let w = spectrum_of("hamming_7_4");
    let text = w.to_json();
    assert!(
        text.contains("\"spectrum\":{\"3\":7,\"4\":7,\"7\":1}"),
        "{text}"
    );
    assert_eq!(WeightEnumerator::from_json(&text).unwrap(), w);
}

/// Naive enumeration that encodes every message from scratch.
fn naive_spectrum(rows: &[Vec<u8>]) -> BTreeMap<usize, u128> {
    let n = rows[0].len();
    let mut spectrum = BTreeMap::new();
    for m in 1u32..(1 << rows.len()) {
        let mut word = vec![0u8; n];
        for (i, row) in rows.iter().enumerate() {
            if m >> i & 1 == 1 {
                word.iter_mut().zip(row).for_each(|(w, r)| *w ^= r);
            }
        }
        let weight = word.iter().filter(|&&b| b == 1).count();
        if weight > 0 {
            *spectrum.entry(weight).or_insert(0) += 1;
        }
    }
    spectrum
}

proptest! {
    #[test]
    fn random_codes_match_naive_enumeration(
        k in 1usize..8,
        n in 8usize..70,
        seed in any::<u64>(),
    ) {
        // systematic rows guarantee full rank
        let mut state = seed | 1;
        let rows: Vec<Vec<u8>> = (0..k)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if j < k {
                            (i == j) as u8
                        } else {
                            state ^= state << 13;
                            state ^= state >> 7;
                            state ^= state << 17;
                            (state & 1) as u8
                        }
                    })
                    .collect()
            })
            .collect();
        let g = GeneratorMatrix::from_rows(&rows).unwrap();
        let w = g.weight_enumerator().unwrap();
        prop_assert_eq!(as_map(&w), naive_spectrum(&rows));
        prop_assert_eq!(w.total(), (1u128 << k) - 1);
    }
}

#[test]
fn bipolar_distance_is_twice_root_weight() {
    let g = canned_code("hamming_7_4").unwrap();
    let reference = bpsk_modulate(&[0; 7]);
    for m in 0..16u64 {
        let word: Vec<u8> = (0..7).map(|j| (g.encode(m)[0] >> j & 1) as u8).collect();
        let d = word.iter().filter(|&&b| b == 1).count() as f64;
        let s = bpsk_modulate(&word);
        assert!((s.iter().map(|v| v * v).sum::<f64>() - 7.0).abs() < 1e-15);
        let dist = s
            .iter()
            .zip(&reference)
            .map(|(a, b)| (a - b).powi(2))
            .sum::<f64>()
            .sqrt();
        assert!((dist - 2.0 * d.sqrt()).abs() < 1e-14, "message {m}");
    }
}

#[test]
fn complement_symmetry_and_minimum_distance() {
    for name in [
        "hamming_7_4",
        "hamming_15_11",
        "golay_23_12",
        "ext_hamming_8_4",
    ] {
        let w = spectrum_of(name);
        let n = w.n();
        let d_min = w.d_min().unwrap();
        assert!((1..d_min).all(|d| w.count(d) == 0));
        assert_eq!(w.count(n), 1, "{name} contains the all-ones word");
        assert!((1..n).all(|d| w.count(d) == w.count(n - d)), "{name}");
    }
}
