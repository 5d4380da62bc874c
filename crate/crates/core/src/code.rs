//! Binary linear codes: generator matrices, exhaustive weight enumeration,
//! BPSK mapping and a few standard codes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest dimension for which the spectrum is enumerated exhaustively.
pub const MAX_ENUMERATION_DIMENSION: usize = 26;

/// Names accepted by [`canned_code`]; `_N` marks a length parameter.
pub const CANNED_CODE_NAMES: &[&str] = &[
    "hamming_7_4",
    "ext_hamming_8_4",
    "hamming_15_11",
    "golay_23_12",
    "repetition_N",
    "spc_N",
];

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("generator matrix needs 1 <= k <= n, got k = {k}, n = {n}")]
    BadShape { k: usize, n: usize },
    #[error("row {row} has length {found}, expected {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("generator rows are linearly dependent (rank {rank} < k = {k})")]
    RankDeficient { rank: usize, k: usize },
    #[error("dimension k = {k} exceeds the enumeration budget of {max}")]
    DimensionTooLarge { k: usize, max: usize },
    #[error("unknown code name `{0}`")]
    UnknownCode(String),
    #[error("invalid weight spectrum: {0}")]
    InvalidSpectrum(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// A `k × n` binary generator matrix of full row rank.
///
/// Rows are packed little-endian into 64-bit words: coordinate `t` lives in
/// bit `t % 64` of word `t / 64`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    k: usize,
    n: usize,
    rows: Vec<Vec<u64>>,
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

fn pack(bits: &[u8]) -> Vec<u64> {
    let mut words = vec![0u64; words_for(bits.len())];
    for (t, &b) in bits.iter().enumerate() {
        if b != 0 {
            words[t / 64] |= 1 << (t % 64);
        }
    }
    words
}

fn gf2_rank(rows: &[Vec<u64>], n: usize) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let mut rank = 0;
    for col in 0..n {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][w] & bit != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[w] & bit != 0 {
                row.iter_mut().zip(&pivot_row).for_each(|(a, b)| *a ^= b);
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

impl GeneratorMatrix {
    /// Builds a generator matrix from rows of 0/1 values.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self, CodeError> {
        let k = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if k == 0 || n == 0 || k > n {
            return Err(CodeError::BadShape { k, n });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(CodeError::RowLength {
                    row: i,
                    expected: n,
                    found: row.len(),
                });
            }
            if let Some(&b) = row.iter().find(|&&b| b > 1) {
                return Err(CodeError::Parse {
                    line: i + 2,
                    message: format!("entry {b} is not binary"),
                });
            }
        }
        let packed: Vec<Vec<u64>> = rows.iter().map(|r| pack(r)).collect();
        let rank = gf2_rank(&packed, n);
        if rank < k {
            return Err(CodeError::RankDeficient { rank, k });
        }
        Ok(Self { k, n, rows: packed })
    }

    /// Builds a generator matrix from strings of `'0'`/`'1'` characters.
    pub fn from_strs<S: AsRef<str>>(rows: &[S]) -> Result<Self, CodeError> {
        let parsed = rows
            .iter()
            .enumerate()
            .map(|(i, s)| parse_row(s.as_ref(), i + 2))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(&parsed)
    }

    /// Parses the text format: a `k n` header followed by `k` lines of `n`
    /// characters from `{0, 1}`. Blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, CodeError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(CodeError::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|e| CodeError::Parse {
                line: hline,
                message: format!("bad header `{header}`: {e}"),
            })?;
        let [k, n] = dims[..] else {
            return Err(CodeError::Parse {
                line: hline,
                message: format!("header must be `k n`, got `{header}`"),
            });
        };
        if k == 0 || k > n {
            return Err(CodeError::BadShape { k, n });
        }
        let mut rows = Vec::with_capacity(k);
        for (line, text) in lines {
            let row = parse_row(text, line)?;
            if row.len() != n {
                return Err(CodeError::RowLength {
                    row: rows.len(),
                    expected: n,
                    found: row.len(),
                });
            }
            rows.push(row);
        }
        if rows.len() != k {
            return Err(CodeError::Parse {
                line: hline,
                message: format!("header declares {k} rows, found {}", rows.len()),
            });
        }
        Self::from_rows(&rows)
    }

    /// Renders the matrix in the text format accepted by [`Self::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.k, self.n);
        for i in 0..self.k {
            for b in self.row_bits(i) {
                out.push(if b == 1 { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n as f64
    }

    pub fn rank(&self) -> usize {
        gf2_rank(&self.rows, self.n)
    }

    /// Packed row `i`.
    pub fn packed_row(&self, i: usize) -> &[u64] {
        &self.rows[i]
    }

    pub fn row_bits(&self, i: usize) -> Vec<u8> {
        unpack(&self.rows[i], self.n)
    }

    /// Encodes the message whose bit `j` selects row `j`.
    pub fn encode(&self, message: u64) -> Vec<u64> {
        let mut cw = vec![0u64; words_for(self.n)];
        for (j, row) in self.rows.iter().enumerate() {
            if message >> j & 1 == 1 {
                cw.iter_mut().zip(row).for_each(|(a, b)| *a ^= b);
            }
        }
        cw
    }

    /// Visits every codeword (including the all-zero word first) in
    /// Gray-code message order; each step XORs a single generator row.
    pub fn for_each_codeword<F: FnMut(&[u64])>(&self, mut visit: F) -> Result<(), CodeError> {
        if self.k > MAX_ENUMERATION_DIMENSION {
            return Err(CodeError::DimensionTooLarge {
                k: self.k,
                max: MAX_ENUMERATION_DIMENSION,
            });
        }
        let mut cw = vec![0u64; words_for(self.n)];
        visit(&cw);
        for i in 1u64..(1u64 << self.k) {
            let row = &self.rows[i.trailing_zeros() as usize];
            cw.iter_mut().zip(row).for_each(|(a, b)| *a ^= b);
            visit(&cw);
        }
        Ok(())
    }

    /// Exact weight spectrum by enumerating all `2^k` codewords.
    pub fn weight_enumerator(&self) -> Result<WeightEnumerator, CodeError> {
        let mut tally = vec![0u128; self.n + 1];
        self.for_each_codeword(|cw| {
            let w: u32 = cw.iter().map(|x| x.count_ones()).sum();
            tally[w as usize] += 1;
        })?;
        let spectrum = tally
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &c)| c > 0)
            .map(|(d, &c)| (d, c))
            .collect();
        WeightEnumerator::new(self.n, Some(self.k), spectrum)
    }
}

fn parse_row(text: &str, line: usize) -> Result<Vec<u8>, CodeError> {
    text.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(CodeError::Parse {
                line,
                message: format!("unexpected character `{other}` (rows are 0/1 strings)"),
            }),
        })
        .collect()
}

pub(crate) fn unpack(words: &[u64], n: usize) -> Vec<u8> {
    (0..n)
        .map(|t| (words[t / 64] >> (t % 64) & 1) as u8)
        .collect()
}

/// Weight spectrum `{A_d}` of a code, all-zero codeword excluded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    n: usize,
    k: Option<usize>,
    spectrum: BTreeMap<usize, u128>,
}

#[derive(Serialize)]
struct SpectrumJsonOut<'a> {
    n: usize,
    k: Option<usize>,
    spectrum: &'a BTreeMap<usize, u128>,
}

#[derive(Deserialize)]
struct SpectrumJsonIn {
    n: usize,
    #[serde(default)]
    k: Option<usize>,
    spectrum: BTreeMap<String, serde_json::Value>,
}

impl WeightEnumerator {
    /// Validates and stores a spectrum; zero counts are dropped.
    pub fn new(
        n: usize,
        k: Option<usize>,
        spectrum: BTreeMap<usize, u128>,
    ) -> Result<Self, CodeError> {
        if n == 0 {
            return Err(CodeError::InvalidSpectrum(
                "block length must be >= 1".into(),
            ));
        }
        if let Some(k) = k {
            if k == 0 || k > n {
                return Err(CodeError::BadShape { k, n });
            }
        }
        if let Some((&d, _)) = spectrum.iter().find(|(&d, &c)| c > 0 && (d == 0 || d > n)) {
            return Err(CodeError::InvalidSpectrum(format!(
                "weight {d} outside 1..={n}"
            )));
        }
        let spectrum: BTreeMap<usize, u128> =
            spectrum.into_iter().filter(|&(_, c)| c > 0).collect();
        let we = Self { n, k, spectrum };
        if let Some(k) = k {
            if k < 128 && we.total() != (1u128 << k) - 1 {
                return Err(CodeError::InvalidSpectrum(format!(
                    "counts sum to {}, expected 2^{k} - 1",
                    we.total()
                )));
            }
        }
        Ok(we)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> Option<usize> {
        self.k
    }

    /// Smallest weight with a nonzero count, `None` for the trivial code.
    pub fn d_min(&self) -> Option<usize> {
        self.spectrum.keys().next().copied()
    }

    /// `A_d` (zero when absent).
    pub fn count(&self, d: usize) -> u128 {
        self.spectrum.get(&d).copied().unwrap_or(0)
    }

    /// Number of nonzero codewords, `Σ_d A_d`.
    pub fn total(&self) -> u128 {
        self.spectrum.values().sum()
    }

    /// Nonzero `(d, A_d)` pairs in increasing weight.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u128)> + '_ {
        self.spectrum.iter().map(|(&d, &c)| (d, c))
    }

    /// Code dimension: the declared `k`, or `log2(Σ A_d + 1)` otherwise.
    pub fn dimension(&self) -> f64 {
        match self.k {
            Some(k) => k as f64,
            None => ((self.total() + 1) as f64).log2(),
        }
    }

    pub fn rate(&self) -> f64 {
        self.dimension() / self.n as f64
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SpectrumJsonOut {
            n: self.n,
            k: self.k,
            spectrum: &self.spectrum,
        })
        .expect("spectrum serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CodeError> {
        let raw: SpectrumJsonIn = serde_json::from_str(text)?;
        let mut spectrum = BTreeMap::new();
        for (key, value) in raw.spectrum {
            let d: usize = key.trim().parse().map_err(|_| {
                CodeError::InvalidSpectrum(format!("key `{key}` is not a decimal weight"))
            })?;
            let count = json_count(&value).ok_or_else(|| {
                CodeError::InvalidSpectrum(format!(
                    "count for weight {d} is not a nonnegative integer: {value}"
                ))
            })?;
            if d == 0 {
                if count > 1 {
                    return Err(CodeError::InvalidSpectrum("A_0 must be 1".into()));
                }
                continue;
            }
            spectrum.insert(d, count);
        }
        Self::new(raw.n, raw.k, spectrum)
    }

    /// Human-readable `d: A_d` listing.
    pub fn describe(&self) -> String {
        let mut s = String::new();
        for (d, c) in self.iter() {
            let _ = write!(s, "A_{d} = {c}  ");
        }
        s.trim_end().to_string()
    }
}

fn json_count(value: &serde_json::Value) -> Option<u128> {
    if let Some(c) = value.as_u64() {
        return Some(c as u128);
    }
    let x = value.as_f64()?;
    (x >= 0.0 && x.fract() == 0.0 && x < 3.4e38).then_some(x as u128)
}

/// Standard generator matrix for a named code; see [`CANNED_CODE_NAMES`].
pub fn canned_code(name: &str) -> Result<GeneratorMatrix, CodeError> {
    const HAMMING_7_4: [&str; 4] = ["1000110", "0100011", "0010111", "0001101"];
    const EXT_HAMMING_8_4: [&str; 4] = ["10001101", "01000111", "00101110", "00011011"];
    const HAMMING_15_11: [&str; 11] = [
        "100000000000011",
        "010000000000101",
        "001000000000110",
        "000100000001001",
        "000010000001010",
        "000001000001100",
        "000000100000111",
        "000000010001011",
        "000000001001101",
        "000000000101110",
        "000000000011111",
    ];
    // cyclic shifts of g(x) = 1 + x + x^5 + x^6 + x^7 + x^9 + x^11
    const GOLAY_23_12: [&str; 12] = [
        "11000111010100000000000",
        "01100011101010000000000",
        "00110001110101000000000",
        "00011000111010100000000",
        "00001100011101010000000",
        "00000110001110101000000",
        "00000011000111010100000",
        "00000001100011101010000",
        "00000000110001110101000",
        "00000000011000111010100",
        "00000000001100011101010",
        "00000000000110001110101",
    ];

    match name {
        "hamming_7_4" => GeneratorMatrix::from_strs(&HAMMING_7_4),
        "ext_hamming_8_4" => GeneratorMatrix::from_strs(&EXT_HAMMING_8_4),
        "hamming_15_11" => GeneratorMatrix::from_strs(&HAMMING_15_11),
        "golay_23_12" => GeneratorMatrix::from_strs(&GOLAY_23_12),
        _ => {
            let length = |prefix: &str| {
                name.strip_prefix(prefix)
                    .and_then(|s| s.parse::<usize>().ok())
            };
            if let Some(n) = length("repetition_").filter(|&n| n >= 1) {
                GeneratorMatrix::from_rows(&[vec![1u8; n]])
            } else if let Some(n) = length("spc_").filter(|&n| n >= 2) {
                let rows: Vec<Vec<u8>> = (0..n - 1)
                    .map(|i| {
                        let mut r = vec![0u8; n];
                        r[i] = 1;
                        r[n - 1] = 1;
                        r
                    })
                    .collect();
                GeneratorMatrix::from_rows(&rows)
            } else {
                Err(CodeError::UnknownCode(name.to_string()))
            }
        }
    }
}

/// BPSK image `s_t = 1 - 2 c_t` of a 0/1 word.
pub fn bpsk_modulate(codeword: &[u8]) -> Vec<f64> {
    codeword
        .iter()
        .map(|&c| if c == 0 { 1.0 } else { -1.0 })
        .collect()
}
