//! Parameterized Gallager-first-bound (GFBT) upper bounds on the
//! maximum-likelihood decoding error probability of binary linear codes over
//! the BPSK/AWGN channel.
//!
//! The crate is organized bottom-up:
//!
//! - [`special`]: Q-function, incomplete gamma/beta, spherical caps,
//!   adaptive quadrature and monotone bisection.
//! - [`code`]: generator matrices, exhaustive weight enumeration, canned codes.
//! - [`gallager`]: the single-parameter GFBT framework (two-term and
//!   min-form evaluation, optimal parameter search).
//! - [`bounds`]: union, sphere, tangential and tangential-sphere bounds.
//! - [`montecarlo`]: brute-force ML frame-error simulation used as an oracle.
//! - [`cli`]: the `gfbt` command-line front end.

// `!(x > 0.0)` is the idiom used throughout to reject NaN alongside bad values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod cli;
pub mod code;
pub mod gallager;
pub mod montecarlo;
pub mod special;

pub use bounds::{BoundError, BoundOptions, ChannelParams};
pub use code::{GeneratorMatrix, WeightEnumerator};
pub use gallager::{BoundResult, GallagerFamily};
pub use montecarlo::MCEstimate;
