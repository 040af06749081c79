//! Exact enumeration of ordered pairs of commuting (and commuting
//! nilpotent) elements in the Lie algebras of the finite classical groups
//! GL(n,q), GU(n,q) and Sp(2n,q) with q odd, cross-checked by a brute-force
//! finite-field oracle, plus the associated asymptotic constants.
//!
//! Layout:
//! - [`partitions`]: integer partitions and their statistics;
//! - [`qexact`]: exact rationals / rational functions in q, Pochhammer
//!   symbols and truncated u-series (everything downstream is generic over
//!   the scalar via [`qexact::Scalar`]);
//! - [`polycount`]: monic irreducible polynomial counts N(d,q) and the
//!   self-dual counts N̄(2d,q), M̄(d,q);
//! - [`canonical`]: rational-canonical-form data and its enumeration;
//! - [`counts_gl`], [`counts_u`], [`counts_sp`]: the per-family counting
//!   formulas, each with a stratified (class_sum) and a generating-function
//!   (gen_fn) backend;
//! - [`bruteforce`]: independent exhaustive oracle over GF(p) and GF(p²);
//! - [`asymptotics`]: limit constants with certified truncation bounds;
//! - [`counts`], [`report`], [`identities`], [`verify`]: uniform entry
//!   points, report serialization, series-identity checks, and the
//!   backend-vs-backend / backend-vs-oracle verifier.

pub mod asymptotics;
pub mod bruteforce;
pub mod canonical;
pub mod counts;
pub mod counts_gl;
pub mod counts_sp;
pub mod counts_u;
pub mod identities;
pub mod partitions;
pub mod polycount;
pub mod qexact;
pub mod report;
pub mod verify;

mod error;

pub use error::Error;
pub use partitions::Partition;
pub use qexact::{PochBase, RatFn, Scalar, Sign, USeries};

pub type Result<T> = std::result::Result<T, Error>;

/// Exact rational coefficients at a fixed numeric q.
pub type QRat = num_rational::BigRational;
/// Coefficients as reduced rational functions of the indeterminate q.
pub type QSym = RatFn;
/// Truncated u-series with numeric coefficients.
pub type NumSeries = USeries<QRat>;
/// Truncated u-series with symbolic coefficients.
pub type SymSeries = USeries<QSym>;
