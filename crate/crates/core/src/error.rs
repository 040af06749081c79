use num_bigint::BigInt;
use thiserror::Error;

/// Errors surfaced by the counting engine and the brute-force oracle.
#[derive(Debug, Error)]
pub enum Error {
    /// A formula produced a non-integer where an exact count was expected.
    /// This always indicates a transcription bug in a q-exponent, so the
    /// message names the offending stratum.
    #[error("non-integral count in {what}")]
    NonIntegral { what: String },

    /// Symplectic counts exist only in odd characteristic.
    #[error("symplectic family requires odd q, got q = {q}")]
    EvenQ { q: BigInt },

    /// Canonical-form data does not have the weight the operation expects.
    #[error("canonical data has weight {got}, expected {expected}")]
    WeightMismatch { got: u32, expected: u32 },

    /// Partition fed to a symplectic operation violates the admissibility
    /// rule (every odd part size must occur with even multiplicity).
    #[error("partition {partition} is not sp-admissible")]
    NotAdmissible { partition: String },

    /// Enumeration would visit more than 2^bits states.
    #[error("state space of {bits} bits exceeds the guard of {limit} bits; pass force=true to override")]
    SizeGuard { bits: u32, limit: u32 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Matrix handed to the oracle does not satisfy the space's defining
    /// equations.
    #[error("matrix is not an element of the {space} space")]
    NotInSpace { space: &'static str },

    /// Series reciprocal needs an invertible constant term.
    #[error("cannot invert a series whose constant term is zero")]
    NonUnitConstant,

    /// Scalar-exponent series powers are defined for series with constant
    /// term one only.
    #[error("scalar power requires a series with constant term 1")]
    NonMonicBase,

    /// The polynomial enumeration oracle is deliberately capped at desk scale.
    #[error("polynomial oracle supports degree <= {max_d} and q <= {max_q}")]
    OracleRange { max_d: u32, max_q: u64 },

    /// Requested backend cannot run with symbolic q.
    #[error("backend {backend} supports numeric q only")]
    SymbolicUnsupported { backend: &'static str },

    /// Two expressions that must agree identically did not.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
