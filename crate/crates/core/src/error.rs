//! Error type shared by the whole engine.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong inside the engine.
///
/// Budget exhaustion and sampler exhaustion are ordinary outcomes at desk
/// scale and carry enough context to be reported verbatim; the `Internal`
/// variant flags broken invariants and should never surface in correct use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngineError {
    /// Field construction was asked for an unsupported characteristic.
    BadField(String),
    /// A polynomial expression failed to parse; `position` is a byte offset.
    Parse { position: usize, message: String },
    /// Operands belong to different rings.
    RingMismatch(String),
    /// An input that must be homogeneous is not.
    NotHomogeneous(String),
    /// Ring weights must be positive integers.
    BadWeights(String),
    /// A construction received invalid data (bad semigroup, bad degrees, ...).
    BadConstruction(String),
    /// The presented ring is the zero ring and the query is meaningless.
    ZeroRing,
    /// A graded piece that must be nonzero is zero.
    EmptyDegreePiece { degree: u64 },
    /// The ideal is not primary to the irrelevant maximal ideal.
    NotMPrimary(String),
    /// Division by zero in the coefficient field.
    ZeroDivision,
    /// Gröbner budget exhausted; partial statistics attached.
    Budget {
        pairs_processed: u64,
        max_pair_degree: u64,
        pair_cap: u64,
        degree_cap: u64,
    },
    /// Random search gave up after the configured number of attempts.
    SamplerExhausted { attempts: u32, what: String },
    /// An operation requiring a Cohen-Macaulay certificate did not get one.
    NotCertifiedCm(String),
    /// An operation is only available over the rationals.
    CharZeroOnly(String),
    /// Reduction numbers kept growing past the configured bound.
    ReductionNumberOverflow { bound: u32 },
    /// A stated hypothesis of the requested operation does not hold
    /// (wrong dimension, mixed generator degrees, J ⊄ I, ...).
    Hypothesis(String),
    /// Monte-Carlo iteration hit its sample cap without stabilizing.
    NotStabilized { samples: usize },
    /// An internal invariant failed; indicates a bug, not bad input.
    Internal(String),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::BadField(m) => write!(f, "bad field: {m}"),
            EngineError::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
            EngineError::RingMismatch(m) => write!(f, "ring mismatch: {m}"),
            EngineError::NotHomogeneous(m) => write!(f, "not homogeneous: {m}"),
            EngineError::BadWeights(m) => write!(f, "bad weights: {m}"),
            EngineError::BadConstruction(m) => write!(f, "bad construction: {m}"),
            EngineError::ZeroRing => write!(f, "the presented ring is the zero ring"),
            EngineError::EmptyDegreePiece { degree } => {
                write!(f, "graded piece in degree {degree} is zero")
            }
            EngineError::NotMPrimary(m) => write!(f, "ideal is not m-primary: {m}"),
            EngineError::ZeroDivision => write!(f, "division by zero in the coefficient field"),
            EngineError::Budget {
                pairs_processed,
                max_pair_degree,
                pair_cap,
                degree_cap,
            } => write!(
                f,
                "Gröbner budget exhausted: {pairs_processed} pairs processed \
                 (cap {pair_cap}), maximal pair degree seen {max_pair_degree} \
                 (cap {degree_cap})"
            ),
            EngineError::SamplerExhausted { attempts, what } => {
                write!(f, "random search for {what} failed after {attempts} attempts")
            }
            EngineError::NotCertifiedCm(m) => {
                write!(f, "no Cohen-Macaulay certificate: {m}")
            }
            EngineError::CharZeroOnly(m) => {
                write!(f, "operation requires characteristic zero: {m}")
            }
            EngineError::ReductionNumberOverflow { bound } => {
                write!(f, "reduction number exceeds the bound {bound}")
            }
            EngineError::Hypothesis(m) => write!(f, "hypothesis violated: {m}"),
            EngineError::NotStabilized { samples } => {
                write!(f, "intersection did not stabilize within {samples} samples")
            }
            EngineError::Internal(m) => write!(f, "internal invariant violated: {m}"),
        }
    }
}

impl core::error::Error for EngineError {}
