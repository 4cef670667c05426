//! Exact computational commutative algebra over weighted-graded rings.
//!
//! The crate works with quotients `R = k[x_1..x_n]/Q` where `k` is `F_p` or
//! `Q`, each variable carries a positive integer weight, and `Q` is generated
//! by weighted-homogeneous polynomials.  On top of a small exact Gröbner
//! engine it provides ideal arithmetic (sums, products, powers, intersections,
//! colons), Hilbert series and the graded invariants derived from them
//! (dimension, multiplicity, a-invariant, Cohen-Macaulay and Gorenstein
//! certificates), samplers for minimal reductions of `m`-primary ideals, and
//! Monte-Carlo computation of cores and graded cores together with verifiers
//! for the closed-form predictions.
//!
//! Everything is deterministic given a seed, and every numeric answer is
//! exact: no floating point is used anywhere.
//!
//! The crate is `no_std` (with `alloc`); all IO lives in the companion CLI
//! crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod constructions;
pub mod engine;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod poly;
pub mod reductions;
pub mod ring;
pub mod text;

pub use error::EngineError;
pub use field::{FieldSpec, Scalar};
pub use groebner::{GbBudget, GbStats, GroebnerBasis};
pub use ideal::Ideal;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{PolyRing, Polynomial, Term};
pub use ring::PresentedRing;

/// Result alias used across the crate.
pub type Result<T> = core::result::Result<T, EngineError>;

/// SplitMix64 step: derives independent, reproducible sub-seeds from a
/// master seed.  Used everywhere a numbered stream of RNGs is needed so that
/// sample `i` does not depend on how many samples preceded it.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
