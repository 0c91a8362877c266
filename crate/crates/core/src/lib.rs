//! Counting Hopf-Galois structures of isomorphic type on `G = T^n`.
//!
//! The crate is organised bottom-up:
//!
//! - [`group`]: finite groups as Cayley tables, automorphisms, direct powers.
//! - [`endo`]: structured endomorphisms of `T^n` (coordinate maps `θ` plus
//!   coordinatewise automorphisms `φ_i`).
//! - [`graph`]: the undirected and directed pair-graphs attached to two
//!   structured endomorphisms, path maps, and labelled trees.
//! - [`fpf`]: fixed-point-freeness of endomorphism pairs, by brute force and
//!   by the tree criterion, with witness construction.
//! - [`holomorph`]: `Hol(N)`, regular subgroups and the `(𝔣, 𝔤)` toolkit.
//! - [`census`]: closed-form and brute-force counts.
//!
//! Counting formulas are generic over the integer type; [`Count`] is the
//! arbitrary-precision default.

pub mod census;
pub mod endo;
mod error;
pub mod fpf;
pub mod graph;
pub mod group;
pub mod holomorph;
pub mod pairspec;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::CountScalar;

/// Arbitrary-precision count.
pub type Count = num_bigint::BigUint;

/// Exact rational used where a count is formed as a ratio.
pub type Rational = num_rational::Ratio<num_bigint::BigInt>;

/// Limits for exhaustive enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of structured endomorphisms streamed per enumeration.
    pub max_endos: u128,
    /// Maximum number of group elements scanned per brute-force fpf test.
    pub max_elements: u128,
    /// Maximum number of `(f, g)` pairs in a census.
    pub max_pairs: u128,
    /// Maximum holomorph order for regular-subgroup enumeration.
    pub max_holomorph: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_endos: 10_000_000,
            max_elements: 100_000,
            max_pairs: 100_000_000,
            max_holomorph: 200_000,
        }
    }
}
