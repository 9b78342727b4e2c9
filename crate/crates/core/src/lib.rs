//! Exact computation with finite permutation groups, aimed at symmetric
//! (arc-transitive) graphs of prime valency.
//!
//! The crate provides:
//!
//! * [`perm`] — exact arithmetic on permutations of `{0..n-1}`;
//! * [`stabchain`] — stabilizer chains (base and strong generating sets):
//!   order, membership, orbits, stabilizers, coset actions, derived series,
//!   block systems and simplicity certification;
//! * [`backtrack`] — partition-backtrack searches for normalizers,
//!   centralizers and intersections;
//! * [`numth`] — exact number theory: deterministic primality, integer
//!   factorization, cyclotomic values, primitive prime-divisor parts and
//!   the arithmetic side conditions behind the exceptional-triple table;
//! * [`atlas`] — a small verified database of permutation groups
//!   (alternating/symmetric, Mathieu, linear and symplectic groups);
//! * [`cosetgraph`] — coset graphs `Cos(G, H, x)`, their predicates,
//!   explicit construction, quotients and stabilizer arithmetic;
//! * [`search`] — the normalizer-based pipeline that hunts for arc-swapping
//!   2-elements `x` turning a candidate vertex stabilizer into a symmetric
//!   graph certificate, plus a registry of reproducible claims.
//!
//! Everything is exact: group orders are big integers computed from verified
//! stabilizer chains, primality above the deterministic Miller-Rabin range is
//! labelled as probabilistic, and randomized searches carry their seed and
//! budget in every report.

pub mod atlas;
pub mod backtrack;
pub mod cosetgraph;
pub mod error;
pub mod gf;
pub mod numth;
pub mod perm;
pub mod search;
pub mod stabchain;

pub use error::Error;
pub use perm::{Parity, Permutation};
pub use stabchain::PermGroup;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
