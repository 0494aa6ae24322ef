//! Exact arithmetic in the ring of Gaussian integers, Pythagorean structure
//! inside it, and integer-distance figures on the plane lattice.
//!
//! The crate is organized bottom-up:
//!
//! * [`ring`]: the ring itself (norms, units, canonical associates,
//!   Euclidean division, gcd, parity, the `a+bi` string form)
//! * [`primes`]: Gaussian prime classification and factorization
//! * [`radicals`]: exact square roots of Gaussian integers
//! * [`gp`]: elements whose norm is a perfect square (Pythagorean pairs)
//! * [`triples`]: Pythagorean triples with Gaussian-integer components
//! * [`figures`]: integer-distance lattice figures, triangle taxonomy,
//!   completions and extensions
//! * [`census`]: counting functions for rational Pythagorean triples with
//!   bulk range scans
//! * [`arith`]: shared plain-integer utilities

pub mod arith;
pub mod census;
pub mod figures;
pub mod gp;
pub mod primes;
pub mod radicals;
pub mod ring;
pub mod triples;

pub use ring::{CanonicalForm, GaussInt, Parity};
