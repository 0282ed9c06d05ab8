//! Hilbert polynomials of homogeneous ideals and smooth complete
//! intersections.
//!
//! Three independent routes are provided and cross-checked:
//!
//! * Gröbner bases and Hilbert series of leading-term ideals ([`grobner`]),
//! * Hirzebruch-Riemann-Roch on truncated Chern classes ([`chern`]),
//! * a coefficient formula in terms of projective characters, the degrees of
//!   generalized polar varieties ([`chern::hilbert_poly_characters`]).
//!
//! Supporting modules hold exact arithmetic, partition combinatorics, the
//! symmetric-function engine, Schubert-cell charts with a transversality
//! test, and the counting reductions from SAT to Hilbert polynomials.

pub mod arith;
pub mod chern;
pub mod grobner;
pub mod linalg;
pub mod partitions;
pub mod reductions;
pub mod symfun;
pub mod transversality;

pub use arith::{MultiPoly, Rational, TruncSeries, UniPoly};
pub use partitions::Partition;
