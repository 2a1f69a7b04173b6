//! Animals (polyforms) on regular tessellations {p,q} of the Euclidean and
//! hyperbolic plane.
//!
//! The crate computes exact graph parameters of layered and spiral animals
//! three independent ways — integer recurrences, closed forms in Q(√D), and
//! direct counts on an explicitly built lattice animal — and enumerates
//! small animals up to isometry to verify that spirals minimise the
//! perimeter and to count minimum-perimeter animals.
//!
//! Modules:
//! * [`tessellation`]: Schläfli pairs and exact quadratic arithmetic.
//! * [`layers`]: parameters of the complete k-layered animal.
//! * [`degseq`]: perimeter degree words via substitution rules.
//! * [`spiral`]: spiral parameters and the minimum perimeter P(n).
//! * [`animal`]: the combinatorial-map lattice engine (the oracle).
//! * [`enumerate`]: canonical codes, exhaustive enumeration, extremal and
//!   uniqueness searches.
//! * [`verify`]: the cross-checking suites wired into the CLI.

pub mod animal;
pub mod degseq;
pub mod enumerate;
mod error;
pub mod layers;
pub mod spiral;
pub mod tessellation;
pub mod verify;

pub use animal::build::{
    build_layered, build_seq, build_spiral, build_spiral_with, seq_tile_count, SeqKind,
};
pub use animal::{AnimalMap, AttachSite, DEFAULT_ORACLE_CAP};
pub use error::{Error, Result};
pub use tessellation::{validate_pair, Geometry, QuadRat, SchlafliPair};
