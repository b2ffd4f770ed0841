//! Computation engine for finite commutative rings: explicit-table ring
//! construction, complete ideal lattices, avoidance decisions (ideal, ring,
//! map and primary variants), cover exponents, finite modules, local
//! decomposition, truncated graded algebras, and exact ideal arithmetic in
//! the integers.
//!
//! All values are immutable after construction and safe to share across
//! worker threads; the `parallel` feature (default) lets the hot table and
//! sweep loops fan out over rayon.

pub mod avoidance;
pub mod bits;
pub mod config;
pub mod error;
pub mod gf;
pub mod ideal;
pub mod module;
mod par;
pub mod poly;
pub mod ring;
pub mod structure;
pub mod zint;

pub use error::{Error, Result};
