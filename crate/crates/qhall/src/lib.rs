//! Exact combinatorics of ribbon tableaux, tuples of Young tableaux, rigged
//! configurations, and Hall-Littlewood symmetric functions at roots of unity.
//!
//! Everything is computed over exact integers: generating polynomials live in
//! `Z[q]`, root-of-unity values in `Z[q]/Phi_k(q)`, and basis conversions of
//! symmetric functions use exact rationals internally. The crate is organized
//! around the combinatorial chain
//!
//! ```text
//! k-ribbon tableaux  <->  k-tuples of SSYT  <->  ribbon rigged configurations
//!       (cospin)             (inversions)              (cocharge)
//! ```
//!
//! with the statistics transported bijectively along both arrows, and a
//! symmetric-function layer on top that expands Hall-Littlewood functions,
//! converts bases, applies power-sum plethysms, and verifies the
//! root-of-unity specialization identities.
//!
//! See the `examples/` directory for one runnable example per capability, and
//! the `qhall` binary for a command-line frontend.

pub mod error;
pub mod partition;
pub mod qpoly;
pub mod ribbon;
pub mod rigged;
pub mod symfunc;
pub mod tuples;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{Cell, Partition, PartitionTuple};
pub use qpoly::{CyclotomicValue, IntPolynomial};
