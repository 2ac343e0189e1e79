//! Exact and Monte Carlo computations around the spectral law of a product
//! of orthogonal projections.
//!
//! The library has two halves that check each other:
//!
//! * an exact half ([`algebra`], [`combinatorics`], [`genfunc`], [`necklace`],
//!   [`weingarten`], and the recursion side of [`manova`]) working over
//!   arbitrary-precision rationals, where every identity is asserted with
//!   structural equality;
//! * a numeric half ([`ensembles`], the quadrature side of [`manova`]) that
//!   samples random projection models, measures spectra, and compares them
//!   against the exact predictions.
//!
//! The [`verify`] module packages the identity suites behind a uniform
//! pass/fail report used both by the test suite and the `manova-lab` CLI.

pub mod algebra;
pub mod combinatorics;
pub mod ensembles;
pub mod error;
pub mod genfunc;
pub mod manova;
pub mod necklace;
pub mod verify;
pub mod weingarten;

pub use error::{Error, Result};

/// Library version embedded into reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
