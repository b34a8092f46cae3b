//! Raising operator calculus for Schur, Hall-Littlewood and type C
//! (theta polynomial) families, with Pieri rules, mirror identities, k-strict
//! tableaux and the hyperoctahedral nilCoxeter algebra.
//!
//! Modules:
//! - [`partition`], [`pairs`]: integer vectors, partitions, index pair sets
//! - [`combinatorics`]: strips, k-horizontal strips, Pieri targets, tableaux
//! - [`raising`], [`element`], [`basis`]: the raising operator engine and
//!   ring elements
//! - [`type_a`], [`hall_littlewood`], [`type_c`]: the three raising rings
//! - [`theta`]: theta polynomials, skew functions and Q-expansions
//! - [`hyperoctahedral`]: signed permutations and nilCoxeter products
//! - [`verify`]: sweeps over families of identities, run in parallel when the
//!   `parallel` feature is on

pub mod basis;
pub mod combinatorics;
pub mod element;
pub mod hall_littlewood;
pub mod hyperoctahedral;
pub mod error;
pub mod json;
pub mod pairs;
pub mod partition;
pub mod poly;
pub mod raising;
pub mod report;
pub mod series;
pub mod theta;
pub mod tpoly;
pub mod type_a;
pub mod type_c;
pub mod verify;

pub use error::{Error, Result};
