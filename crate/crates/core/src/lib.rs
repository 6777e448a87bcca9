//! Exact calculator for conformal embeddings and collapsing levels of affine
//! W-algebras `W^k(sl(N), x, f)`.
//!
//! The nilpotent `f` is given by its Jordan type. From it the crate derives the
//! Dynkin grading and graded dimensions, builds the central charge as an exact
//! rational function of the level `k`, solves for the levels where the affine
//! subalgebra embeds conformally, and classifies those levels by comparing
//! Sugawara weights with conformal weights of the strong generators.
//!
//! ```
//! use wlevels::{conformal, walgebra::FamilyParams};
//!
//! let hook = FamilyParams::hook(3, 2).unwrap();
//! let levels = conformal::conformal_levels(&hook).unwrap();
//! let ks: Vec<String> = levels.iter().map(|l| l.k.to_string()).collect();
//! assert_eq!(ks, ["-15/4", "-10/3", "-3"]);
//! ```

pub mod cli;
pub mod conformal;
pub mod error;
pub mod exact;
pub mod liealg;
pub mod walgebra;

pub use error::{Error, Result};
