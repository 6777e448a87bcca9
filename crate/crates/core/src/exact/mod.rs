//! Exact arithmetic: rationals, univariate polynomials and rational functions
//! over ℚ, and rational root extraction.
//!
//! Every value here is immutable once built and is `Send + Sync`.

mod poly;
mod rat;
mod ratfn;
mod roots;

pub use poly::Poly;
pub use rat::{q, Rat};
pub use ratfn::{ratfn_equal, ratfn_eval, RationalFn};
pub use roots::{rational_roots, RationalRoot};
