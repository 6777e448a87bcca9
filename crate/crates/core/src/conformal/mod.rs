//! Conformal levels of the affine subalgebra, collapsing verdicts,
//! admissibility and the charge decompositions of hook W-algebras.

pub mod cite;
mod admissible;
mod collapse;
mod decomposition;
mod levels;

pub use admissible::{admissibility, hook_h1_gcd_admissible, hook_h2_gcd_admissible, AdmissibleForm};
pub use collapse::{
    collapse_check, hook_g_c_value, rect_adjoint_c_value, CValue, CollapseStatus, Note, Verdict,
};
pub use decomposition::{decomposition, h_mu, h_mu_sugawara, DecompSummand, Decomposition};
pub use levels::{conformal_levels, Branch, ConformalLevel, LevelTag};
