//! Partition combinatorics for nilpotent orbits of sl(N): Dynkin gradings,
//! graded dimensions, trace-form norms, heights and sl(n) weight helpers.

mod grading;
mod partition;
mod weights;

pub use grading::{
    check_even_good_grading, dynkin_grading, graded_dims, h_theta_pairing, height_and_np,
    hook_good_grading, x_norm, DynkinGrading, GoodGradingCheck, GradedDims, HalfInt,
};
pub use partition::Partition;
pub use weights::{casimir, casimir_sl, sugawara_h, sugawara_weight, Weight};
