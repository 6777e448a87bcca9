//! Central charges, strong-generator inventories and coset level maps for
//! `W^k(sl(N), x, f)`.

pub mod closed_form;
mod central_charge;
mod coset;
mod family;
mod generators;

pub use central_charge::central_charge;
pub use coset::{
    coset_central_charge, coset_central_charge_symbolic, coset_k1_poly, coset_levels,
    CosetLevels, CosetType,
};
pub use family::{Family, FamilyParams};
pub use generators::{
    generic_generators, strong_generators, weight_multiset, GeneratorSpec, RepLabel, RepTag,
};
