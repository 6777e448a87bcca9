//! Stable citation tags attached to every claim in a report.

pub const COMPUTED: &str = "computed";
pub const CENTRAL_CHARGE: &str = "central charge formula";
pub const HOOK_CENTRAL_CHARGE: &str = "hook central charge closed form";
pub const RECT_CENTRAL_CHARGE: &str = "rectangular central charge closed form";
pub const HOOK_TABLE_ODD: &str = "hook dimension table, m odd";
pub const HOOK_TABLE_EVEN: &str = "hook dimension table, m even";
pub const RECT_TABLE: &str = "rectangular dimension table";
pub const HOOK_GENERATORS: &str = "hook strong generators";
pub const RECT_GENERATORS: &str = "rectangular strong generators";
pub const FREE_GENERATION: &str = "free strong generation by g^f";
pub const HOOK_LEVELS: &str = "hook conformal levels";
pub const RECT_LEVELS: &str = "rectangular conformal levels";
pub const COLLAPSE_CRITERION: &str = "C vs Δ criterion";
pub const HOOK_COLLAPSING: &str = "hook strong collapsing";
pub const HOOK_NOT_STRONG: &str = "hook levels not strongly collapsing";
pub const RECT_COLLAPSING: &str = "rectangular collapsing";
pub const ADMISSIBLE_NONCOLLAPSING: &str = "admissible levels are not collapsing";
pub const RP_REALIZATION: &str = "R(p) realization";
pub const FAMILY_3P2: &str = "(3p,2) collapsing family";
pub const H1_CONJECTURE: &str = "k^(1) non-collapsing conjecture";
pub const R2_CONJECTURE: &str = "k^[2]_{2,q} conjecture";
pub const SHORT_NILPOTENT: &str = "short nilpotent orbifold";
pub const ADMISSIBLE_DEF: &str = "admissible level";
pub const GCD_CRITERION: &str = "hook admissibility gcd criterion";
pub const IDEAL_WEIGHT: &str = "ideal generator weight d_k^W";
pub const RECT_ADMISSIBILITY: &str = "rectangular admissibility";
pub const HEIGHT: &str = "hook height";
pub const DECOMPOSITION: &str = "hook decomposition";
pub const PRIMITIVE_WEIGHT: &str = "primitive vector weight h_μ";
pub const CASIMIR: &str = "sl(n) Casimir";
