use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::liealg::h_theta_pairing;
use crate::walgebra::FamilyParams;

/// `k + h^∨ = p'/p` in lowest terms with the admissibility verdict.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdmissibleForm {
    /// Numerator of `k + h^∨`; carries the sign, so it is nonpositive for
    /// levels at or below the critical line.
    pub p_prime: i64,
    pub p: i64,
    pub admissible: bool,
    /// `(p' + 1 − h^∨)(p − (h_θ|x))`, present only for admissible levels.
    pub d_kw: Option<Rat>,
}

/// Writes `k + h^∨` as `p'/p` and tests `p' ≥ h^∨`.
pub fn admissibility(params: &FamilyParams, k: &Rat) -> Result<AdmissibleForm> {
    let h = i64::from(params.h_vee());
    let shifted = k + h;
    if shifted.is_zero() {
        return Err(Error::CriticalLevel {
            what: format!("k + h^∨ = 0 for sl({h})"),
            level: k.clone(),
        });
    }
    let too_big = || Error::InvalidArgument(format!("level {k} has a numerator or denominator beyond 64 bits"));
    let p_prime = shifted.numer().to_i64().ok_or_else(too_big)?;
    let p = shifted.denom().to_i64().ok_or_else(too_big)?;
    let admissible = p_prime >= h;
    let d_kw = admissible.then(|| {
        let pairing = h_theta_pairing(&params.grading());
        Rat::from(p_prime + 1 - h) * (Rat::from(p) - pairing)
    });
    Ok(AdmissibleForm {
        p_prime,
        p,
        admissible,
        d_kw,
    })
}

/// `gcd(n − 1, m + 1) = 1`: the admissibility condition for `k^(1)_{m,n}`.
pub fn hook_h1_gcd_admissible(m: u32, n: u32) -> bool {
    (n - 1).gcd(&(m + 1)) == 1
}

/// `gcd(n + 1, m) = 1`: the admissibility condition for `k^(2)_{m,n}`.
pub fn hook_h2_gcd_admissible(m: u32, n: u32) -> bool {
    (n + 1).gcd(&m) == 1
}
