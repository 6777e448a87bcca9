use super::{Family, FamilyParams};
use crate::error::{Error, Result};
use crate::exact::{Poly, Rat, RationalFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CosetType {
    /// `g^♮ = gl(n)`: a Heisenberg factor plus `sl(n)`.
    GlN,
    /// `g^♮ = sl(m)`.
    SlM,
}

/// Levels of the affine vertex subalgebra generated by `g^♮` at W-level `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CosetLevels {
    /// Heisenberg level; absent for the rectangular family.
    pub k0: Option<Rat>,
    /// Level of the simple part.
    pub k1: Rat,
    pub coset_type: CosetType,
}

/// `k0 = k + (m−1)(m+n)/m`, `k1 = k + m − 1` for hooks;
/// `k1 = qk + mq² − mq` for rectangles.
pub fn coset_levels(p: &FamilyParams, k: &Rat) -> Result<CosetLevels> {
    let h = Rat::from(p.h_vee());
    if (k + &h).is_zero() {
        return Err(Error::CriticalLevel {
            what: format!("k = -h^∨ = -{h} is critical for sl({h})"),
            level: k.clone(),
        });
    }
    match p.family() {
        Family::Hook { m, n } => {
            let (mi, ni) = (i64::from(m), i64::from(n));
            Ok(CosetLevels {
                k0: Some(k + Rat::new((mi - 1) * (mi + ni), mi)),
                k1: k + (mi - 1),
                coset_type: CosetType::GlN,
            })
        }
        Family::Rectangular { q, m } => {
            let (qi, mi) = (i64::from(q), i64::from(m));
            Ok(CosetLevels {
                k0: None,
                k1: k * qi + (mi * qi * qi - mi * qi),
                coset_type: CosetType::SlM,
            })
        }
        Family::GeneralPartition => Err(unsupported(p)),
    }
}

fn unsupported(p: &FamilyParams) -> Error {
    Error::UnsupportedFamily(format!(
        "coset structure is only available for hooks and rectangles, not {}",
        p.partition()
    ))
}

/// Rank `r` of the simple part `sl(r)` of `g^♮`.
fn simple_rank(p: &FamilyParams) -> Result<u32> {
    match p.family() {
        Family::Hook { n, .. } => Ok(n),
        Family::Rectangular { m, .. } => Ok(m),
        Family::GeneralPartition => Err(unsupported(p)),
    }
}

/// Sugawara central charge of the affine subalgebra at level `k`, including
/// the Heisenberg `+1` exactly when `k0 ≠ 0`.
pub fn coset_central_charge(p: &FamilyParams, k: &Rat) -> Result<Rat> {
    let levels = coset_levels(p, k)?;
    let r = i64::from(simple_rank(p)?);
    let shifted = &levels.k1 + r;
    if shifted.is_zero() {
        return Err(Error::CriticalLevel {
            what: format!("coset level k1 = -{r} is critical for sl({r})"),
            level: k.clone(),
        });
    }
    let simple = &levels.k1 * (r * r - 1) / shifted;
    let heisenberg = match &levels.k0 {
        Some(k0) if !k0.is_zero() => Rat::one(),
        _ => Rat::zero(),
    };
    Ok(simple + heisenberg)
}

/// The coset central charge as a rational function of `k` on the branch
/// `k0 ≠ 0` (always, for rectangles).
pub fn coset_central_charge_symbolic(p: &FamilyParams) -> Result<RationalFn> {
    let r = i64::from(simple_rank(p)?);
    let k1 = coset_k1_poly(p)?;
    let simple = RationalFn::new(
        k1.scale(&Rat::from(r * r - 1)),
        &k1 + &Poly::constant(Rat::from(r)),
    );
    Ok(match p.family() {
        Family::Hook { .. } => simple + 1,
        _ => simple,
    })
}

/// `k1` as a polynomial in `k`.
pub fn coset_k1_poly(p: &FamilyParams) -> Result<Poly> {
    match p.family() {
        Family::Hook { m, .. } => Ok(Poly::shifted_var(Rat::from(i64::from(m) - 1))),
        Family::Rectangular { q, m } => {
            let (qi, mi) = (i64::from(q), i64::from(m));
            Ok(Poly::from_ints(&[mi * qi * qi - mi * qi, qi]))
        }
        Family::GeneralPartition => Err(unsupported(p)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use crate::walgebra::closed_form;

    #[test]
    fn hook_levels() {
        let p = FamilyParams::hook(3, 2).unwrap();
        let l = coset_levels(&p, &q(-15, 4)).unwrap();
        assert_eq!(l.k0, Some(q(-5, 12)));
        assert_eq!(l.k1, q(-7, 4));
        assert_eq!(l.coset_type, CosetType::GlN);
        for m in 1..=6 {
            for n in 1..=6 {
                let p = FamilyParams::hook(m, n).unwrap();
                let k4 = closed_form::hook_level(4, m, n).unwrap();
                assert_eq!(coset_levels(&p, &k4).unwrap().k0, Some(Rat::zero()));
            }
        }
        assert!(matches!(
            coset_levels(&p, &Rat::from(-5)),
            Err(Error::CriticalLevel { .. })
        ));
    }

    #[test]
    fn rectangle_levels() {
        let p = FamilyParams::rectangular(2, 3).unwrap();
        let l = coset_levels(&p, &Rat::from(-4)).unwrap();
        assert_eq!(l.k0, None);
        assert_eq!(l.k1, Rat::from(-2));
    }

    #[test]
    fn coset_charges() {
        let hook = FamilyParams::hook(3, 2).unwrap();
        assert_eq!(coset_central_charge(&hook, &Rat::from(-3)).unwrap(), Rat::from(-2));
        for m in 1..=6u32 {
            for n in 2..=6u32 {
                let p = FamilyParams::hook(m, n).unwrap();
                let k4 = closed_form::hook_level(4, m, n).unwrap();
                let expected = -Rat::from((m as i64 - 1) * (n as i64 * n as i64 - 1));
                assert_eq!(coset_central_charge(&p, &k4).unwrap(), expected);
            }
        }
        let rect = FamilyParams::rectangular(2, 3).unwrap();
        assert_eq!(coset_central_charge(&rect, &Rat::from(-4)).unwrap(), Rat::from(-16));
        // k1 = -3 is critical for sl(3)
        assert!(matches!(
            coset_central_charge(&rect, &q(-9, 2)),
            Err(Error::CriticalLevel { .. })
        ));
    }

    #[test]
    fn symbolic_matches_pointwise_off_the_degenerate_point() {
        let cases = [
            FamilyParams::hook(3, 2).unwrap(),
            FamilyParams::hook(5, 4).unwrap(),
            FamilyParams::rectangular(3, 2).unwrap(),
            FamilyParams::rectangular(2, 4).unwrap(),
        ];
        for p in &cases {
            let sym = coset_central_charge_symbolic(p).unwrap();
            for num in -40..40 {
                let k = q(num, 7);
                let k0_zero = coset_levels(p, &k)
                    .ok()
                    .and_then(|l| l.k0)
                    .is_some_and(|k0| k0.is_zero());
                if let (Ok(a), Ok(b)) = (coset_central_charge(p, &k), sym.eval(&k)) {
                    if !k0_zero {
                        assert_eq!(a, b, "{p} at {k}");
                    }
                }
            }
        }
        let rect = FamilyParams::rectangular(3, 4).unwrap();
        assert!(coset_central_charge_symbolic(&rect)
            .unwrap()
            .equals(&closed_form::rect_coset_central_charge(3, 4)));
    }

    #[test]
    fn general_partitions_unsupported() {
        let p = FamilyParams::from_partition("3,2".parse().unwrap());
        assert!(matches!(coset_levels(&p, &Rat::zero()), Err(Error::UnsupportedFamily(_))));
        assert!(coset_central_charge_symbolic(&p).is_err());
    }
}
