use super::admissible::admissibility;
use super::cite;
use super::collapse::Note;
use super::levels::{branch_at, tags_for, ConformalLevel};
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::liealg::{sugawara_weight, Weight};
use crate::walgebra::{closed_form, coset_levels, Family, FamilyParams};

/// One `J(0)`-eigenspace `L^{sl(n)}_{k1}(λ) ⊗ M(k0, ℓ)` of the simple
/// W-algebra at `k^(1)` or `k^(2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecompSummand {
    pub charge: i64,
    /// `ℓω_1` for `ℓ ≥ 0`, `|ℓ|ω_{n−1}` otherwise.
    pub sl_weight: Weight,
    pub heis_label: Rat,
    /// Sugawara weight of `sl_weight` at level `k1`.
    pub top_conformal_weight_sl_part: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub level: ConformalLevel,
    pub k0: Rat,
    pub k1: Rat,
    pub admissible: bool,
    /// True unless admissibility already rules out collapsing.
    pub conditional: bool,
    pub summands: Vec<DecompSummand>,
    pub notes: Vec<Note>,
}

fn hook_params(p: &FamilyParams) -> Result<(u32, u32)> {
    match p.family() {
        Family::Hook { m, n } if n >= 2 => Ok((m, n)),
        _ => Err(Error::UnsupportedFamily(format!(
            "decompositions are available for hooks with n >= 2, not {p}"
        ))),
    }
}

fn check_case(i: u8) -> Result<()> {
    if i == 1 || i == 2 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("case must be 1 or 2, got {i}")))
    }
}

/// Summands with `|ℓ| ≤ charge_range` of the decomposition at `k^(i)_{m,n}`.
///
/// Fails with [`Error::Hypothesis`] when `(m+1)/(n−1)` (for `i = 1`) or
/// `m/(n+1)` (for `i = 2`) is an integer, naming the known structure result
/// when one covers the case.
pub fn decomposition(p: &FamilyParams, i: u8, charge_range: u32) -> Result<Decomposition> {
    check_case(i)?;
    let (m, n) = hook_params(p)?;
    let k = closed_form::hook_level(i, m, n).expect("defined for n >= 2");
    let levels = coset_levels(p, &k)?;
    let k0 = levels.k0.expect("hooks carry a Heisenberg level");
    let k1 = levels.k1;

    let (num, den) = if i == 1 { (m + 1, n - 1) } else { (m, n + 1) };
    if num % den == 0 {
        let condition = if i == 1 {
            format!("(m+1)/(n-1) = {} is an integer", num / den)
        } else {
            format!("m/(n+1) = {} is an integer", num / den)
        };
        let known = match (i, n) {
            (1, 2) => Some(format!(
                "W_k = R^({}), not collapsing; the decomposition is infinite [{}]",
                m + 1,
                cite::RP_REALIZATION
            )),
            (2, 2) => Some(format!(
                "collapsing: W_k = V_{{{k1}}}(sl(2)) ⊗ M({k0}) [{}]",
                cite::FAMILY_3P2
            )),
            _ => None,
        };
        return Err(Error::Hypothesis { condition, known });
    }

    let admissible = admissibility(p, &k)?.admissible;
    let mut notes = Vec::new();
    if admissible {
        notes.push(Note::new(
            "k is admissible, hence not collapsing",
            cite::ADMISSIBLE_NONCOLLAPSING,
        ));
    } else {
        notes.push(Note::new(
            "conditional on non-collapsing",
            if i == 1 { cite::H1_CONJECTURE } else { cite::DECOMPOSITION },
        ));
    }

    let n_us = n as usize;
    let r = i64::from(charge_range);
    let summands = (-r..=r)
        .map(|l| {
            let mult = l.unsigned_abs() as u32;
            let sl_weight = if l >= 0 {
                Weight::fundamental(n_us, 1, mult)
            } else {
                Weight::fundamental(n_us, n_us - 1, mult)
            };
            let top = sugawara_weight(&sl_weight, &k1)?;
            Ok(DecompSummand {
                charge: l,
                sl_weight,
                heis_label: Rat::from(l),
                top_conformal_weight_sl_part: top,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(Decomposition {
        level: ConformalLevel {
            branch: branch_at(p, &k)?,
            tags: tags_for(p, &k),
            k,
        },
        k0,
        k1,
        admissible,
        conditional: !admissible,
        summands,
        notes,
    })
}

/// `h_μ^(1) = m+1+(m+1)/(n−1)` or `h_μ^(2) = m − m/(n+1)`: the conformal
/// weight a primitive vector of weight `ω_1 + ω_{n−1}` would have.
pub fn h_mu(p: &FamilyParams, i: u8) -> Result<Rat> {
    check_case(i)?;
    let (m, n) = match p.family() {
        Family::Hook { m, n } => (i64::from(m), i64::from(n)),
        _ => return Err(Error::UnsupportedFamily(format!("h_μ is defined for hooks, not {p}"))),
    };
    if i == 1 {
        if n < 2 {
            return Err(Error::InvalidArgument("h_μ^(1) needs n >= 2".into()));
        }
        Ok(Rat::from(m + 1) + Rat::new(m + 1, n - 1))
    } else {
        Ok(Rat::from(m) - Rat::new(m, n + 1))
    }
}

/// The same weight recomputed as the Sugawara weight of the adjoint of
/// `sl(n)` at the coset level `k1` of `k^(i)`.
pub fn h_mu_sugawara(p: &FamilyParams, i: u8) -> Result<Rat> {
    check_case(i)?;
    let (m, n) = hook_params(p)?;
    let k = closed_form::hook_level(i, m, n).expect("defined for n >= 2");
    let k1 = coset_levels(p, &k)?.k1;
    sugawara_weight(&Weight::adjoint(n as usize), &k1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hook(m: u32, n: u32) -> FamilyParams {
        FamilyParams::hook(m, n).unwrap()
    }

    #[test]
    fn hook_4_3_case_1() {
        let d = decomposition(&hook(4, 3), 1, 2).unwrap();
        let weights: Vec<String> = d.summands.iter().map(|s| s.sl_weight.to_string()).collect();
        assert_eq!(weights, ["2ω_2", "ω_2", "0", "ω_1", "2ω_1"]);
        assert!(d.admissible);
        assert!(!d.conditional);
        let charges: Vec<i64> = d.summands.iter().map(|s| s.charge).collect();
        assert_eq!(charges, [-2, -1, 0, 1, 2]);
    }

    #[test]
    fn refusal_names_the_realization() {
        match decomposition(&hook(3, 2), 1, 2) {
            Err(Error::Hypothesis { condition, known }) => {
                assert!(condition.contains("(m+1)/(n-1) = 4"));
                assert!(known.unwrap().contains("R^(4)"));
            }
            other => panic!("{other:?}"),
        }
        match decomposition(&hook(6, 2), 2, 1) {
            Err(Error::Hypothesis { known: Some(k), .. }) => assert!(k.contains("V_{-3/2}(sl(2))")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            decomposition(&hook(5, 3), 1, 1),
            Err(Error::Hypothesis { known: None, .. })
        ));
    }

    #[test]
    fn range_zero_is_the_vacuum() {
        for (m, n, i) in [(4, 3, 1), (2, 2, 2), (4, 4, 1), (4, 4, 2)] {
            let d = decomposition(&hook(m, n), i, 0).unwrap();
            assert_eq!(d.summands.len(), 1);
            let s = &d.summands[0];
            assert_eq!(s.charge, 0);
            assert!(s.sl_weight.is_zero());
            assert_eq!(s.top_conformal_weight_sl_part, Rat::zero());
        }
    }

    #[test]
    fn non_admissible_output_is_conditional() {
        // (2,3), i = 1: (m+1)/(n-1) = 3/2, gcd(2, 3) = 1 → admissible
        assert!(!decomposition(&hook(2, 3), 1, 1).unwrap().conditional);
        // (4,5), i = 1: 5/4 not integral, gcd(4, 5) = 1 → admissible
        assert!(!decomposition(&hook(4, 5), 1, 1).unwrap().conditional);
        // (5,5), i = 1: 6/4 not integral, gcd(4, 6) = 2 → not admissible
        let d = decomposition(&hook(5, 5), 1, 1).unwrap();
        assert!(d.conditional);
        assert!(d.notes.iter().any(|n| n.text == "conditional on non-collapsing"));
    }

    #[test]
    fn h_mu_examples() {
        assert_eq!(h_mu(&hook(3, 2), 1).unwrap(), Rat::from(8));
        assert_eq!(h_mu(&hook(5, 4), 2).unwrap(), Rat::from(4));
        assert_eq!(h_mu(&hook(2, 3), 1).unwrap(), Rat::new(9, 2));
        assert!(h_mu(&hook(3, 1), 1).is_err());
    }

    #[test]
    fn h_mu_two_ways() {
        for m in 2..=8 {
            for n in 2..=8 {
                for i in [1, 2] {
                    let p = hook(m, n);
                    assert_eq!(h_mu(&p, i).unwrap(), h_mu_sugawara(&p, i).unwrap(), "({m},{n}) i={i}");
                }
                assert_eq!(h_mu(&hook(m, n), 1).unwrap().is_integer(), (m + 1) % (n - 1) == 0);
            }
        }
    }
}
