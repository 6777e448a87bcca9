use std::fmt;

use super::admissible::admissibility;
use super::cite;
use super::levels::{branch_at, tags_for, ConformalLevel, LevelTag};
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::walgebra::{
    central_charge, coset_central_charge, coset_levels, strong_generators, CosetLevels, Family,
    FamilyParams, GeneratorSpec, RepLabel, RepTag,
};

/// An annotation with the result that backs it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Note {
    pub text: String,
    pub citation: String,
}

impl Note {
    pub fn new(text: impl Into<String>, citation: &str) -> Self {
        Note {
            text: text.into(),
            citation: citation.to_string(),
        }
    }
}

impl fmt::Display for Note {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.text, self.citation)
    }
}

/// Sugawara weight `C` against conformal weight `Δ` for one generator family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CValue {
    pub rep: RepLabel,
    pub c: Rat,
    pub delta: Rat,
    pub multiplicity: u64,
}

impl CValue {
    pub fn matches(&self) -> bool {
        self.c == self.delta
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CollapseStatus {
    /// Every `C ≠ Δ`; the simple quotient is the image of the affine part.
    StronglyCollapsing { target: String },
    NotStronglyCollapsing,
    /// Some `C = Δ` and no known result settles the level.
    Inconclusive,
}

impl fmt::Display for CollapseStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CollapseStatus::StronglyCollapsing { target } => {
                write!(f, "strongly collapsing: W_k = {target}")
            }
            CollapseStatus::NotStronglyCollapsing => f.write_str("not strongly collapsing"),
            CollapseStatus::Inconclusive => f.write_str("inconclusive"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Verdict {
    pub level: ConformalLevel,
    pub coset: CosetLevels,
    pub c_values: Vec<CValue>,
    pub status: CollapseStatus,
    pub status_citation: String,
    pub notes: Vec<Note>,
}

/// Generator families that are neither affine nor the Virasoro field.
fn non_affine_generators(p: &FamilyParams) -> Vec<GeneratorSpec> {
    let mut specs: Vec<GeneratorSpec> = strong_generators(p)
        .into_iter()
        .filter(|g| !matches!(g.rep.tag, RepTag::AffinePart | RepTag::VirasoroPart))
        .collect();
    if let Family::Hook { m: 1, n } = p.family() {
        // f = 0: the off-diagonal blocks of sl(n+1) play the role of G^±
        for tag in [RepTag::Vector, RepTag::Covector] {
            specs.push(GeneratorSpec {
                weight: Rat::one(),
                rep: RepLabel::new(tag),
                multiplicity: u64::from(n),
            });
        }
    }
    specs
}

/// `C` for the `G^±` fields of a hook:
/// `(1 − δ_{k0,0})(m+n)/(2mn·k0) + (n²−1)/(2n(k1+n))`.
pub fn hook_g_c_value(m: u32, n: u32, levels: &CosetLevels) -> Rat {
    let (mi, ni) = (i64::from(m), i64::from(n));
    let heis = match &levels.k0 {
        Some(k0) if !k0.is_zero() => Rat::from(mi + ni) / (k0 * (2 * mi * ni)),
        _ => Rat::zero(),
    };
    let sl = Rat::from(ni * ni - 1) / ((&levels.k1 + ni) * (2 * ni));
    heis + sl
}

/// `C = m/(k1+m)` for the adjoint families of a rectangle.
pub fn rect_adjoint_c_value(m: u32, levels: &CosetLevels) -> Rat {
    let mi = i64::from(m);
    Rat::from(mi) / (&levels.k1 + mi)
}

fn target(p: &FamilyParams, levels: &CosetLevels) -> String {
    let mut parts = Vec::new();
    let rank = match p.family() {
        Family::Hook { n, .. } => n,
        Family::Rectangular { m, .. } => m,
        Family::GeneralPartition => 0,
    };
    if rank >= 2 {
        parts.push(format!("V_{{{}}}(sl({rank}))", levels.k1));
    }
    if let Some(k0) = &levels.k0 {
        if !k0.is_zero() {
            parts.push(format!("M({k0})"));
        }
    }
    if parts.is_empty() {
        "ℂ".to_string()
    } else {
        parts.join(" ⊗ ")
    }
}

/// Checks that `k` is conformal for `p`, compares `C` with `Δ` for every
/// non-affine generator family, and annotates the result with what is known.
pub fn collapse_check(p: &FamilyParams, k: &Rat) -> Result<Verdict> {
    let coset = coset_levels(p, k)?;
    let coset_charge = coset_central_charge(p, k)?;
    let w_charge = central_charge(p).eval(k)?;
    if w_charge != coset_charge {
        return Err(Error::NotConformal {
            level: k.clone(),
            w_charge,
            coset_charge,
        });
    }
    let level = ConformalLevel {
        k: k.clone(),
        branch: branch_at(p, k)?,
        tags: tags_for(p, k),
    };

    let c_values: Vec<CValue> = non_affine_generators(p)
        .into_iter()
        .map(|g| {
            let c = match (g.rep.tag, p.family()) {
                (RepTag::Vector | RepTag::Covector, Family::Hook { m, n }) => {
                    hook_g_c_value(m, n, &coset)
                }
                (RepTag::Adjoint, Family::Rectangular { m, .. }) => rect_adjoint_c_value(m, &coset),
                _ => Rat::zero(),
            };
            CValue {
                rep: g.rep,
                c,
                delta: g.weight,
                multiplicity: g.multiplicity,
            }
        })
        .collect();

    let settled_not_strong = match p.family() {
        Family::Hook { n, .. } => (level.has(LevelTag::H1) && n > 1) || level.has(LevelTag::H2),
        _ => false,
    };
    let (status, status_citation) = if c_values.iter().all(|c| !c.matches()) {
        let cite = match p.family() {
            Family::Rectangular { .. } => cite::RECT_COLLAPSING,
            _ if level.tags.is_empty() => cite::COLLAPSE_CRITERION,
            _ => cite::HOOK_COLLAPSING,
        };
        (CollapseStatus::StronglyCollapsing { target: target(p, &coset) }, cite)
    } else if settled_not_strong {
        (CollapseStatus::NotStronglyCollapsing, cite::HOOK_NOT_STRONG)
    } else {
        (CollapseStatus::Inconclusive, cite::COLLAPSE_CRITERION)
    };

    let notes = annotate(p, &level, &coset)?;
    Ok(Verdict {
        level,
        coset,
        c_values,
        status,
        status_citation: status_citation.to_string(),
        notes,
    })
}

fn annotate(p: &FamilyParams, level: &ConformalLevel, coset: &CosetLevels) -> Result<Vec<Note>> {
    let adm = admissibility(p, &level.k)?;
    let mut notes = vec![Note::new(
        format!(
            "k + h^∨ = {}/{}; {}",
            adm.p_prime,
            adm.p,
            if adm.admissible { "admissible" } else { "not admissible" }
        ),
        cite::ADMISSIBLE_DEF,
    )];
    match p.family() {
        Family::Hook { m, n } => {
            let h1 = level.has(LevelTag::H1) && n > 1;
            let h2 = level.has(LevelTag::H2);
            if (h1 || h2) && adm.admissible {
                notes.push(Note::new(
                    "admissible k^(1) or k^(2): not collapsing and W_k is the quotient by L − L^♮",
                    cite::ADMISSIBLE_NONCOLLAPSING,
                ));
            }
            if h1 && n == 2 {
                notes.push(Note::new(
                    format!("W_k = R^({}); not collapsing, infinite decomposition", m + 1),
                    cite::RP_REALIZATION,
                ));
            } else if h1 && !adm.admissible {
                notes.push(Note::new(
                    "expected not collapsing; open for non-admissible k^(1)",
                    cite::H1_CONJECTURE,
                ));
            }
            if h2 && n == 2 && m % 3 == 0 {
                let k0 = coset.k0.clone().unwrap_or_else(Rat::zero);
                notes.push(Note::new(
                    format!(
                        "collapsing but not strongly collapsing: W_k = V_{{{}}}(sl(2)) ⊗ M({k0})",
                        coset.k1
                    ),
                    cite::FAMILY_3P2,
                ));
            }
        }
        Family::Rectangular { q, m } => {
            if level.has(LevelTag::R2) && m == 2 {
                notes.push(Note::new(
                    format!("conjecturally not collapsing, with W_k ≅ W_{{-5/2}}(sl(4), f_sh) (q = {q})"),
                    cite::R2_CONJECTURE,
                ));
                if q == 2 {
                    notes.push(Note::new(
                        "k = -5/2 is not collapsing: W_k is an orbifold of the rank two Weyl vertex algebra",
                        cite::SHORT_NILPOTENT,
                    ));
                }
            }
        }
        Family::GeneralPartition => {}
    }
    Ok(notes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use crate::walgebra::closed_form;

    #[test]
    fn h3_at_3_3_collapses() {
        let p = FamilyParams::hook(3, 3).unwrap();
        let k = closed_form::hook_level(3, 3, 3).unwrap();
        assert_eq!(k, q(-7, 2));
        let v = collapse_check(&p, &k).unwrap();
        let g: Vec<_> = v.c_values.iter().filter(|c| c.rep.tag == RepTag::Vector).collect();
        assert_eq!(g[0].c, q(14, 9));
        assert_eq!(g[0].delta, Rat::from(2));
        assert_eq!(
            v.status,
            CollapseStatus::StronglyCollapsing {
                target: "V_{-3/2}(sl(3)) ⊗ M(1/2)".into()
            }
        );
    }

    #[test]
    fn h1_at_3_2_not_strongly_collapsing() {
        let p = FamilyParams::hook(3, 2).unwrap();
        let v = collapse_check(&p, &q(-15, 4)).unwrap();
        assert_eq!(v.status, CollapseStatus::NotStronglyCollapsing);
        let g = v.c_values.iter().find(|c| c.rep.tag == RepTag::Covector).unwrap();
        assert_eq!((g.c.clone(), g.delta.clone()), (Rat::from(2), Rat::from(2)));
        assert!(v.notes.iter().any(|n| n.citation == cite::RP_REALIZATION && n.text.contains("R^(4)")));
    }

    #[test]
    fn r1_at_2_3() {
        let p = FamilyParams::rectangular(2, 3).unwrap();
        let v = collapse_check(&p, &Rat::from(-4)).unwrap();
        assert_eq!(
            v.status,
            CollapseStatus::StronglyCollapsing {
                target: "V_{-2}(sl(3))".into()
            }
        );
        let adj: Vec<_> = v.c_values.iter().filter(|c| c.rep.tag == RepTag::Adjoint).collect();
        assert_eq!(adj.len(), 1);
        assert_eq!(adj[0].c, Rat::from(3));
    }

    #[test]
    fn r2_with_two_rows_is_inconclusive() {
        for q_ in 2..=6 {
            let p = FamilyParams::rectangular(q_, 2).unwrap();
            let k = closed_form::rect_level(2, q_, 2).unwrap();
            let v = collapse_check(&p, &k).unwrap();
            assert_eq!(v.status, CollapseStatus::Inconclusive);
            assert!(v.notes.iter().any(|n| n.citation == cite::R2_CONJECTURE));
        }
    }

    #[test]
    fn h4_drops_heisenberg_from_target() {
        let p = FamilyParams::hook(3, 2).unwrap();
        let v = collapse_check(&p, &q(-10, 3)).unwrap();
        assert_eq!(
            v.status,
            CollapseStatus::StronglyCollapsing {
                target: "V_{-4/3}(sl(2))".into()
            }
        );
        let g = v.c_values.iter().find(|c| c.rep.tag == RepTag::Vector).unwrap();
        assert_eq!(g.c, q(9, 8));
    }

    #[test]
    fn family_3p2_annotated() {
        let p = FamilyParams::hook(6, 2).unwrap();
        let k = closed_form::hook_level(2, 6, 2).unwrap();
        assert_eq!(k, q(-13, 2));
        let v = collapse_check(&p, &k).unwrap();
        assert_eq!(v.status, CollapseStatus::NotStronglyCollapsing);
        assert!(v.notes.iter().any(|n| n.citation == cite::FAMILY_3P2));
    }

    #[test]
    fn zero_nilpotent_levels() {
        let p = FamilyParams::hook(1, 3).unwrap();
        assert_eq!(collapse_check(&p, &Rat::one()).unwrap().status, CollapseStatus::NotStronglyCollapsing);
        assert_eq!(collapse_check(&p, &q(-2, 1)).unwrap().status, CollapseStatus::NotStronglyCollapsing);
        assert!(matches!(
            collapse_check(&p, &Rat::zero()).unwrap().status,
            CollapseStatus::StronglyCollapsing { .. }
        ));
    }

    #[test]
    fn non_conformal_level_rejected() {
        let p = FamilyParams::hook(3, 2).unwrap();
        match collapse_check(&p, &Rat::from(1)) {
            Err(Error::NotConformal { w_charge, coset_charge, .. }) => assert_ne!(w_charge, coset_charge),
            other => panic!("{other:?}"),
        }
        assert!(matches!(collapse_check(&p, &Rat::from(-5)), Err(Error::CriticalLevel { .. })));
    }
}
