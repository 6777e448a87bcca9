use std::fmt;

use crate::error::Result;
use crate::exact::{rational_roots, Rat};
use crate::walgebra::{
    central_charge, closed_form, coset_central_charge, coset_central_charge_symbolic,
    coset_levels, Family, FamilyParams,
};

/// Which side of the Heisenberg discontinuity a level sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `k0 ≠ 0` (always, for rectangles).
    Generic,
    /// `k0 = 0`: the Heisenberg factor drops out of the coset charge.
    Degenerate,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Generic => "generic",
            Branch::Degenerate => "k0 = 0",
        })
    }
}

/// Closed-form family a level belongs to: `H1..H4` are the hook levels
/// `k^(1..4)_{m,n}`, `R1..R3` the rectangular levels `k^[1..3]_{m,q}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LevelTag {
    H1,
    H2,
    H3,
    H4,
    R1,
    R2,
    R3,
}

impl LevelTag {
    pub const HOOK: [LevelTag; 4] = [LevelTag::H1, LevelTag::H2, LevelTag::H3, LevelTag::H4];
    pub const RECT: [LevelTag; 3] = [LevelTag::R1, LevelTag::R2, LevelTag::R3];

    /// The index `i` in `k^(i)` or `k^[i]`.
    pub fn index(self) -> u8 {
        match self {
            LevelTag::H1 | LevelTag::R1 => 1,
            LevelTag::H2 | LevelTag::R2 => 2,
            LevelTag::H3 | LevelTag::R3 => 3,
            LevelTag::H4 => 4,
        }
    }

    /// The closed-form value of this level for `p`, if it is defined there.
    pub fn value(self, p: &FamilyParams) -> Option<Rat> {
        match (self, p.family()) {
            (LevelTag::H1 | LevelTag::H2 | LevelTag::H3 | LevelTag::H4, Family::Hook { m, n }) => {
                closed_form::hook_level(self.index(), m, n)
            }
            (LevelTag::R1 | LevelTag::R2 | LevelTag::R3, Family::Rectangular { q, m }) => {
                closed_form::rect_level(self.index(), q, m)
            }
            _ => None,
        }
    }
}

impl fmt::Display for LevelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A level at which `c(k)` equals the Sugawara charge of the affine
/// subalgebra, with every closed-form family it matches.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConformalLevel {
    pub k: Rat,
    pub branch: Branch,
    /// Empty when the level matches no closed form; two entries for a
    /// coincidence such as `k^(2) = k^(3)` at `n = m − 1`.
    pub tags: Vec<LevelTag>,
}

impl ConformalLevel {
    pub fn has(&self, tag: LevelTag) -> bool {
        self.tags.contains(&tag)
    }

    pub fn tag_string(&self) -> String {
        let tags: Vec<String> = self.tags.iter().map(ToString::to_string).collect();
        tags.join("=")
    }
}

pub(crate) fn tags_for(p: &FamilyParams, k: &Rat) -> Vec<LevelTag> {
    let candidates: &[LevelTag] = match p.family() {
        Family::Hook { .. } => &LevelTag::HOOK,
        Family::Rectangular { .. } => &LevelTag::RECT,
        Family::GeneralPartition => &[],
    };
    candidates
        .iter()
        .copied()
        .filter(|t| t.value(p).as_ref() == Some(k))
        .collect()
}

/// Both charges at `k`, or `None` when either side is undefined there.
pub(crate) fn charges_at(p: &FamilyParams, k: &Rat) -> Result<Option<(Rat, Rat)>> {
    let w = match central_charge(p).eval(k) {
        Ok(c) => c,
        Err(_) => return Ok(None),
    };
    match coset_central_charge(p, k) {
        Ok(c) => Ok(Some((w, c))),
        Err(crate::Error::CriticalLevel { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

pub(crate) fn branch_at(p: &FamilyParams, k: &Rat) -> Result<Branch> {
    let levels = coset_levels(p, k)?;
    Ok(match levels.k0 {
        Some(k0) if k0.is_zero() => Branch::Degenerate,
        _ => Branch::Generic,
    })
}

/// All levels at which the affine subalgebra is conformally embedded, in
/// increasing order.
///
/// Roots of the cleared numerator of `c(k) − c_coset(k)` on the generic
/// branch are kept when both sides are defined there and `k0 ≠ 0`; for hooks
/// the single `k0 = 0` point is then tested on its own. Levels where `k` or
/// the coset level is critical are dropped.
pub fn conformal_levels(p: &FamilyParams) -> Result<Vec<ConformalLevel>> {
    let diff = central_charge(p) - coset_central_charge_symbolic(p)?;
    let mut candidates: Vec<Rat> = rational_roots(diff.num())?
        .into_iter()
        .map(|r| r.value)
        .collect();
    if let Family::Hook { m, n } = p.family() {
        candidates.push(closed_form::hook_degenerate_level(m, n));
    }

    let mut out: Vec<ConformalLevel> = Vec::new();
    for k in candidates {
        if out.iter().any(|l| l.k == k) {
            continue;
        }
        let Some((w, c)) = charges_at(p, &k)? else {
            continue;
        };
        if w != c {
            continue;
        }
        out.push(ConformalLevel {
            branch: branch_at(p, &k)?,
            tags: tags_for(p, &k),
            k,
        });
    }
    out.sort_by(|a, b| a.k.cmp(&b.k));
    Ok(out)
}
