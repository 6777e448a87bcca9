use std::fmt;

use super::{Family, FamilyParams};
use crate::exact::Rat;
use crate::liealg::HalfInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepTag {
    AffinePart,
    VirasoroPart,
    Trivial,
    Vector,
    Covector,
    Adjoint,
}

impl fmt::Display for RepTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepTag::AffinePart => "affine",
            RepTag::VirasoroPart => "virasoro",
            RepTag::Trivial => "trivial",
            RepTag::Vector => "vector",
            RepTag::Covector => "covector",
            RepTag::Adjoint => "adjoint",
        })
    }
}

/// How a family of generators transforms under `g^♮`, with its `J(0)`
/// charge (hook family only; zero otherwise).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RepLabel {
    pub tag: RepTag,
    pub charge: Rat,
}

impl RepLabel {
    pub fn new(tag: RepTag) -> Self {
        let charge = match tag {
            RepTag::Vector => Rat::one(),
            RepTag::Covector => -Rat::one(),
            _ => Rat::zero(),
        };
        RepLabel { tag, charge }
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.charge.is_zero() {
            write!(f, "{}", self.tag)
        } else {
            write!(f, "{} (charge {})", self.tag, self.charge)
        }
    }
}

/// `multiplicity` strong generators of conformal weight `weight` spanning a
/// `g^♮`-module of type `rep`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub weight: Rat,
    pub rep: RepLabel,
    pub multiplicity: u64,
}

impl GeneratorSpec {
    fn new(weight: Rat, tag: RepTag, multiplicity: u64) -> Self {
        GeneratorSpec {
            weight,
            rep: RepLabel::new(tag),
            multiplicity,
        }
    }
}

/// Strong generators of `W^k(sl(N), x, f)`: one family per graded piece of
/// `g^f`, a generator from `g^f_{−j}` having conformal weight `j + 1`.
pub fn strong_generators(p: &FamilyParams) -> Vec<GeneratorSpec> {
    let mut out = match p.family() {
        Family::Hook { m: 1, n } => {
            let dim = u64::from((n + 1) * (n + 1) - 1);
            vec![GeneratorSpec::new(Rat::one(), RepTag::AffinePart, dim)]
        }
        Family::Hook { m, n } => {
            let n = u64::from(n);
            let mut v = vec![
                GeneratorSpec::new(Rat::one(), RepTag::AffinePart, n * n),
                GeneratorSpec::new(Rat::from(2), RepTag::VirasoroPart, 1),
            ];
            v.extend((3..=m).map(|i| GeneratorSpec::new(Rat::from(i), RepTag::Trivial, 1)));
            let g_weight = Rat::new(i64::from(m) + 1, 2);
            v.push(GeneratorSpec::new(g_weight.clone(), RepTag::Vector, n));
            v.push(GeneratorSpec::new(g_weight, RepTag::Covector, n));
            v
        }
        Family::Rectangular { q, m } => {
            let adj = u64::from(m * m - 1);
            let mut v = vec![
                GeneratorSpec::new(Rat::one(), RepTag::AffinePart, adj),
                GeneratorSpec::new(Rat::from(2), RepTag::VirasoroPart, 1),
            ];
            v.extend((3..=q).map(|i| GeneratorSpec::new(Rat::from(i), RepTag::Trivial, 1)));
            v.extend((2..=q).map(|i| GeneratorSpec::new(Rat::from(i), RepTag::Adjoint, adj)));
            v
        }
        Family::GeneralPartition => generic_generators(p),
    };
    out.sort_by(|a, b| a.weight.cmp(&b.weight).then(a.rep.cmp(&b.rep)));
    out
}

/// Weights and multiplicities straight from `dim g^f_j`, with only the
/// affine/Virasoro/trivial labels.
pub fn generic_generators(p: &FamilyParams) -> Vec<GeneratorSpec> {
    let dims = p.dims();
    let mut out = Vec::new();
    for (&j, &d) in dims.dim_gf.iter().rev() {
        if d == 0 {
            continue;
        }
        let weight = (HalfInt::from_int(1) - j).to_rat();
        if j == HalfInt::ZERO {
            out.push(GeneratorSpec::new(weight, RepTag::AffinePart, d));
        } else if j == HalfInt::from_int(-1) {
            out.push(GeneratorSpec::new(weight.clone(), RepTag::VirasoroPart, 1));
            if d > 1 {
                out.push(GeneratorSpec::new(weight, RepTag::Trivial, d - 1));
            }
        } else {
            out.push(GeneratorSpec::new(weight, RepTag::Trivial, d));
        }
    }
    out
}

/// Sorted `(weight, multiplicity)` pairs with equal weights merged.
pub fn weight_multiset(specs: &[GeneratorSpec]) -> Vec<(Rat, u64)> {
    let mut map = std::collections::BTreeMap::new();
    for s in specs {
        *map.entry(s.weight.clone()).or_insert(0) += s.multiplicity;
    }
    map.into_iter().collect()
}
