use std::fmt;

use crate::error::{Error, Result};
use crate::liealg::{dynkin_grading, graded_dims, DynkinGrading, GradedDims, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Partition `(m, 1^n)` of `N = m + n`.
    Hook { m: u32, n: u32 },
    /// Partition `(q^m)` of `N = qm`.
    Rectangular { q: u32, m: u32 },
    GeneralPartition,
}

/// A nilpotent of sl(N) together with the family it belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    family: Family,
    partition: Partition,
}

impl FamilyParams {
    pub fn hook(m: u32, n: u32) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidPartition(format!(
                "hook (m, 1^n) needs m >= 1 and n >= 1, got m = {m}, n = {n}"
            )));
        }
        Ok(FamilyParams {
            family: Family::Hook { m, n },
            partition: Partition::hook(m, n)?,
        })
    }

    pub fn rectangular(q: u32, m: u32) -> Result<Self> {
        if q < 2 || m < 2 {
            return Err(Error::InvalidPartition(format!(
                "rectangle (q^m) needs q >= 2 and m >= 2, got q = {q}, m = {m}"
            )));
        }
        Ok(FamilyParams {
            family: Family::Rectangular { q, m },
            partition: Partition::rectangular(q, m)?,
        })
    }

    /// Recognizes hooks `(m, 1^n)` with `n ≥ 1` (including `(1^N)` as
    /// `m = 1`) and rectangles `(q^m)` with `q, m ≥ 2`.
    pub fn from_partition(p: Partition) -> Self {
        let parts = p.parts();
        let first = parts[0];
        let family = if parts.len() >= 2 && parts[1..].iter().all(|&x| x == 1) {
            Family::Hook {
                m: first,
                n: parts.len() as u32 - 1,
            }
        } else if parts.len() >= 2 && first >= 2 && parts.iter().all(|&x| x == first) {
            Family::Rectangular {
                q: first,
                m: parts.len() as u32,
            }
        } else {
            Family::GeneralPartition
        };
        FamilyParams {
            family,
            partition: p,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Dual Coxeter number of sl(N), i.e. `N`.
    pub fn h_vee(&self) -> u32 {
        self.partition.n()
    }

    pub fn grading(&self) -> DynkinGrading {
        dynkin_grading(&self.partition)
    }

    pub fn dims(&self) -> GradedDims {
        graded_dims(&self.grading())
    }

    /// Name of the centralizer `g^♮` of the sl(2)-triple.
    pub fn g_natural(&self) -> String {
        match self.family {
            Family::Hook { m: 1, n } => format!("sl({})", n + 1),
            Family::Hook { n, .. } => format!("gl({n})"),
            Family::Rectangular { m, .. } => format!("sl({m})"),
            Family::GeneralPartition => "g^♮".to_string(),
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Hook { m, n } => write!(f, "hook (m, n) = ({m}, {n}) in sl({})", m + n),
            Family::Rectangular { q, m } => {
                write!(f, "rectangle (q, m) = ({q}, {m}) in sl({})", q * m)
            }
            Family::GeneralPartition => {
                write!(f, "partition {} in sl({})", self.partition, self.h_vee())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classify(s: &str) -> Family {
        FamilyParams::from_partition(s.parse().unwrap()).family()
    }

    #[test]
    fn classification() {
        assert_eq!(classify("3,1,1"), Family::Hook { m: 3, n: 2 });
        assert_eq!(classify("1,1,1"), Family::Hook { m: 1, n: 2 });
        assert_eq!(classify("2,2"), Family::Rectangular { q: 2, m: 2 });
        assert_eq!(classify("2,1"), Family::Hook { m: 2, n: 1 });
        assert_eq!(classify("3,2"), Family::GeneralPartition);
        assert_eq!(classify("4"), Family::GeneralPartition);
    }

    #[test]
    fn invalid_families() {
        assert!(FamilyParams::hook(3, 0).is_err());
        assert!(FamilyParams::hook(0, 2).is_err());
        assert!(FamilyParams::rectangular(1, 3).is_err());
        assert_eq!(FamilyParams::hook(3, 2).unwrap().h_vee(), 5);
        assert_eq!(FamilyParams::rectangular(2, 3).unwrap().h_vee(), 6);
    }
}
