use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Jordan type of a nilpotent element of sl(N): a weakly decreasing list of
/// positive parts summing to N ≥ 2.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts; rejects zero parts and totals below 2.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be positive, got {parts:?}"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n: u64 = parts.iter().map(|&p| u64::from(p)).sum();
        if n < 2 {
            return Err(Error::InvalidPartition(format!(
                "sl(N) needs N >= 2, got N = {n}"
            )));
        }
        Ok(Partition { parts })
    }

    /// The hook `(m, 1^n)`.
    pub fn hook(m: u32, n: u32) -> Result<Self> {
        let mut parts = vec![m];
        parts.extend(std::iter::repeat(1).take(n as usize));
        Partition::new(parts)
    }

    /// The rectangle `(q^m)`: `m` blocks of size `q`.
    pub fn rectangular(q: u32, m: u32) -> Result<Self> {
        Partition::new(vec![q; m as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Transpose of the Young diagram.
    pub fn dual(&self) -> Vec<u32> {
        let largest = self.parts[0];
        (1..=largest)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect()
    }

    /// Every partition of `n` (`n ≥ 2`), in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                prefix.push(part);
                go(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n >= 2 {
            go(n, n, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Dimension of the centralizer of the nilpotent in sl(N): Σ (λ'_i)² − 1.
    pub fn centralizer_dim(&self) -> u64 {
        self.dual().iter().map(|&d| u64::from(d) * u64::from(d)).sum::<u64>() - 1
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Parses `"a,b,c"`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                match t.parse::<u32>() {
                    Ok(0) => Err(Error::Parse(format!("zero part in partition {s:?}"))),
                    Ok(v) => Ok(v),
                    Err(_) => Err(Error::Parse(format!("bad part {t:?} in partition {s:?}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}
