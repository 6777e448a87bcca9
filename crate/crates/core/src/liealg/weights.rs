use std::fmt;

use crate::error::{Error, Result};
use crate::exact::Rat;

/// A dominant integral sl(n)-weight in the fundamental-weight basis
/// (`n − 1` nonnegative coordinates).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    n: usize,
    coords: Vec<u32>,
}

impl Weight {
    pub fn new(n: usize, coords: Vec<u32>) -> Result<Self> {
        let expected = n.saturating_sub(1);
        if n < 2 || coords.len() != expected {
            return Err(Error::Dimension {
                n,
                expected,
                got: coords.len(),
            });
        }
        Ok(Weight { n, coords })
    }

    pub fn zero(n: usize) -> Self {
        Weight {
            n,
            coords: vec![0; n.saturating_sub(1)],
        }
    }

    /// `mult · ω_i`, 1-based `i`.
    pub fn fundamental(n: usize, i: usize, mult: u32) -> Self {
        let mut w = Weight::zero(n);
        w.coords[i - 1] += mult;
        w
    }

    /// `ω_1 + ω_{n−1}` (equals `2ω_1` for sl(2)).
    pub fn adjoint(n: usize) -> Self {
        let mut w = Weight::fundamental(n, 1, 1);
        w.coords[n - 2] += 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| {
                if c == 1 {
                    format!("ω_{}", i + 1)
                } else {
                    format!("{c}ω_{}", i + 1)
                }
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight[sl({})]({self})", self.n)
    }
}

/// `(ω_i, ω_j) = min(i, j) − ij/n` for sl(n).
fn fundamental_pairing(n: usize, i: usize, j: usize) -> Rat {
    Rat::from(i.min(j)) - Rat::new((i * j) as i64, n as i64)
}

/// Casimir eigenvalue `(λ, λ + 2ρ)` on the irreducible sl(n)-module of
/// highest weight `λ`.
pub fn casimir_sl(n: usize, weight: &[u32]) -> Result<Rat> {
    let w = Weight::new(n, weight.to_vec())?;
    Ok(casimir(&w))
}

pub fn casimir(w: &Weight) -> Rat {
    let n = w.n;
    // λ + 2ρ has coordinates λ_i + 2
    let mut acc = Rat::zero();
    for (i, &a) in w.coords.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in w.coords.iter().enumerate() {
            let shifted = i64::from(b) + 2;
            acc += &(fundamental_pairing(n, i + 1, j + 1) * (i64::from(a) * shifted));
        }
    }
    acc
}

/// Sugawara `L(0)` eigenvalue `C(λ) / (2(k + n))` on the top of the
/// level-`k` sl(n)-module of highest weight `λ`.
pub fn sugawara_h(n: usize, k: &Rat, weight: &[u32]) -> Result<Rat> {
    let w = Weight::new(n, weight.to_vec())?;
    sugawara_weight(&w, k)
}

pub fn sugawara_weight(w: &Weight, k: &Rat) -> Result<Rat> {
    let shifted = k + Rat::from(w.n);
    if shifted.is_zero() {
        return Err(Error::CriticalLevel {
            what: format!("k = -{} is critical for sl({})", w.n, w.n),
            level: k.clone(),
        });
    }
    Ok(casimir(w) / (shifted * 2))
}
