use std::collections::BTreeMap;
use std::fmt;

use super::Partition;
use crate::exact::Rat;

/// A half-integer, stored as twice its value so it can key ordered maps.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_rat(self) -> Rat {
        Rat::new(self.0, 2)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Dynkin grading of sl(N) attached to a nilpotent: the diagonal of `x = h/2`
/// and the weighted Dynkin diagram read off its dominant arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinGrading {
    /// One chain `(λ−1)/2, (λ−3)/2, …, −(λ−1)/2` per part, parts in order.
    pub eigenvalues: Vec<HalfInt>,
    /// `N − 1` labels in {0, 1/2, 1}.
    pub weighted_labels: Vec<HalfInt>,
}

impl DynkinGrading {
    pub fn largest_eigenvalue(&self) -> HalfInt {
        self.eigenvalues.iter().copied().max().unwrap_or_default()
    }

    pub fn smallest_eigenvalue(&self) -> HalfInt {
        self.eigenvalues.iter().copied().min().unwrap_or_default()
    }
}

pub fn dynkin_grading(p: &Partition) -> DynkinGrading {
    let eigenvalues: Vec<HalfInt> = p
        .parts()
        .iter()
        .flat_map(|&part| {
            let top = i64::from(part) - 1;
            (0..i64::from(part)).map(move |i| HalfInt(top - 2 * i))
        })
        .collect();
    let mut sorted = eigenvalues.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let weighted_labels = sorted.windows(2).map(|w| w[0] - w[1]).collect();
    DynkinGrading {
        eigenvalues,
        weighted_labels,
    }
}

/// Dimensions of the graded pieces `g_j` and of the centralizer pieces `g^f_j`
/// (the latter for `j ≤ 0`).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedDims {
    pub dim_g: BTreeMap<HalfInt, u64>,
    pub dim_gf: BTreeMap<HalfInt, u64>,
}

impl GradedDims {
    pub fn g(&self, j: HalfInt) -> u64 {
        self.dim_g.get(&j).copied().unwrap_or(0)
    }

    pub fn gf(&self, j: HalfInt) -> u64 {
        self.dim_gf.get(&j).copied().unwrap_or(0)
    }

    pub fn total_g(&self) -> u64 {
        self.dim_g.values().sum()
    }

    pub fn total_gf(&self) -> u64 {
        self.dim_gf.values().sum()
    }
}

/// Counts eigenvalue differences; the identity of gl(N) is removed from `g_0`.
pub fn graded_dims(g: &DynkinGrading) -> GradedDims {
    dims_from_eigenvalues(&g.eigenvalues)
}

pub(crate) fn dims_from_eigenvalues(eigs: &[HalfInt]) -> GradedDims {
    let mut dim_g: BTreeMap<HalfInt, u64> = BTreeMap::new();
    for &u in eigs {
        for &v in eigs {
            *dim_g.entry(u - v).or_insert(0) += 1;
        }
    }
    if let Some(d0) = dim_g.get_mut(&HalfInt::ZERO) {
        *d0 -= 1;
    }
    let dim_gf = dim_g
        .iter()
        .filter(|(j, _)| **j <= HalfInt::ZERO)
        .map(|(&j, &d)| {
            let below = dim_g.get(&(j - HalfInt::from_int(1))).copied().unwrap_or(0);
            (j, d - below)
        })
        .collect();
    GradedDims { dim_g, dim_gf }
}

/// `(x|x)` in the trace form: the sum of squared eigenvalues.
pub fn x_norm(g: &DynkinGrading) -> Rat {
    let twice_sq: i64 = g.eigenvalues.iter().map(|e| e.twice() * e.twice()).sum();
    Rat::new(twice_sq, 4)
}

/// `(h_θ|x)`: the largest minus the smallest eigenvalue of `x`.
pub fn h_theta_pairing(g: &DynkinGrading) -> Rat {
    (g.largest_eigenvalue() - g.smallest_eigenvalue()).to_rat()
}

/// Height of `f` (largest `n` with `ad(f)^n ≠ 0`, which equals `θ(2x)`) and
/// whether `f` lies in `N_p = {ad(f)^{2p} = 0}`.
pub fn height_and_np(p: &Partition, pp: u32) -> (u64, bool) {
    let g = dynkin_grading(p);
    // θ(2x) = 2(max − min); in doubled units that is max2 − min2
    let height = (g.largest_eigenvalue() - g.smallest_eigenvalue()).twice() as u64;
    (height, height < 2 * u64::from(pp))
}

/// Diagonal of the even good grading for the hook `(m, 1^n)`: an `m`-chain
/// with unit steps starting at `(m+2n)(m−1)/(2(m+n))`, then `n` copies of
/// `−m(m−1)/(2(m+n))`.
pub fn hook_good_grading(m: u32, n: u32) -> Vec<Rat> {
    let (mi, ni) = (i64::from(m), i64::from(n));
    let h = mi + ni;
    let top = Rat::new((mi + 2 * ni) * (mi - 1), 2 * h);
    let mut out: Vec<Rat> = (0..mi).map(|i| &top - i).collect();
    let tail = Rat::new(-mi * (mi - 1), 2 * h);
    out.extend(std::iter::repeat(tail).take(n as usize));
    out
}

/// Outcome of checking a candidate grading against the Dynkin one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodGradingCheck {
    /// All eigenvalue differences are integers.
    pub even: bool,
    /// The diagonal is traceless.
    pub traceless: bool,
    /// `Σ_{j≤0} dim g^f_j` under this grading.
    pub centralizer_total: u64,
    /// The same total under the Dynkin grading.
    pub dynkin_total: u64,
}

impl GoodGradingCheck {
    pub fn passes(&self) -> bool {
        self.even && self.traceless && self.centralizer_total == self.dynkin_total
    }
}

/// Checks that `diag` is an even grading whose centralizer count
/// `Σ_{j≤0} (dim g_j − dim g_{j−1})` agrees with the Dynkin grading of `p`.
pub fn check_even_good_grading(p: &Partition, diag: &[Rat]) -> GoodGradingCheck {
    let traceless = diag.iter().sum::<Rat>().is_zero();
    let mut even = true;
    let mut dims: BTreeMap<i64, u64> = BTreeMap::new();
    for u in diag {
        for v in diag {
            let d = u - v;
            match d.to_i64() {
                Some(j) => *dims.entry(j).or_insert(0) += 1,
                None => even = false,
            }
        }
    }
    if let Some(d0) = dims.get_mut(&0) {
        *d0 -= 1;
    }
    let centralizer_total = dims
        .iter()
        .filter(|(j, _)| **j <= 0)
        .map(|(j, d)| d - dims.get(&(j - 1)).copied().unwrap_or(0))
        .sum();
    let dynkin_total = graded_dims(&dynkin_grading(p)).total_gf();
    GoodGradingCheck {
        even,
        traceless,
        centralizer_total,
        dynkin_total,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn sorted(mut v: Vec<HalfInt>) -> Vec<HalfInt> {
        v.sort();
        v
    }

    #[test]
    fn hook_3_2_grading() {
        let g = dynkin_grading(&Partition::hook(3, 2).unwrap());
        assert_eq!(sorted(g.eigenvalues.clone()), vec![h(-2), h(0), h(0), h(0), h(2)]);
        assert_eq!(g.weighted_labels, vec![h(2), h(0), h(0), h(2)]);
    }

    #[test]
    fn rectangle_2_2_grading() {
        let g = dynkin_grading(&Partition::rectangular(2, 2).unwrap());
        assert_eq!(sorted(g.eigenvalues.clone()), vec![h(-1), h(-1), h(1), h(1)]);
        assert_eq!(g.weighted_labels, vec![h(0), h(2), h(0)]);
    }

    #[test]
    fn zero_nilpotent_grading() {
        let p = Partition::new(vec![1, 1]).unwrap();
        let g = dynkin_grading(&p);
        assert_eq!(g.eigenvalues, vec![h(0), h(0)]);
        assert_eq!(g.weighted_labels, vec![h(0)]);
        assert_eq!(x_norm(&g), Rat::zero());
        assert_eq!(height_and_np(&p, 1), (0, true));
    }

    #[test]
    fn hook_3_2_dims() {
        let d = graded_dims(&dynkin_grading(&Partition::hook(3, 2).unwrap()));
        assert_eq!(d.g(HalfInt::from_int(-2)), 1);
        assert_eq!(d.g(HalfInt::from_int(-1)), 6);
        assert_eq!(d.g(HalfInt::ZERO), 10);
        assert_eq!(d.gf(HalfInt::from_int(-2)), 1);
        assert_eq!(d.gf(HalfInt::from_int(-1)), 5);
        assert_eq!(d.gf(HalfInt::ZERO), 4);
        assert_eq!(d.total_g(), 24);
        assert_eq!(d.total_gf(), 10);
    }

    #[test]
    fn rectangle_2_2_dims() {
        let d = graded_dims(&dynkin_grading(&Partition::rectangular(2, 2).unwrap()));
        assert_eq!(d.g(HalfInt::from_int(-1)), 4);
        assert_eq!(d.g(HalfInt::ZERO), 7);
        assert_eq!(d.gf(HalfInt::from_int(-1)), 4);
        assert_eq!(d.gf(HalfInt::ZERO), 3);
    }

    #[test]
    fn even_hook_half_integer_rows() {
        let d = graded_dims(&dynkin_grading(&Partition::hook(4, 1).unwrap()));
        assert_eq!(d.g(h(-1)), 2);
        assert_eq!(d.gf(h(-1)), 0);
        assert_eq!(d.gf(h(-3)), 2);
        assert_eq!(d.g(h(1)), 2);
    }

    #[test]
    fn norms() {
        let hook = dynkin_grading(&Partition::hook(3, 2).unwrap());
        assert_eq!(x_norm(&hook), Rat::from(2));
        let rect = dynkin_grading(&Partition::rectangular(2, 2).unwrap());
        assert_eq!(x_norm(&rect), Rat::from(1));
        assert_eq!(h_theta_pairing(&hook), Rat::from(2));
    }

    #[test]
    fn heights() {
        let p = Partition::hook(3, 2).unwrap();
        assert_eq!(height_and_np(&p, 3), (4, true));
        assert_eq!(height_and_np(&p, 2), (4, false));
    }

    #[test]
    fn good_grading_for_hooks() {
        assert_eq!(
            hook_good_grading(3, 2),
            vec![q(7, 5), q(2, 5), q(-3, 5), q(-3, 5), q(-3, 5)]
        );
        for m in 1..=7 {
            for n in 1..=5 {
                let p = Partition::hook(m, n).unwrap();
                let check = check_even_good_grading(&p, &hook_good_grading(m, n));
                assert!(check.passes(), "hook ({m},{n}): {check:?}");
            }
        }
        // the Dynkin diagonal of an even hook is not even
        let p = Partition::hook(4, 2).unwrap();
        let dynkin: Vec<Rat> = dynkin_grading(&p).eigenvalues.iter().map(|e| e.to_rat()).collect();
        assert!(!check_even_good_grading(&p, &dynkin).even);
    }
}
