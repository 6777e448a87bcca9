use std::collections::BTreeMap;

use super::report::{Check, Report};
use crate::conformal::{
    admissibility, cite, collapse_check, conformal_levels, h_mu, h_mu_sugawara,
    hook_g_c_value, hook_h1_gcd_admissible, hook_h2_gcd_admissible, rect_adjoint_c_value, Branch,
    CollapseStatus, LevelTag,
};
use crate::error::{Error, Result};
use crate::exact::{rational_roots, Poly, Rat};
use crate::liealg::{casimir_sl, height_and_np, HalfInt, Partition};
use crate::walgebra::{
    central_charge, closed_form, coset_central_charge_symbolic, coset_levels, strong_generators,
    weight_multiset, FamilyParams,
};

/// Section names accepted by `--only`.
pub const SECTIONS: [&str; 9] = [
    "central-charge",
    "tables",
    "levels",
    "collapse",
    "c-values",
    "admissibility",
    "heights",
    "h-mu",
    "properties",
];

fn hook(m: u32, n: u32) -> FamilyParams {
    FamilyParams::hook(m, n).expect("valid hook")
}

fn rect(q: u32, m: u32) -> FamilyParams {
    FamilyParams::rectangular(q, m).expect("valid rectangle")
}

/// Runs every check, or those of one section.
pub fn cmd_verify_paper(only: Option<&str>) -> Result<Report> {
    if let Some(s) = only {
        if !SECTIONS.contains(&s) {
            return Err(Error::InvalidArgument(format!(
                "unknown section {s:?}; expected one of {}",
                SECTIONS.join(", ")
            )));
        }
    }
    let mut r = Report::new("verify-paper");
    if let Some(s) = only {
        r.query("only", s);
    }
    for section in SECTIONS {
        if only.is_some_and(|o| o != section) {
            continue;
        }
        let checks = match section {
            "central-charge" => central_charge_checks(),
            "tables" => table_checks(),
            "levels" => level_checks(),
            "collapse" => collapse_checks(),
            "c-values" => c_value_checks(),
            "admissibility" => admissibility_checks(),
            "heights" => height_checks(),
            "h-mu" => h_mu_checks(),
            _ => property_checks(),
        };
        r.checks.extend(checks);
    }
    Ok(r)
}

/// Collects failures of `f` over a grid into one check.
fn sweep<I, T, F>(section: &str, name: &str, citation: &str, grid: I, f: F) -> Check
where
    I: IntoIterator<Item = T>,
    T: std::fmt::Debug,
    F: Fn(&T) -> std::result::Result<(), String>,
{
    let mut total = 0;
    let mut failures = Vec::new();
    for point in grid {
        total += 1;
        if let Err(msg) = f(&point) {
            failures.push(format!("{point:?}: {msg}"));
        }
    }
    let detail = if failures.is_empty() {
        format!("{total} cases")
    } else {
        let shown: Vec<_> = failures.iter().take(3).cloned().collect();
        format!("{} of {total} cases fail; {}", failures.len(), shown.join("; "))
    };
    Check {
        section: section.to_string(),
        name: name.to_string(),
        passed: failures.is_empty(),
        detail,
        citation: citation.to_string(),
    }
}

fn grid(a: std::ops::RangeInclusive<u32>, b: std::ops::RangeInclusive<u32>) -> Vec<(u32, u32)> {
    a.flat_map(|x| b.clone().map(move |y| (x, y))).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn central_charge_checks() -> Vec<Check> {
    vec![
        sweep("central-charge", "hook engine = closed form", cite::HOOK_CENTRAL_CHARGE, grid(1..=8, 1..=8), |&(m, n)| {
            ensure(central_charge(&hook(m, n)).equals(&closed_form::hook_central_charge(m, n)), || "differs".into())
        }),
        sweep("central-charge", "rectangle engine = closed form", cite::RECT_CENTRAL_CHARGE, grid(2..=6, 2..=6), |&(q, m)| {
            ensure(central_charge(&rect(q, m)).equals(&closed_form::rect_central_charge(q, m)), || "differs".into())
        }),
    ]
}

fn table_checks() -> Vec<Check> {
    let hook_rows = |m: u32, n: u32| -> std::result::Result<(), String> {
        let dims = hook(m, n).dims();
        for t in 0..=(2 * m) {
            let j = HalfInt::from_twice(-(t as i64));
            let got = (dims.g(j), dims.gf(j));
            let want = closed_form::hook_table_row(m, n, t).unwrap_or((0, 0));
            if got != want {
                return Err(format!("j = {}: {got:?} vs {want:?}", HalfInt::from_twice(t as i64)));
            }
        }
        Ok(())
    };
    let odd: Vec<_> = grid(2..=8, 1..=6).into_iter().filter(|(m, _)| m % 2 == 1).collect();
    let even: Vec<_> = grid(2..=8, 1..=6).into_iter().filter(|(m, _)| m % 2 == 0).collect();
    let all_partitions: Vec<Partition> = (2..=12).flat_map(Partition::all).collect();
    vec![
        sweep("tables", "hook rows, m odd", cite::HOOK_TABLE_ODD, odd, |&(m, n)| hook_rows(m, n)),
        sweep("tables", "hook rows, m even", cite::HOOK_TABLE_EVEN, even, |&(m, n)| hook_rows(m, n)),
        sweep("tables", "rectangle rows", cite::RECT_TABLE, grid(2..=6, 2..=6), |&(q, m)| {
            let dims = rect(q, m).dims();
            for t in 0..=(2 * q) {
                let j = HalfInt::from_twice(-(t as i64));
                let want = closed_form::rect_table_row(q, m, t).unwrap_or((0, 0));
                ensure((dims.g(j), dims.gf(j)) == want, || format!("2j = {t}"))?;
            }
            Ok(())
        }),
        sweep("tables", "dim g^f = Σλ'² − 1, all partitions of N ≤ 12", cite::COMPUTED, all_partitions, |p| {
            let total = FamilyParams::from_partition(p.clone()).dims().total_gf();
            ensure(total == p.centralizer_dim(), || format!("{total} vs {}", p.centralizer_dim()))
        }),
    ]
}

fn expected_hook_levels(m: u32, n: u32) -> Vec<Rat> {
    let mut v: Vec<Rat> = (1..=4).filter_map(|i| closed_form::hook_level(i, m, n)).collect();
    v.sort();
    v.dedup();
    v
}

fn expected_rect_levels(q: u32, m: u32) -> Vec<Rat> {
    let mut v: Vec<Rat> = (1..=3).filter_map(|i| closed_form::rect_level(i, q, m)).collect();
    v.sort();
    v.dedup();
    v
}

fn level_checks() -> Vec<Check> {
    vec![
        sweep("levels", "hook solver = {k^(1..4)}", cite::HOOK_LEVELS, grid(2..=8, 1..=8), |&(m, n)| {
            let got: Vec<Rat> = conformal_levels(&hook(m, n)).map_err(|e| e.to_string())?.into_iter().map(|l| l.k).collect();
            let want = expected_hook_levels(m, n);
            ensure(got == want, || format!("{got:?} vs {want:?}"))
        }),
        sweep("levels", "k0 = 0 branch gives exactly k^(4)", cite::HOOK_LEVELS, grid(2..=8, 2..=8), |&(m, n)| {
            let levels = conformal_levels(&hook(m, n)).map_err(|e| e.to_string())?;
            let degenerate: Vec<_> = levels.iter().filter(|l| l.branch == Branch::Degenerate).collect();
            ensure(
                degenerate.len() == 1 && degenerate[0].tags == vec![LevelTag::H4],
                || format!("{degenerate:?}"),
            )
        }),
        sweep("levels", "rectangle solver = {k^[1..3]}", cite::RECT_LEVELS, grid(2..=6, 2..=6), |&(q, m)| {
            let got: Vec<Rat> = conformal_levels(&rect(q, m)).map_err(|e| e.to_string())?.into_iter().map(|l| l.k).collect();
            let want = expected_rect_levels(q, m);
            ensure(got == want, || format!("{got:?} vs {want:?}"))
        }),
    ]
}

fn status_at(p: &FamilyParams, k: &Rat) -> std::result::Result<CollapseStatus, String> {
    collapse_check(p, k).map(|v| v.status).map_err(|e| e.to_string())
}

fn collapse_checks() -> Vec<Check> {
    let strongly = |s: &CollapseStatus| matches!(s, CollapseStatus::StronglyCollapsing { .. });
    vec![
        sweep("collapse", "k^(3) strongly collapsing iff n ≠ m−1", cite::HOOK_COLLAPSING, grid(2..=8, 1..=8), |&(m, n)| {
            let k = closed_form::hook_level(3, m, n).unwrap();
            let s = status_at(&hook(m, n), &k)?;
            ensure(strongly(&s) == (n != m - 1), || s.to_string())
        }),
        sweep("collapse", "k^(4) always strongly collapsing", cite::HOOK_COLLAPSING, grid(2..=8, 1..=8), |&(m, n)| {
            let s = status_at(&hook(m, n), &closed_form::hook_level(4, m, n).unwrap())?;
            ensure(strongly(&s), || s.to_string())
        }),
        sweep("collapse", "k^(1) (n > 1) and k^(2) not strongly collapsing", cite::HOOK_NOT_STRONG, grid(2..=8, 1..=8), |&(m, n)| {
            let mut ks = vec![closed_form::hook_level(2, m, n).unwrap()];
            ks.extend(closed_form::hook_level(1, m, n));
            for k in ks {
                let s = status_at(&hook(m, n), &k)?;
                ensure(s == CollapseStatus::NotStronglyCollapsing, || format!("{k}: {s}"))?;
            }
            Ok(())
        }),
        sweep("collapse", "rectangles: k^[1], k^[3] collapse to V_{-mq/(q+1)}, V_1", cite::RECT_COLLAPSING, grid(2..=6, 2..=6), |&(q, m)| {
            let p = rect(q, m);
            for (i, target_level) in [(1, Rat::new(-i64::from(m * q), i64::from(q + 1))), (3, Rat::one())] {
                let k = closed_form::rect_level(i, q, m).unwrap();
                let want = CollapseStatus::StronglyCollapsing { target: format!("V_{{{target_level}}}(sl({m}))") };
                let s = status_at(&p, &k)?;
                ensure(s == want, || format!("k^[{i}]: {s}"))?;
            }
            Ok(())
        }),
        sweep("collapse", "rectangles: k^[2] collapses to V_{-1} for m ≥ 3, inconclusive for m = 2", cite::RECT_COLLAPSING, grid(2..=6, 2..=6), |&(q, m)| {
            let s = status_at(&rect(q, m), &closed_form::rect_level(2, q, m).unwrap())?;
            let want = if m >= 3 {
                CollapseStatus::StronglyCollapsing { target: format!("V_{{-1}}(sl({m}))") }
            } else {
                CollapseStatus::Inconclusive
            };
            ensure(s == want, || s.to_string())
        }),
    ]
}

fn c_value_checks() -> Vec<Check> {
    vec![
        sweep("c-values", "hook C at k^(1..4)", cite::HOOK_COLLAPSING, grid(2..=8, 2..=8), |&(m, n)| {
            let (mi, ni) = (i64::from(m), i64::from(n));
            let expected = [
                (1, Rat::new(mi + 1, 2)),
                (2, Rat::new(mi + 1, 2)),
                (3, Rat::new((mi - 1) * (mi + ni * ni + ni - 1), 2 * ni * ni)),
                (4, Rat::new(mi * (ni * ni - 1), 2 * ni * ni)),
            ];
            for (i, want) in expected {
                let k = closed_form::hook_level(i, m, n).unwrap();
                let levels = coset_levels(&hook(m, n), &k).map_err(|e| e.to_string())?;
                let got = hook_g_c_value(m, n, &levels);
                ensure(got == want, || format!("k^({i}): {got} vs {want}"))?;
            }
            Ok(())
        }),
        sweep("c-values", "rectangle C = q+1, m/(m−1), m/(m+1)", cite::RECT_COLLAPSING, grid(2..=6, 2..=6), |&(q, m)| {
            let (qi, mi) = (i64::from(q), i64::from(m));
            let expected = [(1, Rat::from(qi + 1)), (2, Rat::new(mi, mi - 1)), (3, Rat::new(mi, mi + 1))];
            for (i, want) in expected {
                let k = closed_form::rect_level(i, q, m).unwrap();
                let levels = coset_levels(&rect(q, m), &k).map_err(|e| e.to_string())?;
                let got = rect_adjoint_c_value(m, &levels);
                ensure(got == want, || format!("k^[{i}]: {got} vs {want}"))?;
            }
            Ok(())
        }),
    ]
}

fn admissibility_checks() -> Vec<Check> {
    vec![
        sweep("admissibility", "p'/p test = gcd criteria, d_k^W = 2", cite::GCD_CRITERION, grid(2..=10, 2..=10), |&(m, n)| {
            let p = hook(m, n);
            for (i, gcd_ok) in [(1, hook_h1_gcd_admissible(m, n)), (2, hook_h2_gcd_admissible(m, n))] {
                let k = closed_form::hook_level(i, m, n).unwrap();
                let a = admissibility(&p, &k).map_err(|e| e.to_string())?;
                ensure(a.admissible == gcd_ok, || format!("k^({i})"))?;
                if a.admissible {
                    ensure(a.d_kw == Some(Rat::from(2)), || format!("d = {:?}", a.d_kw))?;
                }
            }
            Ok(())
        }),
        sweep("admissibility", "k^[2] never, k^[3] always admissible", cite::RECT_ADMISSIBILITY, grid(2..=6, 2..=6), |&(q, m)| {
            let p = rect(q, m);
            let a2 = admissibility(&p, &closed_form::rect_level(2, q, m).unwrap()).map_err(|e| e.to_string())?;
            let a3 = admissibility(&p, &closed_form::rect_level(3, q, m).unwrap()).map_err(|e| e.to_string())?;
            ensure(!a2.admissible && a3.admissible, || format!("{a2:?} {a3:?}"))
        }),
    ]
}

fn height_checks() -> Vec<Check> {
    vec![sweep("heights", "height 2(m−1), f ∈ N_m \\ N_{m−1}", cite::HEIGHT, grid(2..=8, 1..=6), |&(m, n)| {
        let p = Partition::hook(m, n).unwrap();
        let (h, in_m) = height_and_np(&p, m);
        let (_, in_m_minus) = height_and_np(&p, m - 1);
        ensure(h == 2 * u64::from(m - 1) && in_m && !in_m_minus, || format!("height {h}"))
    })]
}

fn h_mu_checks() -> Vec<Check> {
    vec![sweep("h-mu", "closed form = Sugawara, integral iff (n−1) | (m+1)", cite::PRIMITIVE_WEIGHT, grid(2..=8, 2..=8), |&(m, n)| {
        let p = hook(m, n);
        let a = h_mu(&p, 1).map_err(|e| e.to_string())?;
        let b = h_mu_sugawara(&p, 1).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("{a} vs {b}"))?;
        ensure(a.is_integer() == ((m + 1) % (n - 1) == 0), || format!("{a}"))
    })]
}

/// Generator weights (doubled) from pairs of Jordan blocks: blocks of sizes
/// `a, b` contribute weights `(a+b)/2 − s`, `0 ≤ s < min(a, b)`; one weight-1
/// element is the trace.
fn block_pair_weights(p: &Partition) -> BTreeMap<Rat, u64> {
    let mut out = BTreeMap::new();
    for &a in p.parts() {
        for &b in p.parts() {
            for s in 0..a.min(b) {
                *out.entry(Rat::new(i64::from(a + b) - 2 * i64::from(s), 2)).or_insert(0) += 1;
            }
        }
    }
    *out.get_mut(&Rat::one()).expect("every partition has weight 1") -= 1;
    out.retain(|_, v| *v > 0);
    out
}

/// Inverse Cartan matrix of sl(n) by Gauss–Jordan elimination.
fn inverse_cartan(n: usize) -> Vec<Vec<Rat>> {
    let r = n - 1;
    let mut a: Vec<Vec<Rat>> = (0..r)
        .map(|i| {
            let mut row = vec![Rat::zero(); 2 * r];
            row[i] = Rat::from(2);
            if i > 0 {
                row[i - 1] = Rat::from(-1);
            }
            if i + 1 < r {
                row[i + 1] = Rat::from(-1);
            }
            row[r + i] = Rat::one();
            row
        })
        .collect();
    for col in 0..r {
        let pivot = (col..r).find(|&i| !a[i][col].is_zero()).expect("Cartan matrix is invertible");
        a.swap(col, pivot);
        let inv = a[col][col].recip().expect("nonzero pivot");
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..r {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[i].iter_mut().zip(pivot_row) {
                    *x = &*x - &(&f * &y);
                }
            }
        }
    }
    a.into_iter().map(|row| row[r..].to_vec()).collect()
}

fn property_checks() -> Vec<Check> {
    let small: Vec<Partition> = (2..=8).flat_map(Partition::all).collect();
    let mut families: Vec<FamilyParams> = grid(1..=8, 1..=8).into_iter().map(|(m, n)| hook(m, n)).collect();
    families.extend(grid(2..=6, 2..=6).into_iter().map(|(q, m)| rect(q, m)));
    let mut weights = Vec::new();
    for n in 2..=6usize {
        let r = n - 1;
        for code in 0..3usize.pow(r as u32) {
            let coords: Vec<u32> = (0..r).map(|i| ((code / 3usize.pow(i as u32)) % 3) as u32).collect();
            weights.push((n, coords));
        }
    }
    vec![
        sweep("properties", "generator weights from Jordan block pairs, N ≤ 8", cite::FREE_GENERATION, small, |p| {
            let got: BTreeMap<Rat, u64> = weight_multiset(&strong_generators(&FamilyParams::from_partition(p.clone())))
                .into_iter()
                .collect();
            let want = block_pair_weights(p);
            ensure(got == want, || format!("{got:?} vs {want:?}"))
        }),
        sweep("properties", "rational roots re-evaluate to zero", cite::COMPUTED, families, |p| {
            let diff = central_charge(p) - coset_central_charge_symbolic(p).map_err(|e| e.to_string())?;
            let num = diff.num().clone();
            let roots = rational_roots(&num).map_err(|e| e.to_string())?;
            let total: usize = roots.iter().map(|r| r.multiplicity).sum();
            ensure(total <= num.degree().unwrap_or(0), || "too many roots".into())?;
            for root in roots {
                let factor = Poly::shifted_var(-root.value.clone()).pow(root.multiplicity as u32);
                let (_, rem) = num.div_rem(&factor);
                ensure(num.eval(&root.value).is_zero() && rem.is_zero(), || format!("root {}", root.value))?;
            }
            Ok(())
        }),
        sweep("properties", "Casimir = inverse-Cartan form, n ≤ 6", cite::CASIMIR, weights, |(n, coords)| {
            let inv = inverse_cartan(*n);
            let mut want = Rat::zero();
            for (i, row) in inv.iter().enumerate() {
                for (j, g) in row.iter().enumerate() {
                    want += &(g * Rat::from(coords[i]) * Rat::from(coords[j] + 2));
                }
            }
            let got = casimir_sl(*n, coords).map_err(|e| e.to_string())?;
            ensure(got == want, || format!("{got} vs {want}"))
        }),
    ]
}
