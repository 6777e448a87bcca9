use super::report::{Check, Report, Section};
use crate::conformal::{
    admissibility, cite, collapse_check, conformal_levels, decomposition, h_mu, h_mu_sugawara,
    hook_h1_gcd_admissible, hook_h2_gcd_admissible, CollapseStatus, ConformalLevel, LevelTag,
};
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::liealg::{h_theta_pairing, height_and_np, x_norm, HalfInt, Partition};
use crate::walgebra::{
    central_charge, closed_form, coset_central_charge, coset_levels, strong_generators, Family,
    FamilyParams,
};

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn opt(r: Option<&Rat>) -> String {
    r.map_or_else(|| "-".to_string(), ToString::to_string)
}

fn echo_family(report: &mut Report, p: &FamilyParams) {
    report.query("partition", p.partition());
    match p.family() {
        Family::Hook { m, n } => report.query("hook", format!("{m} {n}")),
        Family::Rectangular { q, m } => report.query("rect", format!("{q} {m}")),
        Family::GeneralPartition => report,
    };
}

/// Grading, graded dimensions, generators and the symbolic central charge.
pub fn cmd_info(partition: &str) -> Result<Report> {
    let p = FamilyParams::from_partition(partition.parse::<Partition>()?);
    let mut r = Report::new("info");
    echo_family(&mut r, &p);

    let grading = p.grading();
    let (height, _) = height_and_np(p.partition(), 1);
    let mut s = Section::new(
        "grading",
        cite::COMPUTED,
        &["weighted Dynkin labels", "x eigenvalues", "(x|x)", "height", "g^♮"],
    );
    s.row([
        join(&grading.weighted_labels),
        join(&grading.eigenvalues),
        x_norm(&grading).to_string(),
        height.to_string(),
        p.g_natural(),
    ]);
    r.sections.push(s);

    let dims = p.dims();
    let top = (grading.largest_eigenvalue() - grading.smallest_eigenvalue()).twice();
    let (table_cite, table_fn): (&str, Option<Box<dyn Fn(u32) -> Option<(u64, u64)>>>) =
        match p.family() {
            Family::Hook { m, n } if m >= 2 => (
                if m % 2 == 1 { cite::HOOK_TABLE_ODD } else { cite::HOOK_TABLE_EVEN },
                Some(Box::new(move |t| closed_form::hook_table_row(m, n, t))),
            ),
            Family::Rectangular { q, m } => (
                cite::RECT_TABLE,
                Some(Box::new(move |t| closed_form::rect_table_row(q, m, t))),
            ),
            _ => (cite::COMPUTED, None),
        };
    let mut s = Section::new("graded dimensions", table_cite, &["j", "dim g_{-j}", "dim g^f_{-j}"]);
    let mut table_agrees = true;
    for t in 0..=top {
        let j = HalfInt::from_twice(-t);
        let (dg, dgf) = (dims.g(j), dims.gf(j));
        if let Some(f) = &table_fn {
            table_agrees &= f(t as u32).unwrap_or((0, 0)) == (dg, dgf);
        }
        if dg > 0 {
            s.row([HalfInt::from_twice(t).to_string(), dg.to_string(), dgf.to_string()]);
        }
    }
    r.sections.push(s);
    if table_fn.is_some() {
        r.claim(
            format!("rows {} the table formulas", if table_agrees { "match" } else { "DO NOT match" }),
            table_cite,
        );
    }
    r.claim(
        format!(
            "dim g^f = {} = Σ(λ'_i)² − 1 with λ' = ({})",
            dims.total_gf(),
            join(&p.partition().dual())
        ),
        cite::COMPUTED,
    );

    let gen_cite = match p.family() {
        Family::Hook { .. } => cite::HOOK_GENERATORS,
        Family::Rectangular { .. } => cite::RECT_GENERATORS,
        Family::GeneralPartition => cite::FREE_GENERATION,
    };
    let mut s = Section::new("strong generators", gen_cite, &["weight", "g^♮-module", "multiplicity"]);
    for g in strong_generators(&p) {
        s.row([g.weight.to_string(), g.rep.to_string(), g.multiplicity.to_string()]);
    }
    r.sections.push(s);

    let c = central_charge(&p);
    let mut s = Section::new("central charge", cite::CENTRAL_CHARGE, &["c(k)"]);
    s.row([c.to_string()]);
    r.sections.push(s);
    match p.family() {
        Family::Hook { m, n } => {
            let ok = c.equals(&closed_form::hook_central_charge(m, n));
            r.claim(format!("closed form {}", if ok { "agrees" } else { "DISAGREES" }), cite::HOOK_CENTRAL_CHARGE);
        }
        Family::Rectangular { q, m } => {
            let ok = c.equals(&closed_form::rect_central_charge(q, m));
            r.claim(format!("closed form {}", if ok { "agrees" } else { "DISAGREES" }), cite::RECT_CENTRAL_CHARGE);
        }
        Family::GeneralPartition => {}
    }
    Ok(r)
}

fn level_cite(p: &FamilyParams) -> &'static str {
    match p.family() {
        Family::Rectangular { .. } => cite::RECT_LEVELS,
        _ => cite::HOOK_LEVELS,
    }
}

fn level_row(p: &FamilyParams, l: &ConformalLevel) -> Result<Vec<String>> {
    let coset = coset_levels(p, &l.k)?;
    let c = central_charge(p).eval(&l.k)?;
    let tags = if l.tags.is_empty() { "-".to_string() } else { l.tag_string() };
    Ok(vec![
        l.k.to_string(),
        tags,
        l.branch.to_string(),
        opt(coset.k0.as_ref()),
        coset.k1.to_string(),
        c.to_string(),
    ])
}

const LEVEL_COLUMNS: [&str; 6] = ["k", "tags", "branch", "k0", "k1", "c(k)"];

/// Every conformal level with its closed-form tags and coset levels.
pub fn cmd_levels(p: &FamilyParams) -> Result<Report> {
    let levels = conformal_levels(p)?;
    let mut r = Report::new("levels");
    echo_family(&mut r, p);
    let mut s = Section::new("conformal levels", level_cite(p), &LEVEL_COLUMNS);
    for l in &levels {
        s.row(level_row(p, l)?);
    }
    r.sections.push(s);

    let tags: &[LevelTag] = match p.family() {
        Family::Hook { .. } => &LevelTag::HOOK,
        _ => &LevelTag::RECT,
    };
    for &t in tags {
        let Some(v) = t.value(p) else { continue };
        if levels.iter().any(|l| l.k == v) {
            continue;
        }
        let reason = match coset_central_charge(p, &v) {
            Err(Error::CriticalLevel { what, .. }) => what,
            Err(e) => e.to_string(),
            Ok(_) => "central charges differ".to_string(),
        };
        r.claim(format!("{t} = {v} excluded: {reason}"), cite::COMPUTED);
    }
    r.claim(format!("{} conformal levels", levels.len()), level_cite(p));
    Ok(r)
}

/// `C` against `Δ` at a conformal level and the resulting status.
pub fn cmd_collapse(p: &FamilyParams, k: &Rat) -> Result<Report> {
    let v = collapse_check(p, k)?;
    let mut r = Report::new("collapse");
    echo_family(&mut r, p);
    r.query("level", k);

    let mut s = Section::new("level", level_cite(p), &LEVEL_COLUMNS);
    s.row(level_row(p, &v.level)?);
    r.sections.push(s);

    let mut s = Section::new("C vs Δ", cite::COLLAPSE_CRITERION, &["generators", "multiplicity", "C", "Δ", "C = Δ"]);
    for c in &v.c_values {
        s.row([
            c.rep.to_string(),
            c.multiplicity.to_string(),
            c.c.to_string(),
            c.delta.to_string(),
            if c.matches() { "yes" } else { "no" }.to_string(),
        ]);
    }
    r.sections.push(s);

    let mut s = Section::new("verdict", &v.status_citation, &["status", "W_k"]);
    let (status, target) = match &v.status {
        CollapseStatus::StronglyCollapsing { target } => ("strongly collapsing", target.clone()),
        CollapseStatus::NotStronglyCollapsing => ("not strongly collapsing", "-".to_string()),
        CollapseStatus::Inconclusive => ("inconclusive", "-".to_string()),
    };
    s.row([status.to_string(), target]);
    r.sections.push(s);
    for n in &v.notes {
        r.claim(n.text.clone(), &n.citation);
    }
    Ok(r)
}

/// `k + h^∨ = p'/p`, the admissibility verdict and `d_k^W`.
pub fn cmd_admissible(p: &FamilyParams, k: &Rat) -> Result<Report> {
    let a = admissibility(p, k)?;
    let mut r = Report::new("admissible");
    echo_family(&mut r, p);
    r.query("level", k);
    let pairing = h_theta_pairing(&p.grading());
    let mut s = Section::new(
        "admissibility",
        cite::ADMISSIBLE_DEF,
        &["k", "k + h^∨", "p'", "p", "admissible", "(h_θ|x)", "d_k^W"],
    );
    s.row([
        k.to_string(),
        (k + i64::from(p.h_vee())).to_string(),
        a.p_prime.to_string(),
        a.p.to_string(),
        a.admissible.to_string(),
        pairing.to_string(),
        opt(a.d_kw.as_ref()),
    ]);
    r.sections.push(s);
    if let Some(d) = &a.d_kw {
        r.claim(format!("d_k^W = ({}+1-{})({}-{}) = {d}", a.p_prime, p.h_vee(), a.p, pairing), cite::IDEAL_WEIGHT);
    }

    let tags = crate::conformal::conformal_levels(p)
        .ok()
        .and_then(|ls| ls.into_iter().find(|l| &l.k == k))
        .map(|l| l.tags)
        .unwrap_or_default();
    if let Family::Hook { m, n } = p.family() {
        if tags.contains(&LevelTag::H1) {
            let g = hook_h1_gcd_admissible(m, n);
            r.claim(
                format!("gcd(n-1, m+1) {} 1, so k^(1) is {}admissible", if g { "=" } else { "≠" }, if g { "" } else { "not " }),
                cite::GCD_CRITERION,
            );
        }
        if tags.contains(&LevelTag::H2) {
            let g = hook_h2_gcd_admissible(m, n);
            r.claim(
                format!("gcd(n+1, m) {} 1, so k^(2) is {}admissible", if g { "=" } else { "≠" }, if g { "" } else { "not " }),
                cite::GCD_CRITERION,
            );
        }
    }
    if tags.contains(&LevelTag::R2) {
        r.claim("k^[2] is never admissible", cite::RECT_ADMISSIBILITY);
    }
    if tags.contains(&LevelTag::R3) {
        r.claim("k^[3] is always admissible", cite::RECT_ADMISSIBILITY);
    }
    Ok(r)
}

/// The charge decomposition at `k^(i)`; a failed hypothesis is reported as
/// a failed check rather than an error.
pub fn cmd_decompose(p: &FamilyParams, case: u8, range: u32) -> Result<Report> {
    let mut r = Report::new("decompose");
    echo_family(&mut r, p);
    r.query("case", case).query("range", range);
    let d = match decomposition(p, case, range) {
        Ok(d) => d,
        Err(Error::Hypothesis { condition, known }) => {
            let mut s = Section::new("refusal", cite::DECOMPOSITION, &["failed hypothesis", "known result"]);
            s.row([condition.clone(), known.unwrap_or_else(|| "-".to_string())]);
            r.sections.push(s);
            r.checks.push(Check {
                section: "decompose".into(),
                name: "hypothesis".into(),
                passed: false,
                detail: condition,
                citation: cite::DECOMPOSITION.into(),
            });
            return Ok(r);
        }
        Err(e) => return Err(e),
    };

    let mut s = Section::new("level", cite::HOOK_LEVELS, &["k", "tags", "k0", "k1", "admissible"]);
    s.row([
        d.level.k.to_string(),
        d.level.tag_string(),
        d.k0.to_string(),
        d.k1.to_string(),
        d.admissible.to_string(),
    ]);
    r.sections.push(s);

    let mut s = Section::new(
        "summands",
        cite::DECOMPOSITION,
        &["ℓ", "sl(n) weight", "heisenberg label", "h (sl part)"],
    );
    for x in &d.summands {
        s.row([
            x.charge.to_string(),
            x.sl_weight.to_string(),
            x.heis_label.to_string(),
            x.top_conformal_weight_sl_part.to_string(),
        ]);
    }
    r.sections.push(s);
    for n in &d.notes {
        r.claim(n.text.clone(), &n.citation);
    }
    let closed = h_mu(p, case)?;
    let sug = h_mu_sugawara(p, case)?;
    r.claim(
        format!(
            "h_μ = {closed} (closed form), {sug} (Sugawara at k1); {}",
            if closed.is_integer() { "integral" } else { "not integral" }
        ),
        cite::PRIMITIVE_WEIGHT,
    );
    Ok(r)
}
