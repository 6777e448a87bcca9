//! Admissibility of the hook levels k^(1), k^(2) against the gcd criteria.

use wlevels::conformal::{admissibility, hook_h1_gcd_admissible, hook_h2_gcd_admissible};
use wlevels::walgebra::{closed_form, FamilyParams};

fn main() -> wlevels::Result<()> {
    println!("  m  n    k^(1)  adm   gcd       k^(2)  adm   gcd   d_k^W");
    for m in 2..=5 {
        for n in 2..=4 {
            let p = FamilyParams::hook(m, n)?;
            let k1 = closed_form::hook_level(1, m, n).expect("n > 1");
            let k2 = closed_form::hook_level(2, m, n).expect("always defined");
            let a1 = admissibility(&p, &k1)?;
            let a2 = admissibility(&p, &k2)?;
            let d: Vec<String> = [&a1, &a2].iter().filter_map(|a| a.d_kw.as_ref()).map(ToString::to_string).collect();
            println!(
                "{m:>3}{n:>3}  {:>7}  {:<6}{:<6} {:>7}  {:<6}{:<6} {}",
                k1.to_string(),
                a1.admissible,
                hook_h1_gcd_admissible(m, n),
                k2.to_string(),
                a2.admissible,
                hook_h2_gcd_admissible(m, n),
                d.join(",")
            );
        }
    }
    let r = FamilyParams::rectangular(3, 2)?;
    for i in 1..=3 {
        let k = closed_form::rect_level(i, 3, 2).expect("defined");
        let a = admissibility(&r, &k)?;
        println!("rectangle (3,2), k^[{i}] = {k}: k + h = {}/{}, admissible {}", a.p_prime, a.p, a.admissible);
    }
    Ok(())
}
