//! Central charges as rational functions of k, against the closed forms.

use wlevels::exact::Rat;
use wlevels::walgebra::{central_charge, closed_form, FamilyParams};

fn main() -> wlevels::Result<()> {
    for (m, n) in [(2, 1), (3, 2), (4, 3)] {
        let c = central_charge(&FamilyParams::hook(m, n)?);
        let same = c.equals(&closed_form::hook_central_charge(m, n));
        println!("hook ({m},{n}): c(k) = {c}  [closed form agrees: {same}]");
    }
    for (q, m) in [(2, 2), (3, 2), (2, 3)] {
        let c = central_charge(&FamilyParams::rectangular(q, m)?);
        let same = c.equals(&closed_form::rect_central_charge(q, m));
        println!("rectangle ({q},{m}): c(k) = {c}  [closed form agrees: {same}]");
    }
    let general = FamilyParams::from_partition("3,2".parse()?);
    let c = central_charge(&general);
    println!("{general}: c(k) = {c}, c(-4) = {}", c.eval(&Rat::from(-4))?);
    Ok(())
}
