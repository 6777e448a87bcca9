//! C vs Δ at every conformal level, with the resulting collapsing status.

use wlevels::conformal::{collapse_check, conformal_levels};
use wlevels::walgebra::FamilyParams;

fn main() -> wlevels::Result<()> {
    let cases = [
        FamilyParams::hook(3, 2)?,
        FamilyParams::hook(3, 3)?,
        FamilyParams::hook(6, 2)?,
        FamilyParams::rectangular(2, 3)?,
        FamilyParams::rectangular(3, 2)?,
    ];
    for p in &cases {
        println!("{p}");
        for level in conformal_levels(p)? {
            let v = collapse_check(p, &level.k)?;
            println!("  k = {} [{}]: {}", level.k, level.tag_string(), v.status);
            for c in &v.c_values {
                println!("    {:<22} C = {:<6} Δ = {}", c.rep.to_string(), c.c.to_string(), c.delta);
            }
            for n in &v.notes {
                println!("    note: {n}");
            }
        }
    }
    Ok(())
}
