//! Solve c(k) = c_coset(k) for a few hooks and rectangles.
//!
//! Shows the generic-branch roots before filtering, then the final list.

use wlevels::conformal::conformal_levels;
use wlevels::exact::rational_roots;
use wlevels::walgebra::{central_charge, coset_central_charge_symbolic, FamilyParams};

fn main() -> wlevels::Result<()> {
    let cases = [
        FamilyParams::hook(3, 2)?,
        FamilyParams::hook(1, 3)?,
        FamilyParams::hook(4, 1)?,
        FamilyParams::rectangular(2, 3)?,
    ];
    for p in &cases {
        let diff = central_charge(p) - coset_central_charge_symbolic(p)?;
        println!("{p}");
        println!("  cleared numerator: {}", diff.num());
        let roots: Vec<String> = rational_roots(diff.num())?
            .iter()
            .map(|r| format!("{} (x{})", r.value, r.multiplicity))
            .collect();
        println!("  generic roots:     {}", roots.join(", "));
        for l in conformal_levels(p)? {
            println!("  k = {:>6}  {:<6} {}", l.k.to_string(), l.tag_string(), l.branch);
        }
    }
    Ok(())
}
