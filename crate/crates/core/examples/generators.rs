//! Strong generator inventories: weights, g^♮-modules and multiplicities.

use wlevels::walgebra::{strong_generators, weight_multiset, FamilyParams};

fn main() -> wlevels::Result<()> {
    let cases = [
        FamilyParams::hook(3, 2)?,
        FamilyParams::hook(4, 1)?,
        FamilyParams::rectangular(3, 2)?,
        FamilyParams::from_partition("3,2,2".parse()?),
    ];
    for p in &cases {
        println!("{p}, g^♮ = {}", p.g_natural());
        for g in strong_generators(p) {
            println!("  weight {:>3}  {:<22} x{}", g.weight.to_string(), g.rep.to_string(), g.multiplicity);
        }
        let total: u64 = weight_multiset(&strong_generators(p)).iter().map(|(_, d)| d).sum();
        println!("  total {total} = dim g^f = {}", p.partition().centralizer_dim());
    }
    Ok(())
}
