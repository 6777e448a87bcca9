//! J(0)-charge decompositions at k^(1) and k^(2), and the weights h_μ.

use wlevels::conformal::{decomposition, h_mu, h_mu_sugawara};
use wlevels::walgebra::FamilyParams;
use wlevels::Error;

fn main() -> wlevels::Result<()> {
    for (m, n, i) in [(4, 3, 1), (2, 2, 2), (5, 5, 1), (3, 2, 1), (6, 2, 2)] {
        let p = FamilyParams::hook(m, n)?;
        println!("({m},{n}), case {i}: h_μ = {} = {}", h_mu(&p, i)?, h_mu_sugawara(&p, i)?);
        match decomposition(&p, i, 2) {
            Ok(d) => {
                println!("  k = {}, k0 = {}, k1 = {}", d.level.k, d.k0, d.k1);
                for s in &d.summands {
                    println!("  ℓ = {:>2}: L({}) ⊗ M(k0, {}), h = {}", s.charge, s.sl_weight, s.heis_label, s.top_conformal_weight_sl_part);
                }
                for note in &d.notes {
                    println!("  note: {note}");
                }
            }
            Err(Error::Hypothesis { condition, known }) => {
                println!("  refused: {condition}");
                if let Some(k) = known {
                    println!("  known: {k}");
                }
            }
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
