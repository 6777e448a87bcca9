//! Build CLI reports in-process and round-trip them through JSON.

use wlevels::cli::{cmd_levels, cmd_verify_paper, Report};
use wlevels::walgebra::FamilyParams;

fn main() -> wlevels::Result<()> {
    let report = cmd_levels(&FamilyParams::hook(3, 2)?)?;
    let json = report.to_json();
    println!("{json}");
    let back = Report::from_json(&json)?;
    println!("round trip identical: {}", back.to_json() == json);

    let suite = cmd_verify_paper(Some("levels"))?;
    print!("{}", suite.to_text());
    Ok(())
}
