//! The three defining predicates, with the witnesses they report.

use semiaffine::{GroupSpec, Subgroup, SubsetBits};

fn main() -> semiaffine::Result<()> {
    let g: GroupSpec = "Z7".parse()?;
    let whole = Subgroup::whole(&g);
    for lit in [
        "{}",
        "{3}",
        "{0,1}",
        "{0,1,2}",
        "{1,2,4}",
        "{0,1,2,3,4,5,6}",
    ] {
        let x = SubsetBits::parse_literal(&g, lit)?;
        println!(
            "{:<16} affine={:<5} semiaffine={:<5} midconvex={:<5} X-X={}",
            x.to_string(),
            x.is_affine(),
            x.is_semiaffine(),
            x.is_midconvex(&whole)?,
            x.difference_set()
        );
        if let Some(w) = x.semiaffine_witness() {
            println!("  not semiaffine: {w}");
        }
    }

    let z6: GroupSpec = "Z6".parse()?;
    let x = SubsetBits::parse_literal(&z6, "{1,2,4,5}")?;
    println!("\nin {z6}, {x} as hex bits: {}", x.to_hex());
    if let Some(w) = x.midconvex_witness(&Subgroup::whole(&z6))? {
        println!("not midconvex: {w}");
    }
    Ok(())
}
