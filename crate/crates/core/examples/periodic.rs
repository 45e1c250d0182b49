//! Midconvex sets as cosets of subgroups with an odd-order quotient.

use semiaffine::structure::{
    all_subgroups, periodic_midconvex_check, periodic_semiaffine_classify,
    quotient_has_even_order_element, PeriodicForm,
};
use semiaffine::{GroupSpec, SubsetBits, DEFAULT_CAP};

fn main() -> semiaffine::Result<()> {
    let g: GroupSpec = "Z12".parse()?;
    let subs = all_subgroups(&g, DEFAULT_CAP)?;
    let whole = subs.last().expect("G itself");
    println!("subgroups of {g}:");
    for p in &subs {
        println!(
            "  {:<28} G/P has an even-order element: {}",
            p.bits().to_string(),
            quotient_has_even_order_element(whole, p)?
        );
    }

    for lit in ["{1,4,7,10}", "{0,3,6,9}", "{1,5,9}", "{0,6}", "{}"] {
        let x = SubsetBits::parse_literal(&g, lit)?;
        println!(
            "{lit}: pair scan {}, coset criterion {}",
            x.is_midconvex(whole)?,
            periodic_midconvex_check(&x, whole)?
        );
    }

    let z6: GroupSpec = "Z6".parse()?;
    let x = SubsetBits::parse_literal(&z6, "{1,2,4,5}")?;
    if let PeriodicForm::CosetMinusSubgroup { h, p, g } = periodic_semiaffine_classify(&x)? {
        let p = p
            .map(|p| p.bits().to_string())
            .unwrap_or_else(|| "{}".into());
        println!("{x} = ({} minus {p}) + {g}", h.bits());
    }
    Ok(())
}
