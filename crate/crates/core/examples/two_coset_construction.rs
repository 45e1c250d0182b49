//! Inside the two-coset construction: the difference window, the step
//! `(n + 1)·a`, and the restriction identity.

use semiaffine::structure::two_coset_extract;
use semiaffine::{GroupSpec, SubsetBits};

fn main() -> semiaffine::Result<()> {
    for (group, lit) in [
        ("Z8", "{0,1,4,5}"),
        ("Z5", "{0,1}"),
        ("Z12", "{0,3,4,7,8,11}"),
    ] {
        let g: GroupSpec = group.parse()?;
        let x = SubsetBits::parse_literal(&g, lit)?;
        let a = x.doubling_violator().expect("X - X is not doubling-closed");
        let ext = two_coset_extract(&x, &a)?;
        let t = &ext.trace;
        println!("{group} X={x} a={a}");
        let n = t.n_min.map_or("-".to_string(), |n| n.to_string());
        let step = t.g.as_ref().map_or("-".to_string(), |g| g.to_string());
        println!("  D window {:?}, n = {n}, g = {step}", t.d_window);
        println!("  C_a = {}, H_a = {}", t.c_a.bits(), t.h_a.bits());
        println!("  H = {} based at {}", ext.h.bits(), ext.x);
        println!(
            "  invariants {}, restriction identity {}",
            t.invariants_hold(),
            t.restriction_claim_holds(&x)?
        );
    }
    Ok(())
}
