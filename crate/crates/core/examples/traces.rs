//! Traces `{n : x + n·g ∈ X}` and the trace test for midconvexity.

use semiaffine::zline::{decompose_trace, midconvex_via_traces, trace};
use semiaffine::{GroupSpec, Subgroup, SubsetBits};

fn main() -> semiaffine::Result<()> {
    let g: GroupSpec = "Z6".parse()?;
    for lit in ["{2,5}", "{0,2,4}", "{0,3}"] {
        let x = SubsetBits::parse_literal(&g, lit)?;
        println!(
            "{lit}: via traces {}, direct {}",
            midconvex_via_traces(&x),
            x.is_midconvex(&Subgroup::whole(&g))?
        );
        let x0 = &x.elements()[0];
        for step in g.elements() {
            let t = trace(&x, x0, &step)?;
            match decompose_trace(&t) {
                Some(d) => println!("  x={x0} g={step}: {t} = {}Z", d.d),
                None => println!("  x={x0} g={step}: {t} is not dZ with d odd"),
            }
        }
    }
    Ok(())
}
