//! Element arithmetic, orders and mixed-radix indexing in Z4 x Z2.

use semiaffine::GroupSpec;

fn main() -> semiaffine::Result<()> {
    let g: GroupSpec = "Z4xZ2".parse()?;
    println!("{g}: order {}, rank {}", g.order(), g.rank());

    let a = g.parse_element("(3,1)")?;
    let b = g.parse_element("(1,1)")?;
    println!("{a} + {b} = {}", g.add(&a, &b)?);
    println!("{a} - {b} = {}", g.sub(&a, &b)?);
    println!("-{a} = {}", g.neg(&a)?);
    println!("5·{a} = {}", g.scalar_mul(5, &a)?);

    for e in g.elements() {
        println!(
            "index {:>2}  {e:<6} order {}",
            g.index_of(&e)?,
            g.element_order(&e)?
        );
    }
    Ok(())
}
