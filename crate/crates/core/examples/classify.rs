//! Decomposing sets into their canonical form and rebuilding them.

use semiaffine::structure::{reconstruct, ClassificationRecord};
use semiaffine::{classify, GroupSpec, SubsetBits};

fn main() -> semiaffine::Result<()> {
    let cases = [
        ("Z6", "{1,2,4,5}"),
        ("Z8", "{0,1,4,5}"),
        ("Z4xZ2", "{(0,0),(2,1)}"),
        ("Z7", "{0,1,2}"),
        ("Z9", "{}"),
    ];
    for (group, lit) in cases {
        let g: GroupSpec = group.parse()?;
        let x = SubsetBits::parse_literal(&g, lit)?;
        let c = classify(&x)?;
        let record = ClassificationRecord::from(&c);
        println!("{group} {lit}: {}", c.variant_name());
        println!(
            "  {}",
            serde_json::to_string(&record).expect("record serializes")
        );
        if c.is_semiaffine() {
            assert_eq!(reconstruct(&c)?, x);
            println!("  rebuilt: {}", record.reconstruct(&g)?);
        }
    }
    Ok(())
}
