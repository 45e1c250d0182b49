//! Exhaustive and seeded random sweeps, split over worker threads.

use semiaffine::search::{sweep, CheckSet, SweepConfig};
use semiaffine::GroupSpec;

fn main() -> semiaffine::Result<()> {
    let g: GroupSpec = "Z3xZ3".parse()?;
    let full = sweep(&SweepConfig::exhaustive(&g).with_workers(4))?;
    println!("{full}");

    let checks: CheckSet = "lemma2,t1".parse()?;
    let part = sweep(
        &SweepConfig::exhaustive(&g)
            .with_checks(checks)
            .with_range(100, 200),
    )?;
    println!("{}", part.without_timing().to_json());

    let big: GroupSpec = "Z4xZ4xZ2".parse()?;
    let random = sweep(&SweepConfig::random(&big, 2_000, 42).with_workers(4))?;
    println!("{}", random.without_timing());
    Ok(())
}
