//! One CSV row of subset counts per group presentation.

use std::io;

use semiaffine::search::{atlas_emit, presentations_up_to, AtlasOptions};

fn main() -> semiaffine::Result<()> {
    let groups = presentations_up_to(9);
    let opts = AtlasOptions {
        timing: false,
        ..AtlasOptions::default()
    };
    let rows = atlas_emit(&groups, io::stdout().lock(), &opts)?;
    let failures: u64 = rows.iter().map(|r| r.failures).sum();
    eprintln!("{} groups, {failures} failures", rows.len());
    Ok(())
}
