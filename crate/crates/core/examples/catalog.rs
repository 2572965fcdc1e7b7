//! Builds the transitive group catalog of a degree (default 6) and prints it.
//!
//! cargo run --release --example catalog -- 7

use quandles::enumerate::builtin_catalog;

fn main() -> quandles::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    let catalog = builtin_catalog(n)?;
    eprintln!("{} transitive groups of degree {n}", catalog.len());
    for (i, g) in catalog.groups().iter().enumerate() {
        eprintln!("  {:>2}: order {}", i + 1, g.order());
    }
    print!("{}", catalog.to_text());
    Ok(())
}
