//! Which transitive groups of degree 6 or 8 could carry a quandle envelope.

use quandles::enumerate::{builtin_catalog, obstruction_check};

fn main() -> quandles::Result<()> {
    for n in [6, 8] {
        let report = obstruction_check(&builtin_catalog(n)?)?;
        print!("degree {n}\n{}", report.to_tsv());
        println!("survivors: {:?}\n", report.survivors());
    }
    Ok(())
}
