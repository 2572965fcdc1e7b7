//! Counts of connected, latin and affine quandles for orders 1 to 8.

use std::time::Instant;

use quandles::enumerate::{builtin_catalog, classify, enumerate_connected_quandles};

fn main() -> quandles::Result<()> {
    println!("n\tq\tl\ta\tgroups\tms");
    for n in 1..=8 {
        let start = Instant::now();
        let catalog = builtin_catalog(n)?;
        let result = enumerate_connected_quandles(n, &catalog)?;
        let c = classify(&result)?;
        println!(
            "{n}\t{}\t{}\t{}\t{}\t{}",
            c.connected,
            c.latin,
            c.affine,
            catalog.len(),
            start.elapsed().as_millis()
        );
    }
    Ok(())
}
