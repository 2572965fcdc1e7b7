//! Connected quandles of a small order (default 6) by direct search over
//! right translations, without any group catalog.

use std::time::Instant;

use quandles::enumerate::brute_force_quandles;

fn main() -> quandles::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    let start = Instant::now();
    let result = brute_force_quandles(n)?;
    eprintln!(
        "{} connected quandles of order {n} in {:.2?}",
        result.len(),
        start.elapsed()
    );
    for q in result.quandles() {
        println!("{}", q.to_text());
    }
    Ok(())
}
