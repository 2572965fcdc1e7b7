//! S_5 acting on 2-subsets gives a connected quandle of order 10; the quandle
//! gives the envelope back.

use quandles::envelope::{envelope_from_quandle, is_latin_envelope};
use quandles::families::two_subsets_envelope;

fn main() -> quandles::Result<()> {
    let e = two_subsets_envelope(5)?;
    let q = e.quandle()?;
    println!("{}", q.to_text());
    println!(
        "|G| = {}, zeta = {}",
        e.group().order(),
        e.zeta().to_cycle_string()
    );
    println!("|RMlt| = {}, |Dis| = {}", q.rmlt().order(), q.dis().order());
    println!(
        "latin: {} (criterion: {})",
        q.is_latin(),
        is_latin_envelope(&e)?
    );

    let back = envelope_from_quandle(&q)?;
    println!("same group: {}", back.group().equals(e.group())?);
    println!("same zeta: {}", back.zeta() == e.zeta());
    Ok(())
}
