//! Relabel a quandle at random and recover an isomorphism.

use quandles::families::sl2_envelope;
use quandles::Perm;

fn main() -> quandles::Result<()> {
    let q = sl2_envelope(3)?.quandle()?;
    let n = q.order();
    // A fixed shuffle: i -> 3i + 1 mod 8 is a bijection.
    let phi = Perm::from_images((0..n).map(|i| (3 * i + 1) % n).collect())?;
    let r = q.relabel(&phi)?;
    match q.are_isomorphic(&r) {
        Some(w) => println!(
            "isomorphic via {} (valid: {})",
            w.to_cycle_string(),
            q.is_isomorphism(&r, &w)
        ),
        None => println!("not isomorphic"),
    }
    println!("automorphisms: {}", q.automorphism_count()?);
    Ok(())
}
