//! Connected affine quandles up to isomorphism, split by underlying group.

use quandles::families::enumerate_connected_affine;

fn main() -> quandles::Result<()> {
    for n in 1..=16 {
        let reps = enumerate_connected_affine(n)?;
        let mut split: Vec<(String, usize)> = Vec::new();
        for r in &reps {
            let factors: Vec<String> = r.group.factors().iter().map(|d| d.to_string()).collect();
            let shape = if factors.is_empty() {
                "1".to_string()
            } else {
                factors.join("x")
            };
            match split.iter_mut().find(|(s, _)| *s == shape) {
                Some((_, k)) => *k += 1,
                None => split.push((shape, 1)),
            }
        }
        let parts: Vec<String> = split.iter().map(|(s, k)| format!("{k} on Z{s}")).collect();
        println!("a({n}) = {}\t{}", reps.len(), parts.join(", "));
    }
    Ok(())
}
