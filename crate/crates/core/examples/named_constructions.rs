//! Orders and right multiplication groups of the named constructions.

use quandles::families::{
    galkin, ncycles_envelope, platonic_envelope, psl3_2_envelope, sl2_envelope, tuple_envelope_alt,
    tuple_envelope_sym, two_subsets_envelope, AbelianGroup, PlatonicOutcome, Solid,
};
use quandles::Quandle;

fn show(name: &str, q: &Quandle) {
    println!(
        "{name:<20} order {:>3}  |RMlt| {:>5}  latin {:<5}  medial {}",
        q.order(),
        q.rmlt().order(),
        q.is_latin(),
        q.is_medial()
    );
}

fn main() -> quandles::Result<()> {
    show("two_subsets(4)", &two_subsets_envelope(4)?.quandle()?);
    show("ncycles(4)", &ncycles_envelope(4)?.quandle()?);
    show("two_subsets(5)", &two_subsets_envelope(5)?.quandle()?);
    show("sym_tuples(4)", &tuple_envelope_sym(4)?.quandle()?);
    show("alt_tuples(5)", &tuple_envelope_alt(5)?.quandle()?);
    show("sl2(3)", &sl2_envelope(3)?.quandle()?);
    show("sl2(4)", &sl2_envelope(4)?.quandle()?);
    show("psl3_2", &psl3_2_envelope()?.quandle()?);
    for s in Solid::ALL {
        match platonic_envelope(s)? {
            PlatonicOutcome::Envelope(e) => show(&format!("{s:?}"), &e.quandle()?),
            PlatonicOutcome::Obstruction { reason, .. } => println!("{s:?}: {reason}"),
        }
    }
    let z4 = AbelianGroup::cyclic(4);
    let g: Vec<Quandle> = (0..3)
        .map(|u| galkin(&z4, u))
        .collect::<quandles::Result<_>>()?;
    for (u, q) in g.iter().enumerate() {
        show(&format!("galkin(Z4,{u})"), q);
    }
    for i in 0..3 {
        for j in 0..i {
            println!(
                "galkin(Z4,{i}) ~ galkin(Z4,{j}): {}",
                g[i].are_isomorphic(&g[j]).is_some()
            );
        }
    }
    Ok(())
}
