//! Build alt-Tamari posets for a few increment functions and compare them.
use alt_tamari::{build_alt_tamari, delta_excursion, delta_rotation, refines, step_stats, DyckPath, IncrementFunction};

fn main() -> alt_tamari::Result<()> {
    let delta = IncrementFunction::parse("0111010")?;
    let p: DyckPath = "uudduuduuddudd".parse()?;
    println!("delta {delta}, path {p}");
    println!("delta-excursion of up step 3: {}", delta_excursion(&delta, &p, 3)?);
    let stats = step_stats(&delta, &p)?;
    println!("h   = {:?}", stats.h);
    println!("ell = {:?}", stats.ell);
    for v in p.valley_labels() {
        println!("rotating at valley {v}: {}", delta_rotation(&delta, &p, v)?);
    }

    for word in ["000", "010", "101", "111"] {
        let d = IncrementFunction::parse(word)?;
        let poset = build_alt_tamari(&d)?;
        println!("delta {word}: {} elements, {} covers, lattice {}", poset.len(), poset.covers().len(), poset.is_lattice());
    }
    let (dyck, tamari) = (IncrementFunction::dyck(4), IncrementFunction::tamari(4));
    println!("dyck order contained in tamari order: {}", refines(&dyck, &tamari)?);
    Ok(())
}
