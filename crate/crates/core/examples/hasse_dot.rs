//! Write a Hasse diagram in Graphviz DOT; pipe into `dot -Tsvg`.
use alt_tamari::{build_alt_tamari, IncrementFunction};

fn main() -> alt_tamari::Result<()> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "101".into());
    let delta = IncrementFunction::parse(&word)?;
    let poset = build_alt_tamari(&delta)?;
    print!("{}", poset.to_dot(&format!("tam_{word}")));
    Ok(())
}
