//! Decompose linear intervals into marked paths and transport them between orders.
use alt_tamari::{build_alt_tamari, compose, decompose, transport, IncrementFunction};
use alt_tamari::census::linear_intervals;

fn main() -> alt_tamari::Result<()> {
    let from = IncrementFunction::parse("1111")?;
    let to = IncrementFunction::parse("0100")?;
    let poset = build_alt_tamari(&from)?;
    for (a, b, _) in linear_intervals(&from, &poset)?.into_iter().take(12) {
        let (bottom, top) = (poset.element(a), poset.element(b));
        let (kind, dec) = decompose(&from, bottom, top)?;
        assert_eq!(compose(&from, &dec)?, (*bottom, *top));
        let (tb, tt) = transport(&from, &to, bottom, top)?;
        let parts: Vec<String> = dec.parts.iter().map(|p| format!("[{p}]")).collect();
        println!("{kind:9} [{bottom}, {top}] = ({}; {}) -> [{tb}, {tt}]", dec.marked, parts.join(" "));
    }
    Ok(())
}
