//! Count linear intervals by height and compare with the closed forms.
use alt_tamari::census::linear_intervals;
use alt_tamari::{build_alt_tamari, census, total_closed_form, IncrementFunction};

fn main() -> alt_tamari::Result<()> {
    for word in ["1111", "0000", "0110"] {
        let delta = IncrementFunction::parse(word)?;
        let table = census(&delta)?;
        print!("{}", table.to_csv());
    }
    for n in 1..=10 {
        println!("total at n={n}: {}", total_closed_form(n));
    }

    let delta = IncrementFunction::tamari(3);
    let poset = build_alt_tamari(&delta)?;
    for (a, b, kind) in linear_intervals(&delta, &poset)? {
        println!("[{}, {}] {kind}", poset.element(a), poset.element(b));
    }
    Ok(())
}
