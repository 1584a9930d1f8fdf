//! Generic finite posets: intervals, linearity, lattices and products.
use alt_tamari::poset::{antichain, chain};
use alt_tamari::Poset;

fn main() -> alt_tamari::Result<()> {
    // the diamond 0 < a, b < 1
    let diamond = Poset::build(vec!["0", "a", "b", "1"], [(0, 1), (0, 2), (1, 3), (2, 3)])?;
    println!("diamond is a lattice: {}", diamond.is_lattice());
    println!("[0, a] linear: {}", diamond.is_linear_interval(&"0", &"a")?);
    println!("[0, 1] linear: {}", diamond.is_linear_interval(&"0", &"1")?);
    println!("linear intervals: {}", diamond.linear_polynomial());

    let c = chain(3);
    let a = antichain(2);
    let product = c.product(&a);
    println!("chain(3) x antichain(2): {} elements, {} covers", product.len(), product.covers().len());
    println!(
        "{} * {} = {} (direct {})",
        c.linear_polynomial(),
        a.linear_polynomial(),
        c.linear_polynomial() * a.linear_polynomial(),
        product.linear_polynomial()
    );
    Ok(())
}
