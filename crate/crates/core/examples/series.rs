//! Generating functions as truncated power series with exact coefficients.
use alt_tamari::series::{phi_coeff_binomial, s_coeff};
use alt_tamari::SeriesOracle;

fn main() -> alt_tamari::Result<()> {
    let oracle = SeriesOracle::new(12);
    let show = |s: &alt_tamari::TruncatedSeries| s.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    println!("A   = {}", show(oracle.tree_series()));
    println!("A'  = {}", show(oracle.derivative()));
    for k in 0..=3 {
        println!("S_{k} = {}", show(&oracle.s_series(k)));
    }
    println!("[t^5] S_1 = {}", s_coeff(1, 5)?);
    for k in 0..=2 {
        let via_series = oracle.phi_coeff_series(k, 4)?;
        println!("phi_{k}: [t^4] = {via_series} (binomial {})", phi_coeff_binomial(k, 4));
    }
    Ok(())
}
