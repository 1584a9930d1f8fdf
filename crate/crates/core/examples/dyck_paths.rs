//! Parse, inspect and enumerate Dyck paths.
use alt_tamari::{enumerate_paths, DyckPath};

fn main() -> alt_tamari::Result<()> {
    let p: DyckPath = "uududdud".parse()?;
    println!("path      {p}");
    println!("size      {}", p.size());
    println!("heights   {:?}", p.heights());
    println!("peaks     {:?}", p.peaks());
    println!("valleys   {:?}", p.valleys());
    for i in 1..=p.size() {
        println!("excursion of up step {i}: {}", p.excursion(i)?);
    }
    println!("mirror    {}", p.mirror());

    for n in 0..=4 {
        let all = enumerate_paths(n)?;
        let words: Vec<String> = all.iter().map(ToString::to_string).collect();
        println!("n={n}: {} paths {}", all.len(), words.join(" "));
    }
    Ok(())
}
