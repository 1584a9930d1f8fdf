//! Binary trees, left rotations, grafting and their path encoding.
use alt_tamari::tree::{build_l, build_r, enumerate_trees, is_new_interval, tamari_leq};
use alt_tamari::BinaryTree;

fn main() -> alt_tamari::Result<()> {
    let t: BinaryTree = "(.(..))".parse()?;
    println!("tree {t} encodes as {}", t.to_path());
    for up in t.left_rotation_covers() {
        println!("  rotates to {up} ({})", up.to_path());
    }

    let trees = enumerate_trees(3)?;
    let comparable = trees.iter().flat_map(|a| trees.iter().map(move |b| (a, b))).filter(|(a, b)| tamari_leq(a, b)).count();
    println!("n=3: {} trees, {} comparable pairs", trees.len(), comparable);

    for n in 2..=4 {
        let (r, l) = (build_r(n)?, build_l(n)?);
        println!("R_{n} = [{}, {}] new: {}", r.bottom(), r.top(), is_new_interval(&r));
        println!("L_{n} = [{}, {}] new: {}", l.bottom(), l.top(), is_new_interval(&l));
    }
    Ok(())
}
