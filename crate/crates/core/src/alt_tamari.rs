//! Increment functions, δ-excursions, δ-rotations and the alt-Tamari posets.
//!
//! An increment function `δ` gives each up step `u_i` the altitude change
//! `δ(i) ∈ {0, 1}`; down steps always change it by `-1`. The δ-excursion of
//! `u_i` is the shortest subword starting at `u_i` whose total change is 0,
//! and rotating at a valley `d u_i` swaps that `d` with the δ-excursion.
//! With `δ ≡ 1` this is the Tamari lattice on paths, with `δ ≡ 0` the
//! Dyck lattice.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dyck::{enumerate_paths_capped, DyckPath, Span, Step};
use crate::error::{Error, Result};
use crate::poset::Poset;

/// Seed for the sampled increment functions of the verification runs.
pub const DEFAULT_SEED: u64 = 0xA117;

/// `δ: {1..n} → {0, 1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncrementFunction {
    values: Vec<bool>,
}

impl IncrementFunction {
    pub fn new(values: Vec<bool>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySize);
        }
        Ok(IncrementFunction { values })
    }

    /// `δ ≡ 1`: the Tamari lattice.
    pub fn tamari(n: usize) -> Self {
        IncrementFunction { values: vec![true; n.max(1)] }
    }

    /// `δ ≡ 0`: the Dyck lattice.
    pub fn dyck(n: usize) -> Self {
        IncrementFunction { values: vec![false; n.max(1)] }
    }

    /// Parse a bitstring such as `"0110"`.
    pub fn parse(text: &str) -> Result<Self> {
        let values = text
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::BadDelta { text: text.to_string() }),
            })
            .collect::<Result<Vec<bool>>>()?;
        IncrementFunction::new(values).map_err(|_| Error::BadDelta { text: text.to_string() })
    }

    /// The `index`-th function of size `n` in binary order, bit `i-1` of `index` giving `δ(i)`.
    pub fn from_index(n: usize, index: u64) -> Self {
        IncrementFunction { values: (0..n.max(1)).map(|i| index >> i & 1 == 1).collect() }
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    /// `δ(i)` for `1 <= i <= n`.
    pub fn get(&self, i: usize) -> u8 {
        self.values[i - 1] as u8
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    /// Same function with `δ(i)` flipped.
    pub fn flipped_at(&self, i: usize) -> Self {
        let mut values = self.values.clone();
        values[i - 1] = !values[i - 1];
        IncrementFunction { values }
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.size() == other.size() && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    pub fn is_tamari(&self) -> bool {
        self.values.iter().all(|&v| v)
    }

    pub fn is_dyck(&self) -> bool {
        self.values.iter().all(|&v| !v)
    }

    fn check_size(&self, n: usize) -> Result<()> {
        if self.size() == n {
            Ok(())
        } else {
            Err(Error::SizeMismatch { expected: self.size(), found: n })
        }
    }
}

impl fmt::Display for IncrementFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.values {
            f.write_str(if v { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for IncrementFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ={self}")
    }
}

impl FromStr for IncrementFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IncrementFunction::parse(s)
    }
}

impl Serialize for IncrementFunction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IncrementFunction {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        IncrementFunction::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// A δ as written on the command line: a bitstring or one of the names
/// `tamari` / `dyck`, resolved once the size is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaSpec {
    Tamari,
    Dyck,
    Bits(IncrementFunction),
}

impl DeltaSpec {
    pub fn resolve(&self, n: usize) -> Result<IncrementFunction> {
        match self {
            DeltaSpec::Tamari => Ok(IncrementFunction::tamari(n)),
            DeltaSpec::Dyck => Ok(IncrementFunction::dyck(n)),
            DeltaSpec::Bits(delta) => {
                delta.check_size(n)?;
                Ok(delta.clone())
            }
        }
    }

    /// Size fixed by the spec itself, if any.
    pub fn size(&self) -> Option<usize> {
        match self {
            DeltaSpec::Bits(d) => Some(d.size()),
            _ => None,
        }
    }
}

impl FromStr for DeltaSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tamari" | "ones" => Ok(DeltaSpec::Tamari),
            "dyck" | "zeros" => Ok(DeltaSpec::Dyck),
            _ => IncrementFunction::parse(s).map(DeltaSpec::Bits),
        }
    }
}

impl fmt::Display for DeltaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaSpec::Tamari => f.write_str("tamari"),
            DeltaSpec::Dyck => f.write_str("dyck"),
            DeltaSpec::Bits(d) => write!(f, "{d}"),
        }
    }
}

/// `count` pseudo-random increment functions of size `n`, reproducible from `seed`.
pub fn sampled_deltas(n: usize, count: usize, seed: u64) -> Vec<IncrementFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 32);
    (0..count)
        .map(|_| IncrementFunction { values: (0..n.max(1)).map(|_| rng.gen::<bool>()).collect() })
        .collect()
}

/// Increment functions exercised by the verification runs: every function
/// for `n <= 5`, otherwise both constants plus eight seeded samples.
pub fn test_deltas(n: usize) -> Vec<IncrementFunction> {
    test_deltas_seeded(n, DEFAULT_SEED)
}

pub fn test_deltas_seeded(n: usize, seed: u64) -> Vec<IncrementFunction> {
    if n <= 5 {
        return (0..1u64 << n.max(1)).map(|i| IncrementFunction::from_index(n, i)).collect();
    }
    let mut out = vec![IncrementFunction::tamari(n), IncrementFunction::dyck(n)];
    out.extend(sampled_deltas(n, 8, seed));
    out
}

fn increment(delta: &IncrementFunction, step: Step, label: usize) -> i64 {
    match step {
        Step::Up => delta.get(label) as i64,
        Step::Down => -1,
    }
}

/// Sum of the step increments over `span`.
pub fn delta_elevation(delta: &IncrementFunction, path: &DyckPath, span: Span) -> Result<i64> {
    delta.check_size(path.size())?;
    if span.start > span.end || span.end >= path.len() {
        return Err(Error::SpanOutOfRange { start: span.start, end: span.end, len: path.len() });
    }
    let mut label = path.up_positions().iter().filter(|&&p| p < span.start).count();
    let mut total = 0;
    for idx in span.start..=span.end {
        let step = path.step(idx);
        if step == Step::Up {
            label += 1;
        }
        total += increment(delta, step, label);
    }
    Ok(total)
}

/// Length of the δ-excursion of the up step at `steps[start]`, whose label
/// is `label`. Labels of later up steps follow consecutively.
pub(crate) fn excursion_len_in(delta: &IncrementFunction, steps: &[Step], start: usize, label: usize) -> usize {
    debug_assert_eq!(steps[start], Step::Up);
    let mut label = label - 1;
    let mut altitude = 0i64;
    for (offset, &step) in steps[start..].iter().enumerate() {
        if step == Step::Up {
            label += 1;
        }
        altitude += increment(delta, step, label);
        if altitude == 0 {
            return offset + 1;
        }
    }
    unreachable!("a δ-excursion is a prefix of the plain excursion")
}

/// δ-excursion of `u_i`.
pub fn delta_excursion(delta: &IncrementFunction, path: &DyckPath, i: usize) -> Result<Span> {
    delta.check_size(path.size())?;
    let start = path.up_step(i)?;
    let len = excursion_len_in(delta, &path.to_steps(), start, i);
    Ok(Span::new(start, start + len - 1))
}

/// Rotate at the valley `d u_i`: `A d C_i B -> A C_i d B`.
pub fn delta_rotation(delta: &IncrementFunction, path: &DyckPath, i: usize) -> Result<DyckPath> {
    delta.check_size(path.size())?;
    let start = path.up_step(i)?;
    if start == 0 || path.step(start - 1) != Step::Down {
        return Err(Error::NotAValley { index: i });
    }
    let mut steps = path.to_steps();
    let len = excursion_len_in(delta, &steps, start, i);
    steps[start - 1..start + len].rotate_left(1);
    Ok(DyckPath::from_steps(&steps).expect("rotation keeps the Dyck property"))
}

/// One `(i, rotated path)` per valley `d u_i`; these are the upper covers.
pub fn upper_covers(delta: &IncrementFunction, path: &DyckPath) -> Vec<(usize, DyckPath)> {
    path.valley_labels()
        .into_iter()
        .map(|i| (i, delta_rotation(delta, path, i).expect("valley")))
        .collect()
}

/// `h` (1-based positions of the up steps) and `ℓ` (δ-excursion lengths).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepStats {
    pub h: Vec<usize>,
    pub ell: Vec<usize>,
}

pub fn step_stats(delta: &IncrementFunction, path: &DyckPath) -> Result<StepStats> {
    delta.check_size(path.size())?;
    let steps = path.to_steps();
    let ups = path.up_positions();
    let h = ups.iter().map(|p| p + 1).collect();
    let ell = ups.iter().enumerate().map(|(k, &p)| excursion_len_in(delta, &steps, p, k + 1)).collect();
    Ok(StepStats { h, ell })
}

/// The alt-Tamari poset `Tam^δ_n` on all Dyck paths of size `n`, in
/// canonical order, covers given by δ-rotations. Fails if the rotation graph
/// is not already transitively reduced.
pub fn build_alt_tamari(delta: &IncrementFunction) -> Result<Poset<DyckPath>> {
    build_alt_tamari_capped(delta, crate::poset_cap())
}

pub fn build_alt_tamari_capped(delta: &IncrementFunction, cap: usize) -> Result<Poset<DyckPath>> {
    let n = delta.size();
    if n > cap {
        return Err(Error::SizeTooLarge { size: n, cap });
    }
    let paths = enumerate_paths_capped(n, cap)?;
    let index: std::collections::HashMap<DyckPath, usize> =
        paths.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let covers: Vec<(usize, usize)> = paths
        .par_iter()
        .enumerate()
        .flat_map_iter(|(low, p)| {
            upper_covers(delta, p).into_iter().map(|(_, q)| (low, index[&q])).collect::<Vec<_>>()
        })
        .collect();
    let poset = Poset::build(paths, covers)?;
    if poset.dropped_covers() > 0 {
        return Err(Error::RotationGraphNotReduced { redundant: poset.dropped_covers() });
    }
    Ok(poset)
}

/// Whether every relation of `Tam^{finer}` also holds in `Tam^{coarser}`.
/// Intended for `coarser <= finer` pointwise.
pub fn refines(coarser: &IncrementFunction, finer: &IncrementFunction) -> Result<bool> {
    coarser.check_size(finer.size())?;
    let a = build_alt_tamari(coarser)?;
    let b = build_alt_tamari(finer)?;
    Ok(refines_posets(&a, &b))
}

/// Both posets must list the same elements in the same order.
pub fn refines_posets(coarser: &Poset<DyckPath>, finer: &Poset<DyckPath>) -> bool {
    debug_assert_eq!(coarser.elements(), finer.elements());
    (0..finer.len()).all(|i| finer.up_set(i).is_subset(coarser.up_set(i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(w: &str) -> DyckPath {
        DyckPath::parse(w).unwrap()
    }

    fn d(bits: &str) -> IncrementFunction {
        IncrementFunction::parse(bits).unwrap()
    }

    const FIG9: &str = "uudduuduuddudd";

    #[test]
    fn elevation_of_whole_path() {
        let path = p("uududdud");
        let whole = Span::new(0, 7);
        assert_eq!(delta_elevation(&IncrementFunction::dyck(4), &path, whole).unwrap(), -4);
        assert_eq!(delta_elevation(&IncrementFunction::tamari(4), &path, whole).unwrap(), 0);
        assert_eq!(
            delta_elevation(&d("010"), &path, whole),
            Err(Error::SizeMismatch { expected: 3, found: 4 })
        );
        assert!(matches!(
            delta_elevation(&IncrementFunction::dyck(4), &path, Span::new(2, 8)),
            Err(Error::SpanOutOfRange { .. })
        ));
    }

    #[test]
    fn figure_nine_excursion() {
        let delta = d("0111010");
        let path = p(FIG9);
        assert_eq!(delta_elevation(&delta, &path, Span::new(4, 10)).unwrap(), 0);
        assert_eq!(delta_excursion(&delta, &path, 3).unwrap(), Span::new(4, 10));
        let stats = step_stats(&delta, &path).unwrap();
        assert_eq!(stats.h, vec![1, 2, 5, 6, 8, 9, 12]);
        assert_eq!(stats.ell, vec![1, 2, 7, 2, 1, 2, 1]);
    }

    #[test]
    fn small_example_stats() {
        let stats = step_stats(&IncrementFunction::tamari(4), &p("uududdud")).unwrap();
        assert_eq!(stats.h, vec![1, 2, 4, 7]);
        assert_eq!(stats.ell, vec![6, 2, 2, 2]);
    }

    #[test]
    fn zero_increment_excursion_is_single_step() {
        let path = p("uududdud");
        let delta = d("1011");
        assert_eq!(delta_excursion(&delta, &path, 2).unwrap(), Span::new(1, 1));
        let tamari = IncrementFunction::tamari(4);
        for i in 1..=4 {
            assert_eq!(delta_excursion(&tamari, &path, i).unwrap(), path.excursion(i).unwrap());
        }
    }

    #[test]
    fn rotations() {
        let zeros = IncrementFunction::dyck(2);
        assert_eq!(delta_rotation(&zeros, &p("udud"), 2).unwrap(), p("uudd"));
        // excursion of u_3 in uududdud is "ud" (steps 4..5)
        let ones = IncrementFunction::tamari(4);
        assert_eq!(delta_rotation(&ones, &p("uududdud"), 3).unwrap(), p("uuudddud"));
        assert_eq!(delta_rotation(&ones, &p("uududdud"), 4).unwrap(), p("uudududd"));
        assert_eq!(delta_rotation(&ones, &p("uududdud"), 2), Err(Error::NotAValley { index: 2 }));
        assert_eq!(delta_rotation(&ones, &p("uududdud"), 1), Err(Error::NotAValley { index: 1 }));
    }

    #[test]
    fn last_up_step_rotation_ignores_delta() {
        for bits in ["000", "001", "110", "111"] {
            assert_eq!(delta_rotation(&d(bits), &p("ududud"), 3).unwrap(), p("uduudd"));
        }
    }

    #[test]
    fn covers_of_extremes() {
        let delta = d("0110");
        assert_eq!(upper_covers(&delta, &DyckPath::zigzag(4)).len(), 3);
        assert!(upper_covers(&delta, &DyckPath::pyramid(4)).is_empty());
    }

    #[test]
    fn size_two_is_a_chain() {
        for bits in ["00", "01", "10", "11"] {
            let poset = build_alt_tamari(&d(bits)).unwrap();
            assert_eq!(poset.len(), 2);
            assert!(poset.leq(&p("udud"), &p("uudd")).unwrap());
            assert!(!poset.leq(&p("uudd"), &p("udud")).unwrap());
        }
    }

    #[test]
    fn tamari_three_shape() {
        let poset = build_alt_tamari(&IncrementFunction::tamari(3)).unwrap();
        assert_eq!(poset.len(), 5);
        assert_eq!(poset.covers().len(), 5);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            build_alt_tamari_capped(&IncrementFunction::tamari(6), 5),
            Err(Error::SizeTooLarge { size: 6, cap: 5 })
        ));
    }

    #[test]
    fn delta_parsing() {
        assert_eq!(d("0110").to_string(), "0110");
        assert!(IncrementFunction::parse("").is_err());
        assert!(IncrementFunction::parse("012").is_err());
        let spec: DeltaSpec = "tamari".parse().unwrap();
        assert_eq!(spec.resolve(3).unwrap(), d("111"));
        let spec: DeltaSpec = "dyck".parse().unwrap();
        assert_eq!(spec.resolve(2).unwrap(), d("00"));
        let spec: DeltaSpec = "010".parse().unwrap();
        assert!(spec.resolve(4).is_err());
    }

    #[test]
    fn test_set_shape() {
        assert_eq!(test_deltas(3).len(), 8);
        assert_eq!(test_deltas(7).len(), 10);
        assert_eq!(test_deltas(7), test_deltas(7));
        assert!(test_deltas(6)[0].is_tamari());
        assert!(test_deltas(6)[1].is_dyck());
    }

    #[test]
    fn refinement_reflexive_and_extreme() {
        let ones = IncrementFunction::tamari(4);
        assert!(refines(&ones, &ones).unwrap());
        assert!(refines(&IncrementFunction::dyck(4), &ones).unwrap());
        assert!(!refines(&ones, &IncrementFunction::dyck(4)).unwrap());
    }
}
