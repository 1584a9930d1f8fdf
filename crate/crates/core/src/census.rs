//! Linear-interval census of the alt-Tamari posets.
//!
//! [`classify`] recognizes the shape of a pair of paths directly on the
//! words; [`census`] walks every comparable pair of the poset, decides
//! linearity from the order itself, and insists the two agree.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::alt_tamari::{build_alt_tamari, excursion_len_in, IncrementFunction};
use crate::dyck::{DyckPath, Step};
use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IntervalKind {
    Trivial,
    Covering,
    /// `A d^k C B -> A C d^k B`, `k >= 2`.
    Left(usize),
    /// `A d C_1..C_k B -> A C_1..C_k d B`, `k >= 2`.
    Right(usize),
    NotLinear,
}

impl IntervalKind {
    pub fn height(&self) -> Option<usize> {
        match *self {
            IntervalKind::Trivial => Some(0),
            IntervalKind::Covering => Some(1),
            IntervalKind::Left(k) | IntervalKind::Right(k) => Some(k),
            IntervalKind::NotLinear => None,
        }
    }

    pub fn is_linear(&self) -> bool {
        *self != IntervalKind::NotLinear
    }
}

impl fmt::Display for IntervalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalKind::Trivial => f.write_str("trivial"),
            IntervalKind::Covering => f.write_str("covering"),
            IntervalKind::Left(k) => write!(f, "left({k})"),
            IntervalKind::Right(k) => write!(f, "right({k})"),
            IntervalKind::NotLinear => f.write_str("not-linear"),
        }
    }
}

/// Pieces of a recognized shape, as step-index boundaries in the bottom path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Shape {
    pub kind: IntervalKind,
    /// Length of the common prefix `A`.
    pub prefix: usize,
    /// Lengths of the δ-excursions `C_1..C_k` (a single one for left intervals).
    pub excursions: Vec<usize>,
}

/// Recognize the pair structurally, without building a poset.
pub fn classify(delta: &IncrementFunction, bottom: &DyckPath, top: &DyckPath) -> Result<IntervalKind> {
    Ok(shape(delta, bottom, top)?.kind)
}

pub(crate) fn shape(delta: &IncrementFunction, bottom: &DyckPath, top: &DyckPath) -> Result<Shape> {
    let n = bottom.size();
    if top.size() != n {
        return Err(Error::SizeMismatch { expected: n, found: top.size() });
    }
    if delta.size() != n {
        return Err(Error::SizeMismatch { expected: delta.size(), found: n });
    }
    let not_linear = Shape { kind: IntervalKind::NotLinear, prefix: 0, excursions: vec![] };
    if bottom == top {
        return Ok(Shape { kind: IntervalKind::Trivial, prefix: bottom.len(), excursions: vec![] });
    }
    let p = bottom.to_steps();
    let q = top.to_steps();
    let a = p.iter().zip(&q).take_while(|(x, y)| x == y).count();
    if p[a] != Step::Down || q[a] != Step::Up {
        return Ok(not_linear);
    }
    let labels_before = p[..a].iter().filter(|&&s| s == Step::Up).count();
    let run = p[a..].iter().take_while(|&&s| s == Step::Down).count();
    let c_start = a + run;
    if c_start >= p.len() {
        return Ok(not_linear);
    }

    if run >= 2 {
        // left: A d^k C B -> A C d^k B
        let c_len = excursion_len_in(delta, &p, c_start, labels_before + 1);
        let rest = c_start + c_len;
        let matches = q[a..a + c_len] == p[c_start..rest]
            && q[a + c_len..rest].iter().all(|&s| s == Step::Down)
            && q[rest..] == p[rest..];
        return Ok(if matches {
            Shape { kind: IntervalKind::Left(run), prefix: a, excursions: vec![c_len] }
        } else {
            not_linear
        });
    }

    // right (or covering): A d C_1..C_k B -> A C_1..C_k d B
    let mut excursions = Vec::new();
    let mut pos = a + 1;
    let mut label = labels_before;
    while pos < p.len() && p[pos] == Step::Up {
        let len = excursion_len_in(delta, &p, pos, label + 1);
        label += p[pos..pos + len].iter().filter(|&&s| s == Step::Up).count();
        excursions.push(len);
        pos += len;
        // Q = A C_1..C_k d B with B = p[pos..]
        if q[a..pos - 1] == p[a + 1..pos] && q[pos - 1] == Step::Down && q[pos..] == p[pos..] {
            let kind = match excursions.len() {
                1 => IntervalKind::Covering,
                k => IntervalKind::Right(k),
            };
            return Ok(Shape { kind, prefix: a, excursions });
        }
    }
    Ok(not_linear)
}

/// Number of linear intervals of each height in `Tam^δ_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountsTable {
    pub n: usize,
    pub delta: IncrementFunction,
    pub counts: BTreeMap<usize, BigUint>,
}

impl CountsTable {
    pub fn get(&self, k: usize) -> BigUint {
        self.counts.get(&k).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Heights `0..n` paired with the closed form.
    pub fn rows(&self) -> Vec<CountRow> {
        (0..self.n.max(1))
            .map(|k| {
                let count = self.get(k);
                let expected = closed_form(self.n, k);
                CountRow {
                    n: self.n,
                    delta: self.delta.to_string(),
                    height: k,
                    matches: count == expected,
                    count,
                    closed_form: expected,
                }
            })
            .collect()
    }

    /// Every height, including the empty ones `k >= n`, matches the closed form.
    pub fn matches_closed_form(&self) -> bool {
        self.rows().iter().all(|r| r.matches) && self.counts.keys().all(|&k| k < self.n)
    }

    /// Same counts, ignoring which δ produced them.
    pub fn same_counts(&self, other: &CountsTable) -> bool {
        self.n == other.n && self.counts == other.counts
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,delta,height,count,closed_form,match\n");
        for r in self.rows() {
            out.push_str(&format!("{},{},{},{},{},{}\n", r.n, r.delta, r.height, r.count, r.closed_form, r.matches));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.rows()).expect("rows serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: usize,
    pub delta: String,
    pub height: usize,
    #[serde(serialize_with = "json_integer")]
    pub count: BigUint,
    #[serde(serialize_with = "json_integer")]
    pub closed_form: BigUint,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// A plain JSON number when it fits in 64 bits, a decimal string otherwise.
fn json_integer<S: serde::Serializer>(value: &BigUint, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    match u64::try_from(value) {
        Ok(v) => serializer.serialize_u64(v),
        Err(_) => serializer.collect_str(value),
    }
}

/// Linear intervals of `Tam^δ_n` sorted by height and kind.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub by_height: BTreeMap<usize, u64>,
    pub left: BTreeMap<usize, u64>,
    pub right: BTreeMap<usize, u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        for (k, v) in other.by_height {
            *self.by_height.entry(k).or_default() += v;
        }
        for (k, v) in other.left {
            *self.left.entry(k).or_default() += v;
        }
        for (k, v) in other.right {
            *self.right.entry(k).or_default() += v;
        }
        self
    }
}

/// Walk every comparable pair of `poset`, decide linearity from the order,
/// and check the structural classification agrees.
pub fn tally(delta: &IncrementFunction, poset: &Poset<DyckPath>) -> Result<Tally> {
    let tallies: Vec<Result<Tally>> = (0..poset.len())
        .into_par_iter()
        .map(|a| {
            let mut t = Tally::default();
            let bottom = poset.element(a);
            for b in poset.up_set(a).ones() {
                let top = poset.element(b);
                let linear = poset.is_chain_at(a, b) == Some(true);
                let kind = classify(delta, bottom, top)?;
                let height = if linear { poset.height_at(a, b) } else { None };
                if kind.height() != height {
                    return Err(Error::ClassificationMismatch { bottom: bottom.to_string(), top: top.to_string() });
                }
                if let Some(h) = height {
                    *t.by_height.entry(h).or_default() += 1;
                }
                match kind {
                    IntervalKind::Left(k) => *t.left.entry(k).or_default() += 1,
                    IntervalKind::Right(k) => *t.right.entry(k).or_default() += 1,
                    _ => {}
                }
            }
            Ok(t)
        })
        .collect();
    tallies.into_iter().try_fold(Tally::default(), |acc, t| Ok(acc.merge(t?)))
}

/// Census of `Tam^δ_n` where `n` is the size of `delta`.
pub fn census(delta: &IncrementFunction) -> Result<CountsTable> {
    let poset = build_alt_tamari(delta)?;
    census_of(delta, &poset)
}

pub fn census_of(delta: &IncrementFunction, poset: &Poset<DyckPath>) -> Result<CountsTable> {
    let t = tally(delta, poset)?;
    Ok(CountsTable {
        n: delta.size(),
        delta: delta.clone(),
        counts: t.by_height.into_iter().map(|(k, v)| (k, BigUint::from(v))).collect(),
    })
}

/// Nontrivial linear intervals `(bottom, top, kind)` of `poset`, by index.
pub fn linear_intervals(delta: &IncrementFunction, poset: &Poset<DyckPath>) -> Result<Vec<(usize, usize, IntervalKind)>> {
    let mut out = Vec::new();
    for a in 0..poset.len() {
        for b in poset.up_set(a).ones().filter(|&b| b != a) {
            let kind = classify(delta, poset.element(a), poset.element(b))?;
            if kind.is_linear() {
                out.push((a, b, kind));
            }
        }
    }
    Ok(out)
}

/// Numbers of left and right intervals of height `k` in `Tam^δ_n`.
pub fn left_right_split(delta: &IncrementFunction, k: usize) -> Result<(u64, u64)> {
    let n = delta.size();
    if k < 2 || k >= n {
        return Err(Error::HeightOutOfRange { k, n });
    }
    let poset = build_alt_tamari(delta)?;
    let t = tally(delta, &poset)?;
    Ok((t.left.get(&k).copied().unwrap_or(0), t.right.get(&k).copied().unwrap_or(0)))
}

/// `binom(n, k)`, zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    // each partial product is itself a binomial, so the division is exact
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(n: usize) -> BigUint {
    binom(2 * n as i64, n as i64) / BigUint::from(n + 1)
}

/// Linear intervals of height `k` in any `Tam^δ_n`.
pub fn closed_form(n: usize, k: usize) -> BigUint {
    let (n, k) = (n as i64, k as i64);
    match k {
        0 => catalan(n as usize),
        1 => binom(2 * n - 1, n - 2),
        _ if k < n => binom(2 * n - k, n - k - 1) * 2u32,
        _ => BigUint::zero(),
    }
}

/// Total number of linear intervals in any `Tam^δ_n`.
pub fn total_closed_form(n: usize) -> BigUint {
    let n = n as i64;
    catalan(n as usize) + binom(2 * n - 1, n - 2) + binom(2 * n - 1, n + 2) * 2u32
}
