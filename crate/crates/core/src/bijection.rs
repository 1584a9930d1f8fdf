//! Decompositions of linear intervals into marked paths plus a sequence of
//! paths, and the inverse constructions.
//!
//! * covering `[A d C B, A C d B]` ↔ (path marked at a down step, one path)
//! * left of height `k` ↔ (path marked at an up step, `k` paths)
//! * right of height `k` ↔ (path marked at a down step, `k` paths)
//!
//! The target sets do not mention δ, so decomposing under one increment
//! function and composing under another transports linear intervals between
//! alt-Tamari posets while keeping their height.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alt_tamari::{excursion_len_in, IncrementFunction};
use crate::census::{shape, IntervalKind};
use crate::dyck::{word, DyckPath, Step};
use crate::error::{Error, Result};

/// A path with one distinguished step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MarkedPath {
    path: DyckPath,
    mark: usize,
}

impl MarkedPath {
    pub fn new(path: DyckPath, mark: usize) -> Result<Self> {
        if mark >= path.len() {
            return Err(Error::IndexOutOfRange { index: mark + 1, max: path.len() });
        }
        Ok(MarkedPath { path, mark })
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    /// 0-based index of the marked step.
    pub fn mark(&self) -> usize {
        self.mark
    }

    pub fn mark_kind(&self) -> Step {
        self.path.step(self.mark)
    }
}

impl fmt::Display for MarkedPath {
    /// Space-separated steps, the marked one suffixed with `*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.path.steps().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", s.letter())?;
            if i == self.mark {
                f.write_str("*")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MarkedPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut letters = String::new();
        let mut mark = None;
        for c in compact.chars() {
            if c == '*' {
                if letters.is_empty() || mark.is_some() {
                    return Err(Error::BadDecomposition { reason: format!("bad mark in {s:?}") });
                }
                mark = Some(letters.len() - 1);
            } else {
                letters.push(c);
            }
        }
        let mark = mark.ok_or_else(|| Error::BadDecomposition { reason: format!("no marked step in {s:?}") })?;
        MarkedPath::new(DyckPath::parse(&letters)?, mark)
    }
}

impl Serialize for MarkedPath {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MarkedPath {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// A marked path and `k >= 1` possibly empty paths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Decomposition {
    pub marked: MarkedPath,
    pub parts: Vec<DyckPath>,
}

impl Decomposition {
    /// Size of the interval this decomposes: all parts plus one per part.
    pub fn interval_size(&self) -> usize {
        self.marked.path.size() + self.parts.iter().map(|p| p.size() + 1).sum::<usize>()
    }

    /// Kind of interval this composes to.
    pub fn kind(&self) -> IntervalKind {
        match (self.marked.mark_kind(), self.parts.len()) {
            (Step::Down, 1) => IntervalKind::Covering,
            (Step::Down, k) => IntervalKind::Right(k),
            (Step::Up, k) => IntervalKind::Left(k),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind().to_string(),
            "marked": self.marked.to_string(),
            "parts": self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })
    }
}

fn ups(steps: &[Step]) -> usize {
    steps.iter().filter(|&&s| s == Step::Up).count()
}

fn path_of(steps: &[Step]) -> Result<DyckPath> {
    DyckPath::from_steps(steps)
        .map_err(|_| Error::BadDecomposition { reason: format!("{} is not a Dyck word", word(steps)) })
}

/// Index of the up step matched by the down step at `idx`.
fn match_down(steps: &[Step], idx: usize) -> usize {
    let mut depth = 0i64;
    for j in (0..=idx).rev() {
        depth += if steps[j] == Step::Down { 1 } else { -1 };
        if depth == 0 {
            return j;
        }
    }
    unreachable!("down step in a Dyck word is matched")
}

fn match_up(steps: &[Step], idx: usize) -> usize {
    let mut depth = 0i64;
    for (j, s) in steps.iter().enumerate().skip(idx) {
        depth += if *s == Step::Up { 1 } else { -1 };
        if depth == 0 {
            return j;
        }
    }
    unreachable!("up step in a Dyck word is matched")
}

/// `P = A d C_i B` with `E = C_i D` the excursion of `u_i` and `B = D B'`:
/// gives `(A d B'` marked at its `d`, `E')` where `E = u E' d`.
pub fn decompose_covering(delta: &IncrementFunction, bottom: &DyckPath, top: &DyckPath) -> Result<Decomposition> {
    let s = shape(delta, bottom, top)?;
    if s.kind != IntervalKind::Covering {
        return Err(Error::NotACovering);
    }
    let p = bottom.to_steps();
    let a = s.prefix;
    let end = match_up(&p, a + 1);
    let mut base: Vec<Step> = p[..=a].to_vec();
    base.extend_from_slice(&p[end + 1..]);
    let marked = MarkedPath::new(path_of(&base)?, a)?;
    Ok(Decomposition { marked, parts: vec![path_of(&p[a + 2..end])?] })
}

pub fn compose_covering(delta: &IncrementFunction, dec: &Decomposition) -> Result<(DyckPath, DyckPath)> {
    if dec.marked.mark_kind() != Step::Down || dec.parts.len() != 1 {
        return Err(Error::BadDecomposition { reason: "covering needs a down mark and one part".into() });
    }
    check_size(delta, dec)?;
    let base = dec.marked.path.to_steps();
    let (a, rest) = (&base[..dec.marked.mark], &base[dec.marked.mark + 1..]);
    let excursion = wrap(&dec.parts[0]);
    let c = excursion_len_in(delta, &excursion, 0, ups(a) + 1);
    let bottom = [a, &[Step::Down], &excursion, rest].concat();
    let top = [a, &excursion[..c], &[Step::Down], &excursion[c..], rest].concat();
    Ok((path_of(&bottom)?, path_of(&top)?))
}

/// `P = A' u P_1 .. u P_k d^k C B`: gives `(A' C B` marked at the first step
/// of `C`, `P_1..P_k)`.
pub fn decompose_left(delta: &IncrementFunction, bottom: &DyckPath, top: &DyckPath) -> Result<Decomposition> {
    let s = shape(delta, bottom, top)?;
    let IntervalKind::Left(k) = s.kind else { return Err(Error::NotLeft) };
    let p = bottom.to_steps();
    let a = s.prefix;
    // the d at a + k - j matches u_{i_j}
    let opens: Vec<usize> = (1..=k).map(|j| match_down(&p, a + k - j)).collect();
    let parts = (0..k)
        .map(|j| {
            let stop = if j + 1 < k { opens[j + 1] } else { a };
            path_of(&p[opens[j] + 1..stop])
        })
        .collect::<Result<Vec<_>>>()?;
    let mut base: Vec<Step> = p[..opens[0]].to_vec();
    base.extend_from_slice(&p[a + k..]);
    let marked = MarkedPath::new(path_of(&base)?, opens[0])?;
    Ok(Decomposition { marked, parts })
}

pub fn compose_left(delta: &IncrementFunction, dec: &Decomposition) -> Result<(DyckPath, DyckPath)> {
    let k = dec.parts.len();
    if dec.marked.mark_kind() != Step::Up || k < 2 {
        return Err(Error::BadDecomposition { reason: "left interval needs an up mark and k >= 2 parts".into() });
    }
    check_size(delta, dec)?;
    let base = dec.marked.path.to_steps();
    let mut prefix: Vec<Step> = base[..dec.marked.mark].to_vec();
    for part in &dec.parts {
        prefix.push(Step::Up);
        prefix.extend(part.steps());
    }
    let a = prefix.len();
    let mut bottom = prefix.clone();
    bottom.extend(std::iter::repeat_n(Step::Down, k));
    bottom.extend_from_slice(&base[dec.marked.mark..]);
    let c_start = a + k;
    let c = excursion_len_in(delta, &bottom, c_start, ups(&bottom[..c_start]) + 1);
    let mut top = prefix;
    top.extend_from_slice(&bottom[c_start..c_start + c]);
    top.extend(std::iter::repeat_n(Step::Down, k));
    top.extend_from_slice(&bottom[c_start + c..]);
    Ok((path_of(&bottom)?, path_of(&top)?))
}

/// `P = A d C_1..C_k D_k..D_1 B'` where `C_j D_j = u P_j d` is the excursion
/// of the first step of `C_j`: gives `(A d B'` marked at its `d`, `P_1..P_k)`.
pub fn decompose_right(delta: &IncrementFunction, bottom: &DyckPath, top: &DyckPath) -> Result<Decomposition> {
    let s = shape(delta, bottom, top)?;
    let IntervalKind::Right(k) = s.kind else { return Err(Error::NotRight) };
    let p = bottom.to_steps();
    let a = s.prefix;
    let mut starts = Vec::with_capacity(k);
    let mut pos = a + 1;
    for &len in &s.excursions {
        starts.push(pos);
        pos += len;
    }
    // peel D_k first, then D_{k-1}, ...
    let mut tails: Vec<(usize, usize)> = vec![(0, 0); k];
    let mut consumed = pos - 1;
    for j in (0..k).rev() {
        let c_end = starts[j] + s.excursions[j] - 1;
        let closing = match_up(&p, starts[j]);
        if closing == c_end {
            tails[j] = (consumed + 1, consumed + 1);
        } else if closing > consumed {
            tails[j] = (consumed + 1, closing + 1);
            consumed = closing;
        } else {
            return Err(Error::BadDecomposition { reason: format!("excursion {} overlaps a later segment", j + 1) });
        }
    }
    let parts = (0..k)
        .map(|j| {
            let c = &p[starts[j]..starts[j] + s.excursions[j]];
            let tail = &p[tails[j].0..tails[j].1];
            let joined = [c, tail].concat();
            path_of(&joined[1..joined.len() - 1])
        })
        .collect::<Result<Vec<_>>>()?;
    let mut base: Vec<Step> = p[..=a].to_vec();
    base.extend_from_slice(&p[consumed + 1..]);
    let marked = MarkedPath::new(path_of(&base)?, a)?;
    let dec = Decomposition { marked, parts };

    // reassemble and compare before handing out
    let (again, _) = compose_right(delta, &dec)?;
    if again != *bottom {
        return Err(Error::BadDecomposition { reason: format!("right decomposition does not rebuild {bottom}") });
    }
    Ok(dec)
}

pub fn compose_right(delta: &IncrementFunction, dec: &Decomposition) -> Result<(DyckPath, DyckPath)> {
    let k = dec.parts.len();
    if dec.marked.mark_kind() != Step::Down || k < 2 {
        return Err(Error::BadDecomposition { reason: "right interval needs a down mark and k >= 2 parts".into() });
    }
    check_size(delta, dec)?;
    let base = dec.marked.path.to_steps();
    let (a, rest) = (&base[..dec.marked.mark], &base[dec.marked.mark + 1..]);
    let mut label = ups(a) + 1;
    let mut heads: Vec<Step> = Vec::new();
    let mut tails: Vec<Vec<Step>> = Vec::with_capacity(k);
    for part in &dec.parts {
        let excursion = wrap(part);
        let c = excursion_len_in(delta, &excursion, 0, label);
        label += ups(&excursion[..c]);
        heads.extend_from_slice(&excursion[..c]);
        tails.push(excursion[c..].to_vec());
    }
    let tail: Vec<Step> = tails.into_iter().rev().flatten().chain(rest.iter().copied()).collect();
    let bottom = [a, &[Step::Down], &heads, &tail].concat();
    let top = [a, &heads, &[Step::Down], &tail].concat();
    Ok((path_of(&bottom)?, path_of(&top)?))
}

/// Decompose any nontrivial linear interval.
pub fn decompose(delta: &IncrementFunction, bottom: &DyckPath, top: &DyckPath) -> Result<(IntervalKind, Decomposition)> {
    let kind = shape(delta, bottom, top)?.kind;
    let dec = match kind {
        IntervalKind::Covering => decompose_covering(delta, bottom, top)?,
        IntervalKind::Left(_) => decompose_left(delta, bottom, top)?,
        IntervalKind::Right(_) => decompose_right(delta, bottom, top)?,
        IntervalKind::Trivial | IntervalKind::NotLinear => return Err(Error::NotLinear),
    };
    Ok((kind, dec))
}

/// Inverse of [`decompose`]; the kind is read off the decomposition.
pub fn compose(delta: &IncrementFunction, dec: &Decomposition) -> Result<(DyckPath, DyckPath)> {
    match dec.kind() {
        IntervalKind::Covering => compose_covering(delta, dec),
        IntervalKind::Left(_) => compose_left(delta, dec),
        _ => compose_right(delta, dec),
    }
}

/// Carry a linear interval of `Tam^from` to one of the same kind and height
/// in `Tam^to`. Trivial intervals map to themselves.
pub fn transport(
    from: &IncrementFunction,
    to: &IncrementFunction,
    bottom: &DyckPath,
    top: &DyckPath,
) -> Result<(DyckPath, DyckPath)> {
    if from.size() != to.size() {
        return Err(Error::SizeMismatch { expected: from.size(), found: to.size() });
    }
    match shape(from, bottom, top)?.kind {
        IntervalKind::Trivial => Ok((*bottom, *top)),
        IntervalKind::NotLinear => Err(Error::NotLinear),
        _ => {
            let (_, dec) = decompose(from, bottom, top)?;
            compose(to, &dec)
        }
    }
}

fn wrap(path: &DyckPath) -> Vec<Step> {
    std::iter::once(Step::Up).chain(path.steps()).chain(std::iter::once(Step::Down)).collect()
}

fn check_size(delta: &IncrementFunction, dec: &Decomposition) -> Result<()> {
    let n = dec.interval_size();
    if delta.size() != n {
        return Err(Error::SizeMismatch { expected: delta.size(), found: n });
    }
    Ok(())
}
