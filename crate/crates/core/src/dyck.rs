//! Dyck paths as packed words over `{u, d}`.
//!
//! Steps are indexed from 0 internally. Up steps are numbered `1..=n` from
//! left to right, which is the numbering every `i`-taking function expects.
//! Text output uses `u`/`d`; input also accepts `U`/`D` and `1`/`0`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest size a packed path can hold (two bits of word per unit of size).
pub const MAX_PATH_SIZE: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::Up => 'u',
            Step::Down => 'd',
        }
    }

    pub fn from_letter(c: char) -> Option<Step> {
        match c {
            'u' | 'U' | '1' => Some(Step::Up),
            'd' | 'D' | '0' => Some(Step::Down),
            _ => None,
        }
    }

    pub fn flip(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }
}

/// A contiguous run of steps, `start..=end`, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Span {
        debug_assert!(start <= end);
        Span { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.start <= idx && idx <= self.end
    }

    /// True when the two spans share no step.
    pub fn is_disjoint(&self, other: &Span) -> bool {
        self.end < other.start || other.end < self.start
    }

    /// True when `other` lies inside `self`.
    pub fn includes(&self, other: &Span) -> bool {
        self.start <= other.start && other.end <= self.end
    }
}

impl fmt::Display for Span {
    /// 1-based, inclusive.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start + 1, self.end + 1)
    }
}

/// Immutable Dyck path. Bit `i` of `downs` is set when step `i` is a down step.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DyckPath {
    downs: u64,
    len: u8,
}

impl DyckPath {
    /// The trivial path of size 0.
    pub fn empty() -> DyckPath {
        DyckPath { downs: 0, len: 0 }
    }

    pub fn parse(word: &str) -> Result<DyckPath> {
        let mut steps = Vec::with_capacity(word.len());
        for (position, c) in word.chars().enumerate() {
            match Step::from_letter(c) {
                Some(s) => steps.push(s),
                None => return Err(Error::BadAlphabet { found: c, position: position + 1 }),
            }
        }
        DyckPath::from_steps(&steps)
    }

    pub fn from_steps(steps: &[Step]) -> Result<DyckPath> {
        if steps.len() > 2 * MAX_PATH_SIZE {
            return Err(Error::SizeTooLarge { size: steps.len() / 2, cap: MAX_PATH_SIZE });
        }
        let mut height: i64 = 0;
        let mut downs = 0u64;
        for (i, &s) in steps.iter().enumerate() {
            match s {
                Step::Up => height += 1,
                Step::Down => {
                    height -= 1;
                    downs |= 1 << i;
                }
            }
            if height < 0 {
                return Err(non_dyck(steps));
            }
        }
        if height != 0 {
            return Err(non_dyck(steps));
        }
        Ok(DyckPath { downs, len: steps.len() as u8 })
    }

    /// Zigzag `(ud)^n`, the bottom of every alt-Tamari poset.
    pub fn zigzag(n: usize) -> DyckPath {
        let steps: Vec<Step> = (0..n).flat_map(|_| [Step::Up, Step::Down]).collect();
        DyckPath::from_steps(&steps).expect("zigzag is Dyck")
    }

    /// Pyramid `u^n d^n`, the top of every alt-Tamari poset.
    pub fn pyramid(n: usize) -> DyckPath {
        let steps: Vec<Step> =
            std::iter::repeat_n(Step::Up, n).chain(std::iter::repeat_n(Step::Down, n)).collect();
        DyckPath::from_steps(&steps).expect("pyramid is Dyck")
    }

    /// Number of up steps.
    pub fn size(&self) -> usize {
        self.len as usize / 2
    }

    /// Number of steps, `2n`.
    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn step(&self, idx: usize) -> Step {
        assert!(idx < self.len(), "step {idx} out of range");
        if self.downs >> idx & 1 == 1 {
            Step::Down
        } else {
            Step::Up
        }
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        (0..self.len()).map(move |i| self.step(i))
    }

    pub fn to_steps(&self) -> Vec<Step> {
        self.steps().collect()
    }

    /// Step index of every up step; entry `i - 1` is the position of `u_i`.
    pub fn up_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.step(i) == Step::Up).collect()
    }

    /// Step index of `u_i`.
    pub fn up_step(&self, i: usize) -> Result<usize> {
        self.check_up_index(i)?;
        let mut seen = 0;
        for idx in 0..self.len() {
            if self.step(idx) == Step::Up {
                seen += 1;
                if seen == i {
                    return Ok(idx);
                }
            }
        }
        unreachable!("path has {} up steps", self.size())
    }

    /// Label of the up step at `idx`, or `None` for a down step.
    pub fn up_label(&self, idx: usize) -> Option<usize> {
        if self.step(idx) == Step::Down {
            return None;
        }
        let mask = if idx == 0 { 0 } else { u64::MAX >> (64 - idx) };
        Some(idx - (self.downs & mask).count_ones() as usize + 1)
    }

    /// Height at which each step starts.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = 0usize;
        self.steps()
            .map(|s| {
                let start = h;
                match s {
                    Step::Up => h += 1,
                    Step::Down => h -= 1,
                }
                start
            })
            .collect()
    }

    /// Step index of the down step matching `u_i`.
    pub fn match_up(&self, i: usize) -> Result<usize> {
        let start = self.up_step(i)?;
        Ok(self.match_at(start))
    }

    /// Matching down step of the up step at step index `start`.
    pub(crate) fn match_at(&self, start: usize) -> usize {
        debug_assert_eq!(self.step(start), Step::Up);
        let mut depth = 0i64;
        for idx in start..self.len() {
            match self.step(idx) {
                Step::Up => depth += 1,
                Step::Down => depth -= 1,
            }
            if depth == 0 {
                return idx;
            }
        }
        unreachable!("Dyck path always closes its excursions")
    }

    /// Excursion of `u_i`: from `u_i` to its matching down step.
    pub fn excursion(&self, i: usize) -> Result<Span> {
        let start = self.up_step(i)?;
        Ok(Span::new(start, self.match_at(start)))
    }

    /// Indices of the `d` of every `du` factor.
    pub fn valleys(&self) -> Vec<usize> {
        self.factor_positions(Step::Down, Step::Up)
    }

    /// Indices of the `u` of every `ud` factor.
    pub fn peaks(&self) -> Vec<usize> {
        self.factor_positions(Step::Up, Step::Down)
    }

    /// Labels `i` of up steps sitting in a valley `d u_i`.
    pub fn valley_labels(&self) -> Vec<usize> {
        self.valleys().into_iter().map(|v| self.up_label(v + 1).unwrap()).collect()
    }

    fn factor_positions(&self, first: Step, second: Step) -> Vec<usize> {
        (0..self.len().saturating_sub(1))
            .filter(|&i| self.step(i) == first && self.step(i + 1) == second)
            .collect()
    }

    /// Reverse the word and swap `u` with `d`.
    pub fn mirror(&self) -> DyckPath {
        let steps: Vec<Step> = self.to_steps().into_iter().rev().map(Step::flip).collect();
        DyckPath::from_steps(&steps).expect("mirror of a Dyck word is Dyck")
    }

    /// Whether `self` lies weakly below `other` (inclusion order).
    pub fn includes(&self, other: &DyckPath) -> Result<bool> {
        if self.len != other.len {
            return Err(Error::SizeMismatch { expected: self.size(), found: other.size() });
        }
        Ok(self.heights().iter().zip(other.heights()).all(|(a, b)| *a <= b))
    }

    pub fn subword(&self, span: Span) -> Result<Vec<Step>> {
        if span.end >= self.len() {
            return Err(Error::SpanOutOfRange { start: span.start, end: span.end, len: self.len() });
        }
        Ok((span.start..=span.end).map(|i| self.step(i)).collect())
    }

    fn check_up_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.size() {
            Err(Error::IndexOutOfRange { index: i, max: self.size() })
        } else {
            Ok(())
        }
    }
}

fn non_dyck(steps: &[Step]) -> Error {
    Error::NonDyckWord { word: steps.iter().map(|s| s.letter()).collect() }
}

/// Word of a step slice, for diagnostics.
pub fn word(steps: &[Step]) -> String {
    steps.iter().map(|s| s.letter()).collect()
}

impl Ord for DyckPath {
    /// Shorter paths first; equal sizes compare lexicographically with `u < d`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            let diff = self.downs ^ other.downs;
            if diff == 0 {
                Ordering::Equal
            } else {
                let first = diff.trailing_zeros();
                if self.downs >> first & 1 == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        })
    }
}

impl PartialOrd for DyckPath {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.steps() {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DyckPath::parse(s)
    }
}

impl Serialize for DyckPath {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DyckPath {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        DyckPath::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// All Dyck paths of size `n` in lexicographic order (`u < d`), capped at
/// [`crate::enumeration_cap`].
pub fn enumerate_paths(n: usize) -> Result<Vec<DyckPath>> {
    enumerate_paths_capped(n, crate::enumeration_cap())
}

pub fn enumerate_paths_capped(n: usize, cap: usize) -> Result<Vec<DyckPath>> {
    let cap = cap.min(MAX_PATH_SIZE);
    if n > cap {
        return Err(Error::SizeTooLarge { size: n, cap });
    }
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(2 * n);
    extend(&mut buf, n, 0, 0, &mut out);
    Ok(out)
}

fn extend(buf: &mut Vec<Step>, n: usize, ups: usize, downs: usize, out: &mut Vec<DyckPath>) {
    if ups == n && downs == n {
        out.push(DyckPath::from_steps(buf).expect("generator emits Dyck words"));
        return;
    }
    if ups < n {
        buf.push(Step::Up);
        extend(buf, n, ups + 1, downs, out);
        buf.pop();
    }
    if downs < ups {
        buf.push(Step::Down);
        extend(buf, n, ups, downs + 1, out);
        buf.pop();
    }
}
