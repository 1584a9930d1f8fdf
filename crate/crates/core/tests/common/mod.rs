//! Brute-force reference implementations, written against plain strings and
//! hand-rolled bitsets so they share no logic with the library.

#![allow(dead_code)]

use std::collections::HashMap;

/// All Dyck words of size `n`, found by filtering every binary word.
pub fn dyck_words(n: usize) -> Vec<String> {
    let mut out = Vec::new();
    for mask in 0u64..1 << (2 * n) {
        if mask.count_ones() as usize != n {
            continue;
        }
        let mut h = 0i32;
        let mut ok = true;
        let mut w = String::with_capacity(2 * n);
        for i in 0..2 * n {
            if mask >> (2 * n - 1 - i) & 1 == 0 {
                h += 1;
                w.push('u');
            } else {
                h -= 1;
                w.push('d');
            }
            if h < 0 {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(w);
        }
    }
    out
}

/// δ as a 0/1 vector indexed from 1 (index 0 unused).
pub fn bits(delta: &str) -> Vec<i32> {
    std::iter::once(0).chain(delta.chars().map(|c| if c == '1' { 1 } else { 0 })).collect()
}

/// Every δ-rotation of `w`: for each factor `d u_i`, move the `d` past the
/// shortest factor starting at `u_i` whose δ-weighted height returns to 0.
pub fn rotations(delta: &[i32], w: &str) -> Vec<String> {
    labelled_rotations(delta, w).into_iter().map(|(_, r)| r).collect()
}

/// Rotations paired with the label `i` of the up step that moved.
pub fn labelled_rotations(delta: &[i32], w: &str) -> Vec<(usize, String)> {
    let c: Vec<char> = w.chars().collect();
    let mut out = Vec::new();
    let mut label = 0;
    for i in 0..c.len() {
        if c[i] != 'u' {
            continue;
        }
        label += 1;
        if i == 0 || c[i - 1] != 'd' {
            continue;
        }
        let (mut alt, mut lab, mut j) = (0, label - 1, i);
        loop {
            if c[j] == 'u' {
                lab += 1;
                alt += delta[lab];
            } else {
                alt -= 1;
            }
            if alt == 0 {
                break;
            }
            j += 1;
        }
        let mut v = c.clone();
        v[i - 1..=j].rotate_left(1);
        out.push((label, v.into_iter().collect()));
    }
    out
}

/// 1-based positions of the up steps.
pub fn h(w: &str) -> Vec<usize> {
    w.char_indices().filter(|(_, c)| *c == 'u').map(|(i, _)| i + 1).collect()
}

/// Length of the shortest factor starting at each up step whose δ-weighted
/// height is zero.
pub fn ell(delta: &[i32], w: &str) -> Vec<usize> {
    let c: Vec<char> = w.chars().collect();
    let ups = h(w);
    ups.iter()
        .enumerate()
        .map(|(k, &p)| {
            let (mut alt, mut lab) = (0, k);
            for (off, &s) in c[p - 1..].iter().enumerate() {
                if s == 'u' {
                    lab += 1;
                    alt += delta[lab];
                } else {
                    alt -= 1;
                }
                if alt == 0 {
                    return off + 1;
                }
            }
            unreachable!()
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct Bits(Vec<u64>);

impl Bits {
    pub fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    pub fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    pub fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    pub fn or(&mut self, o: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a |= b;
        }
    }
    pub fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    pub fn count(&self) -> usize {
        self.0.iter().map(|x| x.count_ones() as usize).sum()
    }
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b))
    }
}

/// The order generated by δ-rotations, as reachability sets.
pub struct RefPoset {
    pub words: Vec<String>,
    pub index: HashMap<String, usize>,
    pub covers: Vec<Vec<usize>>,
    pub up: Vec<Bits>,
    pub down: Vec<Bits>,
}

impl RefPoset {
    pub fn new(n: usize, delta: &str) -> Self {
        let d = bits(delta);
        let words = dyck_words(n);
        let index: HashMap<String, usize> = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let covers: Vec<Vec<usize>> = words.iter().map(|w| rotations(&d, w).iter().map(|r| index[r]).collect()).collect();
        let m = words.len();
        let mut up: Vec<Option<Bits>> = vec![None; m];
        fn fill(x: usize, covers: &[Vec<usize>], up: &mut Vec<Option<Bits>>, m: usize) {
            if up[x].is_some() {
                return;
            }
            let mut b = Bits::new(m);
            b.set(x);
            for &y in &covers[x] {
                fill(y, covers, up, m);
                let s = up[y].clone().unwrap();
                b.or(&s);
            }
            up[x] = Some(b);
        }
        for x in 0..m {
            fill(x, &covers, &mut up, m);
        }
        let up: Vec<Bits> = up.into_iter().map(Option::unwrap).collect();
        let mut down = vec![Bits::new(m); m];
        for (x, row) in up.iter().enumerate() {
            for y in row.ones() {
                down[y].set(x);
            }
        }
        RefPoset { words, index, covers, up, down }
    }

    pub fn leq(&self, a: &str, b: &str) -> bool {
        self.up[self.index[a]].get(self.index[b])
    }

    /// Linear intervals by height: `[a, b]` is linear when each element below
    /// `b` has exactly one upper cover inside the interval.
    pub fn census(&self) -> Vec<u64> {
        let m = self.words.len();
        let mut counts = vec![0u64; m.max(1)];
        for a in 0..m {
            for b in self.up[a].ones() {
                let iv = self.up[a].and(&self.down[b]);
                let chain = iv.ones().filter(|&x| x != b).all(|x| self.covers[x].iter().filter(|&&y| iv.get(y)).count() == 1);
                if chain {
                    counts[iv.count() - 1] += 1;
                }
            }
        }
        while counts.len() > 1 && counts.last() == Some(&0) {
            counts.pop();
        }
        counts
    }
}

/// Pascal's triangle, exact up to row 66.
pub fn binomial(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for j in 1..row.len() {
            next[j] = row[j - 1] + row[j];
        }
        row = next;
    }
    row[k as usize]
}

pub fn catalan(n: usize) -> u128 {
    binomial(2 * n as i64, n as i64) / (n as u128 + 1)
}

/// Linear intervals of height `k` in a poset of size `n`, from the three formulas.
pub fn expected_count(n: usize, k: usize) -> u128 {
    let (n, k) = (n as i64, k as i64);
    match k {
        0 => catalan(n as usize),
        1 => binomial(2 * n - 1, n - 2),
        _ if k < n => 2 * binomial(2 * n - k, n - k - 1),
        _ => 0,
    }
}

/// The table of counts by height, for `n = 1..7`.
pub const TABLE: [&[u64]; 7] = [
    &[1],
    &[2, 1],
    &[5, 5, 2],
    &[14, 21, 12, 2],
    &[42, 84, 56, 14, 2],
    &[132, 330, 240, 72, 16, 2],
    &[429, 1287, 990, 330, 90, 18, 2],
];

pub const TOTALS: [u64; 7] = [1, 3, 12, 49, 198, 792, 3146];
