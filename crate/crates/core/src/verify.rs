//! Property sweep behind the `verify` subcommand: every check is rerun from
//! scratch on the test set of increment functions and reported as one line.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;

use crate::alt_tamari::{build_alt_tamari, refines_posets, step_stats, test_deltas_seeded, upper_covers, IncrementFunction};
use crate::bijection::{compose, decompose, transport};
use crate::census::{binom, census_of, closed_form, linear_intervals, total_closed_form, IntervalKind};
use crate::dyck::{DyckPath, Span};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::series::{phi_coeff_binomial, solve_tree_series, SeriesOracle};
use crate::tree::{build_l, build_r, enumerate_trees, is_new_interval};

pub const PROPERTIES: [&str; 9] =
    ["census", "totals", "bijection", "refinement", "covering", "lemmas", "extremes", "mirror", "series"];

/// Totals of the census for `n = 1..7`.
pub const KNOWN_TOTALS: [u64; 7] = [1, 3, 12, 49, 198, 792, 3146];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub property: &'static str,
    pub n: Option<usize>,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(property: &'static str, n: Option<usize>, outcome: std::result::Result<String, String>) -> Self {
        let passed = outcome.is_ok();
        let detail = outcome.unwrap_or_else(|e| e);
        Check { property, n, passed, detail }
    }

    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        match self.n {
            Some(n) => format!("{status} {} n={n}: {}", self.property, self.detail),
            None => format!("{status} {}: {}", self.property, self.detail),
        }
    }
}

type Outcome = std::result::Result<String, String>;

struct Level {
    n: usize,
    deltas: Vec<IncrementFunction>,
    posets: Vec<std::result::Result<Poset<DyckPath>, Error>>,
}

impl Level {
    fn new(n: usize, seed: u64) -> Self {
        let deltas = test_deltas_seeded(n, seed);
        let posets = deltas.par_iter().map(build_alt_tamari).collect();
        Level { n, deltas, posets }
    }

    fn each(&self) -> impl Iterator<Item = (&IncrementFunction, std::result::Result<&Poset<DyckPath>, String>)> {
        self.deltas
            .iter()
            .zip(&self.posets)
            .map(|(d, p)| (d, p.as_ref().map_err(|e| format!("delta {d}: {e}"))))
    }
}

/// Run the selected properties (all when `only` is empty) for `n = 1..=n_max`;
/// `seed` picks the sampled increment functions for `n >= 6`.
pub fn run(n_max: usize, only: &[String], seed: u64) -> Result<Vec<Check>> {
    for name in only {
        if !PROPERTIES.contains(&name.as_str()) {
            return Err(Error::UnknownProperty { name: name.clone() });
        }
    }
    let cap = crate::poset_cap();
    if n_max > cap {
        return Err(Error::SizeTooLarge { size: n_max, cap });
    }
    let wanted = |p: &str| only.is_empty() || only.iter().any(|o| o == p);
    let needs_posets = PROPERTIES.iter().filter(|p| **p != "series").any(|p| wanted(p));

    let mut checks = Vec::new();
    let mut totals = Vec::new();
    for n in 1..=n_max {
        if !needs_posets {
            break;
        }
        let level = Level::new(n, seed);
        let census = census_level(&level);
        if let Ok((_, total)) = &census {
            totals.push(total.clone());
        }
        if wanted("census") {
            checks.push(Check::new("census", Some(n), census.as_ref().map(|(s, _)| s.clone()).map_err(Clone::clone)));
        }
        if wanted("totals") {
            checks.push(Check::new("totals", Some(n), totals_level(n, census.as_ref().ok().map(|(_, t)| t))));
        }
        if wanted("bijection") {
            checks.push(Check::new("bijection", Some(n), bijection_level(&level)));
        }
        if wanted("refinement") {
            checks.push(Check::new("refinement", Some(n), refinement_level(&level)));
        }
        if wanted("covering") {
            checks.push(Check::new("covering", Some(n), covering_level(&level)));
        }
        if wanted("lemmas") {
            checks.push(Check::new("lemmas", Some(n), lemmas_level(&level)));
        }
        if wanted("extremes") {
            checks.push(Check::new("extremes", Some(n), extremes_level(&level)));
        }
        if wanted("mirror") {
            checks.push(Check::new("mirror", Some(n), mirror_level(&level)));
        }
    }
    if wanted("census") && !totals.is_empty() {
        let list: Vec<String> = totals.iter().map(ToString::to_string).collect();
        checks.push(Check::new("census", None, Ok(format!("totals ({})", list.join(", ")))));
    }
    if wanted("series") {
        checks.push(Check::new("series", None, series_identities()));
    }
    Ok(checks)
}

fn census_level(level: &Level) -> std::result::Result<(String, BigUint), String> {
    let mut first: Option<BTreeMap<usize, BigUint>> = None;
    for (delta, poset) in level.each() {
        let table = census_of(delta, poset?).map_err(|e| format!("delta {delta}: {e}"))?;
        if !table.matches_closed_form() {
            return Err(format!("delta {delta}: counts differ from the closed form"));
        }
        match &first {
            None => first = Some(table.counts.clone()),
            Some(c) if *c != table.counts => return Err(format!("delta {delta}: counts depend on delta")),
            _ => {}
        }
    }
    let counts = first.unwrap_or_default();
    let total: BigUint = counts.values().sum();
    let row: Vec<String> = counts.values().map(ToString::to_string).collect();
    Ok((format!("counts ({}) total {total} over {} deltas", row.join(", "), level.deltas.len()), total))
}

fn totals_level(n: usize, total: Option<&BigUint>) -> Outcome {
    let total = total.ok_or("census failed")?;
    let expected = match KNOWN_TOTALS.get(n - 1) {
        Some(&t) => BigUint::from(t),
        None => total_closed_form(n),
    };
    if *total != expected || total_closed_form(n) != expected {
        return Err(format!("total {total}, expected {expected}"));
    }
    Ok(format!("total {total}"))
}

fn bijection_level(level: &Level) -> Outcome {
    let mut seen = 0usize;
    let deltas = &level.deltas;
    for (idx, (delta, poset)) in level.each().enumerate() {
        let poset = poset?;
        let other = &deltas[(idx + 1) % deltas.len()];
        let intervals = linear_intervals(delta, poset).map_err(|e| e.to_string())?;
        for (a, b, kind) in intervals {
            let (p, q) = (poset.element(a), poset.element(b));
            let fail = |what: &str| format!("delta {delta} [{p}, {q}]: {what}");
            let (k, dec) = decompose(delta, p, q).map_err(|e| fail(&e.to_string()))?;
            if k != kind || compose(delta, &dec).map_err(|e| fail(&e.to_string()))? != (*p, *q) {
                return Err(fail("compose after decompose is not the identity"));
            }
            let (p2, q2) = compose(delta, &dec).map_err(|e| fail(&e.to_string()))?;
            if decompose(delta, &p2, &q2).map_err(|e| fail(&e.to_string()))?.1 != dec {
                return Err(fail("decompose after compose is not the identity"));
            }
            let (tp, tq) = transport(delta, other, p, q).map_err(|e| fail(&e.to_string()))?;
            if crate::census::classify(other, &tp, &tq).map_err(|e| fail(&e.to_string()))? != kind {
                return Err(fail("transport changes the kind"));
            }
            let keeps_bottom = matches!(kind, IntervalKind::Covering | IntervalKind::Left(_));
            if keeps_bottom && tp != *p {
                return Err(fail("transport moves the bottom"));
            }
            if transport(other, delta, &tp, &tq).map_err(|e| fail(&e.to_string()))? != (*p, *q) {
                return Err(fail("transport back is not the identity"));
            }
            seen += 1;
        }
    }
    Ok(format!("{seen} linear intervals round-trip"))
}

fn refinement_level(level: &Level) -> Outcome {
    let mut pairs = 0usize;
    for (i, coarse) in level.deltas.iter().enumerate() {
        for (j, fine) in level.deltas.iter().enumerate() {
            if !coarse.le(fine) {
                continue;
            }
            let (pc, pf) = (level.posets[i].as_ref(), level.posets[j].as_ref());
            let (Ok(pc), Ok(pf)) = (pc, pf) else { return Err("poset construction failed".into()) };
            if !refines_posets(pc, pf) {
                return Err(format!("order of {fine} is not contained in that of {coarse}"));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

fn covering_level(level: &Level) -> Outcome {
    let n = level.n;
    let expected = binom(2 * n as i64 - 1, n as i64 - 2);
    for (delta, poset) in level.each() {
        let poset = poset?;
        if poset.dropped_covers() != 0 || BigUint::from(poset.covers().len()) != expected {
            return Err(format!("delta {delta}: {} covers, expected {expected}", poset.covers().len()));
        }
        for i in [1, n] {
            let flipped = build_alt_tamari(&delta.flipped_at(i)).map_err(|e| e.to_string())?;
            if flipped.covers() != poset.covers() {
                return Err(format!("delta {delta}: covers depend on delta({i})"));
            }
        }
    }
    Ok(format!("rotation graph reduced, {expected} covers"))
}

/// Nesting, rotation effect, persistence and monotonicity on one cover.
pub fn check_cover(delta: &IncrementFunction, p: &DyckPath, i: usize, q: &DyckPath) -> std::result::Result<(), String> {
    let fail = |what: &str| Err(format!("delta {delta}, {p} -> {q} at u_{i}: {what}"));
    let (sp, sq) = (step_stats(delta, p).map_err(|e| e.to_string())?, step_stats(delta, q).map_err(|e| e.to_string())?);
    let spans = |s: &crate::alt_tamari::StepStats| -> Vec<Span> {
        s.h.iter().zip(&s.ell).map(|(&h, &l)| Span::new(h - 1, h + l - 2)).collect()
    };
    let (ep, eq) = (spans(&sp), spans(&sq));
    if !nested(&ep) || !nested(&eq) {
        return fail("δ-excursions overlap or share an end step");
    }
    let c = ep[i - 1];
    let moved = c.start - 1;
    let inside: Vec<usize> = (1..=p.size()).filter(|&j| c.contains(sp.h[j - 1] - 1)).collect();
    for j in 1..=p.size() {
        let dh = if inside.contains(&j) { 1 } else { 0 };
        if sq.h[j - 1] + dh != sp.h[j - 1] {
            return fail(&format!("h_{j} moved unexpectedly"));
        }
        let grows = ep[j - 1].end == moved;
        let expected = sp.ell[j - 1] + if grows { sp.ell[i - 1] } else { 0 };
        if sq.ell[j - 1] != expected {
            return fail(&format!("ℓ_{j} changed unexpectedly"));
        }
        if sq.h[j - 1] > sp.h[j - 1] || sq.ell[j - 1] < sp.ell[j - 1] {
            return fail("h or ℓ not monotone");
        }
    }
    for a in 0..p.size() {
        for b in 0..p.size() {
            if ep[a].contains(sp.h[b] - 1) && !eq[a].contains(sq.h[b] - 1) {
                return fail(&format!("u_{} leaves the δ-excursion of u_{}", b + 1, a + 1));
            }
        }
    }
    Ok(())
}

fn nested(spans: &[Span]) -> bool {
    spans.iter().enumerate().all(|(x, s)| {
        spans[x + 1..]
            .iter()
            .all(|t| (s.is_disjoint(t) || s.includes(t) || t.includes(s)) && s.end != t.end)
    })
}

fn lemmas_level(level: &Level) -> Outcome {
    let mut covers = 0usize;
    for (delta, poset) in level.each() {
        for p in poset?.elements() {
            for (i, q) in upper_covers(delta, p) {
                check_cover(delta, p, i, &q)?;
                covers += 1;
            }
        }
    }
    Ok(format!("{covers} covers"))
}

fn extremes_level(level: &Level) -> Outcome {
    let n = level.n;
    let find = |d: IncrementFunction| {
        let i = level.deltas.iter().position(|x| *x == d).ok_or("extreme delta missing")?;
        level.posets[i].as_ref().map_err(|e| e.to_string())
    };
    let dyck = find(IncrementFunction::dyck(n))?;
    let tamari = find(IncrementFunction::tamari(n))?;
    for (a, p) in dyck.elements().iter().enumerate() {
        for (b, q) in dyck.elements().iter().enumerate() {
            if dyck.leq_at(a, b) != p.includes(q).map_err(|e| e.to_string())? {
                return Err(format!("dyck order differs from inclusion at {p}, {q}"));
            }
        }
    }
    let trees = enumerate_trees(n).map_err(|e| e.to_string())?;
    let idx: Vec<usize> = trees.iter().map(|t| tamari.index_of(&t.to_path())).collect::<Result<_>>().map_err(|e| e.to_string())?;
    for (x, s) in trees.iter().enumerate() {
        let covers: Vec<usize> = s.left_rotation_covers().iter().map(|t| tamari.index_of(&t.to_path()).unwrap()).collect();
        let mut expected: Vec<usize> = tamari.upper_covers(idx[x]).to_vec();
        let mut got = covers;
        expected.sort_unstable();
        got.sort_unstable();
        if got != expected {
            return Err(format!("tree {s} covers differ from path covers"));
        }
    }
    let mut detail = String::from("inclusion order and tree isomorphism");
    if n <= 5 {
        if !dyck.is_lattice() || !tamari.is_lattice() {
            return Err("an extreme poset is not a lattice".into());
        }
        detail.push_str(", both lattices");
    }
    let (l, r) = (build_l(n).map_err(|e| e.to_string())?, build_r(n).map_err(|e| e.to_string())?);
    if !is_new_interval(&l) || !is_new_interval(&r) {
        return Err("L_n or R_n is not new".into());
    }
    let big = build_alt_tamari(&IncrementFunction::tamari(n + 1)).map_err(|e| e.to_string())?;
    for iv in [&l, &r] {
        let (p, q) = iv.to_paths();
        let (a, b) = (big.index_of(&p).map_err(|e| e.to_string())?, big.index_of(&q).map_err(|e| e.to_string())?);
        if big.is_chain_at(a, b) != Some(true) || big.height_at(a, b) != Some(n) {
            return Err(format!("[{}, {}] is not linear of height {n}", iv.bottom(), iv.top()));
        }
    }
    detail.push_str(", L_n and R_n new and linear");
    Ok(detail)
}

fn mirror_level(level: &Level) -> Outcome {
    let n = level.n;
    let get = |d: IncrementFunction| {
        let i = level.deltas.iter().position(|x| *x == d).ok_or("extreme delta missing")?;
        level.posets[i].as_ref().map_err(|e| e.to_string())
    };
    let (dyck, tamari) = (get(IncrementFunction::dyck(n))?, get(IncrementFunction::tamari(n))?);
    let trees = enumerate_trees(n).map_err(|e| e.to_string())?;
    for s in &trees {
        for t in &trees {
            let before = tamari.leq(&s.to_path(), &t.to_path()).map_err(|e| e.to_string())?;
            let after = tamari.leq(&t.mirror().to_path(), &s.mirror().to_path()).map_err(|e| e.to_string())?;
            if before != after {
                return Err(format!("tree mirror does not reverse {s} <= {t}"));
            }
        }
    }
    for p in dyck.elements() {
        for q in dyck.elements() {
            if dyck.leq(p, q).map_err(|e| e.to_string())? != dyck.leq(&p.mirror(), &q.mirror()).map_err(|e| e.to_string())? {
                return Err(format!("path mirror does not preserve {p} <= {q}"));
            }
        }
    }
    Ok("tree mirror reverses, path mirror preserves".into())
}

/// The series identities checked by the `series` property.
pub fn series_identities() -> Outcome {
    let a = solve_tree_series(31);
    for n in 0..=30 {
        if BigUint::try_from(&a.coeffs()[n]).ok() != Some(crate::census::catalan(n)) {
            return Err(format!("[t^{n}] A is not Catalan"));
        }
    }
    let oracle = SeriesOracle::new(26);
    for k in 0..=6 {
        let phi = oracle.phi(k).compose(oracle.b()).map_err(|e| e.to_string())?;
        for n in 0..=20 {
            if phi.coeffs()[n] != phi_coeff_binomial(k, n) {
                return Err(format!("φ_{k} coefficient {n} differs from the binomial"));
            }
        }
    }
    for k in 0..25 {
        let s = oracle.s_series(k);
        for n in k + 1..=25 {
            if s.coeffs()[n] != BigInt::from(closed_form(n, k)) {
                return Err(format!("S_{k} coefficient {n} differs from the closed form"));
            }
        }
    }
    for n in 3..=64i64 {
        let lhs: BigUint = (2..n).map(|k| binom(2 * n - k, n + 1)).sum();
        if lhs != binom(2 * n - 1, n + 2) {
            return Err(format!("telescoping sum fails at n = {n}"));
        }
    }
    let b = oracle.b();
    let one = crate::series::TruncatedSeries::one(26);
    let b1 = b + &one;
    if &b.derivative() * &(&one - b) != b1.pow(3).truncate(25) {
        return Err("B'(1 - B) != (B + 1)^3".into());
    }
    Ok("Catalan to t^30, φ_k for k <= 6, S_k to t^25, telescoping to 64".into())
}
