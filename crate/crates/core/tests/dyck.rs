mod common;

use alt_tamari::dyck::{enumerate_paths_capped, word, MAX_PATH_SIZE};
use alt_tamari::{enumerate_paths, DyckPath, Error, Span, Step};
use common::{catalan, dyck_words};
use proptest::prelude::*;

#[test]
fn enumeration_matches_brute_force() {
    for n in 0..=8 {
        let mut expected = dyck_words(n);
        expected.sort_by(|a, b| b.cmp(a)); // 'u' > 'd' in ASCII, and u sorts first here
        let got: Vec<String> = enumerate_paths(n).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(got, expected);
        assert_eq!(got.len() as u128, catalan(n));
    }
}

#[test]
fn caps() {
    assert_eq!(enumerate_paths_capped(5, 4), Err(Error::SizeTooLarge { size: 5, cap: 4 }));
    assert!(enumerate_paths_capped(4, 4).is_ok());
    assert_eq!(MAX_PATH_SIZE, 32);
    let long = "u".repeat(33) + &"d".repeat(33);
    assert!(DyckPath::parse(&long).is_err());
    let longest = "u".repeat(32) + &"d".repeat(32);
    assert_eq!(DyckPath::parse(&longest).unwrap().size(), 32);
}

#[test]
fn parsing_errors() {
    assert_eq!(DyckPath::parse("uxd"), Err(Error::BadAlphabet { found: 'x', position: 2 }));
    assert!(matches!(DyckPath::parse("du"), Err(Error::NonDyckWord { .. })));
    assert!(matches!(DyckPath::parse("uud"), Err(Error::NonDyckWord { .. })));
    assert_eq!(DyckPath::parse("1010").unwrap(), DyckPath::parse("UDUD").unwrap());
    assert_eq!(DyckPath::parse("").unwrap(), DyckPath::empty());
}

#[test]
fn excursions_and_valleys() {
    let p = DyckPath::parse("uududdud").unwrap();
    assert_eq!(p.excursion(1).unwrap(), Span::new(0, 5));
    assert_eq!(p.excursion(3).unwrap(), Span::new(3, 4));
    assert_eq!(p.excursion(4).unwrap(), Span::new(6, 7));
    assert_eq!(p.valley_labels(), vec![3, 4]);
    assert_eq!(p.peaks(), vec![1, 3, 6]);
    assert_eq!(p.valleys(), vec![2, 5]);
    assert!(p.excursion(5).is_err());
}

fn path_strategy(max: usize) -> impl Strategy<Value = DyckPath> {
    (0..=max).prop_flat_map(|n| {
        let all = enumerate_paths(n).unwrap();
        (0..all.len()).prop_map(move |i| all[i])
    })
}

proptest! {
    #[test]
    fn mirror_is_an_involution(p in path_strategy(7)) {
        prop_assert_eq!(p.mirror().mirror(), p);
        let flipped: String = p.to_string().chars().rev().map(|c| if c == 'u' { 'd' } else { 'u' }).collect();
        prop_assert_eq!(p.mirror().to_string(), flipped);
    }

    #[test]
    fn text_round_trip(p in path_strategy(8)) {
        prop_assert_eq!(p.to_string().parse::<DyckPath>().unwrap(), p);
        prop_assert_eq!(word(&p.to_steps()), p.to_string());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<DyckPath>(&json).unwrap(), p);
    }

    #[test]
    fn heights_stay_nonnegative(p in path_strategy(8)) {
        // heights at which steps start; the last step is a down from height 1
        let h = p.heights();
        prop_assert_eq!(h.len(), p.len());
        if !p.is_empty() {
            prop_assert_eq!(h[0], 0);
            prop_assert_eq!(*h.last().unwrap(), 1);
        }
    }

    #[test]
    fn excursions_end_at_matching_down(p in path_strategy(8)) {
        for i in 1..=p.size() {
            let span = p.excursion(i).unwrap();
            prop_assert_eq!(p.step(span.start), Step::Up);
            prop_assert_eq!(p.step(span.end), Step::Down);
            prop_assert_eq!(span.end, p.match_up(i).unwrap());
            let inner = p.subword(span).unwrap();
            prop_assert!(DyckPath::from_steps(&inner).is_ok());
        }
    }
}
