mod common;

use alt_tamari::alt_tamari::test_deltas;
use alt_tamari::census::{binom, catalan, left_right_split, linear_intervals, total_closed_form};
use alt_tamari::{build_alt_tamari, census, classify, closed_form, DyckPath, Error, IncrementFunction, IntervalKind};
use common::{binomial, expected_count, RefPoset, TABLE, TOTALS};
use num_bigint::BigUint;

fn p(w: &str) -> DyckPath {
    DyckPath::parse(w).unwrap()
}

#[test]
fn closed_forms_against_pascal() {
    for n in 1..=40 {
        for k in 0..=n + 1 {
            assert_eq!(closed_form(n, k), BigUint::from(expected_count(n, k)), "n={n} k={k}");
        }
        let sum: BigUint = (0..n).map(|k| closed_form(n, k)).sum();
        assert_eq!(sum, total_closed_form(n));
    }
    for n in 1..=7 {
        assert_eq!(total_closed_form(n), BigUint::from(TOTALS[n - 1]));
        let row: Vec<BigUint> = (0..n).map(|k| closed_form(n, k)).collect();
        let table: Vec<BigUint> = TABLE[n - 1].iter().map(|&c| BigUint::from(c)).collect();
        assert_eq!(row, table);
    }
    assert_eq!(binom(5, 7), BigUint::from(0u32));
    assert_eq!(binom(-1, 0), BigUint::from(0u32));
    assert_eq!(catalan(33).to_string(), "212336130412243110");
    assert_eq!(binom(60, 30), BigUint::from(binomial(60, 30)));
}

#[test]
fn census_matches_reference_census() {
    for n in 1..=5 {
        for delta in test_deltas(n) {
            let table = census(&delta).unwrap();
            let reference = RefPoset::new(n, &delta.to_string()).census();
            let got: Vec<u64> = (0..reference.len()).map(|k| u64::try_from(&table.get(k)).unwrap()).collect();
            assert_eq!(got, reference, "{delta}");
        }
    }
}

#[test]
fn left_and_right_split_evenly() {
    for n in 3..=6 {
        for delta in [IncrementFunction::tamari(n), IncrementFunction::dyck(n)] {
            for k in 2..n {
                let half = u64::try_from(binomial(2 * n as i64 - k as i64, n as i64 + 1)).unwrap();
                assert_eq!(left_right_split(&delta, k).unwrap(), (half, half), "n={n} k={k}");
            }
        }
    }
    assert_eq!(left_right_split(&IncrementFunction::tamari(3), 3), Err(Error::HeightOutOfRange { k: 3, n: 3 }));
}

#[test]
fn classify_agrees_with_reference_linearity() {
    for n in 2..=5 {
        for delta in test_deltas(n) {
            let poset = build_alt_tamari(&delta).unwrap();
            let r = RefPoset::new(n, &delta.to_string());
            let lib: std::collections::HashSet<(String, String)> = linear_intervals(&delta, &poset)
                .unwrap()
                .into_iter()
                .map(|(a, b, _)| (poset.element(a).to_string(), poset.element(b).to_string()))
                .collect();
            let mut reference = std::collections::HashSet::new();
            for a in 0..r.words.len() {
                for b in r.up[a].ones().filter(|&b| b != a) {
                    let iv = r.up[a].and(&r.down[b]);
                    let members: Vec<usize> = iv.ones().collect();
                    if members.iter().all(|&x| members.iter().all(|&y| r.up[x].get(y) || r.up[y].get(x))) {
                        reference.insert((r.words[a].clone(), r.words[b].clone()));
                    }
                }
            }
            assert_eq!(lib, reference, "{delta}");
        }
    }
}

#[test]
fn classification_examples() {
    let ones = IncrementFunction::tamari(3);
    assert_eq!(classify(&ones, &p("uduudd"), &p("uduudd")).unwrap(), IntervalKind::Trivial);
    assert_eq!(classify(&ones, &p("ududud"), &p("uuddud")).unwrap(), IntervalKind::Covering);
    assert_eq!(classify(&ones, &p("uuddud"), &p("uuuddd")).unwrap(), IntervalKind::Left(2));
    assert_eq!(classify(&ones, &p("ududud"), &p("uududd")).unwrap(), IntervalKind::Right(2));
    assert_eq!(classify(&ones, &p("uuuddd"), &p("ududud")).unwrap(), IntervalKind::NotLinear);
    let zeros = IncrementFunction::dyck(3);
    assert_eq!(classify(&zeros, &p("ududud"), &p("uuuddd")).unwrap(), IntervalKind::NotLinear);
    assert!(matches!(classify(&ones, &p("udud"), &p("ududud")), Err(Error::SizeMismatch { .. })));
}

#[test]
fn table_exports() {
    let table = census(&IncrementFunction::parse("010").unwrap()).unwrap();
    let csv = table.to_csv();
    assert_eq!(csv, "n,delta,height,count,closed_form,match\n3,010,0,5,5,true\n3,010,1,5,5,true\n3,010,2,2,2,true\n");
    let json = table.to_json();
    assert_eq!(json[2], serde_json::json!({"n": 3, "delta": "010", "height": 2, "count": 2, "closed_form": 2, "match": true}));
    assert!(table.same_counts(&census(&IncrementFunction::tamari(3)).unwrap()));
}
