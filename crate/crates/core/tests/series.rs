mod common;

use alt_tamari::series::{marked_series, phi_coeff_binomial, s_coeff, solve_tree_series, SeriesOracle, TruncatedSeries};
use alt_tamari::Error;
use common::{binomial, catalan};
use num_bigint::BigInt;
use proptest::prelude::*;

fn big(x: u128) -> BigInt {
    BigInt::from(x)
}

#[test]
fn tree_series_is_catalan_beyond_64_bits() {
    let a = solve_tree_series(64);
    assert_eq!(a.order(), 64);
    for n in 0..64 {
        assert_eq!(a.coeffs()[n], big(catalan(n)), "t^{n}");
    }
    assert!(a.coeffs()[40] > BigInt::from(u64::MAX));
    let residual = &(&a - &TruncatedSeries::one(64)) - &(&a * &a).shift(1).truncate(64);
    assert!(residual.is_zero());
}

#[test]
fn marked_nodes() {
    let m = marked_series(12);
    for n in 0..12 {
        assert_eq!(m.coeffs()[n], big(n as u128 * catalan(n)));
    }
}

#[test]
fn documented_coefficients() {
    assert_eq!(s_coeff(1, 5).unwrap(), BigInt::from(84));
    assert_eq!(s_coeff(3, 6).unwrap(), BigInt::from(72));
    assert_eq!(s_coeff(6, 7).unwrap(), BigInt::from(2));
    assert_eq!(phi_coeff_binomial(1, 2), BigInt::from(21));
    let o = SeriesOracle::new(10);
    assert_eq!(o.phi_coeff_series(1, 2).unwrap(), BigInt::from(21));
    assert_eq!(o.phi_coeff_series(4, 10), Err(Error::OrderExceeded { degree: 10, order: 10 }));
}

#[test]
fn derivative_identity_for_b() {
    let o = SeriesOracle::new(40);
    let one = TruncatedSeries::one(40);
    let b = o.b();
    let lhs = &b.derivative() * &(&one - b);
    let rhs = (b + &one).pow(3);
    assert_eq!(lhs, rhs.truncate(39));
}

#[test]
fn geometric_is_inverse_of_one_minus_t() {
    let g = TruncatedSeries::geometric(20);
    let one_minus_t = TruncatedSeries::from_coeffs([1, -1].map(BigInt::from), 20);
    assert_eq!(&g * &one_minus_t, TruncatedSeries::one(20));
    assert_eq!(one_minus_t.inverse().unwrap(), g);
}

proptest! {
    #[test]
    fn phi_routes_agree(k in 0usize..=6, n in 0usize..=20) {
        let o = SeriesOracle::new(21);
        let expected = big(binomial((k + 2 + 2 * n) as i64, n as i64));
        prop_assert_eq!(o.phi_coeff_series(k, n).unwrap(), expected.clone());
        prop_assert_eq!(phi_coeff_binomial(k, n), expected);
    }

    #[test]
    fn ring_laws(a in proptest::collection::vec(-50i64..50, 8), b in proptest::collection::vec(-50i64..50, 8)) {
        let a = TruncatedSeries::from_coeffs(a.into_iter().map(BigInt::from), 8);
        let b = TruncatedSeries::from_coeffs(b.into_iter().map(BigInt::from), 8);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        // product rule, one order lost to differentiation
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b.truncate(7)) + &(&a.truncate(7) * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_with_t_is_identity(a in proptest::collection::vec(-50i64..50, 10)) {
        let a = TruncatedSeries::from_coeffs(a.into_iter().map(BigInt::from), 10);
        let t = TruncatedSeries::monomial(1, 1, 10);
        prop_assert_eq!(a.compose(&t).unwrap(), a);
    }
}
