//! Exact truncated power series over the integers.
//!
//! A [`TruncatedSeries`] of order `N` knows the coefficients of `t^0..t^{N-1}`;
//! every operation returns a series of the largest order it can certify.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![BigInt::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, 1, order)
    }

    /// `c * t^degree`.
    pub fn monomial(degree: usize, c: i64, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree < order {
            s.coeffs[degree] = BigInt::from(c);
        }
        s
    }

    /// Truncate (or zero-extend) a coefficient list to `order` terms.
    pub fn from_coeffs<I: IntoIterator<Item = BigInt>>(coeffs: I, order: usize) -> Self {
        let mut c: Vec<BigInt> = coeffs.into_iter().take(order).collect();
        c.resize(order, BigInt::zero());
        TruncatedSeries { coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&BigInt> {
        self.coeffs.get(n).ok_or(Error::OrderExceeded { degree: n, order: self.order() })
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().cloned(), order.min(self.order()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiply by `t^m`; the order grows by `m`.
    pub fn shift(&self, m: usize) -> Self {
        let coeffs = std::iter::repeat_n(BigInt::zero(), m).chain(self.coeffs.iter().cloned()).collect();
        TruncatedSeries { coeffs }
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs.first().ok_or(Error::SeriesDomain { what: "inverse of an empty series" })?;
        if c0.abs() != BigInt::one() {
            return Err(Error::SeriesDomain { what: "inverse needs a unit constant term" });
        }
        let n = self.order();
        let mut inv: Vec<BigInt> = Vec::with_capacity(n);
        inv.push(c0.clone());
        for k in 1..n {
            let s: BigInt = (1..=k).map(|j| &self.coeffs[j] * &inv[k - j]).sum();
            inv.push(-(s * c0));
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// `self(inner)`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        match inner.coeffs.first() {
            Some(c) if !c.is_zero() => {
                return Err(Error::SeriesDomain { what: "composition needs an inner series without constant term" })
            }
            _ => {}
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs[..order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// `1 / (1 - t)` to the given order.
    pub fn geometric(order: usize) -> Self {
        Self::from_coeffs(std::iter::repeat_n(BigInt::one(), order), order)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        TruncatedSeries { coeffs: (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect() }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        TruncatedSeries { coeffs: (0..n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect() }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl fmt::Display for TruncatedSeries {
    /// One decimal coefficient per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.coeffs {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The unique `A` with `A(0) = 1` and `A = 1 + tA²`, by fixed-point iteration.
pub fn solve_tree_series(order: usize) -> TruncatedSeries {
    let one = TruncatedSeries::one(order);
    let mut a = one.clone();
    for _ in 0..order {
        let next = &one + &(&a * &a).shift(1).truncate(order);
        if next == a {
            break;
        }
        a = next;
    }
    a
}

/// Binary trees with a marked node: `tA'`.
pub fn marked_series(order: usize) -> TruncatedSeries {
    solve_tree_series(order + 1).derivative().shift(1).truncate(order)
}

/// Cached `A`, `A'` and `B = A - 1` at a fixed order.
#[derive(Debug, Clone)]
pub struct SeriesOracle {
    order: usize,
    a: TruncatedSeries,
    da: TruncatedSeries,
    b: TruncatedSeries,
}

impl Default for SeriesOracle {
    fn default() -> Self {
        SeriesOracle::new(DEFAULT_ORDER)
    }
}

impl SeriesOracle {
    pub fn new(order: usize) -> Self {
        // one extra term so that A' is known to `order` terms
        let full = solve_tree_series(order + 1);
        let da = full.derivative();
        let a = full.truncate(order);
        let b = &a - &TruncatedSeries::one(order);
        SeriesOracle { order, a, da, b }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn tree_series(&self) -> &TruncatedSeries {
        &self.a
    }

    pub fn derivative(&self) -> &TruncatedSeries {
        &self.da
    }

    /// `B = A - 1 = t(B + 1)²`.
    pub fn b(&self) -> &TruncatedSeries {
        &self.b
    }

    /// `S_0 = A - 1`, `S_1 = t²A'A`, `S_k = 2t^{k+1}A'A^k`.
    pub fn s_series(&self, k: usize) -> TruncatedSeries {
        let n = self.order;
        match k {
            0 => self.b.clone(),
            1 => (&self.da * &self.a).shift(2).truncate(n),
            _ => (&self.da * &self.a.pow(k as u32)).shift(k + 1).truncate(n).scale(&BigInt::from(2)),
        }
    }

    pub fn s_coeff(&self, k: usize, n: usize) -> Result<BigInt> {
        self.check(n)?;
        Ok(self.s_series(k).coeff(n)?.clone())
    }

    /// `φ_k(x) = (1 + x)^{k+3} / (1 - x)` as a series in `x`.
    pub fn phi(&self, k: usize) -> TruncatedSeries {
        let one_plus_x = TruncatedSeries::from_coeffs([BigInt::one(), BigInt::one()], self.order);
        &one_plus_x.pow(k as u32 + 3) * &TruncatedSeries::geometric(self.order)
    }

    /// `[t^n] φ_k(B)` by composing series.
    pub fn phi_coeff_series(&self, k: usize, n: usize) -> Result<BigInt> {
        self.check(n)?;
        Ok(self.phi(k).compose(&self.b)?.coeff(n)?.clone())
    }

    fn check(&self, n: usize) -> Result<()> {
        if n >= self.order {
            return Err(Error::OrderExceeded { degree: n, order: self.order });
        }
        Ok(())
    }
}

/// `[t^n] φ_k(B) = binom(k + 2 + 2n, n)`.
pub fn phi_coeff_binomial(k: usize, n: usize) -> BigInt {
    BigInt::from(crate::census::binom((k + 2 + 2 * n) as i64, n as i64))
}

pub fn s_coeff(k: usize, n: usize) -> Result<BigInt> {
    SeriesOracle::new(DEFAULT_ORDER).s_coeff(k, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries, upto: usize) -> Vec<i64> {
        s.coeffs()[..upto].iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn catalan_coefficients() {
        let a = solve_tree_series(10);
        assert_eq!(ints(&a, 8), vec![1, 1, 2, 5, 14, 42, 132, 429]);
        let t_a2 = (&a * &a).shift(1).truncate(10);
        assert!((&(&a - &TruncatedSeries::one(10)) - &t_a2).is_zero());
    }

    #[test]
    fn marked_trees() {
        let m = marked_series(6);
        assert_eq!(ints(&m, 6), vec![0, 1, 4, 15, 56, 210]);
    }

    #[test]
    fn b_equation() {
        let o = SeriesOracle::new(30);
        let b = o.b();
        let one = TruncatedSeries::one(30);
        let b1 = b + &one;
        let f = TruncatedSeries::from_coeffs([1, 2, 1].map(BigInt::from), 30);
        assert_eq!(*b, f.compose(b).unwrap().shift(1).truncate(30));
        assert_eq!(*b, (&b1 * &b1).shift(1).truncate(30));
        let lhs = &b.derivative() * &(&one - b);
        assert_eq!(lhs, b1.pow(3).truncate(29));
    }

    #[test]
    fn s_examples() {
        let o = SeriesOracle::new(16);
        assert_eq!(o.s_coeff(1, 5).unwrap(), BigInt::from(84));
        assert_eq!(o.s_coeff(3, 6).unwrap(), BigInt::from(72));
        assert_eq!(o.s_coeff(6, 7).unwrap(), BigInt::from(2));
        assert_eq!(o.s_coeff(0, 7).unwrap(), BigInt::from(429));
        assert!(matches!(o.s_coeff(1, 16), Err(Error::OrderExceeded { degree: 16, order: 16 })));
    }

    #[test]
    fn phi_two_routes() {
        let o = SeriesOracle::new(8);
        for k in 0..4 {
            assert_eq!(o.phi_coeff_series(k, 0).unwrap(), BigInt::one());
        }
        assert_eq!(o.phi_coeff_series(1, 2).unwrap(), BigInt::from(21));
        assert_eq!(phi_coeff_binomial(1, 2), BigInt::from(21));
    }

    #[test]
    fn inverse_and_domain() {
        let one_minus_t = TruncatedSeries::from_coeffs([1, -1].map(BigInt::from), 6);
        assert_eq!(one_minus_t.inverse().unwrap(), TruncatedSeries::geometric(6));
        let two = TruncatedSeries::monomial(0, 2, 4);
        assert!(two.inverse().is_err());
        assert!(two.compose(&two).is_err());
    }

    #[test]
    fn display_one_per_line() {
        assert_eq!(solve_tree_series(4).to_string(), "1\n1\n2\n5\n");
    }
}
