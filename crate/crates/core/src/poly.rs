//! Exact Laurent polynomials in `q` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sparse `sum c_e q^e`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exponent: i64, coefficient: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coefficient);
        p
    }

    pub fn add_term(&mut self, exponent: i64, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let c = self.terms.entry(exponent).or_insert(0);
        *c += coefficient;
        if *c == 0 {
            self.terms.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: i64) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    /// Multiplication by `q^k`.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl std::iter::Sum for LaurentPolynomial {
    fn sum<I: Iterator<Item = LaurentPolynomial>>(iter: I) -> Self {
        iter.fold(LaurentPolynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Ascending terms joined by `" + "`: `q^e` for unit coefficients, the bare
/// coefficient for `e = 0`, `c*q^e` otherwise. The zero polynomial is `0`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match (e, c) {
                (0, c) => write!(f, "{c}")?,
                (e, 1) => write!(f, "q^{e}")?,
                (e, c) => write!(f, "{c}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |t: &str| Error::Parse(format!("bad polynomial term {t:?}"));
        let mut p = LaurentPolynomial::zero();
        if s == "0" {
            return Ok(p);
        }
        for term in s.split(" + ") {
            let (c, e) = if let Some((c, e)) = term.split_once("*q^") {
                (
                    c.parse().map_err(|_| bad(term))?,
                    e.parse().map_err(|_| bad(term))?,
                )
            } else if let Some(e) = term.strip_prefix("q^") {
                (1, e.parse().map_err(|_| bad(term))?)
            } else {
                (term.parse().map_err(|_| bad(term))?, 0)
            };
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// Gaussian binomial `[n choose k]_q` by the q-Pascal recursion
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]`; zero unless `0 <= k <= n`.
pub fn qbinom(n: i64, k: i64) -> LaurentPolynomial {
    if k < 0 || n < 0 || k > n {
        return LaurentPolynomial::zero();
    }
    let (n, k) = (n as usize, k as usize);
    // row[j] = [m choose j] as a dense coefficient vector
    let mut row: Vec<Vec<i64>> = vec![vec![1]];
    for m in 1..=n {
        let mut next: Vec<Vec<i64>> = Vec::with_capacity(m + 1);
        for j in 0..=m.min(k) {
            let mut c = vec![0i64; j * (m - j) + 1];
            if j > 0 {
                for (d, &x) in row[j - 1].iter().enumerate() {
                    c[d] += x;
                }
            }
            if j < m && j < row.len() {
                for (d, &x) in row[j].iter().enumerate() {
                    c[d + j] += x;
                }
            }
            next.push(c);
        }
        row = next;
    }
    let mut out = LaurentPolynomial::zero();
    for (d, &c) in row[k].iter().enumerate() {
        out.add_term(d as i64, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Subsets of {1..n} of size k weighted by q^(sum - k(k+1)/2).
    fn qbinom_by_subsets(n: usize, k: usize) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let sum: i64 = (0..n)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| b as i64 + 1)
                .sum();
            out.add_term(sum - (k * (k + 1) / 2) as i64, 1);
        }
        out
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(qbinom(5, 0), LaurentPolynomial::one());
        assert_eq!(qbinom(2, 1).to_string(), "1 + q^1");
        assert_eq!(qbinom(4, 2).to_string(), "1 + q^1 + 2*q^2 + q^3 + q^4");
        assert_eq!(qbinom(4, 2), qbinom_by_subsets(4, 2));
        assert!(qbinom(2, 3).is_zero());
        assert!(qbinom(2, -1).is_zero());
    }

    #[test]
    fn qbinom_matches_subset_oracle() {
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(
                    qbinom(n as i64, k as i64),
                    qbinom_by_subsets(n, k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn rendering() {
        let mut p = LaurentPolynomial::monomial(-2, 1);
        p.add_term(-1, 3);
        p.add_term(0, 1);
        assert_eq!(p.to_string(), "q^-2 + 3*q^-1 + 1");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(LaurentPolynomial::monomial(0, 4).to_string(), "4");
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut p = LaurentPolynomial::monomial(3, 2);
        p.add_term(3, -2);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPolynomial::zero());
    }

    proptest! {
        #[test]
        fn text_form_round_trips(terms in proptest::collection::btree_map(-20i64..20, 1i64..50, 0..8)) {
            let mut p = LaurentPolynomial::zero();
            for (e, c) in terms {
                p.add_term(e, c);
            }
            let back: LaurentPolynomial = p.to_string().parse().unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn product_evaluates_multiplicatively(
            a in proptest::collection::btree_map(-5i64..5, -9i64..9, 0..5),
            b in proptest::collection::btree_map(-5i64..5, -9i64..9, 0..5),
        ) {
            let mk = |m: std::collections::BTreeMap<i64, i64>| {
                let mut p = LaurentPolynomial::zero();
                for (e, c) in m { p.add_term(e, c); }
                p
            };
            let (a, b) = (mk(a), mk(b));
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
            prop_assert_eq!((&a + &b).eval_at_one(), a.eval_at_one() + b.eval_at_one());
        }
    }
}
