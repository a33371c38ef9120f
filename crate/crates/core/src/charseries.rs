//! Graded characters: `(q-exponent, weight) -> multiplicity` on a window.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::lie::DynkinLabel;
use crate::qpoly::QLaurent;

/// A truncated graded character.
///
/// Coefficients are exact for exponents in `[min_exp, max_exp]`, vanish below
/// `min_exp`, and are unknown above `max_exp`. Zero multiplicities are never
/// stored. Iteration order is by exponent, then weight lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSeries {
    rank: usize,
    level: u64,
    min_exp: i64,
    max_exp: i64,
    terms: BTreeMap<(i64, DynkinLabel), BigInt>,
}

/// First coefficient at which two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exp: i64,
    pub weight: DynkinLabel,
    pub left: BigInt,
    pub right: BigInt,
}

impl CharSeries {
    pub fn new(rank: usize, level: u64, min_exp: i64, max_exp: i64) -> Self {
        CharSeries { rank, level, min_exp, max_exp, terms: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn max_exp(&self) -> i64 {
        self.max_exp
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff` at `(exp, weight)`; terms outside the window are dropped.
    pub fn add_term(&mut self, exp: i64, weight: DynkinLabel, coeff: BigInt) {
        if coeff.is_zero() || exp < self.min_exp || exp > self.max_exp {
            return;
        }
        let key = (exp, weight);
        let entry = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, exp: i64, weight: &DynkinLabel) -> BigInt {
        self.terms.get(&(exp, weight.clone())).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &DynkinLabel, &BigInt)> + '_ {
        self.terms.iter().map(|((e, w), c)| (*e, w, c))
    }

    /// Weights and multiplicities at one exponent.
    pub fn slice(&self, exp: i64) -> BTreeMap<DynkinLabel, BigInt> {
        self.terms
            .range((exp, DynkinLabel::new(vec![]))..)
            .take_while(|((e, _), _)| *e == exp)
            .map(|((_, w), c)| (w.clone(), c.clone()))
            .collect()
    }

    /// Coefficients of one weight as a polynomial in `q`.
    pub fn weight_series(&self, weight: &DynkinLabel) -> QLaurent {
        QLaurent::from_terms(
            self.terms.iter().filter(|((_, w), _)| w == weight).map(|((e, _), c)| (*e, c.clone())),
        )
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Smallest exponent carrying a non-zero coefficient.
    pub fn lowest_exponent(&self) -> Option<i64> {
        self.terms.keys().next().map(|(e, _)| *e)
    }

    /// Narrows the window to `[min_exp, max_exp]`, discarding terms outside.
    pub fn restrict(&mut self, min_exp: i64, max_exp: i64) {
        self.min_exp = self.min_exp.max(min_exp);
        self.max_exp = self.max_exp.min(max_exp);
        let (lo, hi) = (self.min_exp, self.max_exp);
        self.terms.retain(|(e, _), _| *e >= lo && *e <= hi);
    }

    /// `sum_t poly_t(q) * series_t`, with window bookkeeping.
    ///
    /// The result is exact from the smallest shifted lower end up to the
    /// smallest shifted upper end.
    pub fn linear_combination(rank: usize, level: u64, parts: &[(QLaurent, &CharSeries)]) -> CharSeries {
        let mut lo = i64::MAX;
        let mut hi = i64::MAX;
        for (p, s) in parts {
            if let Some(pmin) = p.min_exp() {
                lo = lo.min(s.min_exp + pmin);
                hi = hi.min(s.max_exp + pmin);
            }
        }
        if lo == i64::MAX {
            lo = 0;
            hi = parts.iter().map(|(_, s)| s.max_exp).min().unwrap_or(0);
        }
        let mut out = CharSeries::new(rank, level, lo, hi);
        for (p, s) in parts {
            for (shift, c) in p.terms() {
                for ((e, w), m) in &s.terms {
                    out.add_term(e + shift, w.clone(), c * m);
                }
            }
        }
        out
    }

    /// Compares coefficients on `[lo, hi]`; `None` when they agree.
    pub fn first_mismatch(&self, other: &CharSeries, lo: i64, hi: i64) -> Option<Mismatch> {
        let keys: std::collections::BTreeSet<&(i64, DynkinLabel)> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .filter(|(e, _)| *e >= lo && *e <= hi)
            .collect();
        for key in keys {
            let a = self.terms.get(key).cloned().unwrap_or_default();
            let b = other.terms.get(key).cloned().unwrap_or_default();
            if a != b {
                return Some(Mismatch { exp: key.0, weight: key.1.clone(), left: a, right: b });
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_and_cancel() {
        let mut s = CharSeries::new(1, 1, 0, 3);
        s.add_term(1, [0].into(), 2.into());
        s.add_term(1, [0].into(), (-2).into());
        s.add_term(4, [0].into(), 1.into());
        assert!(s.is_empty());
    }

    #[test]
    fn combination_window() {
        let mut a = CharSeries::new(1, 1, 0, 5);
        a.add_term(0, [1].into(), 1.into());
        a.add_term(2, [-1].into(), 3.into());
        let p = QLaurent::from_terms([(-2, 1), (0, -1)]);
        let c = CharSeries::linear_combination(1, 1, &[(p, &a)]);
        assert_eq!((c.min_exp(), c.max_exp()), (-2, 3));
        assert_eq!(c.coeff(-2, &[1].into()), BigInt::from(1));
        assert_eq!(c.coeff(0, &[1].into()), BigInt::from(-1));
        assert_eq!(c.coeff(0, &[-1].into()), BigInt::from(3));
        assert_eq!(c.slice(0).len(), 2);
        assert_eq!(c.lowest_exponent(), Some(-2));
    }
}
