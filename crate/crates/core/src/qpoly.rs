//! Exact one-variable Laurent polynomials and truncated power series in `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sparse Laurent polynomial in `q` with big-integer coefficients.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent::default()
    }

    pub fn one() -> Self {
        QLaurent::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = QLaurent::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = QLaurent::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense coefficients starting at `q^0`.
    pub fn from_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        QLaurent::from_terms(coeffs.into_iter().enumerate().map(|(i, c)| (i as i64, c)))
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: i64) -> QLaurent {
        QLaurent { terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect() }
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            match (*e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{abs}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: &QLaurent) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        out += &(-rhs);
        out
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

/// `(q)_m = prod_{i=1}^m (1 - q^i)`, with `(q)_0 = 1`.
pub fn q_pochhammer(m: i64) -> Result<QLaurent> {
    if m < 0 {
        return Err(Error::NegativeArgument(m));
    }
    let mut p = QLaurent::one();
    for i in 1..=m {
        let factor = QLaurent::from_terms([(0, 1), (i, -1)]);
        p = &p * &factor;
    }
    Ok(p)
}

/// Gaussian binomial `(q)_{n+m} / ((q)_n (q)_m)`, zero if `n < 0` or `m < 0`.
///
/// Built from the recurrence `[N; M] = [N-1; M-1] + q^M [N-1; M]` on dense
/// coefficient rows, so no polynomial division is needed.
pub fn q_binomial(n: i64, m: i64) -> QLaurent {
    QLaurent::from_coeffs(q_binomial_coeffs(n, m))
}

/// Dense coefficients of [`q_binomial`]; empty for the zero polynomial.
pub fn q_binomial_coeffs(n: i64, m: i64) -> Vec<BigInt> {
    if n < 0 || m < 0 {
        return Vec::new();
    }
    let (n, m) = (n as usize, m as usize);
    let total = n + m;
    // row[j] = [t; j] for the current t, j = 0..=min(t, m)
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for t in 1..=total {
        let width = t.min(m);
        let mut next = Vec::with_capacity(width + 1);
        for j in 0..=width {
            if j == 0 || j == t {
                next.push(vec![BigInt::one()]);
                continue;
            }
            let left = &row[j - 1];
            let up = &row[j];
            let len = (j * (t - j) + 1).max(left.len()).max(up.len() + j);
            let mut c = vec![BigInt::zero(); len];
            for (i, x) in left.iter().enumerate() {
                c[i] += x;
            }
            for (i, x) in up.iter().enumerate() {
                c[i + j] += x;
            }
            while c.len() > 1 && c.last().is_some_and(|x| x.is_zero()) {
                c.pop();
            }
            next.push(c);
        }
        row = next;
    }
    row.swap_remove(m)
}

/// Order of a `1/(q)_m` factor: finite `m` or `m = infinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PochhammerOrder {
    Finite(u64),
    Infinite,
}

/// Power series in `q` known to vanish below `min_exp` and known exactly up to
/// `max_exp`; coefficients above `max_exp` are unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    min_exp: i64,
    // coeffs[i] is the coefficient of q^(min_exp + i); len = max_exp - min_exp + 1
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Zero series on the window `[min_exp, max_exp]`.
    pub fn zero(min_exp: i64, max_exp: i64) -> Self {
        let len = (max_exp - min_exp + 1).max(0) as usize;
        TruncatedSeries { min_exp, coeffs: vec![BigInt::zero(); len] }
    }

    /// Exact polynomial, viewed on the window `[0, max_exp]`.
    pub fn from_poly(p: &QLaurent, max_exp: i64) -> Self {
        let lo = p.min_exp().unwrap_or(0).min(0);
        let mut s = TruncatedSeries::zero(lo, max_exp);
        for (e, c) in p.terms() {
            if e <= max_exp {
                s.coeffs[(e - lo) as usize] += c;
            }
        }
        s
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn max_exp(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, exp: i64) -> Option<&BigInt> {
        if exp < self.min_exp {
            return None;
        }
        self.coeffs.get((exp - self.min_exp) as usize)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Multiplies by `q^shift`; both window ends move.
    pub fn shift(&self, shift: i64) -> Self {
        TruncatedSeries { min_exp: self.min_exp + shift, coeffs: self.coeffs.clone() }
    }

    /// Restricts the window's upper end.
    pub fn truncate(&mut self, max_exp: i64) {
        let len = (max_exp - self.min_exp + 1).max(0) as usize;
        self.coeffs.truncate(len);
    }

    /// Product; valid up to `min(a.max + b.min, b.max + a.min)`.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let lo = self.min_exp + other.min_exp;
        let hi = (self.max_exp() + other.min_exp).min(other.max_exp() + self.min_exp);
        let mut out = TruncatedSeries::zero(lo, hi);
        let len = out.coeffs.len();
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate().take(len.saturating_sub(i)) {
                out.coeffs[i + j] += x * y;
            }
        }
        out
    }

    /// Sum; the window is the union of lower ends and intersection of upper ends.
    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let lo = self.min_exp.min(other.min_exp);
        let hi = self.max_exp().min(other.max_exp());
        let mut out = TruncatedSeries::zero(lo, hi);
        for s in [self, other] {
            for (i, x) in s.coeffs.iter().enumerate() {
                let e = s.min_exp + i as i64;
                if e <= hi {
                    out.coeffs[(e - lo) as usize] += x;
                }
            }
        }
        out
    }
}

/// `1/(q)_m` (or `1/(q)_infinity`) expanded on `[0, max_exp]`: the coefficient
/// of `q^d` counts partitions of `d` into parts of size at most `m`.
pub fn inv_pochhammer_series(order: PochhammerOrder, max_exp: i64) -> Result<TruncatedSeries> {
    if max_exp < 0 {
        return Err(Error::NegativeArgument(max_exp));
    }
    let len = max_exp as usize + 1;
    let largest = match order {
        PochhammerOrder::Finite(m) => (m as usize).min(len),
        PochhammerOrder::Infinite => len,
    };
    let mut coeffs = vec![BigInt::zero(); len];
    coeffs[0] = BigInt::one();
    for part in 1..=largest {
        for d in part..len {
            let prev = coeffs[d - part].clone();
            coeffs[d] += prev;
        }
    }
    Ok(TruncatedSeries { min_exp: 0, coeffs })
}

/// `p(q) -> p(1/q)`.
pub fn substitute_q_inverse(p: &QLaurent) -> QLaurent {
    QLaurent { terms: p.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
}
