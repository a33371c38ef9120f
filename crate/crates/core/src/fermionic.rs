//! Fermionic function-space characters.
//!
//! Both characters are sums over data `m[i][a]` (colour `i = 1..r`, row width
//! `a = 1..k`) of
//!
//! ```text
//! q^{ 1/2 m.(C (x) A).m - sum A[a][l_i] m[i][a] } * x^{ l - C m } / prod (q)_{m[i][a]}
//! ```
//!
//! where `A[a][b] = min(a, b)` and `m^(i) = sum_a a m[i][a]`. The untranslated
//! character `ch_f` sums over `m >= 0`; the translated one `ch_f_inf` lets the
//! `a = k` entries range over all integers, replaces their `1/(q)_m` factors
//! by a global `1/(q)_inf^r`, and is the affine-Weyl-translated limit.
//!
//! The exponent is a positive-definite quadratic form, so the set of `m` with
//! exponent at most `max_exp` is finite. It is enumerated with an exact
//! completing-the-square decomposition `M = U^T D U`: after fixing the last
//! coordinates, the minimum of the form over the remaining real coordinates is
//! known exactly, and every coordinate gets an exact integer range.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::charseries::CharSeries;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::lie::{CartanData, DynkinLabel};
use crate::qpoly::{inv_pochhammer_series, PochhammerOrder, QLaurent, TruncatedSeries};

type Rat = Ratio<i128>;

/// The `k x k` matrix `A[a][b] = min(a, b)` (one-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AMatrix {
    size: usize,
}

impl AMatrix {
    pub fn new(size: usize) -> Self {
        AMatrix { size }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `min(a, b)`; indices are one-based and may exceed the size, which is
    /// how `A[a][l_i]` is read for labels larger than the level.
    pub fn entry(&self, a: i64, b: i64) -> i64 {
        a.min(b)
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (1..=self.size as i64).map(|a| (1..=self.size as i64).map(|b| a.min(b)).collect()).collect()
    }

    /// Checks all leading principal minors are positive (exact Bareiss).
    pub fn is_positive_definite(&self) -> bool {
        leading_minors(&self.to_rows()).iter().all(|d| *d > 0)
    }
}

fn leading_minors(m: &[Vec<i64>]) -> Vec<i128> {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut out = Vec::with_capacity(n);
    let mut prev = 1i128;
    for k in 0..n {
        out.push(a[k][k]);
        if a[k][k] == 0 {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    out
}

/// Whether the `a = k` entries range over all integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Untranslated,
    Translated,
}

/// Summation data `m[i][a]`, stored colour-major: index `i * k + (a - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MVector {
    rank: usize,
    level: usize,
    mode: Mode,
    entries: Vec<i64>,
}

impl MVector {
    pub fn new(rank: usize, level: usize, mode: Mode, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != rank * level {
            return Err(Error::DimensionMismatch { expected: rank * level, got: entries.len() });
        }
        for (idx, &v) in entries.iter().enumerate() {
            let top_row = idx % level == level - 1;
            if v < 0 && !(mode == Mode::Translated && top_row) {
                return Err(Error::NegativeArgument(v));
            }
        }
        Ok(MVector { rank, level, mode, entries })
    }

    pub fn zero(rank: usize, level: usize, mode: Mode) -> Self {
        MVector { rank, level, mode, entries: vec![0; rank * level] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// `m[i][a]` with zero-based colour and one-based width.
    pub fn get(&self, colour: usize, width: usize) -> i64 {
        self.entries[colour * self.level + width - 1]
    }

    /// `m^(i) = sum_a a m[i][a]`.
    pub fn colour_total(&self, colour: usize) -> i64 {
        (1..=self.level).map(|a| a as i64 * self.get(colour, a)).sum()
    }
}

/// `1/2 m.(C (x) A).m - sum_{i,a} A[a][l_i] m[i][a]`, asserted integral.
pub fn exponent(m: &MVector, l: &DynkinLabel, cartan: &CartanData, a: &AMatrix) -> Result<i64> {
    let r = cartan.rank();
    l.check_rank(r)?;
    if m.rank != r {
        return Err(Error::DimensionMismatch { expected: r, got: m.rank });
    }
    if a.size() != m.level {
        return Err(Error::DimensionMismatch { expected: m.level, got: a.size() });
    }
    QuadraticForm::new(cartan, m.level, l).value(&m.entries)
}

/// `mu_i = l_i - sum_j C[j][i] m^(j)`.
pub fn weight_of(m: &MVector, l: &DynkinLabel, cartan: &CartanData) -> Result<DynkinLabel> {
    let r = cartan.rank();
    l.check_rank(r)?;
    if m.rank != r {
        return Err(Error::DimensionMismatch { expected: r, got: m.rank });
    }
    let totals: Vec<i64> = (0..r).map(|i| m.colour_total(i)).collect();
    Ok(weight_from_totals(l, &totals, cartan))
}

fn weight_from_totals(l: &DynkinLabel, totals: &[i64], cartan: &CartanData) -> DynkinLabel {
    let c = cartan.cartan();
    let r = cartan.rank();
    DynkinLabel::new(
        (0..r).map(|i| l.entries()[i] - (0..r).map(|j| c[j][i] * totals[j]).sum::<i64>()).collect(),
    )
}

/// `1/2 x.M.x - b.x` over flattened `m` data.
#[derive(Clone, Debug)]
pub(crate) struct QuadraticForm {
    matrix: Vec<Vec<i64>>,
    linear: Vec<i64>,
}

impl QuadraticForm {
    pub(crate) fn new(cartan: &CartanData, level: usize, l: &DynkinLabel) -> Self {
        let r = cartan.rank();
        let c = cartan.cartan();
        let n = r * level;
        let mut matrix = vec![vec![0i64; n]; n];
        let mut linear = vec![0i64; n];
        for i in 0..r {
            for a in 1..=level {
                let p = i * level + a - 1;
                linear[p] = (a as i64).min(l.entries()[i]);
                for j in 0..r {
                    for b in 1..=level {
                        matrix[p][j * level + b - 1] = c[i][j] * (a.min(b) as i64);
                    }
                }
            }
        }
        QuadraticForm { matrix, linear }
    }

    fn dim(&self) -> usize {
        self.linear.len()
    }

    pub(crate) fn value(&self, x: &[i64]) -> Result<i64> {
        let mut twice = 0i64;
        for (row, xi) in self.matrix.iter().zip(x) {
            if *xi == 0 {
                continue;
            }
            let mx: i64 = row.iter().zip(x).map(|(m, v)| m * v).sum();
            twice += xi * mx;
        }
        twice -= 2 * self.linear.iter().zip(x).map(|(b, v)| b * v).sum::<i64>();
        if twice % 2 != 0 {
            return Err(Error::Internal(format!("half-integral exponent at m = {x:?}")));
        }
        Ok(twice / 2)
    }
}

/// Exact enumeration of integer points with `form(x) <= max`.
struct LatticeEnumerator {
    form: QuadraticForm,
    nonneg: Vec<bool>,
    diag: Vec<Rat>,
    upper: Vec<Vec<Rat>>,
    minimizer: Vec<Rat>,
    // b . x*, so that form(x) <= max  <=>  sum D_j y_j^2 <= 2 max + b . x*
    offset: Rat,
}

impl LatticeEnumerator {
    fn new(form: QuadraticForm, nonneg: Vec<bool>) -> Result<Self> {
        let n = form.dim();
        let mut work: Vec<Vec<Rat>> =
            form.matrix.iter().map(|r| r.iter().map(|&v| Rat::from_integer(v as i128)).collect()).collect();
        let mut diag = vec![Rat::zero(); n];
        let mut upper = vec![vec![Rat::zero(); n]; n];
        for j in 0..n {
            let d = work[j][j];
            if d <= Rat::zero() {
                return Err(Error::Internal("quadratic form is not positive definite".into()));
            }
            diag[j] = d;
            for i in j + 1..n {
                upper[j][i] = work[j][i] / d;
            }
            for i in j + 1..n {
                for t in j + 1..n {
                    let delta = d * upper[j][i] * upper[j][t];
                    work[i][t] -= delta;
                }
            }
        }
        // M x* = b via U^T D U: forward solve U^T w = b, then U x* = w / D.
        let b: Vec<Rat> = form.linear.iter().map(|&v| Rat::from_integer(v as i128)).collect();
        let mut w = vec![Rat::zero(); n];
        for i in 0..n {
            let mut s = b[i];
            for j in 0..i {
                s -= upper[j][i] * w[j];
            }
            w[i] = s;
        }
        let mut minimizer = vec![Rat::zero(); n];
        for i in (0..n).rev() {
            let mut s = w[i] / diag[i];
            for j in i + 1..n {
                s -= upper[i][j] * minimizer[j];
            }
            minimizer[i] = s;
        }
        let offset = b.iter().zip(&minimizer).fold(Rat::zero(), |acc, (x, y)| acc + x * y);
        Ok(LatticeEnumerator { form, nonneg, diag, upper, minimizer, offset })
    }

    fn budget(&self, max_exp: i64) -> Rat {
        Rat::from_integer(2 * max_exp as i128) + self.offset
    }

    fn center(&self, j: usize, x: &[i64]) -> Rat {
        let mut c = self.minimizer[j];
        for i in j + 1..x.len() {
            let u = self.upper[j][i];
            if !u.is_zero() {
                c -= u * (Rat::from_integer(x[i] as i128) - self.minimizer[i]);
            }
        }
        c
    }

    /// Integers `v` with `D_j (v - c)^2 <= rem`, clipped by sign constraints.
    fn range(&self, j: usize, c: Rat, rem: Rat) -> Option<(i64, i64)> {
        if rem.is_negative() {
            return None;
        }
        let s2 = rem / self.diag[j];
        let fits = |v: i64| {
            let y = Rat::from_integer(v as i128) - c;
            y * y <= s2
        };
        let cf = c.numer().to_f64()? / c.denom().to_f64()?;
        let sf = (s2.numer().to_f64()? / s2.denom().to_f64()?).sqrt();
        let mut lo = (cf - sf).floor() as i64 - 1;
        let mut hi = (cf + sf).ceil() as i64 + 1;
        while lo <= hi && !fits(lo) {
            lo += 1;
        }
        while hi >= lo && !fits(hi) {
            hi -= 1;
        }
        if self.nonneg[j] {
            lo = lo.max(0);
        }
        (lo <= hi).then_some((lo, hi))
    }

    /// Admissible values of the first enumerated (last-index) coordinate.
    fn top_values(&self, max_exp: i64) -> Vec<i64> {
        let n = self.form.dim();
        if n == 0 {
            return vec![];
        }
        let x = vec![0; n];
        let c = self.center(n - 1, &x);
        match self.range(n - 1, c, self.budget(max_exp)) {
            Some((lo, hi)) => (lo..=hi).collect(),
            None => vec![],
        }
    }

    fn for_each_with_top(&self, top: i64, max_exp: i64, visit: &mut dyn FnMut(&[i64])) {
        let n = self.form.dim();
        let mut x = vec![0; n];
        x[n - 1] = top;
        let c = self.center(n - 1, &x);
        let y = Rat::from_integer(top as i128) - c;
        let rem = self.budget(max_exp) - self.diag[n - 1] * y * y;
        if rem.is_negative() {
            return;
        }
        if n == 1 {
            visit(&x);
        } else {
            self.descend(n - 2, &mut x, rem, visit);
        }
    }

    fn descend(&self, j: usize, x: &mut Vec<i64>, rem: Rat, visit: &mut dyn FnMut(&[i64])) {
        let c = self.center(j, x);
        let Some((lo, hi)) = self.range(j, c, rem) else { return };
        for v in lo..=hi {
            x[j] = v;
            let y = Rat::from_integer(v as i128) - c;
            let next = rem - self.diag[j] * y * y;
            if j == 0 {
                visit(x);
            } else {
                self.descend(j - 1, x, next, visit);
            }
        }
        x[j] = 0;
    }
}

// (weight, exponent, sorted non-zero finite-order m entries) -> count
type Groups = HashMap<(Vec<i64>, i64, Vec<u64>), u64>;

fn check_inputs(l: &DynkinLabel, level: u64, max_exp: i64) -> Result<()> {
    if l.rank() == 0 {
        return Err(Error::ZeroRank);
    }
    l.require_dominant()?;
    if level == 0 {
        return Err(Error::ZeroLevel);
    }
    if max_exp < 0 {
        return Err(Error::NegativeArgument(max_exp));
    }
    Ok(())
}

/// Untranslated function-space character, complete for exponents `<= max_exp`.
///
/// For non-rectangular `l` some terms have negative exponents; the window
/// starts at the lowest exponent found.
pub fn ch_f(l: &DynkinLabel, level: u64, max_exp: i64) -> Result<CharSeries> {
    ch_f_with(l, level, max_exp, Execution::default())
}

pub fn ch_f_with(l: &DynkinLabel, level: u64, max_exp: i64, exec: Execution) -> Result<CharSeries> {
    check_inputs(l, level, max_exp)?;
    fermionic_sum(l, level, max_exp, Mode::Untranslated, exec)
}

/// Translated function-space character, complete for exponents `<= max_exp`.
///
/// The window is `[-B, max_exp]` where `-B` is the lowest exponent reached
/// (`B = 0` for rectangular `l`).
pub fn ch_f_inf(l: &DynkinLabel, level: u64, max_exp: i64) -> Result<CharSeries> {
    ch_f_inf_with(l, level, max_exp, Execution::default())
}

pub fn ch_f_inf_with(l: &DynkinLabel, level: u64, max_exp: i64, exec: Execution) -> Result<CharSeries> {
    check_inputs(l, level, max_exp)?;
    fermionic_sum(l, level, max_exp, Mode::Translated, exec)
}

fn fermionic_sum(l: &DynkinLabel, level: u64, max_exp: i64, mode: Mode, exec: Execution) -> Result<CharSeries> {
    let r = l.rank();
    let k = level as usize;
    let cartan = CartanData::new(r)?;
    let form = QuadraticForm::new(&cartan, k, l);
    let finite_order: Vec<bool> =
        (0..r * k).map(|p| mode == Mode::Untranslated || p % k != k - 1).collect();
    let enumerator = LatticeEnumerator::new(form, finite_order.clone())?;

    let chunks = exec.map(enumerator.top_values(max_exp), |top| -> Result<Groups> {
        let mut groups = Groups::new();
        let mut failure = None;
        enumerator.for_each_with_top(top, max_exp, &mut |x| {
            if failure.is_some() {
                return;
            }
            let e = match enumerator.form.value(x) {
                Ok(e) if e <= max_exp => e,
                Ok(e) => {
                    failure = Some(Error::Internal(format!("enumerated exponent {e} above {max_exp}")));
                    return;
                }
                Err(err) => {
                    failure = Some(err);
                    return;
                }
            };
            let totals: Vec<i64> =
                (0..r).map(|i| (0..k).map(|a| (a as i64 + 1) * x[i * k + a]).sum()).collect();
            let weight = weight_from_totals(l, &totals, &cartan).into_entries();
            let mut parts: Vec<u64> = x
                .iter()
                .zip(&finite_order)
                .filter(|(v, fin)| **fin && **v > 0)
                .map(|(v, _)| *v as u64)
                .collect();
            parts.sort_unstable();
            *groups.entry((weight, e, parts)).or_insert(0) += 1;
        });
        match failure {
            Some(err) => Err(err),
            None => Ok(groups),
        }
    });
    let mut groups = Groups::new();
    for chunk in chunks {
        for (key, n) in chunk? {
            *groups.entry(key).or_insert(0) += n;
        }
    }

    let lowest = groups.keys().map(|(_, e, _)| *e).min().unwrap_or(0).min(0);
    let len = (max_exp - lowest + 1) as usize;
    let mut factor_cache: HashMap<Vec<u64>, Vec<BigInt>> = HashMap::new();
    let mut dense: HashMap<Vec<i64>, Vec<BigInt>> = HashMap::new();
    for ((weight, e, parts), count) in groups {
        let factor = factor_cache.entry(parts.clone()).or_insert_with(|| {
            let mut v = unit_series(len);
            for &p in &parts {
                divide_by_pochhammer(&mut v, p as usize);
            }
            v
        });
        let row = dense.entry(weight).or_insert_with(|| vec![BigInt::zero(); len]);
        let start = (e - lowest) as usize;
        let count = BigInt::from(count);
        for (t, c) in factor.iter().take(len - start).enumerate() {
            if !c.is_zero() {
                row[start + t] += c * &count;
            }
        }
    }

    let mut series = CharSeries::new(r, level, lowest, max_exp);
    let mut weights: Vec<_> = dense.into_iter().collect();
    weights.sort_by(|a, b| a.0.cmp(&b.0));
    for (weight, mut row) in weights {
        if mode == Mode::Translated {
            for _ in 0..r {
                divide_by_pochhammer(&mut row, len);
            }
        }
        let label = DynkinLabel::new(weight);
        for (t, c) in row.into_iter().enumerate() {
            series.add_term(lowest + t as i64, label.clone(), c);
        }
    }
    Ok(series)
}

fn unit_series(len: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); len];
    if len > 0 {
        v[0] = BigInt::one();
    }
    v
}

/// In-place multiplication by `1/(q)_m` on a series starting at `q^0`.
fn divide_by_pochhammer(v: &mut [BigInt], m: usize) {
    for part in 1..=m.min(v.len().saturating_sub(1)) {
        for d in part..v.len() {
            let prev = v[d - part].clone();
            if !prev.is_zero() {
                v[d] += prev;
            }
        }
    }
}

/// Lowest exponent of a translated character (`-B` in window terms).
pub fn lowest_exponent_bound(series: &CharSeries) -> i64 {
    series.lowest_exponent().unwrap_or(0).min(0)
}

/// Reference enumeration over the box `|m_ia| <= bound`, with each term's
/// series built from qpoly. Shares no code with the pruned enumerator beyond
/// `exponent` and `weight_of`; exact only when `bound` covers every
/// contributing point, so it is meant for tiny cross-checks.
pub fn ch_f_box(l: &DynkinLabel, level: u64, max_exp: i64, mode: Mode, bound: i64) -> Result<CharSeries> {
    check_inputs(l, level, max_exp)?;
    let r = l.rank();
    let k = level as usize;
    let cartan = CartanData::new(r)?;
    let a = AMatrix::new(k);
    let n = r * k;
    let free = |p: usize| mode == Mode::Translated && p % k == k - 1;
    let mut found = Vec::new();
    let mut x = vec![-bound; n];
    'outer: loop {
        if x.iter().enumerate().all(|(p, &v)| v >= 0 || free(p)) {
            let m = MVector::new(r, k, mode, x.clone())?;
            let e = exponent(&m, l, &cartan, &a)?;
            if e <= max_exp {
                let mut s = TruncatedSeries::from_poly(&QLaurent::one(), max_exp - e);
                for (p, &v) in x.iter().enumerate() {
                    if !free(p) {
                        s = s.mul(&inv_pochhammer_series(PochhammerOrder::Finite(v as u64), max_exp - e)?);
                    }
                }
                if mode == Mode::Translated {
                    for _ in 0..r {
                        s = s.mul(&inv_pochhammer_series(PochhammerOrder::Infinite, max_exp - e)?);
                    }
                }
                found.push((e, weight_of(&m, l, &cartan)?, s));
            }
        }
        let mut p = 0;
        loop {
            if p == n {
                break 'outer;
            }
            x[p] += 1;
            if x[p] <= bound {
                break;
            }
            x[p] = -bound;
            p += 1;
        }
    }
    let lowest = found.iter().map(|(e, _, _)| *e).min().unwrap_or(0).min(0);
    let mut series = CharSeries::new(r, level, lowest, max_exp);
    for (e, w, s) in found {
        for (t, c) in s.coeffs().iter().enumerate() {
            series.add_term(e + t as i64, w.clone(), c.clone());
        }
    }
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(v: &[i64]) -> DynkinLabel {
        DynkinLabel::new(v.to_vec())
    }

    #[test]
    fn a_matrix() {
        let a = AMatrix::new(3);
        assert_eq!(a.to_rows(), vec![vec![1, 1, 1], vec![1, 2, 2], vec![1, 2, 3]]);
        for k in 1..=10 {
            assert!(AMatrix::new(k).is_positive_definite());
        }
    }

    #[test]
    fn exponent_examples() {
        let c1 = CartanData::new(1).unwrap();
        let m = MVector::new(1, 1, Mode::Untranslated, vec![1]).unwrap();
        assert_eq!(exponent(&m, &label(&[1]), &c1, &AMatrix::new(1)).unwrap(), 0);
        let z = MVector::zero(2, 3, Mode::Untranslated);
        assert_eq!(exponent(&z, &label(&[1, 2]), &CartanData::new(2).unwrap(), &AMatrix::new(3)).unwrap(), 0);
        let m = MVector::new(1, 2, Mode::Translated, vec![0, -1]).unwrap();
        assert_eq!(exponent(&m, &label(&[1]), &c1, &AMatrix::new(2)).unwrap(), 3);
        assert!(exponent(&m, &label(&[1]), &c1, &AMatrix::new(3)).is_err());
        assert!(MVector::new(1, 2, Mode::Untranslated, vec![0, -1]).is_err());
        assert!(MVector::new(1, 2, Mode::Translated, vec![-1, 0]).is_err());
    }

    #[test]
    fn weight_examples() {
        let c1 = CartanData::new(1).unwrap();
        let z = MVector::zero(1, 2, Mode::Untranslated);
        assert_eq!(weight_of(&z, &label(&[3]), &c1).unwrap(), label(&[3]));
        let m = MVector::new(1, 1, Mode::Untranslated, vec![1]).unwrap();
        assert_eq!(weight_of(&m, &label(&[0]), &c1).unwrap(), label(&[-2]));
        let c2 = CartanData::new(2).unwrap();
        let m = MVector::new(2, 1, Mode::Untranslated, vec![1, 0]).unwrap();
        assert_eq!(weight_of(&m, &label(&[1, 0]), &c2).unwrap(), label(&[-1, 1]));
    }

    #[test]
    fn ch_f_examples() {
        for l in [label(&[0]), label(&[2]), label(&[1, 1]), label(&[0, 2, 1])] {
            let s = ch_f(&l, 3, 2).unwrap();
            assert_eq!(s.coeff(0, &l), BigInt::one(), "{l}");
        }
        // su(2)_1 vacuum: weight -2m first appears at q^{m^2}
        let s = ch_f(&label(&[0]), 1, 16).unwrap();
        for m in 0..=4i64 {
            let w = label(&[-2 * m]);
            let first = s.weight_series(&w).min_exp();
            assert_eq!(first, Some(m * m));
        }
        let s = ch_f(&label(&[0]), 2, 4).unwrap();
        assert_eq!(s.coeff(2, &label(&[-4])), BigInt::one());
        assert!(ch_f(&label(&[0]), 2, -1).is_err());
        assert!(ch_f(&label(&[-1]), 2, 1).is_err());
    }

    #[test]
    fn zero_label_has_single_ground_state() {
        for (r, k) in [(1, 1), (1, 3), (2, 2), (3, 2)] {
            let s = ch_f(&DynkinLabel::zero(r), k, 1).unwrap();
            let ground = s.slice(0);
            assert_eq!(ground.len(), 1);
            assert_eq!(ground[&DynkinLabel::zero(r)], BigInt::one());
        }
    }

    #[test]
    fn su2_level2_vacuum_central_column() {
        let s = ch_f_inf(&label(&[0]), 2, 6).unwrap();
        let column: Vec<i64> = (0..=6).map(|d| s.coeff(d, &label(&[0])).try_into().unwrap()).collect();
        assert_eq!(column, vec![1, 1, 3, 5, 10, 16, 28]);
        assert_eq!(s.coeff(2, &label(&[4])), BigInt::one());
        assert_eq!(s.min_exp(), 0);
    }

    #[test]
    fn su4_nonrectangular_has_negative_exponent() {
        let s = ch_f_inf(&label(&[1, 1, 0]), 4, 0).unwrap();
        assert_eq!(s.coeff(-1, &label(&[0, 0, 1])), BigInt::one());
        assert!(s.min_exp() < 0);
        assert_eq!(lowest_exponent_bound(&s), s.min_exp());
    }

    #[test]
    fn pruned_matches_box_enumeration() {
        for k in 1..=2usize {
            for l in 0..=k as i64 {
                for mode in [Mode::Untranslated, Mode::Translated] {
                    let l = label(&[l]);
                    let fast = fermionic_sum(&l, k as u64, 4, mode, Execution::Sequential).unwrap();
                    let slow = ch_f_box(&l, k as u64, 4, mode, 8).unwrap();
                    assert_eq!(fast.first_mismatch(&slow, -40, 4), None, "k={k} l={l} {mode:?}");
                }
            }
        }
        // a non-rectangular rank-2 case with negative exponents
        let l = label(&[1, 1]);
        let fast = fermionic_sum(&l, 2, 2, Mode::Translated, Execution::Sequential).unwrap();
        let slow = ch_f_box(&l, 2, 2, Mode::Translated, 4).unwrap();
        assert_eq!(fast.first_mismatch(&slow, -40, 2), None);
    }

    #[test]
    fn rectangular_translated_is_nonnegative() {
        for r in 1..=3usize {
            for k in 1..=4u64 {
                for p in 0..r {
                    for height in 0..=k as i64 {
                        let mut v = vec![0; r];
                        v[p] = height;
                        let s = ch_f_inf(&DynkinLabel::new(v), k, if r == 3 && k == 4 { 3 } else { 5 }).unwrap();
                        assert_eq!(s.min_exp(), 0);
                        assert!(s.all_nonnegative());
                    }
                }
            }
        }
    }

    #[test]
    fn rectangular_weyl_symmetry() {
        let s = ch_f_inf(&label(&[1]), 3, 6).unwrap();
        for (e, w, c) in s.iter() {
            assert_eq!(&s.coeff(e, &label(&[-w.entries()[0]])), c);
        }
        let cartan = CartanData::new(2).unwrap();
        let s = ch_f_inf(&label(&[0, 2]), 2, 4).unwrap();
        for (e, w, c) in s.iter() {
            for i in 0..2 {
                let mut v = w.entries().to_vec();
                cartan.reflect(&mut v, i);
                assert_eq!(&s.coeff(e, &DynkinLabel::new(v)), c, "e={e} w={w}");
            }
        }
    }

    #[test]
    fn execution_modes_agree() {
        let l = label(&[1, 0, 1]);
        let a = ch_f_inf_with(&l, 3, 3, Execution::Sequential).unwrap();
        let b = ch_f_inf_with(&l, 3, 3, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
