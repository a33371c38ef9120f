//! Independent ground truth: Freudenthal's recursion for affine and finite
//! su(r+1), and tensor-product decomposition by repeated stripping of highest
//! weights.
//!
//! Nothing here uses the fermionic sums or the Kostka polynomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::charseries::CharSeries;
use crate::error::{Error, Result};
use crate::lie::{threshold_level, CartanData, DynkinLabel};

/// A root `alpha + n delta` of affine su(r+1).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineRoot {
    /// Finite part in simple-root coordinates (zero for imaginary roots).
    pub finite_part: Vec<i64>,
    pub delta_count: i64,
    pub multiplicity: u64,
}

impl AffineRoot {
    pub fn is_imaginary(&self) -> bool {
        self.finite_part.iter().all(|&c| c == 0)
    }
}

/// All finite roots of A_r in simple-root coordinates, positive ones first.
fn finite_roots(rank: usize) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let mut pos = Vec::new();
    for i in 0..rank {
        for j in i..rank {
            let mut c = vec![0; rank];
            c[i..=j].iter_mut().for_each(|x| *x = 1);
            pos.push(c);
        }
    }
    let neg = pos.iter().map(|c| c.iter().map(|x| -x).collect()).collect();
    (pos, neg)
}

/// Positive affine roots with `delta_count <= max_delta`.
///
/// `alpha > 0` with `n = 0`; every finite root and the imaginary root (with
/// multiplicity `r`) for each `1 <= n <= max_delta`.
pub fn positive_affine_roots(rank: usize, max_delta: i64) -> Vec<AffineRoot> {
    let (pos, neg) = finite_roots(rank);
    let mut out: Vec<AffineRoot> =
        pos.iter().map(|c| AffineRoot { finite_part: c.clone(), delta_count: 0, multiplicity: 1 }).collect();
    for n in 1..=max_delta {
        for c in pos.iter().chain(&neg) {
            out.push(AffineRoot { finite_part: c.clone(), delta_count: n, multiplicity: 1 });
        }
        out.push(AffineRoot { finite_part: vec![0; rank], delta_count: n, multiplicity: rank as u64 });
    }
    out
}

/// Weight multiplicities of an integrable highest-weight module, by depth.
///
/// Only dominant weights are stored; other weights are found through the
/// finite Weyl group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    cartan: CartanData,
    highest: DynkinLabel,
    level: u64,
    max_depth: i64,
    dominant: BTreeMap<(i64, DynkinLabel), BigInt>,
}

impl WeightTable {
    pub fn highest(&self) -> &DynkinLabel {
        &self.highest
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn max_depth(&self) -> i64 {
        self.max_depth
    }

    /// Multiplicity of `(mu; k; -depth)`; zero outside the table.
    pub fn mult(&self, depth: i64, mu: &DynkinLabel) -> BigInt {
        let mut v = mu.entries().to_vec();
        self.cartan.to_dominant(&mut v);
        self.dominant.get(&(depth, DynkinLabel::new(v))).cloned().unwrap_or_default()
    }

    /// Dominant weights with their multiplicities, by depth.
    pub fn dominant_entries(&self) -> impl Iterator<Item = (i64, &DynkinLabel, &BigInt)> + '_ {
        self.dominant.iter().map(|((d, w), m)| (*d, w, m))
    }

    /// All weights, expanded over finite Weyl orbits.
    pub fn to_char_series(&self) -> CharSeries {
        let mut s = CharSeries::new(self.cartan.rank(), self.level, 0, self.max_depth);
        for ((d, w), m) in &self.dominant {
            for image in self.cartan.weyl_orbit(w) {
                s.add_term(*d, image, m.clone());
            }
        }
        s
    }
}

struct Lattice<'a> {
    cartan: &'a CartanData,
    highest: &'a DynkinLabel,
}

impl Lattice<'_> {
    /// Root-lattice coordinates of `highest - mu`, if integral.
    fn depth_coords(&self, mu: &[i64]) -> Option<Vec<i64>> {
        let diff: Vec<i64> = self.highest.entries().iter().zip(mu).map(|(a, b)| a - b).collect();
        self.cartan.weight_to_root_integral(&DynkinLabel::new(diff))
    }

    /// Dominant weights in the root class of `highest` with
    /// `(mu, mu) <= (highest, highest) + extra`, where `extra` is unscaled.
    fn dominant_candidates(&self, extra: i64) -> Vec<(DynkinLabel, Vec<i64>)> {
        let r = self.cartan.rank();
        let n = self.cartan.dual_coxeter();
        let bound = self.cartan.scaled_inner(self.highest.entries(), self.highest.entries()) + n * extra;
        // (mu,mu) >= |mu|^2 / 4 because every eigenvalue of C is below 4.
        let cap = ((4 * bound / n) as f64).sqrt() as i64 + 1;
        let mut out = Vec::new();
        let mut mu = vec![0i64; r];
        loop {
            if self.cartan.scaled_inner(&mu, &mu) <= bound {
                if let Some(c) = self.depth_coords(&mu) {
                    out.push((DynkinLabel::new(mu.clone()), c));
                }
            }
            let mut i = 0;
            loop {
                if i == r {
                    return out;
                }
                mu[i] += 1;
                if mu[i] <= cap {
                    break;
                }
                mu[i] = 0;
                i += 1;
            }
        }
    }
}

fn add(a: &[i64], b: &[i64], scale: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + scale * y).collect()
}

fn exact_quotient(num: &BigInt, den: i64, what: &str) -> Result<BigInt> {
    let (q, rem) = num.div_rem(&BigInt::from(den));
    if !rem.is_zero() {
        return Err(Error::Internal(format!("{what}: {num} not divisible by {den}")));
    }
    if q.is_negative() {
        return Err(Error::Internal(format!("{what}: negative multiplicity {q}")));
    }
    Ok(q)
}

/// Affine Freudenthal recursion for `L(l; k; 0)` down to `max_depth`.
///
/// `(|l^+rho^|^2 - |mu^+rho^|^2) mult(mu^) =
///  2 sum_{alpha^ > 0} mult(alpha^) sum_{j >= 1} mult(mu^ + j alpha^) <mu^ + j alpha^, alpha^>`
/// with `<(mu;k;d),(mu';k';d')> = (mu,mu') + k d' + k' d` and
/// `rho^ = (rho; r+1; 0)`.
pub fn freudenthal_affine(l: &DynkinLabel, level: u64, max_depth: i64) -> Result<WeightTable> {
    let r = l.rank();
    let cartan = CartanData::new(r)?;
    let threshold = threshold_level(l)?;
    if level == 0 {
        return Err(Error::ZeroLevel);
    }
    if threshold > level {
        return Err(Error::NonIntegrable { weight: l.to_string(), threshold, level });
    }
    if max_depth < 0 {
        return Err(Error::NegativeArgument(max_depth));
    }
    let k = level as i64;
    let h = cartan.dual_coxeter();
    let rho = vec![1i64; r];
    let lam_rho = add(l.entries(), &rho, 1);
    let top_norm = cartan.scaled_inner(&lam_rho, &lam_rho);
    let roots: Vec<(AffineRoot, Vec<i64>)> = positive_affine_roots(r, max_depth)
        .into_iter()
        .map(|a| {
            let dyn_form = cartan.root_to_weight(&a.finite_part).into_entries();
            (a, dyn_form)
        })
        .collect();
    let lattice = Lattice { cartan: &cartan, highest: l };
    let mut table = WeightTable { cartan: cartan.clone(), highest: l.clone(), level, max_depth, dominant: BTreeMap::new() };

    for depth in 0..=max_depth {
        let mut candidates: Vec<(DynkinLabel, Vec<i64>)> = lattice
            .dominant_candidates(2 * k * depth)
            .into_iter()
            .filter(|(_, c)| c.iter().all(|&x| x + depth >= 0))
            .collect();
        candidates.sort_by_key(|(mu, c)| (c.iter().sum::<i64>(), mu.clone()));
        for (mu, coords) in candidates {
            if depth == 0 && &mu == l {
                table.dominant.insert((0, mu), BigInt::from(1));
                continue;
            }
            let mu_rho = add(mu.entries(), &rho, 1);
            let denom = top_norm - cartan.scaled_inner(&mu_rho, &mu_rho) + 2 * (k + h) * depth * h;
            if denom <= 0 {
                return Err(Error::Internal(format!("vanishing Freudenthal denominator at {mu}, depth {depth}")));
            }
            let mut sum = BigInt::zero();
            for (root, alpha) in &roots {
                if root.delta_count > depth {
                    continue;
                }
                let mut j = 1i64;
                loop {
                    let d = depth - j * root.delta_count;
                    let c: Vec<i64> = add(&coords, &root.finite_part, -j);
                    if d < 0 || c.iter().any(|&x| x + d < 0) {
                        break;
                    }
                    let nu = add(mu.entries(), alpha, j);
                    let m = table.mult(d, &DynkinLabel::new(nu.clone()));
                    if !m.is_zero() {
                        let pairing = cartan.scaled_inner(&nu, alpha) + h * k * root.delta_count;
                        sum += m * BigInt::from(pairing * root.multiplicity as i64);
                    }
                    j += 1;
                }
            }
            let mult = exact_quotient(&(sum * 2), denom, "affine Freudenthal")?;
            if !mult.is_zero() {
                table.dominant.insert((depth, mu), mult);
            }
        }
    }
    Ok(table)
}

/// Weight multiplicities of the finite-dimensional irreducible `V_l`.
pub fn finite_character(l: &DynkinLabel, rank: usize) -> Result<BTreeMap<DynkinLabel, BigInt>> {
    l.check_rank(rank)?;
    l.require_dominant()?;
    let cartan = CartanData::new(rank)?;
    let rho = vec![1i64; rank];
    let lam_rho = add(l.entries(), &rho, 1);
    let top_norm = cartan.scaled_inner(&lam_rho, &lam_rho);
    let (pos, _) = finite_roots(rank);
    let roots: Vec<(Vec<i64>, Vec<i64>)> =
        pos.into_iter().map(|c| (cartan.root_to_weight(&c).into_entries(), c)).collect();
    let lattice = Lattice { cartan: &cartan, highest: l };
    let mut candidates: Vec<(DynkinLabel, Vec<i64>)> =
        lattice.dominant_candidates(0).into_iter().filter(|(_, c)| c.iter().all(|&x| x >= 0)).collect();
    candidates.sort_by_key(|(mu, c)| (c.iter().sum::<i64>(), mu.clone()));

    let mut dominant: BTreeMap<DynkinLabel, BigInt> = BTreeMap::new();
    let lookup = |dominant: &BTreeMap<DynkinLabel, BigInt>, nu: &[i64]| {
        let mut v = nu.to_vec();
        cartan.to_dominant(&mut v);
        dominant.get(&DynkinLabel::new(v)).cloned().unwrap_or_default()
    };
    for (mu, coords) in candidates {
        if &mu == l {
            dominant.insert(mu, BigInt::from(1));
            continue;
        }
        let mu_rho = add(mu.entries(), &rho, 1);
        let denom = top_norm - cartan.scaled_inner(&mu_rho, &mu_rho);
        if denom <= 0 {
            return Err(Error::Internal(format!("vanishing Freudenthal denominator at {mu}")));
        }
        let mut sum = BigInt::zero();
        for (alpha, coeff) in &roots {
            let mut j = 1;
            loop {
                if add(&coords, coeff, -j).iter().any(|&x| x < 0) {
                    break;
                }
                let nu = add(mu.entries(), alpha, j);
                let m = lookup(&dominant, &nu);
                if !m.is_zero() {
                    sum += m * BigInt::from(cartan.scaled_inner(&nu, alpha));
                }
                j += 1;
            }
        }
        let mult = exact_quotient(&(sum * 2), denom, "finite Freudenthal")?;
        if !mult.is_zero() {
            dominant.insert(mu, mult);
        }
    }
    let mut out = BTreeMap::new();
    for (mu, m) in dominant {
        for image in cartan.weyl_orbit(&mu) {
            out.insert(image, m.clone());
        }
    }
    Ok(out)
}

/// Dimension of `V_l`, as the sum of its weight multiplicities.
pub fn dimension(l: &DynkinLabel, rank: usize) -> Result<BigInt> {
    Ok(finite_character(l, rank)?.values().sum())
}

/// Irreducible multiplicities in `V_{f_1} (x) ... (x) V_{f_s}`.
///
/// Multiplies weight tables, then repeatedly removes the character of the
/// highest remaining weight. A negative multiplicity on the way is reported
/// as an internal inconsistency.
pub fn tensor_decompose(factors: &[DynkinLabel], rank: usize) -> Result<BTreeMap<DynkinLabel, BigInt>> {
    let cartan = CartanData::new(rank)?;
    let mut product: BTreeMap<DynkinLabel, BigInt> = BTreeMap::new();
    product.insert(DynkinLabel::zero(rank), BigInt::from(1));
    for f in factors {
        let ch = finite_character(f, rank)?;
        let mut next: BTreeMap<DynkinLabel, BigInt> = BTreeMap::new();
        for (a, x) in &product {
            for (b, y) in &ch {
                let w = DynkinLabel::new(add(a.entries(), b.entries(), 1));
                *next.entry(w).or_insert_with(BigInt::zero) += x * y;
            }
        }
        product = next;
    }
    let height = |w: &DynkinLabel| scaled_height(&cartan, w);
    let mut out = BTreeMap::new();
    loop {
        product.retain(|_, m| !m.is_zero());
        let Some(top) = product.keys().max_by_key(|w| (height(w), (*w).clone())).cloned() else {
            return Ok(out);
        };
        let m = product[&top].clone();
        if m.is_negative() || !top.is_dominant() {
            return Err(Error::Internal(format!("inconsistent tensor product: {m} at {top}")));
        }
        for (w, x) in finite_character(&top, rank)? {
            *product.entry(w).or_insert_with(BigInt::zero) -= &m * x;
        }
        out.insert(top, m);
    }
}

/// `(r+1)` times the sum of the root-lattice coordinates of `w`.
fn scaled_height(cartan: &CartanData, w: &DynkinLabel) -> i64 {
    let ones = vec![1; cartan.rank()];
    cartan.scaled_inner(&ones, w.entries())
}
