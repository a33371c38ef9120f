//! Root-system data for su(r+1): Cartan matrices, weights in the
//! fundamental-weight basis, finite Weyl reflections and affine Weyl
//! translations.
//!
//! All weights are stored as Dynkin labels. Simple roots are converted on the
//! fly: `alpha_j = sum_i C[j][i] * omega_i`, i.e. row `j` of the Cartan matrix.
//! The Cartan matrix of A_r is symmetric, so row/column order never matters
//! here and no attempt is made to support non-symmetric types.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// A finite weight written in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinLabel(Vec<i64>);

impl DynkinLabel {
    /// Any integral weight (entries may be negative).
    pub fn new(entries: Vec<i64>) -> Self {
        DynkinLabel(entries)
    }

    /// A dominant weight; rejects negative entries.
    pub fn dominant(entries: Vec<i64>) -> Result<Self> {
        let label = DynkinLabel(entries);
        if label.is_dominant() {
            Ok(label)
        } else {
            Err(Error::NotDominant(label.to_string()))
        }
    }

    pub fn zero(rank: usize) -> Self {
        DynkinLabel(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// A weight is rectangular when at most one Dynkin index is non-zero.
    pub fn is_rectangular(&self) -> bool {
        self.0.iter().filter(|&&x| x != 0).count() <= 1
    }

    pub(crate) fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() == rank {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: rank, got: self.rank() })
        }
    }

    pub(crate) fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.to_string()))
        }
    }
}

impl fmt::Display for DynkinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for DynkinLabel {
    fn from(v: Vec<i64>) -> Self {
        DynkinLabel(v)
    }
}

impl<const N: usize> From<[i64; N]> for DynkinLabel {
    fn from(v: [i64; N]) -> Self {
        DynkinLabel(v.to_vec())
    }
}

/// A weight `(finite; level; degree)` of the affine algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    pub finite: DynkinLabel,
    pub level: u64,
    pub degree: i64,
}

impl AffineWeight {
    pub fn new(finite: DynkinLabel, level: u64, degree: i64) -> Self {
        AffineWeight { finite, level, degree }
    }
}

/// Cartan matrix, its exact inverse, and derived integer data for su(r+1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    inv_cartan: Vec<Vec<Ratio<i64>>>,
    // (r+1) * C^{-1}; integral, used for exact inner products.
    scaled_inv: Vec<Vec<i64>>,
}

impl CartanData {
    pub fn new(rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(rank)?;
        let inv_cartan = inverse_cartan(rank)?;
        let n = rank as i64 + 1;
        let scaled_inv = (1..=rank as i64)
            .map(|i| (1..=rank as i64).map(|j| n * i.min(j) - i * j).collect())
            .collect();
        Ok(CartanData { rank, cartan, inv_cartan, scaled_inv })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn inv_cartan(&self) -> &[Vec<Ratio<i64>>] {
        &self.inv_cartan
    }

    /// The dual Coxeter number r+1.
    pub fn dual_coxeter(&self) -> i64 {
        self.rank as i64 + 1
    }

    /// Simple root `alpha_j` (zero-based) in the fundamental-weight basis.
    pub fn simple_root(&self, j: usize) -> DynkinLabel {
        DynkinLabel(self.cartan[j].clone())
    }

    /// Converts root-lattice coordinates `sum_j c_j alpha_j` to Dynkin labels.
    pub fn root_to_weight(&self, coeffs: &[i64]) -> DynkinLabel {
        let r = self.rank;
        DynkinLabel(
            (0..r)
                .map(|i| (0..r).map(|j| coeffs[j] * self.cartan[j][i]).sum())
                .collect(),
        )
    }

    /// Root-lattice coordinates of a weight, exact: `C^{-1} mu`.
    pub fn weight_to_root(&self, mu: &DynkinLabel) -> Vec<Ratio<i64>> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| self.inv_cartan[i][j] * mu.0[j])
                    .fold(Ratio::from_integer(0), |a, b| a + b)
            })
            .collect()
    }

    /// Root-lattice coordinates if they are all integers.
    pub fn weight_to_root_integral(&self, mu: &DynkinLabel) -> Option<Vec<i64>> {
        let n = self.dual_coxeter();
        let mut out = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            let s: i64 = (0..self.rank).map(|j| self.scaled_inv[i][j] * mu.0[j]).sum();
            if s % n != 0 {
                return None;
            }
            out.push(s / n);
        }
        Some(out)
    }

    /// `(r+1) * (mu, nu)` with the normalisation where long roots have length² 2.
    pub fn scaled_inner(&self, mu: &[i64], nu: &[i64]) -> i64 {
        let r = self.rank;
        let mut s = 0;
        for i in 0..r {
            if mu[i] == 0 {
                continue;
            }
            for j in 0..r {
                s += mu[i] * self.scaled_inv[i][j] * nu[j];
            }
        }
        s
    }

    /// Simple reflection `s_i` (zero-based).
    pub fn reflect(&self, mu: &mut [i64], i: usize) {
        let c = mu[i];
        if c != 0 {
            for (m, a) in mu.iter_mut().zip(&self.cartan[i]) {
                *m -= c * a;
            }
        }
    }

    /// Brings a weight into the dominant chamber with simple reflections.
    pub fn to_dominant(&self, mu: &mut [i64]) {
        loop {
            match mu.iter().position(|&x| x < 0) {
                Some(i) => self.reflect(mu, i),
                None => return,
            }
        }
    }

    /// Positive roots `alpha_i + ... + alpha_j` in Dynkin labels.
    pub fn positive_roots(&self) -> Vec<DynkinLabel> {
        let r = self.rank;
        let mut roots = Vec::with_capacity(r * (r + 1) / 2);
        for i in 0..r {
            for j in i..r {
                let mut coeffs = vec![0; r];
                coeffs[i..=j].iter_mut().for_each(|c| *c = 1);
                roots.push(self.root_to_weight(&coeffs));
            }
        }
        roots
    }

    /// The finite Weyl orbit of a weight.
    pub fn weyl_orbit(&self, mu: &DynkinLabel) -> Vec<DynkinLabel> {
        let mut seen = std::collections::BTreeSet::new();
        let mut stack = vec![mu.clone()];
        seen.insert(mu.clone());
        while let Some(w) = stack.pop() {
            for i in 0..self.rank {
                let mut v = w.0.clone();
                self.reflect(&mut v, i);
                let v = DynkinLabel(v);
                if seen.insert(v.clone()) {
                    stack.push(v);
                }
            }
        }
        seen.into_iter().collect()
    }
}

/// `C_ij = 2 delta_ij - delta_{|i-j|,1}`.
pub fn cartan_matrix(rank: usize) -> Result<Vec<Vec<i64>>> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    Ok((0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect())
}

/// `(C^{-1})_ij = min(i,j) - ij/(r+1)`, one-based indices.
pub fn inverse_cartan(rank: usize) -> Result<Vec<Vec<Ratio<i64>>>> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let n = rank as i64 + 1;
    Ok((1..=rank as i64)
        .map(|i| (1..=rank as i64).map(|j| Ratio::new(n * i.min(j) - i * j, n)).collect())
        .collect())
}

/// Smallest level at which `l` labels an integrable representation.
pub fn threshold_level(l: &DynkinLabel) -> Result<u64> {
    l.require_dominant()?;
    Ok(l.0.iter().sum::<i64>() as u64)
}

/// `sum_i i * l_i mod (r+1)`.
pub fn congruence_class(l: &DynkinLabel) -> u64 {
    let n = l.rank() as i64 + 1;
    let s: i64 = l.0.iter().enumerate().map(|(i, x)| (i as i64 + 1) * x).sum();
    s.rem_euclid(n) as u64
}

/// Applies the affine Weyl translation by `sum_i N_i alpha_i`.
pub fn weyl_translate(w: &AffineWeight, shift: &[i64], cartan: &CartanData) -> Result<AffineWeight> {
    let r = cartan.rank();
    w.finite.check_rank(r)?;
    if shift.len() != r {
        return Err(Error::DimensionMismatch { expected: r, got: shift.len() });
    }
    if w.level == 0 {
        return Err(Error::ZeroLevel);
    }
    let k = w.level as i64;
    let root = cartan.root_to_weight(shift);
    let finite = DynkinLabel(w.finite.0.iter().zip(&root.0).map(|(l, a)| l + k * a).collect());
    let linear: i64 = shift.iter().zip(&w.finite.0).map(|(n, l)| n * l).sum();
    // N^T C N is even for A_r, so k/2 N^T C N is an integer.
    let quad: i64 = shift.iter().zip(&root.0).map(|(n, a)| n * a).sum();
    if quad % 2 != 0 {
        return Err(Error::Internal(format!("odd N^T C N = {quad} for shift {shift:?}")));
    }
    Ok(AffineWeight { finite, level: w.level, degree: w.degree - linear - k * quad / 2 })
}

/// Dominant weights of one congruence class up to a threshold level.
///
/// Ordered by threshold level ascending; within a level, descending
/// lexicographic order of the Dynkin labels.
pub fn dominant_weights(rank: usize, max_threshold: u64, class: u64) -> Result<Vec<DynkinLabel>> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let mut out = Vec::new();
    for t in 0..=max_threshold {
        let mut level = Vec::new();
        compositions(rank, t as i64, &mut vec![], &mut level);
        level.retain(|l| congruence_class(l) == class);
        level.sort_by(|a, b| b.cmp(a));
        out.extend(level);
    }
    Ok(out)
}

fn compositions(parts: usize, total: i64, prefix: &mut Vec<i64>, out: &mut Vec<DynkinLabel>) {
    if prefix.len() + 1 == parts {
        prefix.push(total);
        out.push(DynkinLabel(prefix.clone()));
        prefix.pop();
        return;
    }
    for x in 0..=total {
        prefix.push(x);
        compositions(parts, total - x, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn labels(v: &[&[i64]]) -> Vec<DynkinLabel> {
        v.iter().map(|x| DynkinLabel::new(x.to_vec())).collect()
    }

    #[test]
    fn cartan_small_ranks() {
        assert_eq!(cartan_matrix(1).unwrap(), vec![vec![2]]);
        assert_eq!(cartan_matrix(2).unwrap(), vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(cartan_matrix(3).unwrap()[0][2], 0);
        assert_eq!(cartan_matrix(0), Err(Error::ZeroRank));
        assert_eq!(inverse_cartan(0), Err(Error::ZeroRank));
    }

    #[test]
    fn inverse_cartan_entries() {
        assert_eq!(inverse_cartan(1).unwrap(), vec![vec![Ratio::new(1, 2)]]);
        assert_eq!(inverse_cartan(3).unwrap()[0][2], Ratio::new(1, 4));
        assert_eq!(inverse_cartan(2).unwrap()[1][1], Ratio::new(2, 3));
    }

    #[test]
    fn cartan_times_inverse_is_identity() {
        for r in 1..=8 {
            let c = cartan_matrix(r).unwrap();
            let ci = inverse_cartan(r).unwrap();
            for i in 0..r {
                for j in 0..r {
                    let s = (0..r).fold(Ratio::from_integer(0), |acc, t| acc + ci[t][j] * c[i][t]);
                    assert_eq!(s, Ratio::from_integer((i == j) as i64), "r={r} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn threshold_and_class() {
        assert_eq!(threshold_level(&[1, 2, 1].into()).unwrap(), 4);
        assert_eq!(threshold_level(&[0, 0, 0].into()).unwrap(), 0);
        assert_eq!(threshold_level(&[4, 0, 0].into()).unwrap(), 4);
        assert!(matches!(threshold_level(&[1, -1].into()), Err(Error::NotDominant(_))));
        assert_eq!(congruence_class(&[1, 0, 1].into()), 0);
        assert_eq!(congruence_class(&[1, 2, 1].into()), 0);
        assert_eq!(congruence_class(&[1].into()), 1);
        assert_eq!(congruence_class(&[-1].into()), 1);
    }

    #[test]
    fn dominant_constructor_rejects_negative() {
        assert!(DynkinLabel::dominant(vec![0, -1]).is_err());
        assert!(DynkinLabel::dominant(vec![0, 1]).is_ok());
    }

    #[test]
    fn su2_vacuum_translations() {
        let cd = CartanData::new(1).unwrap();
        let v0 = AffineWeight::new([0].into(), 2, 0);
        let v1 = weyl_translate(&v0, &[1], &cd).unwrap();
        assert_eq!(v1, AffineWeight::new([4].into(), 2, -2));
        let vm1 = weyl_translate(&v0, &[-1], &cd).unwrap();
        assert_eq!(vm1, AffineWeight::new([-4].into(), 2, -2));
        assert_eq!(weyl_translate(&v0, &[0], &cd).unwrap(), v0);
        assert_eq!(
            weyl_translate(&AffineWeight::new([0].into(), 0, 0), &[1], &cd),
            Err(Error::ZeroLevel)
        );
    }

    #[test]
    fn dominant_weight_lists() {
        let got = dominant_weights(3, 4, 0).unwrap();
        let want = labels(&[
            &[0, 0, 0],
            &[1, 0, 1],
            &[0, 2, 0],
            &[2, 1, 0],
            &[0, 1, 2],
            &[4, 0, 0],
            &[2, 0, 2],
            &[1, 2, 1],
            &[0, 4, 0],
            &[0, 0, 4],
        ]);
        assert_eq!(got, want);
        assert_eq!(dominant_weights(1, 2, 0).unwrap(), labels(&[&[0], &[2]]));
        assert_eq!(dominant_weights(2, 0, 0).unwrap(), labels(&[&[0, 0]]));
    }

    #[test]
    fn dominant_weights_strictly_ordered() {
        for r in 1..=4 {
            for class in 0..=r as u64 {
                let ws = dominant_weights(r, 5, class).unwrap();
                for pair in ws.windows(2) {
                    let key = |l: &DynkinLabel| (threshold_level(l).unwrap(), std::cmp::Reverse(l.clone()));
                    assert!(key(&pair[0]) < key(&pair[1]));
                }
            }
        }
    }

    #[test]
    fn weyl_orbit_of_adjoint() {
        let cd = CartanData::new(2).unwrap();
        // the six roots of su(3)
        assert_eq!(cd.weyl_orbit(&[1, 1].into()).len(), 6);
        let mut mu = vec![-1, -1];
        cd.to_dominant(&mut mu);
        assert_eq!(mu, vec![1, 1]);
    }

    proptest! {
        #[test]
        fn translation_is_group_action(
            r in 1usize..=3,
            k in 1u64..=4,
            seed in proptest::collection::vec(-3i64..=3, 9),
            l in proptest::collection::vec(-3i64..=5, 3),
            d in -5i64..=0,
        ) {
            let cd = CartanData::new(r).unwrap();
            let w = AffineWeight::new(DynkinLabel::new(l[..r].to_vec()), k, d);
            let n = &seed[..r];
            let m = &seed[3..3 + r];
            let nm: Vec<i64> = n.iter().zip(m).map(|(a, b)| a + b).collect();
            let two_step = weyl_translate(&weyl_translate(&w, n, &cd).unwrap(), m, &cd).unwrap();
            let one_step = weyl_translate(&w, &nm, &cd).unwrap();
            prop_assert_eq!(&two_step, &one_step);
            prop_assert_eq!(one_step.level, k);
        }
    }
}
