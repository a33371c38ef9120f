//! Generalized Kostka polynomials for fusion products of rectangular
//! representations `n_1 w_1, ..., n_r w_r`, and their triangular matrices.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::lie::{congruence_class, dominant_weights, threshold_level, CartanData, DynkinLabel};
use crate::qpoly::{q_binomial, QLaurent};

/// `K_{l,n}(q)`.
///
/// Zero unless `m = C^{-1}(n - l)` is a vector of non-negative integers.
/// Otherwise a sum over partitions `m[i][a]` of each `m^(i)` with parts at
/// most `k(n)` of
/// `q^{1/2 m.(C (x) A).m} prod_{i,a} [A[a][n_i] - (C (x) A m)[i][a] + m[i][a]; m[i][a]]_q`.
pub fn kostka_poly(l: &DynkinLabel, n: &DynkinLabel, rank: usize) -> Result<QLaurent> {
    let width = threshold_level(n)? as usize;
    kostka_poly_with_width(l, n, rank, width)
}

/// [`kostka_poly`] with an explicit maximal row width for the partitions.
///
/// Widths above `k(n)` only add vanishing terms; exposed so that this can be
/// checked.
pub fn kostka_poly_with_width(l: &DynkinLabel, n: &DynkinLabel, rank: usize, width: usize) -> Result<QLaurent> {
    let cartan = CartanData::new(rank)?;
    l.check_rank(rank)?;
    n.check_rank(rank)?;
    l.require_dominant()?;
    n.require_dominant()?;
    let diff = DynkinLabel::new(n.entries().iter().zip(l.entries()).map(|(a, b)| a - b).collect());
    let Some(m) = cartan.weight_to_root_integral(&diff) else {
        return Ok(QLaurent::zero());
    };
    if m.iter().any(|&x| x < 0) {
        return Ok(QLaurent::zero());
    }

    let per_colour: Vec<Vec<Vec<i64>>> = m.iter().map(|&t| partitions_by_width(t, width)).collect();
    let c = cartan.cartan();
    let mut binomials: HashMap<(i64, i64), QLaurent> = HashMap::new();
    let mut total = QLaurent::zero();
    let mut choice = vec![0usize; rank];
    if per_colour.iter().any(|p| p.is_empty()) {
        return Ok(total);
    }
    loop {
        let parts: Vec<&Vec<i64>> = (0..rank).map(|i| &per_colour[i][choice[i]]).collect();
        // (C (x) A) m, indexed [i][a-1]
        let cam: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (1..=width as i64)
                    .map(|a| {
                        (0..rank)
                            .map(|j| {
                                if c[i][j] == 0 {
                                    return 0;
                                }
                                let s: i64 = parts[j].iter().enumerate().map(|(b, &v)| a.min(b as i64 + 1) * v).sum();
                                c[i][j] * s
                            })
                            .sum()
                    })
                    .collect()
            })
            .collect();
        let twice: i64 = (0..rank).map(|i| parts[i].iter().zip(&cam[i]).map(|(x, y)| x * y).sum::<i64>()).sum();
        if twice % 2 != 0 {
            return Err(Error::Internal(format!("half-integral Kostka exponent for l={l}, n={n}")));
        }
        let mut term = QLaurent::monomial(twice / 2, 1);
        'factors: for i in 0..rank {
            for a in 1..=width {
                let mult = parts[i][a - 1];
                let top = (a as i64).min(n.entries()[i]) - cam[i][a - 1];
                let b = binomials.entry((top, mult)).or_insert_with(|| q_binomial(top, mult));
                if b.is_zero() {
                    term = QLaurent::zero();
                    break 'factors;
                }
                if !b.is_one() {
                    term = &term * b;
                }
            }
        }
        total += &term;

        let mut i = 0;
        loop {
            if i == rank {
                if !total.has_nonnegative_coeffs() {
                    return Err(Error::Internal(format!("negative Kostka coefficient for l={l}, n={n}")));
                }
                return Ok(total);
            }
            choice[i] += 1;
            if choice[i] < per_colour[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Partitions of `total` into parts of size at most `width`, as multiplicity
/// vectors `[m_1, ..., m_width]`.
fn partitions_by_width(total: i64, width: usize) -> Vec<Vec<i64>> {
    fn go(rest: i64, part: usize, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if part == 0 {
            if rest == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let p = part as i64;
        for count in 0..=rest / p {
            acc[part - 1] = count;
            go(rest - count * p, part - 1, acc, out);
        }
        acc[part - 1] = 0;
    }
    let mut out = Vec::new();
    if width == 0 {
        if total == 0 {
            out.push(vec![]);
        }
        return out;
    }
    go(total, width, &mut vec![0; width], &mut out);
    out
}

/// `K_{l,n}(1)`: the multiplicity of `V_l` in `V_{n_1 w_1} (x) ... (x) V_{n_r w_r}`.
pub fn lr_coefficient(l: &DynkinLabel, n: &DynkinLabel, rank: usize) -> Result<BigInt> {
    Ok(kostka_poly(l, n, rank)?.eval_at_one())
}

/// Square matrix of Laurent polynomials over an ordered basis of labels.
///
/// `entries[row][col]`; for a Kostka matrix, row `l` and column `n` hold
/// `K_{l,n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaMatrix {
    basis: Vec<DynkinLabel>,
    entries: Vec<Vec<QLaurent>>,
}

impl KostkaMatrix {
    pub fn from_entries(basis: Vec<DynkinLabel>, entries: Vec<Vec<QLaurent>>) -> Result<Self> {
        let n = basis.len();
        if entries.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: entries.len() });
        }
        if let Some(row) = entries.iter().find(|row| row.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: row.len() });
        }
        Ok(KostkaMatrix { basis, entries })
    }

    pub fn identity(basis: Vec<DynkinLabel>) -> Self {
        let n = basis.len();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| if i == j { QLaurent::one() } else { QLaurent::zero() }).collect())
            .collect();
        KostkaMatrix { basis, entries }
    }

    pub fn basis(&self) -> &[DynkinLabel] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn get(&self, row: usize, col: usize) -> &QLaurent {
        &self.entries[row][col]
    }

    pub fn index_of(&self, label: &DynkinLabel) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    /// Entry addressed by labels.
    pub fn entry(&self, row: &DynkinLabel, col: &DynkinLabel) -> Option<&QLaurent> {
        Some(&self.entries[self.index_of(row)?][self.index_of(col)?])
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, e)| if i == j { e.is_one() } else { e.is_zero() }))
    }

    pub fn is_unit_upper_triangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, e)| match i.cmp(&j) {
                std::cmp::Ordering::Equal => e.is_one(),
                std::cmp::Ordering::Greater => e.is_zero(),
                std::cmp::Ordering::Less => true,
            })
        })
    }

    /// Matrix product over the same basis.
    pub fn multiply(&self, other: &KostkaMatrix) -> Result<KostkaMatrix> {
        if self.basis != other.basis {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: other.dim() });
        }
        let n = self.dim();
        let mut entries = vec![vec![QLaurent::zero(); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                for t in 0..n {
                    let (a, b) = (&self.entries[i][t], &other.entries[t][j]);
                    if !a.is_zero() && !b.is_zero() {
                        *out += &(a * b);
                    }
                }
            }
        }
        Ok(KostkaMatrix { basis: self.basis.clone(), entries })
    }

    /// Non-zero entries in row-major order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &QLaurent)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().filter(|(_, e)| !e.is_zero()).map(move |(j, e)| (i, j, e)))
    }
}

/// Kostka matrix over [`dominant_weights`]`(rank, max_threshold, class)`.
pub fn kostka_matrix(rank: usize, max_threshold: u64, class: u64) -> Result<KostkaMatrix> {
    kostka_matrix_with(rank, max_threshold, class, Execution::default())
}

pub fn kostka_matrix_with(rank: usize, max_threshold: u64, class: u64, exec: Execution) -> Result<KostkaMatrix> {
    let basis = dominant_weights(rank, max_threshold, class)?;
    kostka_matrix_over(basis, rank, exec)
}

/// Kostka matrix over an explicit basis; it must be ordered by threshold level
/// for the result to be triangular.
pub fn kostka_matrix_over(basis: Vec<DynkinLabel>, rank: usize, exec: Execution) -> Result<KostkaMatrix> {
    let cols = exec.map((0..basis.len()).collect(), |j| -> Result<Vec<QLaurent>> {
        basis.iter().map(|l| kostka_poly(l, &basis[j], rank)).collect()
    });
    let n = basis.len();
    let mut entries = vec![vec![QLaurent::zero(); n]; n];
    for (j, col) in cols.into_iter().enumerate() {
        for (i, e) in col?.into_iter().enumerate() {
            entries[i][j] = e;
        }
    }
    let k = KostkaMatrix { basis, entries };
    if !k.is_unit_upper_triangular() {
        return Err(Error::Internal("Kostka matrix is not unit upper triangular".into()));
    }
    Ok(k)
}

/// Exact inverse of a unit upper-triangular matrix by back-substitution.
pub fn invert(k: &KostkaMatrix) -> Result<KostkaMatrix> {
    if !k.is_unit_upper_triangular() {
        let bad = (0..k.dim()).find(|&i| !k.entries[i][i].is_one()).map_or_else(
            || "non-zero entry below the diagonal".to_string(),
            |i| format!("diagonal entry {} at {} is {}", i, k.basis[i], k.entries[i][i]),
        );
        return Err(Error::NotUnitTriangular(bad));
    }
    let n = k.dim();
    let mut inv = vec![vec![QLaurent::zero(); n]; n];
    for j in 0..n {
        inv[j][j] = QLaurent::one();
        for i in (0..j).rev() {
            let mut acc = QLaurent::zero();
            for t in i + 1..=j {
                let (a, b) = (&k.entries[i][t], &inv[t][j]);
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            inv[i][j] = -&acc;
        }
    }
    let inv = KostkaMatrix { basis: k.basis.clone(), entries: inv };
    if !k.multiply(&inv)?.is_identity() {
        return Err(Error::Internal("K * K^-1 is not the identity".into()));
    }
    Ok(inv)
}

/// Labels `l` with `K_{l,n} != 0`, with their polynomials.
pub fn nonzero_column(n: &DynkinLabel, rank: usize) -> Result<Vec<(DynkinLabel, QLaurent)>> {
    let basis = dominant_weights(rank, threshold_level(n)?, congruence_class(n))?;
    let mut out = Vec::new();
    for l in basis {
        let p = kostka_poly(&l, n, rank)?;
        if !p.is_zero() {
            out.push((l, p));
        }
    }
    Ok(out)
}
