//! Characters of arbitrary integrable highest-weight modules.
//!
//! The translated fermionic character of `n` decomposes as
//! `ch F_inf(n) = sum_l K_{l,n}(1/q) ch H(l)` with `K` unit upper triangular
//! over the threshold-ordered basis, so
//! `ch H(l) = sum_n (K^-1)_{n,l}(1/q) ch F_inf(n)`.

use num_traits::Signed;

use crate::charseries::{CharSeries, Mismatch};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::fermionic::{ch_f_inf_with, ch_f_with};
use crate::kostka::{invert, kostka_matrix_with, nonzero_column};
use crate::lie::{congruence_class, threshold_level, DynkinLabel};
use crate::oracles::freudenthal_affine;
use crate::qpoly::{substitute_q_inverse, QLaurent};

/// `ch F_inf(n) = sum_l coefficient_l(1/q) ch H(l)`, coefficients stored as
/// Laurent polynomials in `q` with non-positive exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub source: DynkinLabel,
    pub terms: Vec<(DynkinLabel, QLaurent)>,
}

impl Decomposition {
    pub fn coefficient(&self, l: &DynkinLabel) -> QLaurent {
        self.terms.iter().find(|(x, _)| x == l).map(|(_, p)| p.clone()).unwrap_or_default()
    }
}

/// Decomposition of the fusion-product character of `n`.
pub fn decompose_fusion(n: &DynkinLabel, rank: usize) -> Result<Decomposition> {
    let terms = nonzero_column(n, rank)?.into_iter().map(|(l, p)| (l, substitute_q_inverse(&p))).collect();
    Ok(Decomposition { source: n.clone(), terms })
}

/// Non-zero entries `(n, (K^-1)_{n,l}(q))` of the column of `l` in the
/// inverse Kostka matrix of its congruence class.
pub fn inverse_column(l: &DynkinLabel, exec: Execution) -> Result<Vec<(DynkinLabel, QLaurent)>> {
    let rank = l.rank();
    let k = kostka_matrix_with(rank, threshold_level(l)?, congruence_class(l), exec)?;
    let inv = invert(&k)?;
    let col = inv.index_of(l).ok_or_else(|| Error::Internal(format!("{l} missing from its own basis")))?;
    Ok((0..inv.dim())
        .filter(|&row| !inv.get(row, col).is_zero())
        .map(|row| (inv.basis()[row].clone(), inv.get(row, col).clone()))
        .collect())
}

fn check_integrable(l: &DynkinLabel, level: u64, max_exp: i64) -> Result<()> {
    if l.rank() == 0 {
        return Err(Error::ZeroRank);
    }
    let threshold = threshold_level(l)?;
    if level == 0 {
        return Err(Error::ZeroLevel);
    }
    if threshold > level {
        return Err(Error::NonIntegrable { weight: l.to_string(), threshold, level });
    }
    if max_exp < 0 {
        return Err(Error::NegativeArgument(max_exp));
    }
    Ok(())
}

/// Character of the integrable module `H(l; k)` on `[0, max_exp]`.
pub fn ch_h(l: &DynkinLabel, level: u64, max_exp: i64) -> Result<CharSeries> {
    ch_h_with(l, level, max_exp, Execution::default())
}

pub fn ch_h_with(l: &DynkinLabel, level: u64, max_exp: i64, exec: Execution) -> Result<CharSeries> {
    check_integrable(l, level, max_exp)?;
    combine(l, level, max_exp, exec, |n, e| ch_f_inf_with(n, level, e, exec))
}

/// Principal-subspace character: the same combination applied to the
/// untranslated function-space characters.
pub fn ch_w(l: &DynkinLabel, level: u64, max_exp: i64) -> Result<CharSeries> {
    ch_w_with(l, level, max_exp, Execution::default())
}

pub fn ch_w_with(l: &DynkinLabel, level: u64, max_exp: i64, exec: Execution) -> Result<CharSeries> {
    check_integrable(l, level, max_exp)?;
    combine(l, level, max_exp, exec, |n, e| ch_f_with(n, level, e, exec))
}

fn combine<F>(l: &DynkinLabel, level: u64, max_exp: i64, exec: Execution, series: F) -> Result<CharSeries>
where
    F: Fn(&DynkinLabel, i64) -> Result<CharSeries> + Sync + Send,
{
    let column = inverse_column(l, exec)?;
    // the 1/q shifts reach down by at most the top degree of the column
    let reach = column.iter().filter_map(|(_, p)| p.max_exp()).max().unwrap_or(0).max(0);
    let depth = max_exp + reach;
    let parts = exec.map(column, |(n, p)| -> Result<(QLaurent, CharSeries)> {
        Ok((substitute_q_inverse(&p), series(&n, depth)?))
    });
    let parts = parts.into_iter().collect::<Result<Vec<_>>>()?;
    let refs: Vec<(QLaurent, &CharSeries)> = parts.iter().map(|(p, s)| (p.clone(), s)).collect();
    let mut total = CharSeries::linear_combination(l.rank(), level, &refs);
    if total.max_exp() < max_exp {
        return Err(Error::Internal(format!("window ends at {} below {max_exp}", total.max_exp())));
    }
    if let Some((e, w, c)) = total.iter().find(|(e, _, _)| *e < 0) {
        return Err(Error::Internal(format!("uncancelled term {c} at q^{e}, weight {w}")));
    }
    if let Some((e, w, c)) = total.iter().find(|(_, _, c)| c.is_negative()) {
        return Err(Error::Internal(format!("negative multiplicity {c} at q^{e}, weight {w}")));
    }
    total.restrict(0, max_exp);
    Ok(total)
}

/// Outcome of checking `ch F_inf(n) = sum_l K_{l,n}(1/q) ch H(l)` with the
/// right-hand side taken from the affine Freudenthal recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub decomposition: Decomposition,
    pub level: u64,
    pub min_exp: i64,
    pub max_exp: i64,
    pub compared_terms: usize,
    pub mismatch: Option<Mismatch>,
}

impl DecompositionReport {
    pub fn is_equal(&self) -> bool {
        self.mismatch.is_none()
    }
}

pub fn verify_decomposition(n: &DynkinLabel, level: u64, max_exp: i64) -> Result<DecompositionReport> {
    verify_decomposition_with(n, level, max_exp, Execution::default())
}

pub fn verify_decomposition_with(n: &DynkinLabel, level: u64, max_exp: i64, exec: Execution) -> Result<DecompositionReport> {
    check_integrable(n, level, max_exp)?;
    let rank = n.rank();
    let lhs = ch_f_inf_with(n, level, max_exp, exec)?;
    let decomposition = decompose_fusion(n, rank)?;
    let tables = exec.map(decomposition.terms.clone(), |(l, p)| -> Result<(QLaurent, CharSeries)> {
        let reach = -p.min_exp().unwrap_or(0);
        Ok((p, freudenthal_affine(&l, level, max_exp + reach)?.to_char_series()))
    });
    let tables = tables.into_iter().collect::<Result<Vec<_>>>()?;
    let refs: Vec<(QLaurent, &CharSeries)> = tables.iter().map(|(p, s)| (p.clone(), s)).collect();
    let rhs = CharSeries::linear_combination(rank, level, &refs);
    let lo = lhs.min_exp().min(rhs.min_exp());
    let mismatch = lhs.first_mismatch(&rhs, lo, max_exp);
    let compared_terms = lhs.iter().filter(|(e, _, _)| *e <= max_exp).count();
    Ok(DecompositionReport { decomposition, level, min_exp: lo, max_exp, compared_terms, mismatch })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fermionic::{ch_f, ch_f_inf};

    fn label(v: &[i64]) -> DynkinLabel {
        DynkinLabel::new(v.to_vec())
    }

    fn qinv(terms: &[(i64, i64)]) -> QLaurent {
        QLaurent::from_terms(terms.iter().map(|&(e, c)| (-e, c)))
    }

    #[test]
    fn fusion_decompositions() {
        let d = decompose_fusion(&label(&[1, 1, 1]), 3).unwrap();
        assert_eq!(d.terms.len(), 4);
        assert!(d.coefficient(&label(&[1, 1, 1])).is_one());
        assert_eq!(d.coefficient(&label(&[0, 1, 0])), qinv(&[(1, 1), (2, 1)]));
        assert_eq!(d.coefficient(&label(&[2, 0, 0])), qinv(&[(1, 1)]));
        assert_eq!(d.coefficient(&label(&[0, 0, 2])), qinv(&[(1, 1)]));

        let d = decompose_fusion(&label(&[1, 1, 0]), 3).unwrap();
        assert_eq!(d.terms, vec![(label(&[0, 0, 1]), qinv(&[(1, 1)])), (label(&[1, 1, 0]), QLaurent::one())]);

        let d = decompose_fusion(&label(&[2]), 1).unwrap();
        assert_eq!(d.terms, vec![(label(&[2]), QLaurent::one())]);
    }

    #[test]
    fn su2_level2_vacuum() {
        let s = ch_h(&label(&[0]), 2, 6).unwrap();
        let column: Vec<i64> = (0..=6).map(|d| s.coeff(d, &label(&[0])).try_into().unwrap()).collect();
        assert_eq!(column, vec![1, 1, 3, 5, 10, 16, 28]);
    }

    #[test]
    fn su4_level4_subtraction() {
        let h = ch_h(&label(&[1, 1, 0]), 4, 3).unwrap();
        let f1 = ch_f_inf(&label(&[1, 1, 0]), 4, 3).unwrap();
        let f2 = ch_f_inf(&label(&[0, 0, 1]), 4, 4).unwrap();
        let manual = CharSeries::linear_combination(3, 4, &[(QLaurent::one(), &f1), (qinv(&[(1, -1)]), &f2)]);
        assert_eq!(h.first_mismatch(&manual, -5, 3), None);
    }

    #[test]
    fn l1_0_l3_relation_smallest_case() {
        let f = ch_f_inf(&label(&[1, 0, 1]), 4, 3).unwrap();
        let a = ch_h(&label(&[1, 0, 1]), 4, 3).unwrap();
        let b = ch_h(&label(&[0, 0, 0]), 4, 4).unwrap();
        let rhs = CharSeries::linear_combination(3, 4, &[(QLaurent::one(), &a), (qinv(&[(1, 1)]), &b)]);
        assert_eq!(f.first_mismatch(&rhs, f.min_exp(), 3), None);
    }

    #[test]
    fn principal_subspace() {
        // su(2)_1 vacuum: weight -2m first appears at q^{m^2}
        let w = ch_w(&label(&[0]), 1, 9).unwrap();
        for m in 0..=3i64 {
            assert_eq!(w.weight_series(&label(&[-2 * m])).min_exp(), Some(m * m));
        }
        // rectangular: equal to the untranslated function-space character
        for l in [label(&[2, 0]), label(&[0, 3, 0]), label(&[1])] {
            let k = 3;
            let w = ch_w(&l, k, 3).unwrap();
            let f = ch_f(&l, k, 3).unwrap();
            assert_eq!(w.first_mismatch(&f, -10, 3), None, "{l}");
        }
        // su(4)_4 (1,1,0): one subtraction
        let w = ch_w(&label(&[1, 1, 0]), 4, 2).unwrap();
        let f1 = ch_f(&label(&[1, 1, 0]), 4, 2).unwrap();
        let f2 = ch_f(&label(&[0, 0, 1]), 4, 3).unwrap();
        let manual = CharSeries::linear_combination(3, 4, &[(QLaurent::one(), &f1), (qinv(&[(1, -1)]), &f2)]);
        assert_eq!(w.first_mismatch(&manual, -5, 2), None);
    }

    #[test]
    fn rejects_non_integrable() {
        assert!(matches!(ch_h(&label(&[2, 1]), 2, 2), Err(Error::NonIntegrable { .. })));
        assert!(matches!(ch_w(&label(&[3]), 2, 2), Err(Error::NonIntegrable { .. })));
    }

    #[test]
    fn matches_freudenthal_small() {
        for r in 1..=2usize {
            for k in 1..=3u64 {
                for class in 0..=r as u64 {
                    for l in crate::lie::dominant_weights(r, k, class).unwrap() {
                        let h = ch_h(&l, k, 4).unwrap();
                        let oracle = freudenthal_affine(&l, k, 4).unwrap().to_char_series();
                        assert_eq!(h.first_mismatch(&oracle, 0, 4), None, "l={l} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn verify_small_decompositions() {
        let rep = verify_decomposition(&label(&[2]), 2, 6).unwrap();
        assert!(rep.is_equal());
        let rep = verify_decomposition(&label(&[1, 1]), 2, 3).unwrap();
        assert!(rep.is_equal(), "{:?}", rep.mismatch);
        assert!(rep.compared_terms > 0);
        assert_eq!(rep.decomposition.coefficient(&label(&[0, 0])), qinv(&[(1, 1)]));
    }
}
