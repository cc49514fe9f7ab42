//! The bilinear residue `[t^{-1}] (B(t) τ(p)) · (B̂^⊥(t^{-1}) τ(p̂))`,
//! expanded in `s_β ⊗ ŝ_α`.

use num_traits::Zero;
use rayon::prelude::*;

use crate::bernstein::{bernstein_on_table, bernstein_perp_on_table, LaurentSchur};
use crate::partition::{enumerate_partitions, partitions_of, Partition};
use crate::plucker::Verdict;
use crate::Rational;

use super::CoeffTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairVerdict {
    pub alpha: Partition,
    pub beta: Partition,
    pub verdict: Verdict,
}

/// Both Laurent factors of the residue, computed once per table.
pub struct Residue {
    first: LaurentSchur,
    second: LaurentSchur,
    truncation: usize,
}

impl Residue {
    pub fn new(table: &CoeffTable) -> Self {
        let t = table.truncation();
        Residue {
            first: bernstein_on_table(table.series(), t),
            second: bernstein_perp_on_table(table.series(), t),
            truncation: t,
        }
    }

    /// Whether every coefficient the pair depends on is known.
    pub fn evaluable(&self, alpha: &Partition, beta: &Partition) -> bool {
        alpha.weight() + beta.weight() < self.truncation
    }

    /// The coefficient of `t^{-1} s_β ŝ_α`; `None` when not evaluable.
    pub fn coefficient(&self, alpha: &Partition, beta: &Partition) -> Option<Rational> {
        if !self.evaluable(alpha, beta) {
            return None;
        }
        let mut total = Rational::zero();
        for (e, series) in self.first.iter() {
            let x = series.coeff(beta);
            if x.is_zero() {
                continue;
            }
            let y = self.second.coeff(-1 - e, alpha);
            total += x * y;
        }
        Some(total)
    }

    pub fn verdict(&self, alpha: &Partition, beta: &Partition) -> Verdict {
        match self.coefficient(alpha, beta) {
            None => Verdict::NotEvaluable,
            Some(v) if v.is_zero() => Verdict::Holds,
            Some(v) => Verdict::Fails(v),
        }
    }
}

/// Every pair `(α, β)` with `|α| + |β| + 1 <= truncation`, in canonical order.
pub fn evaluable_pairs(truncation: usize) -> Vec<(Partition, Partition)> {
    let Some(budget) = truncation.checked_sub(1) else {
        return Vec::new();
    };
    (0..=budget)
        .flat_map(|a| {
            partitions_of(a).into_iter().flat_map(move |alpha| {
                enumerate_partitions(budget - a)
                    .into_iter()
                    .map(move |beta| (alpha.clone(), beta))
            })
        })
        .collect()
}

/// Checks the residue at every evaluable pair.
pub fn residue_check(table: &CoeffTable) -> Vec<PairVerdict> {
    residue_check_pairs(table, &evaluable_pairs(table.truncation()))
}

/// Checks the residue at the given pairs; pairs that need coefficients
/// beyond the truncation come back [`Verdict::NotEvaluable`].
pub fn residue_check_pairs(
    table: &CoeffTable,
    pairs: &[(Partition, Partition)],
) -> Vec<PairVerdict> {
    let residue = Residue::new(table);
    pairs
        .par_iter()
        .map(|(alpha, beta)| PairVerdict {
            alpha: alpha.clone(),
            beta: beta.clone(),
            verdict: residue.verdict(alpha, beta),
        })
        .collect()
}
