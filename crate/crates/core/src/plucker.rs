//! Quadratic Plücker relations among partition-indexed coefficients `a_λ`,
//! in the classical form and in the code-symmetric form
//!
//! ```text
//! Σ_{i,j >= 1, |α^(i)| + |β^(-j)| = |α| + |β| + 1} (-1)^{|α|-|α^(i)|+i+j} a_{α^(i)} a_{β^(-j)} = 0.
//! ```
//!
//! Monomials are unordered pairs `{a_left, a_right}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::algebra::SchurSeries;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, partitions_of, Partition};
use crate::{rat, sign, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Form {
    Classical,
    Symmetric,
}

/// `coeff · a_left · a_right`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadTerm {
    pub coeff: Rational,
    pub left: Partition,
    pub right: Partition,
}

/// A generating `(α, β)` pair, with `m` for the classical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Source {
    pub alpha: Partition,
    pub beta: Partition,
    pub m: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct QuadRelation {
    pub terms: Vec<QuadTerm>,
    pub form: Form,
    pub sources: BTreeSet<Source>,
}

impl QuadRelation {
    fn new(form: Form, source: Source, terms: Vec<QuadTerm>) -> Self {
        QuadRelation {
            terms,
            form,
            sources: BTreeSet::from([source]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The first generating pair.
    pub fn source(&self) -> &Source {
        self.sources.iter().next().expect("relation has a source")
    }

    /// Total weight `|left| + |right|` of the first term.
    pub fn weight(&self) -> Option<usize> {
        self.terms
            .first()
            .map(|t| t.left.weight() + t.right.weight())
    }

    /// Every partition referenced by a term.
    pub fn partitions(&self) -> BTreeSet<&Partition> {
        self.terms
            .iter()
            .flat_map(|t| [&t.left, &t.right])
            .collect()
    }

    /// Combines unordered monomials without changing the overall sign; terms
    /// come out in canonical order.
    pub fn combined(&self) -> QuadRelation {
        let mut acc: BTreeMap<(Partition, Partition), Rational> = BTreeMap::new();
        for t in &self.terms {
            let key = if t.left <= t.right {
                (t.left.clone(), t.right.clone())
            } else {
                (t.right.clone(), t.left.clone())
            };
            *acc.entry(key).or_insert_with(Rational::zero) += &t.coeff;
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((left, right), coeff)| QuadTerm { coeff, left, right })
            .collect();
        QuadRelation {
            terms,
            form: self.form,
            sources: self.sources.clone(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scaled(&self, c: &Rational) -> QuadRelation {
        QuadRelation {
            terms: self
                .terms
                .iter()
                .map(|t| QuadTerm {
                    coeff: &t.coeff * c,
                    ..t.clone()
                })
                .filter(|t| !t.coeff.is_zero())
                .collect(),
            form: self.form,
            sources: self.sources.clone(),
        }
    }

    /// Whether the two relations have the same terms, ignoring provenance.
    pub fn same_terms(&self, other: &QuadRelation) -> bool {
        self.terms == other.terms
    }
}

/// `a_{(x_1, …)}` rendered as `a[x_1,…]`, terms joined as a signed sum.
impl fmt::Display for QuadRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0 = 0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            crate::render::write_signed_coeff(f, &t.coeff, k == 0)?;
            write!(f, "a[{}]*a[{}]", t.left, t.right)?;
        }
        f.write_str(" = 0")
    }
}

/// Combines like monomials, sorts terms canonically and fixes the overall
/// sign so that the first coefficient is positive.
pub fn normalize(r: &QuadRelation) -> QuadRelation {
    let combined = r.combined();
    match combined.terms.first() {
        Some(t) if t.coeff.is_negative() => combined.scaled(&rat(-1, 1)),
        _ => combined,
    }
}

/// The classical relation for `(m, α, β)`: for `k = 0..=m`, a term
/// `(-1)^{k-m+1+ℓ} a_{(α_1-1,…,α_ℓ-1, β_{k+1}-k+ℓ+1, α_{ℓ+1},…,α_{m-1})}
/// · a_{(β_1+1,…,β_k+1, β_{k+2},…,β_{m+1})}`, where `ℓ = ℓ(k)` is the unique
/// position satisfying the interlacing condition; `k` without such an `ℓ`
/// contributes nothing.
pub fn classical_relation(m: usize, alpha: &Partition, beta: &Partition) -> Result<QuadRelation> {
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    if alpha.length() + 1 > m {
        return Err(Error::Precondition(format!(
            "l({alpha}) = {} exceeds m - 1 = {}",
            alpha.length(),
            m - 1
        )));
    }
    if beta.length() > m + 1 {
        return Err(Error::Precondition(format!(
            "l({beta}) = {} exceeds m + 1 = {}",
            beta.length(),
            m + 1
        )));
    }
    let mut terms = Vec::new();
    for k in 0..=m {
        let x = beta.part(k + 1) as i64 - k as i64;
        let Some(ell) = interlacing_position(m, alpha, x) else {
            continue;
        };
        let inserted = (x + ell as i64 + 1) as usize;
        let mut left: Vec<usize> = (1..=ell).map(|r| alpha.part(r) - 1).collect();
        left.push(inserted);
        left.extend((ell + 1..m).map(|r| alpha.part(r)));
        let mut right: Vec<usize> = (1..=k).map(|r| beta.part(r) + 1).collect();
        right.extend((k + 2..=m + 1).map(|r| beta.part(r)));
        let exponent = k + 1 + ell + m; // ≡ k - m + 1 + ℓ (mod 2)
        terms.push(QuadTerm {
            coeff: sign(exponent),
            left: Partition::from_padded(left),
            right: Partition::from_padded(right),
        });
    }
    Ok(QuadRelation::new(
        Form::Classical,
        Source {
            alpha: alpha.clone(),
            beta: beta.clone(),
            m: Some(m),
        },
        terms,
    ))
}

/// The `ℓ ∈ [0, m-1]` with `α_ℓ - 1 >= x + ℓ + 1 >= α_{ℓ+1}` and
/// `x + ℓ + 1 >= 0` (`α_0 = ∞`, `α_m = -∞`).
///
/// With `γ_i = α_i - i` strictly decreasing, this asks for
/// `γ_ℓ - 2 >= x >= γ_{ℓ+1}`, so at most one `ℓ` qualifies.
fn interlacing_position(m: usize, alpha: &Partition, x: i64) -> Option<usize> {
    let gamma = |i: usize| -> Option<i64> {
        // None stands for +∞ at i = 0 and -∞ at i = m.
        if i == 0 || i == m {
            None
        } else {
            Some(alpha.part(i) as i64 - i as i64)
        }
    };
    let mut found = None;
    for ell in 0..m {
        let upper_ok = match gamma(ell) {
            None => true,
            Some(g) => g - 2 >= x,
        };
        let lower_ok = match gamma(ell + 1) {
            None => true,
            Some(g) => x >= g,
        };
        if upper_ok && lower_ok && x + ell as i64 + 1 >= 0 {
            debug_assert!(found.is_none(), "ℓ(k) is unique");
            found = Some(ell);
        }
    }
    found
}

/// Search cap on `i` and `j` that always covers every term of the
/// code-symmetric relation for `(α, β)`.
pub fn index_bound(alpha: &Partition, beta: &Partition) -> usize {
    alpha.weight() + beta.weight() + 2
}

/// The code-symmetric relation for `(α, β)`, searching `i, j <= max_i`.
pub fn symmetric_relation(alpha: &Partition, beta: &Partition, max_i: usize) -> QuadRelation {
    let target = alpha.weight() + beta.weight() + 1;
    let mut terms = Vec::new();
    for i in 1..=max_i {
        let left = alpha.switch_up(i);
        let Some(need) = target.checked_sub(left.weight()) else {
            // |α^(i)| only grows from here.
            break;
        };
        for j in 1..=max_i {
            let right = beta.switch_down(j);
            if right.weight() > need {
                break;
            }
            if right.weight() == need {
                let exponent = alpha.weight() + i + j + left.weight(); // parity of |α|-|α^(i)|+i+j
                terms.push(QuadTerm {
                    coeff: sign(exponent),
                    left: left.clone(),
                    right,
                });
            }
        }
    }
    QuadRelation::new(
        Form::Symmetric,
        Source {
            alpha: alpha.clone(),
            beta: beta.clone(),
            m: None,
        },
        terms,
    )
}

/// [`symmetric_relation`] with the search cap from [`index_bound`].
pub fn symmetric_relation_auto(alpha: &Partition, beta: &Partition) -> QuadRelation {
    symmetric_relation(alpha, beta, index_bound(alpha, beta))
}

type TermKey = (Partition, Partition, Rational);

/// All distinct nonzero normalized code-symmetric relations over pairs with
/// `|α| + |β| + 1 <= max_weight`, ordered by weight and then terms. Each
/// keeps every pair that generated it.
pub fn relation_set(max_weight: usize) -> Vec<QuadRelation> {
    let Some(pair_weight) = max_weight.checked_sub(1) else {
        return Vec::new();
    };
    let pairs: Vec<(Partition, Partition)> = (0..=pair_weight)
        .flat_map(|a| {
            let betas = enumerate_partitions(pair_weight - a);
            partitions_of(a).into_iter().flat_map(move |alpha| {
                betas
                    .clone()
                    .into_iter()
                    .map(move |beta| (alpha.clone(), beta))
            })
        })
        .collect();
    let generated: Vec<QuadRelation> = pairs
        .par_iter()
        .map(|(alpha, beta)| normalize(&symmetric_relation_auto(alpha, beta)))
        .filter(|r| !r.is_zero())
        .collect();

    let mut dedup: BTreeMap<(usize, Vec<TermKey>), QuadRelation> = BTreeMap::new();
    for r in generated {
        let key = (
            r.weight().unwrap_or(0),
            r.terms
                .iter()
                .map(|t| (t.left.clone(), t.right.clone(), t.coeff.clone()))
                .collect(),
        );
        match dedup.get_mut(&key) {
            Some(existing) => existing.sources.extend(r.sources),
            None => {
                dedup.insert(key, r);
            }
        }
    }
    dedup.into_values().collect()
}

/// Outcome of checking one relation against a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Rational),
    NotEvaluable,
}

impl Verdict {
    pub fn status(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails(_) => "fails",
            Verdict::NotEvaluable => "not_evaluable",
        }
    }
}

/// `Σ coeff · a_left · a_right`. Referencing a coefficient beyond the table's
/// truncation weight is an error, not a zero.
pub fn evaluate(r: &QuadRelation, table: &SchurSeries) -> Result<Rational> {
    let mut total = Rational::zero();
    for t in &r.terms {
        for p in [&t.left, &t.right] {
            if !table.covers(p.weight()) {
                return Err(Error::NotEvaluable {
                    partition: p.clone(),
                    truncation: table.truncation().unwrap_or(0),
                });
            }
        }
        total += &t.coeff * table.coeff(&t.left) * table.coeff(&t.right);
    }
    Ok(total)
}

pub fn verdict(r: &QuadRelation, table: &SchurSeries) -> Verdict {
    match evaluate(r, table) {
        Ok(v) if v.is_zero() => Verdict::Holds,
        Ok(v) => Verdict::Fails(v),
        Err(_) => Verdict::NotEvaluable,
    }
}
