//! The Bernstein vertex operator
//! `B(t) = Σ_n B_n t^n = exp(Σ_k p_k t^k / k) · exp(-Σ_k t^{-k} ∂/∂p_k)`
//! acting on Schur functions, and its adjoint.
//!
//! `B(t) s_λ` is computed three independent ways:
//!
//! * [`bernstein_closed`]: one signed term `±t^{|λ^(i)|-|λ|} s_{λ^(i)}` per
//!   code switch `i ≥ 1`, with sign `(-1)^{u_i(λ)}`;
//! * [`bernstein_definitional`]: the double sum `Σ (-1)^m t^{k-m} h_k e_m^⊥`
//!   evaluated with the Pieri rules;
//! * [`bernstein_survivor`]: the signed count `R_{λ,μ}` of intermediate
//!   shapes `ν`, for every candidate `μ`.
//!
//! Output is a [`LaurentSchur`] truncated at a maximum output weight `W`: it
//! holds exactly the terms `t^e s_μ` with `|μ| <= W`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{eperp, omega, pieri_h, SchurSeries};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::{sign, Rational};

/// A finite Laurent polynomial in `t` with Schur-series coefficients.
#[derive(Clone, Debug)]
pub struct LaurentSchur {
    terms: BTreeMap<i64, SchurSeries>,
    max_weight: usize,
}

impl LaurentSchur {
    pub fn zero(max_weight: usize) -> Self {
        LaurentSchur {
            terms: BTreeMap::new(),
            max_weight,
        }
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    /// Adds `c t^exp s_λ`, ignoring terms beyond the truncation weight.
    pub fn add_term(&mut self, exp: i64, lambda: Partition, c: Rational) {
        if lambda.weight() > self.max_weight || c.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(exp)
            .or_insert_with(|| SchurSeries::zero(Some(self.max_weight)));
        slot.add_term(lambda, c);
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// The coefficient of `t^n`; zero if absent.
    pub fn slice(&self, n: i64) -> SchurSeries {
        self.terms
            .get(&n)
            .cloned()
            .unwrap_or_else(|| SchurSeries::zero(Some(self.max_weight)))
    }

    pub fn coeff(&self, exp: i64, lambda: &Partition) -> Rational {
        self.terms
            .get(&exp)
            .map_or_else(Rational::zero, |s| s.coeff(lambda))
    }

    /// Nonzero `(exponent, series)` pairs in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &SchurSeries)> {
        self.terms.iter().map(|(e, s)| (*e, s))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies `ω` to every coefficient.
    pub fn omega(&self) -> Self {
        LaurentSchur {
            terms: self.terms.iter().map(|(e, s)| (*e, omega(s))).collect(),
            max_weight: self.max_weight,
        }
    }

    /// Substitutes `t ↦ -t`.
    pub fn negate_t(&self) -> Self {
        LaurentSchur {
            terms: self
                .terms
                .iter()
                .map(|(e, s)| (*e, if e.rem_euclid(2) == 1 { -s } else { s.clone() }))
                .collect(),
            max_weight: self.max_weight,
        }
    }

    pub(crate) fn add_assign_scaled(&mut self, other: &LaurentSchur, c: &Rational) {
        for (e, s) in &other.terms {
            for (l, v) in s {
                self.add_term(*e, l.clone(), v * c);
            }
        }
    }
}

impl PartialEq for LaurentSchur {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for LaurentSchur {}

/// One line per exponent: `t^e: <series>`.
impl fmt::Display for LaurentSchur {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (e, s) in &self.terms {
            writeln!(f, "t^{e}: {s}")?;
        }
        Ok(())
    }
}

fn signed_weight_diff(a: &Partition, b: &Partition) -> i64 {
    a.weight() as i64 - b.weight() as i64
}

fn parity_sign(k: i64) -> Rational {
    sign(k.rem_euclid(2) as usize)
}

/// `B(t) s_λ` from the code-switch formula.
pub fn bernstein_closed(lambda: &Partition, max_weight: usize) -> LaurentSchur {
    let mut out = LaurentSchur::zero(max_weight);
    let bound = lambda.first() + (max_weight + 1).saturating_sub(lambda.weight());
    for i in 1..=bound {
        let mu = lambda.switch_up(i);
        if mu.weight() > max_weight {
            // |λ^(i)| is strictly increasing in i.
            break;
        }
        let exp = signed_weight_diff(&mu, lambda);
        out.add_term(exp, mu, sign(lambda.u_steps(i)));
    }
    out
}

/// `B(t) s_λ = Σ_{k,m >= 0} (-1)^m t^{k-m} h_k e_m^⊥ s_λ`.
pub fn bernstein_definitional(lambda: &Partition, max_weight: usize) -> LaurentSchur {
    let mut out = LaurentSchur::zero(max_weight);
    for m in 0..=lambda.length() {
        let sgn = sign(m);
        for (nu, c) in &eperp(m, lambda) {
            let Some(room) = max_weight.checked_sub(nu.weight()) else {
                continue;
            };
            for k in 0..=room {
                let exp = k as i64 - m as i64;
                for (mu, d) in &pieri_h(k, nu) {
                    out.add_term(exp, mu.clone(), &sgn * c * d);
                }
            }
        }
    }
    out
}

/// `R_{λ,μ} = Σ_ν (-1)^{|λ|-|ν|}` over all `ν` with `λ - ν` a vertical strip
/// and `μ - ν` a horizontal strip, by direct enumeration.
pub fn survivor_sum(lambda: &Partition, mu: &Partition) -> i64 {
    let rows = lambda.length();
    if mu.length() > rows + 1 {
        return 0;
    }
    // Row k of ν: vertical strip gives λ_k - 1 <= ν_k <= λ_k, horizontal
    // strip gives μ_{k+1} <= ν_k <= μ_k.
    let ranges: Vec<(usize, usize)> = (1..=rows)
        .map(|k| {
            let lo = (lambda.part(k) - 1).max(mu.part(k + 1));
            let hi = lambda.part(k).min(mu.part(k));
            (lo, hi)
        })
        .collect();

    fn walk(
        k: usize,
        ranges: &[(usize, usize)],
        prev: usize,
        nu_weight: usize,
        lambda_weight: usize,
        acc: &mut i64,
    ) {
        if k == ranges.len() {
            *acc += if (lambda_weight - nu_weight).is_multiple_of(2) {
                1
            } else {
                -1
            };
            return;
        }
        let (lo, hi) = ranges[k];
        for v in lo..=hi.min(prev) {
            walk(k + 1, ranges, v, nu_weight + v, lambda_weight, acc);
        }
    }

    let mut acc = 0;
    walk(0, &ranges, usize::MAX, 0, lambda.weight(), &mut acc);
    acc
}

/// `B(t) s_λ = Σ_μ R_{λ,μ} t^{|μ|-|λ|} s_μ`, scanning every `μ` up to the
/// truncation weight.
pub fn bernstein_survivor(lambda: &Partition, max_weight: usize) -> LaurentSchur {
    let mut out = LaurentSchur::zero(max_weight);
    for mu in enumerate_partitions(max_weight) {
        let r = survivor_sum(lambda, &mu);
        if r != 0 {
            let exp = signed_weight_diff(&mu, lambda);
            out.add_term(exp, mu, Rational::from_integer(r.into()));
        }
    }
    out
}

/// Which of the three routes computes `B(t) s_λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Closed,
    Definitional,
    Survivor,
}

pub fn bernstein(lambda: &Partition, max_weight: usize, method: Method) -> LaurentSchur {
    match method {
        Method::Closed => bernstein_closed(lambda, max_weight),
        Method::Definitional => bernstein_definitional(lambda, max_weight),
        Method::Survivor => bernstein_survivor(lambda, max_weight),
    }
}

/// Largest weight at which `a` has a nonzero coefficient.
fn support_bound(a: &SchurSeries) -> usize {
    a.max_weight().unwrap_or(0)
}

/// `B(t) Σ_λ a_λ s_λ`, organized by output shape: the coefficient of `s_β` is
/// `Σ_{k>=1} (-1)^{k-1} t^{|β|-|β^(-k)|} a_{β^(-k)}`.
///
/// The stored terms of `a` are taken to be all of it.
pub fn bernstein_on_table(a: &SchurSeries, max_weight: usize) -> LaurentSchur {
    let mut out = LaurentSchur::zero(max_weight);
    if a.is_zero() {
        return out;
    }
    let bound = support_bound(a);
    for beta in enumerate_partitions(max_weight) {
        let mut k = 1;
        loop {
            let src = beta.switch_down(k);
            if k > beta.length() && src.weight() > bound {
                break;
            }
            if let Some(c) = a.get(&src) {
                let exp = signed_weight_diff(&beta, &src);
                out.add_term(exp, beta.clone(), sign(k - 1) * c);
            }
            k += 1;
        }
    }
    out
}

/// `B^⊥(t^{-1}) Σ_λ a_λ s_λ`, organized by output shape: the coefficient of
/// `s_α` is `Σ_{m>=1} (-1)^{|α|-|α^(m)|+m-1} t^{|α|-|α^(m)|} a_{α^(m)}`.
pub fn bernstein_perp_on_table(a: &SchurSeries, max_weight: usize) -> LaurentSchur {
    let mut out = LaurentSchur::zero(max_weight);
    if a.is_zero() {
        return out;
    }
    let bound = support_bound(a);
    for alpha in enumerate_partitions(max_weight) {
        let mut m = 1;
        loop {
            let src = alpha.switch_up(m);
            if m > alpha.first() && src.weight() > bound {
                break;
            }
            if let Some(c) = a.get(&src) {
                let exp = signed_weight_diff(&alpha, &src);
                out.add_term(exp, alpha.clone(), parity_sign(exp + m as i64 - 1) * c);
            }
            m += 1;
        }
    }
    out
}

/// `B^⊥(t^{-1}) s_λ` by conjugation: `ω B(-t) ω s_λ`.
pub fn bernstein_perp_by_conjugation(lambda: &Partition, max_weight: usize) -> LaurentSchur {
    bernstein_closed(&lambda.conjugate(), max_weight)
        .negate_t()
        .omega()
}

/// `B_n s_λ` as `(sign, shape)`, or `None` when it vanishes.
pub fn bernstein_component(lambda: &Partition, n: i64) -> Option<(Rational, Partition)> {
    // |λ^(i)| is strictly increasing, so at most one i has |λ^(i)| - |λ| = n;
    // past the first part it is i = n + 1.
    let candidates =
        (1..=lambda.first()).chain((n >= lambda.first() as i64).then_some((n + 1) as usize));
    for i in candidates {
        if i == 0 {
            continue;
        }
        let mu = lambda.switch_up(i);
        if signed_weight_diff(&mu, lambda) == n {
            return Some((sign(lambda.u_steps(i)), mu));
        }
    }
    None
}

/// Applies `B_n` to `f`. An output term heavier than `max_weight` is an
/// error rather than being dropped.
pub fn apply_component(n: i64, f: &SchurSeries, max_weight: usize) -> Result<SchurSeries> {
    let mut out = SchurSeries::zero(Some(max_weight));
    for (lambda, c) in f {
        if let Some((sgn, mu)) = bernstein_component(lambda, n) {
            if mu.weight() > max_weight {
                return Err(Error::TruncationOverflow {
                    weight: mu.weight(),
                    max_weight,
                });
            }
            out.add_term(mu, sgn * c);
        }
    }
    Ok(out)
}

/// `B_{i_1} B_{i_2} ··· B_{i_n} 1`, applied right to left.
pub fn bernstein_compose(indices: &[i64], max_weight: usize) -> Result<SchurSeries> {
    apply_word(indices, &SchurSeries::one(), max_weight)
}

/// `B_{i_1} ··· B_{i_n} f`, applied right to left.
pub fn apply_word(indices: &[i64], f: &SchurSeries, max_weight: usize) -> Result<SchurSeries> {
    let mut acc = f.clone();
    for &n in indices.iter().rev() {
        acc = apply_component(n, &acc, max_weight)?;
    }
    Ok(acc)
}

/// Applies [`bernstein_closed`] to each term of `a` and sums.
pub fn bernstein_termwise(a: &SchurSeries, max_weight: usize) -> LaurentSchur {
    let mut out = LaurentSchur::zero(max_weight);
    for (lambda, c) in a {
        out.add_assign_scaled(&bernstein_closed(lambda, max_weight), c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{part, rat};

    fn laurent(max_weight: usize, terms: &[(i64, Partition, i64)]) -> LaurentSchur {
        let mut out = LaurentSchur::zero(max_weight);
        for (e, p, c) in terms {
            out.add_term(*e, p.clone(), rat(*c, 1));
        }
        out
    }

    #[test]
    fn closed_form_on_empty_and_single_box() {
        let expect = laurent(
            3,
            &[
                (0, part![], 1),
                (1, part![1], 1),
                (2, part![2], 1),
                (3, part![3], 1),
            ],
        );
        assert_eq!(bernstein_closed(&part![], 3), expect);

        let expect = laurent(
            3,
            &[
                (-1, part![], -1),
                (1, part![1, 1], 1),
                (2, part![2, 1], 1),
                (3, part![3, 1], 1),
            ],
        );
        assert_eq!(bernstein_closed(&part![1], 3), expect);
        assert_eq!(bernstein_closed(&part![2, 2], 6).min_exponent(), Some(-2));
    }

    #[test]
    fn definitional_matches_closed_small() {
        for l in [part![], part![1], part![2, 1]] {
            assert_eq!(
                bernstein_definitional(&l, 6),
                bernstein_closed(&l, 6),
                "{l}"
            );
        }
    }

    #[test]
    fn lowest_coefficient_for_staircase() {
        let l = part![3, 2, 1];
        let b = bernstein_definitional(&l, 8);
        assert_eq!(b.min_exponent(), Some(-3));
        assert_eq!(
            b.slice(-3),
            SchurSeries::basis(l.switch_up(1))
                .scale(&rat(-1, 1))
                .truncate(8)
        );
    }

    #[test]
    fn survivor_values() {
        assert_eq!(survivor_sum(&part![1], &part![1]), 0);
        assert_eq!(survivor_sum(&part![1], &part![1, 1]), 1);
        assert_eq!(survivor_sum(&part![1], &part![]), -1);
    }

    #[test]
    fn table_forms() {
        let mut expect = LaurentSchur::zero(4);
        for m in 0..=4 {
            expect.add_term(m, Partition::row(m as usize), rat(1, 1));
        }
        assert_eq!(bernstein_on_table(&SchurSeries::one(), 4), expect);
        assert_eq!(
            bernstein_on_table(&SchurSeries::basis(part![1]), 5),
            bernstein_closed(&part![1], 5)
        );
        assert!(bernstein_on_table(&SchurSeries::zero(None), 5).is_zero());
        assert!(bernstein_perp_on_table(&SchurSeries::zero(None), 5).is_zero());

        // B^⊥(t^{-1}) 1 = Σ_j (-t)^j e_j
        let mut expect = LaurentSchur::zero(4);
        for j in 0..=4usize {
            expect.add_term(j as i64, Partition::column(j), sign(j));
        }
        assert_eq!(bernstein_perp_on_table(&SchurSeries::one(), 4), expect);
    }

    #[test]
    fn compose_builds_schur_functions() {
        assert_eq!(
            bernstein_compose(&[2, 1], 6).unwrap(),
            SchurSeries::basis(part![2, 1])
        );
        assert_eq!(
            bernstein_compose(&[3, 2, 2], 7).unwrap(),
            SchurSeries::basis(part![3, 2, 2])
        );
        assert!(matches!(
            bernstein_compose(&[3, 2, 2], 6),
            Err(Error::TruncationOverflow {
                weight: 7,
                max_weight: 6
            })
        ));
        // B_n for n below the lowest exponent is the zero operator.
        assert!(bernstein_compose(&[-1], 3).unwrap().is_zero());
    }
}
