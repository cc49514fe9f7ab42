//! Integer partitions, their U/R boundary codes, and the strip combinatorics
//! used by the Pieri rules.
//!
//! A partition is stored as its weakly decreasing sequence of positive parts.
//! The code of a partition is the boundary path of its diagram read from the
//! lower left: up-steps `U` and right-steps `R`, infinitely many `U` before the
//! window and infinitely many `R` after it. Only the finite window between
//! the first `R` and the last `U` is stored.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from weakly decreasing positive parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from a weakly decreasing sequence that may carry
    /// trailing zeros; the zeros are dropped.
    pub(crate) fn from_padded(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        debug_assert!(parts.iter().all(|&p| p > 0), "{parts:?}");
        Partition(parts)
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The partition `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Part `i` counting from 1; zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        Partition((1..=cols).map(|i| self.column_height(i)).collect())
    }

    /// Number of parts `>= i`, i.e. the height of column `i`.
    pub fn column_height(&self, i: usize) -> usize {
        self.0.partition_point(|&p| p >= i)
    }

    /// Multiplicities as `(part, count)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn code(&self) -> Code {
        let mut steps = Vec::with_capacity(self.first() + self.length());
        for k in (1..=self.length()).rev() {
            let run = self.part(k) - self.part(k + 1);
            steps.extend(std::iter::repeat_n(Step::R, run));
            steps.push(Step::U);
        }
        Code(steps)
    }

    /// `λ^(i)`: the partition whose code switches the `i`th `R` (from the
    /// left) to `U`.
    ///
    /// With `j` the number of parts `>= i`, this is
    /// `(λ₁-1, …, λ_j-1, i-1, λ_{j+1}, …)`.
    pub fn switch_up(&self, i: usize) -> Partition {
        assert!(i >= 1, "switch index starts at 1");
        let j = self.column_height(i);
        let mut parts = Vec::with_capacity(self.length() + 1);
        parts.extend(self.0[..j].iter().map(|p| p - 1));
        parts.push(i - 1);
        parts.extend_from_slice(&self.0[j..]);
        parts.retain(|&p| p > 0);
        Partition(parts)
    }

    /// `λ^(-i)`: the partition whose code switches the `i`th `U` (from the
    /// right) to `R`, i.e. `(λ₁+1, …, λ_{i-1}+1, λ_{i+1}, …)`.
    pub fn switch_down(&self, i: usize) -> Partition {
        assert!(i >= 1, "switch index starts at 1");
        let mut parts: Vec<usize> = (1..i).map(|k| self.part(k) + 1).collect();
        if i < self.length() {
            parts.extend_from_slice(&self.0[i..]);
        }
        Partition::from_padded(parts)
    }

    /// `u_i(λ)`: number of up-steps after the `i`th right-step of the code.
    pub fn u_steps(&self, i: usize) -> usize {
        assert!(i >= 1, "switch index starts at 1");
        self.column_height(i)
    }
}

/// Canonical order: by weight, then lexicographically with larger leading
/// parts first, so `(2) < (1,1)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated parts, with `-` for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        if s.is_empty() {
            return Err(Error::InvalidPartition(
                "empty text (use '-' for the empty partition)".into(),
            ));
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Shorthand for literal partitions in code and tests; panics on invalid input.
#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    R,
}

/// Canonical code window: starts with `R` and ends with `U`, empty for ε.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Code(Vec<Step>);

impl Code {
    /// Canonicalizes an arbitrary finite window by stripping the leading `U`
    /// and trailing `R` symbols that belong to the infinite ends.
    pub fn from_window(steps: Vec<Step>) -> Self {
        let start = steps
            .iter()
            .position(|&s| s == Step::R)
            .unwrap_or(steps.len());
        let end = steps
            .iter()
            .rposition(|&s| s == Step::U)
            .map_or(0, |e| e + 1);
        if start >= end {
            return Code(Vec::new());
        }
        Code(steps[start..end].to_vec())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn partition(&self) -> Partition {
        decode(&self.0)
    }

    /// Switches the `i`th `R` from the left to `U` on the two-way infinite
    /// word and returns the resulting partition.
    pub fn flip_right_step(&self, i: usize) -> Partition {
        assert!(i >= 1);
        let mut word = self.0.clone();
        word.extend(std::iter::repeat_n(Step::R, i));
        let pos = word
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Step::R)
            .nth(i - 1)
            .map(|(p, _)| p)
            .expect("padded word has at least i right-steps");
        word[pos] = Step::U;
        decode(&word)
    }

    /// Switches the `i`th `U` from the right to `R` on the two-way infinite
    /// word and returns the resulting partition.
    pub fn flip_up_step(&self, i: usize) -> Partition {
        assert!(i >= 1);
        let mut word = vec![Step::U; i];
        word.extend_from_slice(&self.0);
        let pos = word
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &s)| s == Step::U)
            .nth(i - 1)
            .map(|(p, _)| p)
            .expect("padded word has at least i up-steps");
        word[pos] = Step::R;
        decode(&word)
    }
}

fn decode(word: &[Step]) -> Partition {
    let mut rights = 0;
    let mut rows = Vec::new();
    for &s in word {
        match s {
            Step::R => rights += 1,
            Step::U => rows.push(rights),
        }
    }
    rows.reverse();
    Partition::from_padded(rows)
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Step::U => "U",
                Step::R => "R",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Code {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::U),
                'R' => Ok(Step::R),
                other => Err(Error::InvalidCode(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Code::from_window(steps))
    }
}

/// The skew diagram `outer - inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Precondition(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// At most one cell per column.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..=self.outer.length()).all(|k| self.outer.part(k + 1) <= self.inner.part(k))
    }

    /// At most one cell per row.
    pub fn is_vertical_strip(&self) -> bool {
        (1..=self.outer.length()).all(|k| self.outer.part(k) - self.inner.part(k) <= 1)
    }
}

/// All partitions of `n`, larger leading parts first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight at most `max_weight`, in canonical order.
pub fn enumerate_partitions(max_weight: usize) -> Vec<Partition> {
    (0..=max_weight).flat_map(partitions_of).collect()
}

/// Chooses `μ_k ∈ [lo_k, hi_k]` row by row with `μ` weakly decreasing and
/// `Σ μ_k = target`.
fn fill_rows(lo: &[usize], hi: &[usize], target: usize) -> Vec<Partition> {
    fn go(
        k: usize,
        lo: &[usize],
        hi: &[usize],
        rest: usize,
        suffix_min: &[usize],
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if k == lo.len() {
            if rest == 0 {
                out.push(Partition::from_padded(prefix.clone()));
            }
            return;
        }
        let cap = prefix.last().copied().unwrap_or(usize::MAX).min(hi[k]);
        if lo[k] > cap {
            return;
        }
        for v in lo[k]..=cap.min(rest) {
            if rest - v < suffix_min[k + 1] {
                break;
            }
            prefix.push(v);
            go(k + 1, lo, hi, rest - v, suffix_min, prefix, out);
            prefix.pop();
        }
    }
    let mut suffix_min = vec![0; lo.len() + 1];
    for k in (0..lo.len()).rev() {
        suffix_min[k] = suffix_min[k + 1] + lo[k];
    }
    if suffix_min[0] > target {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(0, lo, hi, target, &suffix_min, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All `μ ⊇ λ` with `μ - λ` a horizontal `n`-strip.
pub fn add_horizontal_strip(lambda: &Partition, n: usize) -> Vec<Partition> {
    let rows = lambda.length() + 1;
    let lo: Vec<usize> = (1..=rows).map(|k| lambda.part(k)).collect();
    let hi: Vec<usize> = (1..=rows).map(|k| lambda.part(k - 1)).collect();
    fill_rows(&lo, &hi, lambda.weight() + n)
}

/// All `μ ⊇ λ` with `μ - λ` a vertical `n`-strip.
pub fn add_vertical_strip(lambda: &Partition, n: usize) -> Vec<Partition> {
    let rows = lambda.length() + n;
    let lo: Vec<usize> = (1..=rows).map(|k| lambda.part(k)).collect();
    let hi: Vec<usize> = lo.iter().map(|p| p + 1).collect();
    fill_rows(&lo, &hi, lambda.weight() + n)
}

/// All `μ ⊆ λ` with `λ - μ` a horizontal `n`-strip.
pub fn remove_horizontal_strip(lambda: &Partition, n: usize) -> Vec<Partition> {
    let Some(target) = lambda.weight().checked_sub(n) else {
        return Vec::new();
    };
    let rows = lambda.length();
    let lo: Vec<usize> = (1..=rows).map(|k| lambda.part(k + 1)).collect();
    let hi: Vec<usize> = (1..=rows).map(|k| lambda.part(k)).collect();
    fill_rows(&lo, &hi, target)
}

/// All `μ ⊆ λ` with `λ - μ` a vertical `n`-strip.
pub fn remove_vertical_strip(lambda: &Partition, n: usize) -> Vec<Partition> {
    let Some(target) = lambda.weight().checked_sub(n) else {
        return Vec::new();
    };
    let rows = lambda.length();
    let lo: Vec<usize> = (1..=rows).map(|k| lambda.part(k) - 1).collect();
    let hi: Vec<usize> = (1..=rows).map(|k| lambda.part(k)).collect();
    fill_rows(&lo, &hi, target)
}
