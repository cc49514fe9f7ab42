//! Sparse, weight-truncated linear combinations indexed by partitions.

use std::collections::btree_map;
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::partition::Partition;
use crate::Rational;

/// Marker for the basis a [`Series`] is expanded in.
pub trait Basis: Copy + Default + fmt::Debug {
    /// Symbol used when rendering, e.g. `s` or `p`.
    const SYMBOL: &'static str;
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Schur;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Power;

impl Basis for Schur {
    const SYMBOL: &'static str = "s";
}

impl Basis for Power {
    const SYMBOL: &'static str = "p";
}

/// `Σ c_λ b_λ` with every stored `c_λ` nonzero and every `|λ|` within the
/// truncation weight (`None` means untruncated).
#[derive(Clone, Debug)]
pub struct Series<B: Basis> {
    terms: BTreeMap<Partition, Rational>,
    truncation: Option<usize>,
    _basis: PhantomData<B>,
}

pub type SchurSeries = Series<Schur>;
pub type PSeries = Series<Power>;

fn min_truncation(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl<B: Basis> Series<B> {
    pub fn zero(truncation: Option<usize>) -> Self {
        Series {
            terms: BTreeMap::new(),
            truncation,
            _basis: PhantomData,
        }
    }

    /// The untruncated basis element `b_λ`.
    pub fn basis(lambda: Partition) -> Self {
        let mut s = Self::zero(None);
        s.add_term(lambda, Rational::one());
        s
    }

    /// The constant series `1`.
    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn from_terms<I>(truncation: Option<usize>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut s = Self::zero(truncation);
        for (p, c) in terms {
            s.add_term(p, c);
        }
        s
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    /// Whether coefficients of weight `w` are known.
    pub fn covers(&self, weight: usize) -> bool {
        self.truncation.is_none_or(|t| weight <= t)
    }

    /// Lowers the truncation weight, dropping terms that no longer fit.
    pub fn truncate(mut self, max_weight: usize) -> Self {
        let t = min_truncation(self.truncation, Some(max_weight));
        self.truncation = t;
        self.terms.retain(|p, _| p.weight() <= max_weight);
        self
    }

    /// Adds `c · b_λ`; terms beyond the truncation weight are dropped.
    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() || !self.covers(lambda.weight()) {
            return;
        }
        match self.terms.entry(lambda) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn get(&self, lambda: &Partition) -> Option<&Rational> {
        self.terms.get(lambda)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest weight carrying a nonzero coefficient.
    pub fn max_weight(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.truncation);
        }
        Series {
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
            truncation: self.truncation,
            _basis: PhantomData,
        }
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<C, F>(&self, mut f: F) -> Series<C>
    where
        C: Basis,
        F: FnMut(&Partition) -> Series<C>,
    {
        let mut out = Series::zero(self.truncation);
        for (p, c) in &self.terms {
            let image = f(p);
            out.truncation = min_truncation(out.truncation, image.truncation);
            for (q, d) in image.terms {
                out.add_term(q, d * c);
            }
        }
        out
    }
}

impl<B: Basis> PartialEq for Series<B> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<B: Basis> Eq for Series<B> {}

impl<B: Basis> AddAssign<&Series<B>> for Series<B> {
    fn add_assign(&mut self, rhs: &Series<B>) {
        self.truncation = min_truncation(self.truncation, rhs.truncation);
        if let Some(t) = self.truncation {
            self.terms.retain(|p, _| p.weight() <= t);
        }
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), c.clone());
        }
    }
}

impl<B: Basis> Add<&Series<B>> for &Series<B> {
    type Output = Series<B>;
    fn add(self, rhs: &Series<B>) -> Series<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Basis> Add for Series<B> {
    type Output = Series<B>;
    fn add(mut self, rhs: Series<B>) -> Series<B> {
        self += &rhs;
        self
    }
}

impl<B: Basis> Neg for &Series<B> {
    type Output = Series<B>;
    fn neg(self) -> Series<B> {
        Series {
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
            truncation: self.truncation,
            _basis: PhantomData,
        }
    }
}

impl<B: Basis> Neg for Series<B> {
    type Output = Series<B>;
    fn neg(self) -> Series<B> {
        -&self
    }
}

impl<B: Basis> Sub<&Series<B>> for &Series<B> {
    type Output = Series<B>;
    fn sub(self, rhs: &Series<B>) -> Series<B> {
        self + &(-rhs)
    }
}

impl<B: Basis> Sub for Series<B> {
    type Output = Series<B>;
    fn sub(self, rhs: Series<B>) -> Series<B> {
        &self - &rhs
    }
}

impl<B: Basis> FromIterator<(Partition, Rational)> for Series<B> {
    fn from_iter<I: IntoIterator<Item = (Partition, Rational)>>(iter: I) -> Self {
        Series::from_terms(None, iter)
    }
}

impl<'a, B: Basis> IntoIterator for &'a Series<B> {
    type Item = (&'a Partition, &'a Rational);
    type IntoIter = btree_map::Iter<'a, Partition, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// Multiplication of power-sum monomials: `p_μ p_ν = p_{μ ∪ ν}`.
impl Mul<&PSeries> for &PSeries {
    type Output = PSeries;
    fn mul(self, rhs: &PSeries) -> PSeries {
        let t = min_truncation(self.truncation, rhs.truncation);
        let mut out = PSeries::zero(t);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                if !out.covers(a.weight() + b.weight()) {
                    continue;
                }
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                out.add_term(Partition::from_unsorted(parts), x * y);
            }
        }
        out
    }
}

impl PSeries {
    /// `p_k` itself.
    pub fn power_sum(k: usize) -> Self {
        Self::basis(Partition::row(k))
    }

    /// `∂/∂p_k`. The truncation weight drops by `k`; `None` is returned when
    /// nothing of the result would be known.
    pub fn differentiate(&self, k: usize) -> Option<PSeries> {
        assert!(k >= 1);
        let truncation = match self.truncation {
            Some(t) => Some(t.checked_sub(k)?),
            None => None,
        };
        let mut out = PSeries::zero(truncation);
        for (mu, c) in &self.terms {
            let mult = mu.parts().iter().filter(|&&p| p == k).count();
            if mult == 0 {
                continue;
            }
            let mut parts = mu.parts().to_vec();
            let pos = parts.iter().position(|&p| p == k).unwrap();
            parts.remove(pos);
            out.add_term(
                Partition::from_unsorted(parts),
                c * Rational::from_integer(mult.into()),
            );
        }
        Some(out)
    }

    /// Constant term (the coefficient of `p_ε`).
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Partition::empty())
    }
}

/// Renders as `c*s[2,1] + ...`, `0` when empty.
impl<B: Basis> fmt::Display for Series<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            crate::render::write_signed_coeff(f, c, k == 0)?;
            write!(f, "{}[{}]", B::SYMBOL, p)?;
        }
        Ok(())
    }
}
