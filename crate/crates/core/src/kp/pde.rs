//! Differential forms of the Plücker relations: with `τ = Σ a_λ s_λ`,
//! `a_λ = S_λ(∂) τ |_{p=0}` where `S_λ(∂) = Σ_μ χ^λ_μ / z_μ · Π μ_r · ∂_μ`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_traits::{One, Zero};

use crate::algebra::{schur_to_p, PSeries};
use crate::partition::Partition;
use crate::plucker::{normalize, relation_set, symmetric_relation_auto, QuadRelation};
use crate::render::write_signed_coeff;
use crate::Rational;

/// A mixed partial `∂_{i_1} ⋯ ∂_{i_r}`, indices kept ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Derivative(Vec<usize>);

impl Derivative {
    pub fn new(mut indices: Vec<usize>) -> Self {
        assert!(
            indices.iter().all(|&i| i >= 1),
            "derivative indices start at 1"
        );
        indices.sort_unstable();
        Derivative(indices)
    }

    pub fn identity() -> Self {
        Derivative(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `∂_i ∘ self`.
    pub fn with(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.push(i);
        Derivative::new(v)
    }

    /// Applies the derivative to `f`; `None` once the truncation runs out.
    pub fn apply(&self, f: &PSeries) -> Option<PSeries> {
        self.0
            .iter()
            .try_fold(f.clone(), |g, &i| g.differentiate(i))
    }

    fn write_subscript(&self, f: &mut impl fmt::Write, symbol: &str) -> fmt::Result {
        f.write_str(symbol)?;
        if self.0.is_empty() {
            return Ok(());
        }
        if self.0.iter().all(|&i| i < 10) {
            f.write_char('_')?;
            for i in &self.0 {
                write!(f, "{i}")?;
            }
            Ok(())
        } else {
            let joined: Vec<String> = self.0.iter().map(usize::to_string).collect();
            write!(f, "_{{{}}}", joined.join(","))
        }
    }
}

/// A linear constant-coefficient differential operator.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DerivOp {
    terms: BTreeMap<Derivative, Rational>,
}

impl DerivOp {
    pub fn add_term(&mut self, d: Derivative, c: Rational) {
        let slot = self.terms.entry(d.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn coeff(&self, d: &Derivative) -> Rational {
        self.terms.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Derivative, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn apply(&self, f: &PSeries) -> Option<PSeries> {
        let mut out: Option<PSeries> = None;
        for (d, c) in &self.terms {
            let g = d.apply(f)?.scale(c);
            out = Some(match out {
                None => g,
                Some(acc) => acc + g,
            });
        }
        Some(out.unwrap_or_else(|| PSeries::zero(f.truncation())))
    }

    fn scale(&self, c: &Rational) -> DerivOp {
        DerivOp {
            terms: self.terms.iter().map(|(d, x)| (d.clone(), x * c)).collect(),
        }
    }

    fn write_sum(&self, f: &mut impl fmt::Write, symbol: &str) -> fmt::Result {
        for (k, (d, c)) in self.terms.iter().enumerate() {
            write_signed_coeff(f, c, k == 0)?;
            d.write_subscript(f, symbol)?;
        }
        Ok(())
    }
}

/// `S_λ(∂)`: the operator sending `τ` to the function whose constant term is `a_λ`.
pub fn schur_perp_operator(lambda: &Partition) -> DerivOp {
    let mut op = DerivOp::default();
    for (mu, c) in schur_to_p(lambda).iter() {
        let prod: usize = mu.parts().iter().product();
        op.add_term(
            Derivative::new(mu.parts().to_vec()),
            c * Rational::from_integer(prod.into()),
        );
    }
    op
}

/// What the factors of a [`Monomial`] differentiate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// `τ` itself; rendered `t`.
    Tau,
    /// `F = log τ`; rendered `F`.
    LogTau,
}

impl Target {
    pub fn symbol(self) -> &'static str {
        match self {
            Target::Tau => "t",
            Target::LogTau => "F",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Target::Tau => "tau",
            Target::LogTau => "log_tau",
        }
    }
}

/// A product of derivatives, factors ascending. Monomials order by factor
/// count first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<Derivative>);

impl Monomial {
    pub fn new(mut factors: Vec<Derivative>) -> Self {
        factors.sort();
        Monomial(factors)
    }

    pub fn factors(&self) -> &[Derivative] {
        &self.0
    }

    fn times(&self, d: Derivative) -> Self {
        let mut v = self.0.clone();
        v.push(d);
        Monomial::new(v)
    }

    fn write(&self, f: &mut impl fmt::Write, symbol: &str) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut k = 0;
        let mut first = true;
        while k < self.0.len() {
            let run = self.0[k..].iter().take_while(|d| **d == self.0[k]).count();
            if !first {
                f.write_char('*')?;
            }
            self.0[k].write_subscript(f, symbol)?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            first = false;
            k += run;
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in derivatives of `τ` or of `log τ`, read as `expr = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffExpr {
    target: Target,
    terms: BTreeMap<Monomial, Rational>,
}

impl DiffExpr {
    pub fn zero(target: Target) -> Self {
        DiffExpr {
            target,
            terms: BTreeMap::new(),
        }
    }

    pub fn target(&self) -> Target {
        self.target
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> DiffExpr {
        let mut out = DiffExpr::zero(self.target);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    /// Rescales so the first term has coefficient `lead`.
    pub fn with_leading(&self, lead: &Rational) -> DiffExpr {
        match self.terms.values().next() {
            None => self.clone(),
            Some(c) => self.scale(&(lead / c)),
        }
    }

    /// Evaluates a `τ`-expression on a power-sum series; `None` when some
    /// factor needs more of `τ` than its truncation provides.
    pub fn apply(&self, tau: &PSeries) -> Option<PSeries> {
        assert_eq!(
            self.target,
            Target::Tau,
            "only τ-expressions can be applied"
        );
        let mut cache: BTreeMap<&Derivative, PSeries> = BTreeMap::new();
        let mut out: Option<PSeries> = None;
        for (m, c) in &self.terms {
            let mut prod: Option<PSeries> = None;
            for d in m.factors() {
                if !cache.contains_key(d) {
                    cache.insert(d, d.apply(tau)?);
                }
                let g = &cache[d];
                prod = Some(match prod {
                    None => g.clone(),
                    Some(p) => &p * g,
                });
            }
            let term = prod.unwrap_or_else(PSeries::one).scale(c);
            out = Some(match out {
                None => term,
                Some(acc) => acc + term,
            });
        }
        Some(out.unwrap_or_else(|| PSeries::zero(tau.truncation())))
    }
}

impl fmt::Display for DiffExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0 = 0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let bare = m.factors().is_empty();
            if bare {
                if k > 0 {
                    f.write_str(if c < &Rational::zero() { " - " } else { " + " })?;
                } else if c < &Rational::zero() {
                    f.write_char('-')?;
                }
                write!(f, "{}", num_traits::Signed::abs(c))?;
            } else {
                write_signed_coeff(f, c, k == 0)?;
                m.write(f, self.target.symbol())?;
            }
        }
        f.write_str(" = 0")
    }
}

/// Expands `Σ c · a_left a_right` into `Σ c · S_left(∂)τ · S_right(∂)τ`.
pub fn relation_to_pde(r: &QuadRelation) -> DiffExpr {
    let mut out = DiffExpr::zero(Target::Tau);
    for t in &r.terms {
        let left = schur_perp_operator(&t.left);
        let right = schur_perp_operator(&t.right);
        for (dl, x) in left.iter() {
            for (dr, y) in right.iter() {
                out.add_term(
                    Monomial::new(vec![dl.clone(), dr.clone()]),
                    &t.coeff * x * y,
                );
            }
        }
    }
    out
}

/// The bilinear equation attached to the pair `(α, β)`, from its raw
/// (unnormalized) code-symmetric relation.
pub fn pde_for_pair(alpha: &Partition, beta: &Partition) -> DiffExpr {
    relation_to_pde(&symmetric_relation_auto(alpha, beta))
}

/// The relation with every factor `S_λ(∂)τ` kept intact and its leading
/// coefficient pulled in front of the product.
#[derive(Clone, Debug)]
pub struct FactoredPde {
    terms: Vec<(Rational, DerivOp, DerivOp)>,
}

impl FactoredPde {
    pub fn new(r: &QuadRelation) -> Self {
        let terms = normalize(r)
            .terms
            .iter()
            .map(|t| {
                let (lc, left) = monic(schur_perp_operator(&t.left));
                let (rc, right) = monic(schur_perp_operator(&t.right));
                (&t.coeff * lc * rc, left, right)
            })
            .collect();
        FactoredPde { terms }
    }

    /// Multiplies out the factors.
    pub fn expand(&self) -> DiffExpr {
        let mut out = DiffExpr::zero(Target::Tau);
        for (c, left, right) in &self.terms {
            for (dl, x) in left.iter() {
                for (dr, y) in right.iter() {
                    out.add_term(Monomial::new(vec![dl.clone(), dr.clone()]), c * x * y);
                }
            }
        }
        out
    }
}

fn monic(op: DerivOp) -> (Rational, DerivOp) {
    let lead = op
        .iter()
        .next()
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Rational::one);
    let scaled = op.scale(&(Rational::one() / &lead));
    (lead, scaled)
}

fn write_factor(f: &mut impl fmt::Write, op: &DerivOp) -> fmt::Result {
    let mut it = op.iter();
    if let (Some((d, c)), None) = (it.next(), it.next()) {
        if c.is_one() {
            return d.write_subscript(f, Target::Tau.symbol());
        }
    }
    f.write_char('(')?;
    op.write_sum(f, Target::Tau.symbol())?;
    f.write_char(')')
}

impl fmt::Display for FactoredPde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0 = 0");
        }
        for (k, (c, left, right)) in self.terms.iter().enumerate() {
            write_signed_coeff(f, c, k == 0)?;
            write_factor(f, left)?;
            f.write_char('*')?;
            write_factor(f, right)?;
        }
        f.write_str(" = 0")
    }
}

/// `P_A = e^{-F} ∂_A e^{F}` as a polynomial in derivatives of `F`.
fn log_derivative(d: &Derivative) -> BTreeMap<Monomial, Rational> {
    let mut poly = BTreeMap::from([(Monomial::default(), Rational::one())]);
    for &i in d.indices() {
        let mut next: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in &poly {
            for (k, factor) in m.factors().iter().enumerate() {
                let mut fs = m.factors().to_vec();
                fs[k] = factor.with(i);
                *next.entry(Monomial::new(fs)).or_insert_with(Rational::zero) += c;
            }
            *next
                .entry(m.times(Derivative::new(vec![i])))
                .or_insert_with(Rational::zero) += c;
        }
        next.retain(|_, c| !c.is_zero());
        poly = next;
    }
    poly
}

/// Divides a `τ`-expression, homogeneous of degree `k` in `τ`, by `τ^k` and
/// rewrites it in derivatives of `F = log τ`.
pub fn reduce_to_log(expr: &DiffExpr) -> DiffExpr {
    assert_eq!(expr.target, Target::Tau, "already in terms of log τ");
    let mut cache: BTreeMap<Derivative, BTreeMap<Monomial, Rational>> = BTreeMap::new();
    let mut out = DiffExpr::zero(Target::LogTau);
    for (m, c) in &expr.terms {
        let mut prod = BTreeMap::from([(Monomial::default(), c.clone())]);
        for d in m.factors() {
            let p = cache.entry(d.clone()).or_insert_with(|| log_derivative(d));
            let mut next: BTreeMap<Monomial, Rational> = BTreeMap::new();
            for (a, x) in &prod {
                for (b, y) in p.iter() {
                    let mut fs = a.factors().to_vec();
                    fs.extend_from_slice(b.factors());
                    *next.entry(Monomial::new(fs)).or_insert_with(Rational::zero) += x * y;
                }
            }
            prod = next;
        }
        for (m, x) in prod {
            out.add_term(m, x);
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct PdeEntry {
    pub relation: QuadRelation,
    pub expr: DiffExpr,
}

/// One equation per distinct relation of [`relation_set`]; `log` selects
/// the `F = log τ` form.
pub fn pde_system(max_weight: usize, log: bool) -> Vec<PdeEntry> {
    relation_set(max_weight)
        .into_iter()
        .map(|relation| {
            let tau = relation_to_pde(&relation);
            let expr = if log { reduce_to_log(&tau) } else { tau };
            PdeEntry { relation, expr }
        })
        .filter(|e| !e.expr.is_zero())
        .collect()
}
