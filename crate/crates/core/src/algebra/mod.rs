//! The graded algebra of symmetric functions over the rationals, in the
//! Schur and power-sum bases.

pub mod character;
pub mod series;

use num_traits::Zero;

use crate::partition::{
    add_horizontal_strip, add_vertical_strip, partitions_of, remove_horizontal_strip,
    remove_vertical_strip, Partition,
};
use crate::Rational;

pub use character::{character, z_of};
pub use series::{Basis, PSeries, Power, Schur, SchurSeries, Series};

/// `s_λ = Σ_μ χ^λ_μ / z_μ · p_μ`.
pub fn schur_to_p(lambda: &Partition) -> PSeries {
    partitions_of(lambda.weight())
        .into_iter()
        .map(|mu| {
            let chi = character::character_unchecked(lambda, &mu);
            let c = Rational::new(chi.into(), z_of(&mu));
            (mu, c)
        })
        .collect()
}

/// Rewrites a power-sum series in the Schur basis using
/// `p_μ = Σ_ν χ^ν_μ s_ν` termwise.
pub fn p_to_schur(f: &PSeries) -> SchurSeries {
    f.map_linear(|mu| {
        partitions_of(mu.weight())
            .into_iter()
            .map(|nu| {
                let chi = character::character_unchecked(&nu, mu);
                (nu, Rational::from_integer(chi.into()))
            })
            .collect()
    })
}

/// Converts a Schur series to power sums termwise.
pub fn schur_series_to_p(f: &SchurSeries) -> PSeries {
    f.map_linear(schur_to_p)
}

/// `h_n = s_(n)`.
pub fn h_as_schur(n: usize) -> SchurSeries {
    SchurSeries::basis(Partition::row(n))
}

/// `e_n = s_(1^n)`.
pub fn e_as_schur(n: usize) -> SchurSeries {
    SchurSeries::basis(Partition::column(n))
}

/// The involution `s_λ ↦ s_λ'`.
pub fn omega(f: &SchurSeries) -> SchurSeries {
    f.map_linear(|l| SchurSeries::basis(l.conjugate()))
}

fn unit_sum(parts: Vec<Partition>) -> SchurSeries {
    parts
        .into_iter()
        .map(|p| (p, Rational::from_integer(1.into())))
        .collect()
}

/// `h_n s_λ`: sum over horizontal `n`-strips added to `λ`.
pub fn pieri_h(n: usize, lambda: &Partition) -> SchurSeries {
    unit_sum(add_horizontal_strip(lambda, n))
}

/// `e_n s_λ`: sum over vertical `n`-strips added to `λ`.
pub fn pieri_e(n: usize, lambda: &Partition) -> SchurSeries {
    unit_sum(add_vertical_strip(lambda, n))
}

/// `h_n^⊥ s_λ`: sum over horizontal `n`-strips removed from `λ`.
pub fn hperp(n: usize, lambda: &Partition) -> SchurSeries {
    unit_sum(remove_horizontal_strip(lambda, n))
}

/// `e_n^⊥ s_λ`: sum over vertical `n`-strips removed from `λ`.
pub fn eperp(n: usize, lambda: &Partition) -> SchurSeries {
    unit_sum(remove_vertical_strip(lambda, n))
}

/// Multiplication by `h_n` extended linearly; respects `f`'s truncation.
pub fn mul_h(n: usize, f: &SchurSeries) -> SchurSeries {
    f.map_linear(|l| pieri_h(n, l))
}

/// `e_n^⊥` extended linearly.
pub fn eperp_series(n: usize, f: &SchurSeries) -> SchurSeries {
    f.map_linear(|l| eperp(n, l))
}

/// The Hall inner product, in which the Schur functions are orthonormal.
pub fn inner_product(f: &SchurSeries, g: &SchurSeries) -> Rational {
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    small
        .iter()
        .filter_map(|(l, c)| large.get(l).map(|d| c * d))
        .fold(Rational::zero(), |acc, x| acc + x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{part, rat};
    use num_traits::One;

    #[test]
    fn small_schur_expansions() {
        let s2 = schur_to_p(&part![2]);
        assert_eq!(
            s2,
            PSeries::from_terms(None, [(part![1, 1], rat(1, 2)), (part![2], rat(1, 2))])
        );
        let s11 = schur_to_p(&part![1, 1]);
        assert_eq!(
            s11,
            PSeries::from_terms(None, [(part![1, 1], rat(1, 2)), (part![2], rat(-1, 2))])
        );
        let s21 = schur_to_p(&part![2, 1]);
        assert_eq!(
            s21,
            PSeries::from_terms(None, [(part![1, 1, 1], rat(1, 3)), (part![3], rat(-1, 3))])
        );
        let s22 = schur_to_p(&part![2, 2]);
        assert_eq!(
            s22,
            PSeries::from_terms(
                None,
                [
                    (part![1, 1, 1, 1], rat(1, 12)),
                    (part![3, 1], rat(-1, 3)),
                    (part![2, 2], rat(1, 4))
                ]
            )
        );
    }

    #[test]
    fn h_and_e() {
        assert_eq!(h_as_schur(0), SchurSeries::one());
        assert_eq!(e_as_schur(0), SchurSeries::one());
        assert_eq!(e_as_schur(3), SchurSeries::basis(part![1, 1, 1]));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(
            omega(&SchurSeries::basis(part![3])),
            SchurSeries::basis(part![1, 1, 1])
        );
        assert_eq!(
            omega(&SchurSeries::basis(part![2, 1])),
            SchurSeries::basis(part![2, 1])
        );
    }

    #[test]
    fn pieri_examples() {
        let expect: SchurSeries = [(part![3], Rational::one()), (part![2, 1], Rational::one())]
            .into_iter()
            .collect();
        assert_eq!(pieri_h(2, &part![1]), expect);
        let expect: SchurSeries = [(part![2], Rational::one()), (part![1, 1], Rational::one())]
            .into_iter()
            .collect();
        assert_eq!(eperp(1, &part![2, 1]), expect);
        assert!(hperp(4, &part![2, 1]).is_zero());
    }

    #[test]
    fn inner_products() {
        assert_eq!(
            inner_product(&SchurSeries::basis(part![2]), &SchurSeries::basis(part![2])),
            rat(1, 1)
        );
        assert_eq!(
            inner_product(
                &SchurSeries::basis(part![2]),
                &SchurSeries::basis(part![1, 1])
            ),
            rat(0, 1)
        );
        let p2 = p_to_schur(&PSeries::power_sum(2));
        assert_eq!(inner_product(&p2, &p2), rat(2, 1));
        assert_eq!(inner_product(&p2, &SchurSeries::zero(None)), rat(0, 1));
    }

    #[test]
    fn truncation_is_respected_by_mul_h() {
        let f = SchurSeries::from_terms(Some(3), [(part![2], rat(1, 1))]);
        let g = mul_h(2, &f);
        assert!(g.is_zero());
        assert_eq!(g.truncation(), Some(3));
    }
}
