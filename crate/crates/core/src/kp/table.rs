use num_traits::{One, Zero};

use crate::algebra::SchurSeries;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::Rational;

/// The Schur coefficients `a_λ` of a candidate τ-function, known for every
/// `|λ|` up to the truncation weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    series: SchurSeries,
    truncation: usize,
}

impl CoeffTable {
    pub fn new(truncation: usize) -> Self {
        CoeffTable {
            series: SchurSeries::zero(Some(truncation)),
            truncation,
        }
    }

    /// Wraps a series; terms heavier than `truncation` are dropped.
    pub fn from_series(series: SchurSeries, truncation: usize) -> Self {
        CoeffTable {
            series: series.truncate(truncation),
            truncation,
        }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn series(&self) -> &SchurSeries {
        &self.series
    }

    pub fn get(&self, lambda: &Partition) -> Rational {
        self.series.coeff(lambda)
    }

    /// Adds `c` to `a_λ`.
    pub fn bump(&mut self, lambda: Partition, c: Rational) -> Result<()> {
        if lambda.weight() > self.truncation {
            return Err(Error::NotEvaluable {
                partition: lambda,
                truncation: self.truncation,
            });
        }
        self.series.add_term(lambda, c);
        Ok(())
    }
}

/// A dense matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("rows have different lengths".into()));
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Determinant of the square submatrix on the given (0-based) columns.
    pub fn minor(&self, columns: &[usize]) -> Rational {
        let k = columns.len();
        assert_eq!(k, self.rows, "minor needs one column per row");
        let mut m: Vec<Vec<Rational>> = (0..k)
            .map(|r| columns.iter().map(|&c| self.get(r, c).clone()).collect())
            .collect();
        determinant(&mut m)
    }
}

/// Gaussian elimination over the rationals; destroys its input.
fn determinant(m: &mut [Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            let (upper, lower) = m.split_at_mut(r);
            for (x, y) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *x -= &factor * y;
            }
        }
    }
    det
}

/// 1-based columns `{λ_{k+1-r} + r : r = 1..k}` selected by `λ`, increasing.
pub fn grassmannian_columns(lambda: &Partition, k: usize) -> Vec<usize> {
    (1..=k).map(|r| lambda.part(k + 1 - r) + r).collect()
}

/// Plücker coordinates of the row space of a `k × n` matrix: `a_λ` is the
/// minor on [`grassmannian_columns`] for `l(λ) <= k`, `λ_1 <= n - k`, and
/// zero otherwise.
pub fn grassmannian_table(m: &Matrix, truncation: usize) -> Result<CoeffTable> {
    let (k, n) = (m.rows(), m.cols());
    if k > n {
        return Err(Error::Shape(format!(
            "{k}×{n} matrix has more rows than columns"
        )));
    }
    let mut table = CoeffTable::new(truncation);
    for lambda in enumerate_partitions(truncation) {
        if lambda.length() > k || lambda.first() > n - k {
            continue;
        }
        let cols: Vec<usize> = grassmannian_columns(&lambda, k)
            .into_iter()
            .map(|c| c - 1)
            .collect();
        let value = m.minor(&cols);
        table.bump(lambda, value)?;
    }
    Ok(table)
}
