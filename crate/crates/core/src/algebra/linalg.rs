//! Exact rank and span membership over the rationals.
//!
//! Elimination is fraction-free (Bareiss): every row is first scaled to
//! integers, and all intermediate entries stay integral minors of the input.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::AlgebraError;

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<BigRational>]) -> Result<Self, AlgebraError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(AlgebraError::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            entries.extend(r.iter().cloned());
        }
        Ok(ExactMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn from_integer_rows(rows: &[Vec<BigInt>]) -> Result<Self, AlgebraError> {
        let rows: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.entries[r * self.cols + c] = v;
    }

    fn row(&self, r: usize) -> &[BigRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Each row multiplied by the lcm of its denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut a = self.integer_rows();
        bareiss_echelon(&mut a, self.cols).len()
    }
}

/// Convenience wrapper over [`ExactMatrix::rank`].
pub fn exact_rank(m: &ExactMatrix) -> usize {
    m.rank()
}

/// Rank of a list of integer vectors.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> Result<usize, AlgebraError> {
    let cols = rows.first().map_or(0, Vec::len);
    check_dims(rows, cols)?;
    let mut a = rows.to_vec();
    Ok(bareiss_echelon(&mut a, cols).len())
}

/// Brings `a` into row echelon form in place and returns the pivot columns.
/// Rows past the returned length are zero.
fn bareiss_echelon(a: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let m = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, below) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[col];
        for row in below.iter_mut() {
            let lead = std::mem::take(&mut row[col]);
            for j in col + 1..cols {
                let v = pivot * &row[j] - &lead * &pivot_row[j];
                // Exact: every entry is a minor of the original matrix.
                row[j] = v / &prev;
            }
        }
        prev = pivot.clone();
        pivots.push(col);
        r += 1;
    }
    pivots
}

fn check_dims(rows: &[Vec<BigInt>], cols: usize) -> Result<(), AlgebraError> {
    for r in rows {
        if r.len() != cols {
            return Err(AlgebraError::DimensionMismatch {
                expected: cols,
                got: r.len(),
            });
        }
    }
    Ok(())
}

/// Rational coefficients expressing a target in the span of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanSolution {
    pub coefficients: Vec<BigRational>,
    pub is_integral: bool,
    pub is_unique: bool,
}

impl SpanSolution {
    /// Coefficients as integers, if integral.
    pub fn integer_coefficients(&self) -> Option<Vec<BigInt>> {
        self.is_integral
            .then(|| self.coefficients.iter().map(|c| c.to_integer()).collect())
    }
}

/// Solves `Σ c_i · generators[i] = target` over the rationals.
///
/// Returns `None` when the target lies outside the span. Free variables
/// (when the generators are dependent) are set to zero.
pub fn solve_in_span(
    generators: &[Vec<BigInt>],
    target: &[BigInt],
) -> Result<Option<SpanSolution>, AlgebraError> {
    let dim = target.len();
    check_dims(generators, dim)?;
    let g = generators.len();
    // Augmented system: one row per coordinate, columns = generators | target.
    let mut a: Vec<Vec<BigInt>> = (0..dim)
        .map(|row| {
            let mut r: Vec<BigInt> = generators.iter().map(|v| v[row].clone()).collect();
            r.push(target[row].clone());
            r
        })
        .collect();
    let pivots = bareiss_echelon(&mut a, g + 1);
    if pivots.last() == Some(&g) {
        return Ok(None);
    }
    let mut x = vec![BigRational::zero(); g];
    for (r, &pc) in pivots.iter().enumerate().rev() {
        let mut acc = BigRational::from_integer(a[r][g].clone());
        for j in pc + 1..g {
            if !x[j].is_zero() {
                acc -= BigRational::from_integer(a[r][j].clone()) * &x[j];
            }
        }
        x[pc] = acc / BigRational::from_integer(a[r][pc].clone());
    }
    for (row, t) in target.iter().enumerate() {
        let lhs: BigRational = generators
            .iter()
            .zip(&x)
            .map(|(v, c)| c * BigRational::from_integer(v[row].clone()))
            .sum();
        assert_eq!(
            lhs,
            BigRational::from_integer(t.clone()),
            "span solution does not reproduce the target"
        );
    }
    Ok(Some(SpanSolution {
        is_integral: x.iter().all(|c| c.is_integer()),
        is_unique: pivots.len() == g,
        coefficients: x,
    }))
}
