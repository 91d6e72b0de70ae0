//! Exact 6×6 matrices and fraction-free linear algebra.
//!
//! Determinants, ranks and square solves clear denominators row-wise and run
//! Bareiss fraction-free elimination over big integers, so no intermediate
//! value is ever rounded; back-substitution happens in rationals. Singular
//! solves distinguish inconsistent systems from underdetermined ones.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::Rational;

/// Errors from exact linear solving.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinearSystemError {
    /// The system is inconsistent.
    #[error("singular system: no solution")]
    NoSolution,
    /// The system is consistent but the solution is not unique.
    #[error("singular system: solution is not unique")]
    NotUnique,
    /// A matrix that must be invertible is singular.
    #[error("matrix is singular")]
    Singular,
}

/// A 6×6 matrix of rationals. Entries are addressed with 1-based `(row, col)`
/// indices to match the basis numbering used everywhere else.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix6 {
    entries: Vec<Rational>, // row-major, 36 slots
}

const N: usize = 6;

impl Matrix6 {
    pub fn zero() -> Self {
        Matrix6 { entries: vec![Rational::zero(); N * N] }
    }

    pub fn identity() -> Self {
        let mut m = Matrix6::zero();
        for i in 1..=N as u8 {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(mut f: impl FnMut(u8, u8) -> Rational) -> Self {
        let mut m = Matrix6::zero();
        for i in 1..=N as u8 {
            for j in 1..=N as u8 {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// The elementary matrix `E_{ij}` with a single 1 at `(i, j)`.
    pub fn elementary(i: u8, j: u8) -> Self {
        let mut m = Matrix6::zero();
        m.set(i, j, Rational::one());
        m
    }

    pub fn get(&self, i: u8, j: u8) -> &Rational {
        &self.entries[(usize::from(i) - 1) * N + usize::from(j) - 1]
    }

    pub fn set(&mut self, i: u8, j: u8, value: Rational) {
        self.entries[(usize::from(i) - 1) * N + usize::from(j) - 1] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Matrix6 {
        Matrix6::from_fn(|i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, factor: &Rational) -> Matrix6 {
        Matrix6::from_fn(|i, j| self.get(i, j) * factor)
    }

    pub fn add(&self, rhs: &Matrix6) -> Matrix6 {
        Matrix6::from_fn(|i, j| self.get(i, j) + rhs.get(i, j))
    }

    pub fn sub(&self, rhs: &Matrix6) -> Matrix6 {
        Matrix6::from_fn(|i, j| self.get(i, j) - rhs.get(i, j))
    }

    pub fn neg(&self) -> Matrix6 {
        Matrix6::from_fn(|i, j| -self.get(i, j))
    }

    pub fn mul(&self, rhs: &Matrix6) -> Matrix6 {
        Matrix6::from_fn(|i, j| {
            let mut acc = Rational::zero();
            for k in 1..=N as u8 {
                acc += self.get(i, k) * rhs.get(k, j);
            }
            acc
        })
    }

    pub fn det(&self) -> Rational {
        determinant(self.to_rows())
    }

    /// Exact inverse; errors on singular input.
    pub fn inverse(&self) -> Result<Matrix6, LinearSystemError> {
        // Gauss-Jordan on [A | I] in rationals.
        let mut a = self.to_rows();
        let mut inv: Vec<Vec<Rational>> = (0..N)
            .map(|i| (0..N).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        for col in 0..N {
            let pivot_row = (col..N).find(|&r| !a[r][col].is_zero()).ok_or(LinearSystemError::Singular)?;
            a.swap(col, pivot_row);
            inv.swap(col, pivot_row);
            let pivot = a[col][col].clone();
            for j in 0..N {
                a[col][j] = &a[col][j] / &pivot;
                inv[col][j] = &inv[col][j] / &pivot;
            }
            for r in 0..N {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for j in 0..N {
                    let delta = &factor * &a[col][j];
                    a[r][j] -= delta;
                    let delta = &factor * &inv[col][j];
                    inv[r][j] -= delta;
                }
            }
        }
        Ok(Matrix6::from_fn(|i, j| inv[usize::from(i) - 1][usize::from(j) - 1].clone()))
    }

    /// Solves `M x = b` exactly.
    pub fn solve(&self, b: &crate::exterior::Vector) -> Result<crate::exterior::Vector, LinearSystemError> {
        let rhs: Vec<Rational> = b.components().to_vec();
        let solution = solve_square(&self.to_rows(), &rhs)?;
        let mut out = crate::exterior::Vector::zero();
        for (k, value) in solution.into_iter().enumerate() {
            out.set_component(k as u8 + 1, value);
        }
        Ok(out)
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..N)
            .map(|i| self.entries[i * N..(i + 1) * N].to_vec())
            .collect()
    }
}

impl fmt::Debug for Matrix6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=N as u8 {
            write!(f, "[")?;
            for j in 1..=N as u8 {
                if j > 1 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Clears denominators of one row, returning integer entries. The multiplier
/// is positive, so signs are preserved.
fn clear_row(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for value in row {
        lcm = lcm.lcm(value.denominator());
    }
    row.iter()
        .map(|value| value.numerator() * (&lcm / value.denominator()))
        .collect()
}

/// Bareiss fraction-free elimination in place. Returns the pivot column of
/// each eliminated row and the number of row swaps performed. Rows are
/// reordered so the first `rank` rows are the pivot rows.
fn bareiss(rows: &mut Vec<Vec<BigInt>>) -> (Vec<usize>, usize) {
    let height = rows.len();
    let width = if height == 0 { 0 } else { rows[0].len() };
    let mut pivot_cols = Vec::new();
    let mut swaps = 0;
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..width {
        if row == height {
            break;
        }
        let Some(pivot_row) = (row..height).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        if pivot_row != row {
            rows.swap(row, pivot_row);
            swaps += 1;
        }
        for r in row + 1..height {
            for c in 0..width {
                if c == col {
                    continue;
                }
                let numerator = &rows[row][col] * &rows[r][c] - &rows[r][col] * &rows[row][c];
                let (updated, remainder) = numerator.div_rem(&prev);
                debug_assert!(remainder.is_zero(), "fraction-free division must be exact");
                rows[r][c] = updated;
            }
            rows[r][col] = BigInt::zero();
        }
        prev = rows[row][col].clone();
        pivot_cols.push(col);
        row += 1;
    }
    (pivot_cols, swaps)
}

/// Exact rank of a rational matrix via fraction-free elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut cleared: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_row(r)).collect();
    let (pivot_cols, _) = bareiss(&mut cleared);
    pivot_cols.len()
}

/// Exact determinant of a square rational matrix.
pub fn determinant(rows: Vec<Vec<Rational>>) -> Rational {
    let n = rows.len();
    if n == 0 {
        return Rational::one();
    }
    debug_assert!(rows.iter().all(|r| r.len() == n), "determinant of non-square matrix");
    let mut scale = Rational::one();
    let mut cleared = Vec::with_capacity(n);
    for row in &rows {
        let mut lcm = BigInt::one();
        for value in row {
            lcm = lcm.lcm(value.denominator());
        }
        scale *= &Rational::from_big(BigInt::one(), lcm.clone()).expect("positive lcm");
        cleared.push(
            row.iter()
                .map(|value| value.numerator() * (&lcm / value.denominator()))
                .collect::<Vec<BigInt>>(),
        );
    }
    let (pivot_cols, swaps) = bareiss(&mut cleared);
    if pivot_cols.len() < n {
        return Rational::zero();
    }
    // After full-rank Bareiss elimination the last pivot is the integer
    // determinant (up to row-swap sign).
    let det_int = cleared[n - 1][pivot_cols[n - 1]].clone();
    let sign = if swaps % 2 == 0 { Rational::one() } else { -Rational::one() };
    sign * scale * Rational::from_big(det_int, BigInt::one()).expect("integer")
}

/// Solves a square rational system exactly. Fraction-free forward
/// elimination; rational back-substitution. Distinguishes inconsistent from
/// underdetermined singular systems.
pub fn solve_square(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>, LinearSystemError> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side length mismatch");
    let mut augmented: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut full: Vec<Rational> = row.clone();
            full.push(rhs.clone());
            clear_row(&full)
        })
        .collect();
    let (pivot_cols, _) = bareiss(&mut augmented);

    // pivot in the constants column, or a leftover nonzero constants row,
    // means the system is inconsistent
    if pivot_cols.last() == Some(&n) {
        return Err(LinearSystemError::NoSolution);
    }
    let rank = pivot_cols.len();
    for row in augmented.iter().skip(rank) {
        if !row[n].is_zero() {
            return Err(LinearSystemError::NoSolution);
        }
    }
    if rank < n {
        return Err(LinearSystemError::NotUnique);
    }

    // back-substitution in rationals
    let mut solution = vec![Rational::zero(); n];
    for row in (0..n).rev() {
        let mut acc = Rational::from_big(augmented[row][n].clone(), BigInt::one()).expect("integer");
        for col in row + 1..n {
            let coeff = Rational::from_big(augmented[row][col].clone(), BigInt::one()).expect("integer");
            acc -= coeff * &solution[col];
        }
        let pivot = Rational::from_big(augmented[row][row].clone(), BigInt::one()).expect("integer");
        solution[row] = acc.try_div(&pivot).expect("pivot is nonzero");
    }
    Ok(solution)
}
