//! Dense matrices over [`Rational`] and the small linear-algebra kernel the
//! rest of the crate is built on: reduced row echelon form, nullspace bases,
//! linear solving, and full-support kernel vectors.
//!
//! Everything is exact. Pivoting always picks the first nonzero candidate, so
//! every routine is deterministic: the same input yields the same reduced
//! matrix, the same pivot columns, and the same basis vectors, independent of
//! entry magnitudes.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::{int, Rational};

/// Row-major dense matrix. Zero rows or columns are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Result of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    /// The reduced row echelon form.
    pub reduced: Matrix,
    /// Pivot columns in increasing order, one per nonzero row.
    pub pivot_cols: Vec<usize>,
    /// Rank, always `pivot_cols.len()`.
    pub rank: usize,
}

/// Outcome of [`solve_linear`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<Rational>),
    /// `particular` sets every free variable to zero; `kernel` is the
    /// nullspace basis of the coefficient matrix, so the solution set is
    /// `particular + span(kernel)`.
    Parametric {
        particular: Vec<Rational>,
        kernel: Vec<Vec<Rational>>,
    },
    Inconsistent,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows, which must all have the same length.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self, Error> {
        let cols = rows.first().map_or(0, Vec::len);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
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

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Matrix-vector product. Panics when `v.len() != self.cols()`.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form by Gauss-Jordan elimination.
    ///
    /// The pivot for each column is the first row (top to bottom) with a
    /// nonzero entry there; exact arithmetic needs no magnitude heuristics, and
    /// the fixed choice makes the output canonical.
    ///
    /// Edge cases:
    /// * zero matrix: rank 0, no pivots, returned unchanged;
    /// * zero rows or columns: rank 0;
    /// * already reduced input: returned as-is (idempotence).
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut next_row = 0;
        for col in 0..m.cols {
            if next_row == m.rows {
                break;
            }
            let Some(pivot_row) = (next_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(next_row, pivot_row);
            let inv = m.get(next_row, col).recip();
            for c in col..m.cols {
                let scaled = m.get(next_row, c) * &inv;
                m.set(next_row, c, scaled);
            }
            for r in 0..m.rows {
                if r == next_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let updated = m.get(r, c) - &factor * m.get(next_row, c);
                    m.set(r, c, updated);
                }
            }
            pivot_cols.push(col);
            next_row += 1;
        }
        let rank = pivot_cols.len();
        Rref {
            reduced: m,
            pivot_cols,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical nullspace basis from the RREF free-variable convention: one
    /// vector per free column in increasing column order, with `1` at the free
    /// column and the negated reduced entries at the pivot columns.
    ///
    /// The basis has exactly `cols - rank` vectors; an invertible matrix gets
    /// an empty basis.
    pub fn nullspace_basis(&self) -> Vec<Vec<Rational>> {
        let Rref {
            reduced, pivot_cols, ..
        } = self.rref();
        nullspace_from_rref(&reduced, &pivot_cols, self.cols)
    }

    /// Exact inverse, or `None` when the matrix is singular or non-square.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let Rref {
            reduced, pivot_cols, ..
        } = aug.rref();
        // Invertible iff every pivot lands in the left block: a singular
        // left block pushes a pivot into the identity columns while the
        // augmented rank may still reach n.
        if pivot_cols.len() < n || pivot_cols.iter().any(|&c| c >= n) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, reduced.get(r, n + c).clone());
            }
        }
        Some(inv)
    }
}

fn nullspace_from_rref(reduced: &Matrix, pivot_cols: &[usize], cols: usize) -> Vec<Vec<Rational>> {
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -reduced.get(row, free).clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves `a x = b` exactly.
///
/// One elimination over the augmented matrix classifies the system: a pivot in
/// the right-hand column means no solution; otherwise the particular solution
/// sets all free variables to zero, and a nonempty kernel upgrades the result
/// to [`LinearSolution::Parametric`].
pub fn solve_linear(a: &Matrix, b: &[Rational]) -> Result<LinearSolution, Error> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let cols = a.cols();
    let mut aug = Matrix::zeros(a.rows(), cols + 1);
    for r in 0..a.rows() {
        for c in 0..cols {
            aug.set(r, c, a.get(r, c).clone());
        }
        aug.set(r, cols, b[r].clone());
    }
    // Columns are processed left to right, so the first `cols` columns of the
    // reduced augmented matrix equal rref(a) with the same pivots.
    let Rref {
        reduced, pivot_cols, ..
    } = aug.rref();
    if pivot_cols.last() == Some(&cols) {
        return Ok(LinearSolution::Inconsistent);
    }
    let mut particular = vec![Rational::zero(); cols];
    for (row, &pc) in pivot_cols.iter().enumerate() {
        particular[pc] = reduced.get(row, cols).clone();
    }
    let kernel = nullspace_from_rref(&reduced, &pivot_cols, cols);
    if kernel.is_empty() {
        Ok(LinearSolution::Unique(particular))
    } else {
        Ok(LinearSolution::Parametric { particular, kernel })
    }
}

/// A kernel vector of `m` with every component nonzero, when one exists.
///
/// Such a vector exists iff every coordinate is nonzero in some nullspace
/// basis vector: a coordinate missed by the whole basis is zero on the entire
/// kernel, while covered coordinates only vanish on finitely many hyperplane
/// slices of the kernel, which cannot exhaust it over the rationals.
///
/// Construction: start from the first basis vector and add each later basis
/// vector scaled by the smallest positive integer that keeps every touched
/// coordinate nonzero. Deterministic, and the coefficients stay small.
pub fn full_support_nullvector(m: &Matrix) -> Option<Vec<Rational>> {
    full_support_combination(&m.nullspace_basis(), m.cols())
}

/// Same as [`full_support_nullvector`], starting from an explicit basis.
pub fn full_support_combination(basis: &[Vec<Rational>], dim: usize) -> Option<Vec<Rational>> {
    if basis.is_empty() {
        return None;
    }
    for j in 0..dim {
        if basis.iter().all(|v| v[j].is_zero()) {
            return None;
        }
    }
    let mut acc = basis[0].clone();
    for v in &basis[1..] {
        // Coefficients to avoid: those zeroing a coordinate the new vector
        // touches. Coordinates with v[j] = 0 are unaffected by any choice.
        let forbidden: Vec<Rational> = (0..dim)
            .filter(|&j| !v[j].is_zero())
            .map(|j| -(&acc[j] / &v[j]))
            .collect();
        let mut c = 1i64;
        while forbidden.contains(&int(c)) {
            c += 1;
        }
        let c = int(c);
        for j in 0..dim {
            acc[j] = &acc[j] + &c * &v[j];
        }
    }
    Some(acc)
}
