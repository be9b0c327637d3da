//! Dense matrices with exact arithmetic.
//!
//! Construction, transposition and ring arithmetic are generic over
//! [`Scalar`]; the decision procedures — rank, determinant, linear solve,
//! kernel, inertia and negative-semidefiniteness — are implemented on
//! rational matrices ([`crate::RatMatrix`]), where every step is exact.
//!
//! Rank is computed fraction-free: rows are scaled to integers, eliminated by
//! cross-multiplication and stripped of their content after every step, so no
//! rational division ever occurs. Semidefiniteness is decided by the
//! principal-minor characterization on matrices up to 4×4 and by exact
//! symmetric reduction (inertia) in general; the two agree wherever both
//! apply.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::scalar::Scalar;
use crate::{rat_string, Int, Rat};

/// Errors produced by matrix constructors and decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("expected {expected} entries for a {rows}x{cols} matrix, got {got}")]
    EntryCount {
        rows: usize,
        cols: usize,
        expected: usize,
        got: usize,
    },
    #[error("rows have inconsistent lengths")]
    RaggedRows,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Dense row-major matrix over an exact scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::EntryCount {
                rows,
                cols,
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from a list of equal-length rows.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(LinalgError::RaggedRows);
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a symmetric matrix, verifying symmetry.
    pub fn symmetric(rows: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        let m = Self::from_rows(rows)?;
        if !m.is_symmetric() {
            return Err(LinalgError::NotSymmetric);
        }
        Ok(m)
    }

    /// The `rows × cols` zero matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    /// The `n × n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = T::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry `(i, j)`; panics on out-of-range indices.
    pub fn at(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[T] {
        assert!(i < self.rows, "row out of range");
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..i {
                if self.at(i, j) != self.at(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::Dimension(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::Dimension(format!(
                "{}x{} - {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Dimension(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a.clone() * other.at(k, j).clone();
                    *out.at_mut(i, j) = out.at(i, j).clone() + t;
                }
            }
        }
        Ok(out)
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Dimension(format!(
                "{}x{} * vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// The square submatrix picking `idx` rows and columns (principal when
    /// taken from a symmetric matrix).
    pub fn principal_submatrix(&self, idx: &[usize]) -> Self {
        let n = idx.len();
        let mut out = Self::zero(n, n);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                *out.at_mut(a, b) = self.at(i, j).clone();
            }
        }
        out
    }
}

/// Exact dot product of two equal-length slices.
pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

impl Matrix<Rat> {
    /// Exact rank by fraction-free elimination.
    ///
    /// Each row is scaled to integers, elimination uses cross-multiplication
    /// only, and rows are divided by their content after every update to keep
    /// the integers small. No rational division is performed.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Int>> = (0..self.rows)
            .map(|i| clear_denominators(self.row(i)))
            .collect();
        for r in &mut m {
            strip_content(r);
        }
        let rows = self.rows;
        let cols = self.cols;
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let pivot = m[rank][col].clone();
            for i in rank + 1..rows {
                if m[i][col].is_zero() {
                    continue;
                }
                let factor = m[i][col].clone();
                for j in col..cols {
                    let t = &m[i][j] * &pivot - &factor * &m[rank][j];
                    m[i][j] = t;
                }
                strip_content(&mut m[i]);
            }
            rank += 1;
        }
        rank
    }

    /// Exact determinant (Gaussian elimination with exact division).
    pub fn det(&self) -> Result<Rat, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m: Vec<Vec<Rat>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
                return Ok(Rat::zero());
            };
            if p != col {
                m.swap(col, p);
                det = -det;
            }
            let pivot = m[col][col].clone();
            det *= pivot.clone();
            for i in col + 1..n {
                if m[i][col].is_zero() {
                    continue;
                }
                let factor = &m[i][col] / &pivot;
                for j in col..n {
                    let t = &m[col][j] * &factor;
                    m[i][j] -= t;
                }
            }
        }
        Ok(det)
    }

    /// Exact solution of `self · x = b` for square invertible `self`.
    pub fn solve(&self, b: &[Rat]) -> Result<Vec<Rat>, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if b.len() != self.rows {
            return Err(LinalgError::Dimension(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                self.rows
            )));
        }
        let n = self.rows;
        let mut m: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.push(b[i].clone());
                row
            })
            .collect();
        // Forward elimination on the augmented system.
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
                return Err(LinalgError::Singular);
            };
            m.swap(col, p);
            let pivot = m[col][col].clone();
            for i in col + 1..n {
                if m[i][col].is_zero() {
                    continue;
                }
                let factor = &m[i][col] / &pivot;
                for j in col..=n {
                    let t = &m[col][j] * &factor;
                    m[i][j] -= t;
                }
            }
        }
        // Back substitution.
        let mut x = vec![Rat::zero(); n];
        for i in (0..n).rev() {
            let mut acc = m[i][n].clone();
            for j in i + 1..n {
                acc -= &m[i][j] * &x[j];
            }
            x[i] = acc / &m[i][i];
        }
        Ok(x)
    }

    /// Exact inverse of a square invertible matrix.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut out = Self::zero(n, n);
        for j in 0..n {
            let mut e = vec![Rat::zero(); n];
            e[j] = Rat::one();
            let col = self.solve(&e)?;
            for i in 0..n {
                *out.at_mut(i, j) = col[i].clone();
            }
        }
        Ok(out)
    }

    /// A basis of the right kernel `{x : self · x = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let rows = self.rows;
        let cols = self.cols;
        let mut m: Vec<Vec<Rat>> = (0..rows).map(|i| self.row(i).to_vec()).collect();
        // Reduced row echelon form, tracking pivot columns.
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let pivot = m[r][col].clone();
            for j in col..cols {
                m[r][j] = &m[r][j] / &pivot;
            }
            for i in 0..rows {
                if i != r && !m[i][col].is_zero() {
                    let factor = m[i][col].clone();
                    for j in col..cols {
                        let t = &m[r][j] * &factor;
                        m[i][j] -= t;
                    }
                }
            }
            pivot_cols.push(col);
            r += 1;
        }
        let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
        free_cols
            .into_iter()
            .map(|fc| {
                let mut v = vec![Rat::zero(); cols];
                v[fc] = Rat::one();
                for (row, &pc) in pivot_cols.iter().enumerate() {
                    v[pc] = -m[row][fc].clone();
                }
                v
            })
            .collect()
    }

    /// Exact inertia `(positives, negatives, zeros)` of a symmetric matrix,
    /// computed by symmetric reduction over the rationals.
    pub fn signature(&self) -> Result<(usize, usize, usize), LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if !self.is_symmetric() {
            return Err(LinalgError::NotSymmetric);
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut done = vec![false; n];
        let (mut pos, mut neg, mut zer) = (0usize, 0usize, 0usize);
        loop {
            let active: Vec<usize> = (0..n).filter(|&i| !done[i]).collect();
            if active.is_empty() {
                break;
            }
            // Prefer a nonzero diagonal pivot.
            if let Some(&k) = active.iter().find(|&&i| !m.at(i, i).is_zero()) {
                let pivot = m.at(k, k).clone();
                if pivot.is_positive() {
                    pos += 1;
                } else {
                    neg += 1;
                }
                for &i in &active {
                    if i == k || m.at(i, k).is_zero() {
                        continue;
                    }
                    let factor = m.at(i, k).clone() / pivot.clone();
                    // Symmetric row-and-column elimination.
                    for &j in &active {
                        let t = m.at(k, j).clone() * factor.clone();
                        *m.at_mut(i, j) = m.at(i, j).clone() - t;
                    }
                    for &j in &active {
                        let t = m.at(j, k).clone() * factor.clone();
                        *m.at_mut(j, i) = m.at(j, i).clone() - t;
                    }
                }
                done[k] = true;
                continue;
            }
            // All active diagonal entries vanish: look for an off-diagonal
            // entry and fold it onto the diagonal (congruence by adding one
            // row/column pair), which contributes one +1 and one −1.
            let mut found = None;
            'search: for (a, &i) in active.iter().enumerate() {
                for &j in &active[a + 1..] {
                    if !m.at(i, j).is_zero() {
                        found = Some((i, j));
                        break 'search;
                    }
                }
            }
            let Some((i, j)) = found else {
                zer += active.len();
                break;
            };
            for &k in &active {
                let t = m.at(j, k).clone();
                *m.at_mut(i, k) = m.at(i, k).clone() + t;
            }
            for &k in &active {
                let t = m.at(k, j).clone();
                *m.at_mut(k, i) = m.at(k, i).clone() + t;
            }
        }
        Ok((pos, neg, zer))
    }

    /// Exact negative-semidefiniteness test for a symmetric matrix.
    ///
    /// Up to 4×4 this checks every principal minor (`(−1)^k · minor ≥ 0`);
    /// in general it checks that the inertia has no positive part. Both
    /// characterizations are exact and agree where both apply.
    pub fn is_negative_semidefinite(&self) -> Result<bool, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if !self.is_symmetric() {
            return Err(LinalgError::NotSymmetric);
        }
        let n = self.rows;
        if n <= 4 {
            for mask in 1u32..(1 << n) {
                let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                let minor = self.principal_submatrix(&idx).det()?;
                let signed = if idx.len() % 2 == 1 { -minor } else { minor };
                if signed.is_negative() {
                    return Ok(false);
                }
            }
            Ok(true)
        } else {
            Ok(self.signature()?.0 == 0)
        }
    }

    /// JSON rendering: an array of rows, every entry an exact `"p/q"` string.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| {
                    serde_json::Value::Array(
                        self.row(i)
                            .iter()
                            .map(|r| serde_json::Value::String(rat_string(r)))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

/// Scales a rational row to integers by the least common denominator.
fn clear_denominators(row: &[Rat]) -> Vec<Int> {
    let lcd = row.iter().fold(Int::one(), |acc, r| acc.lcm(r.denom()));
    row.iter().map(|r| r.numer() * (&lcd / r.denom())).collect()
}

/// Divides an integer row by the gcd of its entries (when nonzero).
fn strip_content(row: &mut [Int]) {
    let mut g = Int::zero();
    for e in row.iter() {
        g = g.gcd(e);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for e in row.iter_mut() {
        *e = &*e / &g;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rint};

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rint).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn entry_count_is_checked() {
        assert!(matches!(
            Matrix::new(2, 2, vec![rint(1); 3]),
            Err(LinalgError::EntryCount { .. })
        ));
    }

    #[test]
    fn symmetric_constructor_rejects_asymmetry() {
        assert_eq!(
            Matrix::symmetric(vec![vec![rint(0), rint(1)], vec![rint(2), rint(0)]]),
            Err(LinalgError::NotSymmetric)
        );
    }

    #[test]
    fn kernel_of_rank_one_projector() {
        let a = m(vec![vec![1, 1], vec![1, 1]]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).unwrap().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn signature_handles_zero_diagonal_blocks() {
        // Hyperbolic plane: eigenvalues ±1.
        let h = m(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(h.signature().unwrap(), (1, 1, 0));
    }

    #[test]
    fn content_stripping_keeps_rank_exact() {
        // Two independent fractional rows plus their sum: rank exactly 2.
        let a = Matrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(1, 6), rat(1, 7)],
            vec![rat(2, 3), rat(10, 21)],
        ])
        .unwrap();
        assert_eq!(a.rank(), 2);
    }
}
