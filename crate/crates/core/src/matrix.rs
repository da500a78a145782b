//! Dense matrices over a [`Scalar`] backend with row-reduction based
//! rank, kernel and solve routines.

use num_traits::Zero;

use crate::scalar::{tolerances, Scalar};

/// Dense row-major matrix. All entries share one scalar backend.
#[derive(Clone, PartialEq)]
pub struct Matrix<S: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> std::fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:?} ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![S::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_columns(ambient: usize, cols: &[Vec<S>]) -> Self {
        let mut m = Matrix::zeros(ambient, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), ambient);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        Matrix::new(rows, cols, data.iter().map(|&v| S::from_i64(v)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<S>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Matrix::<S>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).clone() + a.clone() * other.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(S::zero(), |acc, j| {
                    acc + self.get(i, j).clone() * v[j].clone()
                })
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Matrix::new(self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Matrix::new(self.rows, self.cols, data)
    }

    pub fn scale(&self, s: &S) -> Self {
        let data = self.data.iter().map(|a| a.clone() * s.clone()).collect();
        Matrix::new(self.rows, self.cols, data)
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix::new(self.rows + other.rows, self.cols, data)
    }

    pub fn is_zero_matrix(&self) -> bool {
        let scale = self.magnitude_scale();
        if S::EXACT {
            self.data.iter().all(Zero::is_zero)
        } else {
            self.data.iter().all(|v| v.is_negligible(scale))
        }
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let scale = self.magnitude_scale();
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                let d = self.get(i, j).clone() - self.get(j, i).clone();
                if !d.is_negligible(scale) {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_f64(&self) -> Matrix<f64> {
        Matrix::new(
            self.rows,
            self.cols,
            self.data.iter().map(Scalar::to_f64).collect(),
        )
    }

    fn magnitude_scale(&self) -> f64 {
        self.data
            .iter()
            .map(Scalar::pivot_magnitude)
            .fold(0.0_f64, f64::max)
    }

    /// Reduced row echelon form; returns the pivot-column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let scale = self.magnitude_scale();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            // Partial pivoting: pick the candidate with the largest magnitude.
            let mut best = row;
            let mut best_mag = self.get(row, col).pivot_magnitude();
            for r in (row + 1)..self.rows {
                let mag = self.get(r, col).pivot_magnitude();
                if mag > best_mag {
                    best = r;
                    best_mag = mag;
                }
            }
            if self.get(best, col).is_negligible(scale) {
                continue;
            }
            if best != row {
                for j in 0..self.cols {
                    self.data.swap(row * self.cols + j, best * self.cols + j);
                }
            }
            let pivot = self.get(row, col).clone();
            for j in col..self.cols {
                let v = self.get(row, j).clone() / pivot.clone();
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let v = self.get(r, j).clone() - factor.clone() * self.get(row, j).clone();
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Rank over the backend field. The float backend goes through
    /// singular values; the exact backend uses Gaussian elimination.
    pub fn rank(&self) -> usize {
        if !S::EXACT {
            return float_svd_rank(&self.to_f64());
        }
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the kernel `{x : self * x = 0}`, as matrix columns.
    pub fn kernel_basis(&self) -> Matrix<S> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Matrix::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, S::one());
            for (r, &pc) in pivots.iter().enumerate() {
                basis.set(pc, k, -m.get(r, fc).clone());
            }
        }
        basis
    }

    /// Solves `self * X = rhs` for every column of `rhs`. Returns `None`
    /// when any column is inconsistent.
    pub fn solve(&self, rhs: &Matrix<S>) -> Option<Matrix<S>> {
        assert_eq!(self.rows, rhs.rows, "rhs row mismatch");
        let mut aug = self.hstack(rhs);
        let pivots = aug.rref();
        // A pivot in the augmented block means inconsistency.
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, aug.get(r, self.cols + j).clone());
            }
        }
        // Verify in the float backend: rref with thresholds can mask
        // inconsistency.
        if !S::EXACT {
            let resid = self.mul(&x).sub(rhs);
            if !resid.is_zero_matrix() {
                return None;
            }
        }
        Some(x)
    }

    /// Inverse of a square matrix. Panics if singular; callers use it
    /// only on Gram matrices of independent columns, which are always
    /// invertible.
    pub fn inverse(&self) -> Matrix<S> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut aug = self.hstack(&Matrix::identity(n));
        let pivots = aug.rref();
        assert_eq!(pivots.len(), n, "matrix is singular");
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        inv
    }
}

/// Float rank by singular values: sigma is zero iff
/// `sigma <= zero_tol * max(1, sigma_max)`.
pub fn float_svd_rank(m: &Matrix<f64>) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    let dm = to_nalgebra(m);
    let svd = dm.svd(false, false);
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0_f64, f64::max);
    let tol = tolerances().zero * sigma_max.max(1.0);
    svd.singular_values.iter().filter(|&&s| s > tol).count()
}

pub fn to_nalgebra(m: &Matrix<f64>) -> nalgebra::DMatrix<f64> {
    nalgebra::DMatrix::from_fn(m.rows(), m.cols(), |i, j| *m.get(i, j))
}

pub fn from_nalgebra(m: &nalgebra::DMatrix<f64>) -> Matrix<f64> {
    let mut out = Matrix::zeros(m.nrows(), m.ncols());
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            out.set(i, j, m[(i, j)]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    #[test]
    fn rank_edge_cases() {
        let m: Matrix<Rat> = Matrix::zeros(0, 0);
        assert_eq!(m.rank(), 0);
        let id: Matrix<Rat> = Matrix::identity(3);
        assert_eq!(id.rank(), 3);
        let m: Matrix<Rat> = Matrix::from_i64(2, 2, &[1, 2, 2, 4]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn float_rank_matches_exact_on_small_integers() {
        let data = [3, -1, 2, 0, 4, -2, 3, 3, 0];
        let me: Matrix<Rat> = Matrix::from_i64(3, 3, &data);
        let mf: Matrix<f64> = Matrix::from_i64(3, 3, &data);
        assert_eq!(me.rank(), mf.rank());
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let id: Matrix<Rat> = Matrix::identity(4);
        assert_eq!(id.kernel_basis().cols(), 0);
    }

    #[test]
    fn kernel_of_difference_row() {
        let m: Matrix<Rat> = Matrix::from_i64(1, 2, &[1, -1]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero_matrix());
        assert_eq!(k.get(0, 0), k.get(1, 0));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a: Matrix<Rat> = Matrix::from_i64(2, 2, &[1, 1, 2, 2]);
        let good: Matrix<Rat> = Matrix::from_i64(2, 1, &[3, 6]);
        let bad: Matrix<Rat> = Matrix::from_i64(2, 1, &[3, 5]);
        let x = a.solve(&good).unwrap();
        assert_eq!(a.mul(&x), good);
        assert!(a.solve(&bad).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let a: Matrix<Rat> = Matrix::from_i64(2, 2, &[2, 1, 1, 1]);
        assert_eq!(a.mul(&a.inverse()), Matrix::identity(2));
    }
}
