//! Subspaces of a coordinate space, represented by independent basis
//! columns, plus the subspace calculus the chain-level computations
//! are built on: sums, intersections, orthogonal complements,
//! projections and preimages.

use thiserror::Error;

use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("first argument is not a subspace of the second")]
    NotASubspace,
    #[error("operator is not symmetric")]
    NotSymmetric,
    #[error("operator does not map the domain subspace into the codomain subspace")]
    NotInvariant,
}

/// A linear subspace of a coordinate space, stored as a basis matrix
/// whose columns are independent. The zero subspace has a 0-column
/// basis. Bases are kept in reduced column-echelon form so equal
/// subspaces have equal representations.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<S: Scalar> {
    ambient_dim: usize,
    basis: Matrix<S>,
}

impl<S: Scalar> Subspace<S> {
    /// Span of the given matrix columns, reduced to a canonical
    /// independent basis.
    pub fn from_span(m: &Matrix<S>) -> Self {
        let mut rows = m.transpose();
        let pivots = rows.rref();
        let mut cols = Vec::with_capacity(pivots.len());
        for r in 0..pivots.len() {
            cols.push((0..rows.cols()).map(|j| rows.get(r, j).clone()).collect());
        }
        Subspace {
            ambient_dim: m.rows(),
            basis: Matrix::from_columns(m.rows(), &cols),
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(ambient_dim, 0),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
        }
    }

    /// Coordinate subspace spanned by the given axes.
    pub fn coordinate(ambient_dim: usize, axes: &[usize]) -> Self {
        let mut m = Matrix::zeros(ambient_dim, axes.len());
        for (j, &i) in axes.iter().enumerate() {
            m.set(i, j, S::one());
        }
        Subspace::from_span(&m)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix<S> {
        &self.basis
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_ambient(other)?;
        Ok(Subspace::from_span(&self.basis.hstack(&other.basis)))
    }

    /// Zassenhaus-style intersection: kernel vectors `(x, y)` of the
    /// stacked system `[U | V]` satisfy `Ux = -Vy`, so `Ux` spans the
    /// intersection.
    pub fn intersection(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_ambient(other)?;
        let stacked = self.basis.hstack(&other.basis);
        let kernel = stacked.kernel_basis();
        let mut cols = Vec::new();
        for k in 0..kernel.cols() {
            let x: Vec<S> = (0..self.dim()).map(|i| kernel.get(i, k).clone()).collect();
            cols.push(self.basis.mul_vec(&x));
        }
        Ok(Subspace::from_span(&Matrix::from_columns(
            self.ambient_dim,
            &cols,
        )))
    }

    /// Whether every vector of `self` lies in `other`.
    pub fn is_contained_in(&self, other: &Self) -> Result<bool, LinAlgError> {
        self.check_ambient(other)?;
        Ok(other.basis.hstack(&self.basis).rank() == other.dim())
    }

    pub fn contains_vector(&self, v: &[S]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        let vm = Matrix::from_columns(self.ambient_dim, &[v.to_vec()]);
        self.basis.hstack(&vm).rank() == self.dim()
    }

    /// Orthogonal complement of `self` inside `within`, under the
    /// canonical dot product: `{x in within : <x, w> = 0 for w in self}`.
    pub fn orthogonal_complement_in(&self, within: &Self) -> Result<Self, LinAlgError> {
        self.check_ambient(within)?;
        if !self.is_contained_in(within)? {
            return Err(LinAlgError::NotASubspace);
        }
        // Solve W^T V c = 0; complement basis is V c.
        let wt_v = self.basis.transpose().mul(&within.basis);
        let kernel = wt_v.kernel_basis();
        let mut cols = Vec::new();
        for k in 0..kernel.cols() {
            let c: Vec<S> = (0..within.dim())
                .map(|i| kernel.get(i, k).clone())
                .collect();
            cols.push(within.basis.mul_vec(&c));
        }
        Ok(Subspace::from_span(&Matrix::from_columns(
            self.ambient_dim,
            &cols,
        )))
    }

    /// Orthogonal projection matrix onto this subspace:
    /// `P = B (B^T B)^{-1} B^T`, exact over rationals.
    pub fn orthogonal_projection(&self) -> Matrix<S> {
        if self.dim() == 0 {
            return Matrix::zeros(self.ambient_dim, self.ambient_dim);
        }
        let bt = self.basis.transpose();
        let gram_inv = bt.mul(&self.basis).inverse();
        self.basis.mul(&gram_inv).mul(&bt)
    }

    /// Gram matrix `B^T B` of the stored basis.
    pub fn gram(&self) -> Matrix<S> {
        self.basis.transpose().mul(&self.basis)
    }

    /// Coordinates of an ambient vector in the stored basis; `None` if
    /// the vector is outside the subspace.
    pub fn coordinates_of(&self, v: &[S]) -> Option<Vec<S>> {
        let rhs = Matrix::from_columns(self.ambient_dim, &[v.to_vec()]);
        let x = self.basis.solve(&rhs)?;
        Some((0..self.dim()).map(|i| x.get(i, 0).clone()).collect())
    }

    /// Image of this subspace under a linear map given by `m`.
    pub fn image_under(&self, m: &Matrix<S>) -> Subspace<S> {
        assert_eq!(m.cols(), self.ambient_dim);
        Subspace::from_span(&m.mul(&self.basis))
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinAlgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinAlgError::AmbientMismatch(
                self.ambient_dim,
                other.ambient_dim,
            ));
        }
        Ok(())
    }
}

/// Preimage `{x : m x in v}`, computed as the kernel of `Q m` where `Q`
/// projects onto the orthogonal complement of `v` in its ambient space.
pub fn preimage<S: Scalar>(m: &Matrix<S>, v: &Subspace<S>) -> Result<Subspace<S>, LinAlgError> {
    if v.ambient_dim() != m.rows() {
        return Err(LinAlgError::AmbientMismatch(v.ambient_dim(), m.rows()));
    }
    let p = v.orthogonal_projection();
    let q = Matrix::identity(m.rows()).sub(&p);
    Ok(Subspace::from_span(&q.mul(m).kernel_basis()))
}

/// Kernel of `m` as a subspace of its domain.
pub fn kernel<S: Scalar>(m: &Matrix<S>) -> Subspace<S> {
    Subspace::from_span(&m.kernel_basis())
}

/// Column span of `m` as a subspace of its codomain.
pub fn image<S: Scalar>(m: &Matrix<S>) -> Subspace<S> {
    Subspace::from_span(m)
}

/// True iff every basis vector of `u` is orthogonal to every basis
/// vector of `v` (exact zero Gram block for the rational backend).
pub fn orthogonal<S: Scalar>(u: &Subspace<S>, v: &Subspace<S>) -> bool {
    u.basis().transpose().mul(v.basis()).is_zero_matrix()
}
