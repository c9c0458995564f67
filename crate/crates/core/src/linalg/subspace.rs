//! Subspaces of ℚⁿ in canonical form.

use std::fmt;

use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A subspace of ℚⁿ.
///
/// The basis is kept in column-reduced echelon form with unit pivots, which is
/// unique for a given subspace: two `Subspace` values are equal exactly when
/// they span the same space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::zeros(n, 0),
        }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::identity(n),
        }
    }

    /// Span of the columns of `m`.
    pub fn from_columns(m: &Matrix) -> Self {
        let (r, rank) = m.transpose().rref();
        Subspace {
            ambient_dim: m.rows(),
            basis: r.block(0, 0, rank, m.rows()).transpose(),
        }
    }

    pub fn span(n: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        Ok(Self::from_columns(&Matrix::from_columns(n, vectors)?))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Canonical basis, one vector per column.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.columns()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        let mut aug = Matrix::zeros(self.ambient_dim, self.dim() + 1);
        aug.set_block(0, 0, &self.basis);
        for (i, x) in v.iter().enumerate() {
            aug[(i, self.dim())] = x.clone();
        }
        aug.rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.sum(other).map_or(false, |s| s.dim() == self.dim())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::mismatch(format!(
                "subspaces of ℚ^{} and ℚ^{}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut cols = self.basis_vectors();
        cols.extend(other.basis_vectors());
        Subspace::span(self.ambient_dim, &cols)
    }

    /// `V ∩ W`, from the kernel of `[B_V | −B_W]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let (p, q) = (self.dim(), other.dim());
        let mut stacked = Matrix::zeros(self.ambient_dim, p + q);
        stacked.set_block(0, 0, &self.basis);
        stacked.set_block(0, p, &-&other.basis);
        let coeffs = stacked.kernel();
        let vectors: Vec<Vec<Scalar>> = coeffs
            .basis_vectors()
            .iter()
            .map(|c| self.basis.mul_vec(&c[..p]))
            .collect();
        Subspace::span(self.ambient_dim, &vectors)
    }

    /// `M·V`.
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient_dim {
            return Err(Error::mismatch("matrix does not act on this ambient space"));
        }
        Ok(Subspace::from_columns(&m.checked_mul(&self.basis)?))
    }

    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        m.is_square() && self.image_under(m).map_or(false, |img| self.contains_subspace(&img))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in ℚ^{}, basis {})",
            self.dim(),
            self.ambient_dim,
            self.basis
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    fn e(n: usize, i: usize) -> Vec<Scalar> {
        (0..n).map(|j| int((i == j) as i64)).collect()
    }

    #[test]
    fn canonical_form_ignores_spanning_set() {
        let a = Subspace::span(3, &[vec![int(1), int(2), int(3)], vec![int(0), int(1), int(1)]]).unwrap();
        let b = Subspace::span(
            3,
            &[
                vec![int(1), int(3), int(4)],
                vec![int(2), int(3), int(5)],
                vec![int(3), int(6), int(9)],
            ],
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn intersection_examples() {
        let v = Subspace::span(3, &[e(3, 0), e(3, 1)]).unwrap();
        let w = Subspace::span(3, &[e(3, 1), e(3, 2)]).unwrap();
        assert_eq!(v.intersect(&v).unwrap(), v);
        assert_eq!(v.intersect(&w).unwrap(), Subspace::span(3, &[e(3, 1)]).unwrap());
        assert!(v.intersect(&Subspace::zero(4)).is_err());

        let ea = Subspace::span(2, &[e(2, 0)]).unwrap();
        let eb = Subspace::span(2, &[e(2, 1)]).unwrap();
        assert!(ea.intersect(&eb).unwrap().is_zero());
    }

    #[test]
    fn membership_and_invariance() {
        let v = Subspace::span(3, &[e(3, 0)]).unwrap();
        assert!(v.contains(&[int(5), int(0), int(0)]));
        assert!(!v.contains(&e(3, 2)));
        let upper = Matrix::from_i64(&[[1, 1, 0], [0, 1, 0], [0, 0, 2]]);
        assert!(v.is_invariant_under(&upper));
        assert!(!v.is_invariant_under(&upper.transpose()));
        assert!(Subspace::zero(3).is_invariant_under(&upper));
        assert!(Subspace::full(3).contains_subspace(&v));
        assert!(!v.contains_subspace(&Subspace::full(3)));
    }
}
