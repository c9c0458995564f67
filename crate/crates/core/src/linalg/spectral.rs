//! Characteristic polynomials, rational eigenvalues, generalized kernels and
//! the solution spaces of commutation and fixed-point constraints.

use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::poly::Polynomial;
use super::scalar::{self, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// `det(tI − M)` by exact Faddeev–LeVerrier.
pub fn char_poly(m: &Matrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::mismatch(format!(
            "characteristic polynomial of a {:?} matrix",
            m.shape()
        )));
    }
    let n = m.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    // aux_k = M·aux_{k-1} + c_{n-k+1}·I, c_{n-k} = -tr(M·aux_k)/k
    let mut aux = Matrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m * &aux;
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        aux = next;
        let tr = (m * &aux).trace();
        coeffs[n - k] = -tr / scalar::int(k as i64);
    }
    Ok(Polynomial::new(coeffs))
}

/// Rational eigenvalues of a square matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSpectrum {
    /// Distinct rational eigenvalues with algebraic multiplicity, ascending.
    pub eigenvalues: Vec<(Scalar, usize)>,
    /// Monic factor of the characteristic polynomial with no rational roots.
    pub residual: Polynomial,
}

impl RationalSpectrum {
    /// Multiplicity of `lambda` in the characteristic polynomial (0 if absent).
    pub fn multiplicity(&self, lambda: &Scalar) -> usize {
        self.eigenvalues
            .iter()
            .find(|(r, _)| r == lambda)
            .map_or(0, |(_, k)| *k)
    }

    /// True when the characteristic polynomial splits over ℚ.
    pub fn splits(&self) -> bool {
        self.residual.degree() == Some(0)
    }
}

pub fn rational_eigen(m: &Matrix) -> Result<RationalSpectrum> {
    let (eigenvalues, residual) = char_poly(m)?.rational_roots();
    Ok(RationalSpectrum {
        eigenvalues,
        residual: residual.monic(),
    })
}

/// `ker (M − λI)^k`.
pub fn generalized_kernel(m: &Matrix, lambda: &Scalar, k: usize) -> Result<Subspace> {
    if !m.is_square() {
        return Err(Error::mismatch("generalized kernel of a non-square matrix"));
    }
    if k == 0 {
        return Err(Error::Domain("generalized kernel needs k >= 1".into()));
    }
    Ok(m.shift(lambda).pow(k as i64)?.kernel())
}

/// Solution space of a linear matrix equation, as a list of basis matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSolutionSpace {
    pub rows: usize,
    pub cols: usize,
    pub basis: Vec<Matrix>,
}

impl MatrixSolutionSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn from_kernel(rows: usize, cols: usize, kernel: &Subspace) -> Self {
        let basis = kernel
            .basis_vectors()
            .into_iter()
            .map(|v| Matrix::new(rows, cols, v).expect("kernel vector has rows*cols entries"))
            .collect();
        MatrixSolutionSpace { rows, cols, basis }
    }

    /// Linear combination `Σ cᵢ·basisᵢ`.
    pub fn combine(&self, coeffs: &[Scalar]) -> Matrix {
        assert_eq!(coeffs.len(), self.basis.len(), "coefficient count");
        self.basis
            .iter()
            .zip(coeffs)
            .fold(Matrix::zeros(self.rows, self.cols), |acc, (b, c)| &acc + &b.scale(c))
    }
}

/// Unknown matrix `X` of shape `rows × cols`, flattened row-major; returns the
/// row of coefficients expressing entry `(i, j)` of `Σ Lₖ X Rₖ`.
fn linear_system(rows: usize, cols: usize, terms: &[(Option<&Matrix>, Option<&Matrix>, Scalar)]) -> Vec<Vec<Scalar>> {
    // entry (i,j) of L X R = Σ_{p,q} L[i,p] X[p,q] R[q,j]
    let out_rows = terms.iter().find_map(|(l, _, _)| l.map(Matrix::rows)).unwrap_or(rows);
    let out_cols = terms.iter().find_map(|(_, r, _)| r.map(Matrix::cols)).unwrap_or(cols);
    let mut eqs = Vec::with_capacity(out_rows * out_cols);
    for i in 0..out_rows {
        for j in 0..out_cols {
            let mut row = vec![Scalar::zero(); rows * cols];
            for (l, r, sign) in terms {
                for p in 0..rows {
                    let lip = match l {
                        Some(l) => l[(i, p)].clone(),
                        None if p == i => Scalar::one(),
                        None => continue,
                    };
                    if lip.is_zero() {
                        continue;
                    }
                    for q in 0..cols {
                        let rqj = match r {
                            Some(r) => r[(q, j)].clone(),
                            None if q == j => Scalar::one(),
                            None => continue,
                        };
                        if !rqj.is_zero() {
                            row[p * cols + q] += &lip * &rqj * sign;
                        }
                    }
                }
            }
            eqs.push(row);
        }
    }
    eqs
}

fn solve_stacked(rows: usize, cols: usize, equations: Vec<Vec<Scalar>>) -> MatrixSolutionSpace {
    let system = if equations.is_empty() {
        Matrix::zeros(0, rows * cols)
    } else {
        Matrix::from_rows(equations).expect("equations share the unknown count")
    };
    MatrixSolutionSpace::from_kernel(rows, cols, &system.kernel())
}

/// `{Z ∈ ℚ^{n×n} : ZM = MZ for every M}`.
pub fn commutant(n: usize, ms: &[Matrix]) -> Result<MatrixSolutionSpace> {
    let mut eqs = Vec::new();
    for (idx, m) in ms.iter().enumerate() {
        if m.shape() != (n, n) {
            return Err(Error::mismatch(format!(
                "matrix {idx} is {:?}, expected {n}x{n}",
                m.shape()
            )));
        }
        eqs.extend(linear_system(
            n,
            n,
            &[(None, Some(m), Scalar::one()), (Some(m), None, -Scalar::one())],
        ));
    }
    Ok(solve_stacked(n, n, eqs))
}

/// Which side the constraint matrices act on in [`fixed_space`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `MX = X`, with `X` of the declared shape.
    Right,
    /// `YM = Y`.
    Left,
}

/// `{X : MX = X ∀M}` (right) or `{Y : YM = Y ∀M}` (left) for `X`, `Y` of
/// shape `rows × cols`.
pub fn fixed_space(ms: &[Matrix], side: Side, rows: usize, cols: usize) -> Result<MatrixSolutionSpace> {
    let mut eqs = Vec::new();
    for (idx, m) in ms.iter().enumerate() {
        let need = match side {
            Side::Right => rows,
            Side::Left => cols,
        };
        if m.shape() != (need, need) {
            return Err(Error::mismatch(format!(
                "matrix {idx} is {:?}, expected {need}x{need} for {side:?} action on {rows}x{cols}",
                m.shape()
            )));
        }
        let (l, r) = match side {
            Side::Right => (Some(m), None),
            Side::Left => (None, Some(m)),
        };
        eqs.extend(linear_system(
            rows,
            cols,
            &[(l, r, Scalar::one()), (None, None, -Scalar::one())],
        ));
    }
    Ok(solve_stacked(rows, cols, eqs))
}

pub fn fixed_space_dimension(ms: &[Matrix], side: Side, rows: usize, cols: usize) -> Result<usize> {
    Ok(fixed_space(ms, side, rows, cols)?.dim())
}

/// Smallest subspace containing `v` and closed under every matrix in `ms`.
pub fn invariant_closure(v: &Subspace, ms: &[Matrix]) -> Result<Subspace> {
    let n = v.ambient_dim();
    if let Some(bad) = ms.iter().position(|m| m.shape() != (n, n)) {
        return Err(Error::mismatch(format!("matrix {bad} does not act on ℚ^{n}")));
    }
    let mut current = v.clone();
    loop {
        let mut next = current.clone();
        for m in ms {
            next = next.sum(&current.image_under(m)?)?;
        }
        if next.dim() == current.dim() {
            return Ok(current);
        }
        current = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    fn u() -> Matrix {
        Matrix::from_i64(&[[1, 1], [0, 1]])
    }

    fn uhat() -> Matrix {
        Matrix::from_i64(&[[1, 0], [-1, 1]])
    }

    #[test]
    fn char_poly_examples() {
        let t_minus_1_sq = Polynomial::from_i64(&[1, -2, 1]);
        assert_eq!(char_poly(&Matrix::identity(2)).unwrap(), t_minus_1_sq);
        assert_eq!(char_poly(&u()).unwrap(), t_minus_1_sq);
        assert!(char_poly(&Matrix::zeros(2, 3)).is_err());
        assert_eq!(char_poly(&Matrix::zeros(0, 0)).unwrap(), Polynomial::from_i64(&[1]));
    }

    #[test]
    fn rational_eigen_examples() {
        let d = Matrix::from_i64(&[[2, 0, 0], [0, 2, 0], [0, 0, 3]]);
        let s = rational_eigen(&d).unwrap();
        assert_eq!(s.eigenvalues, vec![(int(2), 2), (int(3), 1)]);
        assert!(s.splits());

        let rot = Matrix::from_i64(&[[0, -1], [1, 0]]);
        let s = rational_eigen(&rot).unwrap();
        assert!(s.eigenvalues.is_empty());
        assert_eq!(s.residual, Polynomial::from_i64(&[1, 0, 1]));
        assert!(!s.splits());
    }

    #[test]
    fn generalized_kernel_examples() {
        assert_eq!(generalized_kernel(&u(), &int(1), 2).unwrap(), Subspace::full(2));
        assert_eq!(
            generalized_kernel(&u(), &int(1), 1).unwrap(),
            Subspace::span(2, &[vec![int(1), int(0)]]).unwrap()
        );
        assert_eq!(
            generalized_kernel(&Matrix::identity(3), &int(1), 1).unwrap(),
            Subspace::full(3)
        );
        assert!(generalized_kernel(&u(), &int(1), 0).is_err());
    }

    #[test]
    fn commutant_examples() {
        assert_eq!(commutant(2, &[]).unwrap().dim(), 4);
        let c = commutant(2, &[u(), uhat()]).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(c.basis[0], Matrix::identity(2));
        let cu = commutant(2, &[u()]).unwrap();
        assert_eq!(cu.basis, vec![Matrix::identity(2), Matrix::from_i64(&[[0, 1], [0, 0]])]);
        assert!(commutant(3, &[u()]).is_err());
    }

    #[test]
    fn fixed_space_examples() {
        for k in 1..4 {
            assert_eq!(fixed_space_dimension(&[u(), uhat()], Side::Right, 2, k).unwrap(), 0);
            assert_eq!(fixed_space_dimension(&[u(), uhat()], Side::Left, k, 2).unwrap(), 0);
        }
        assert_eq!(
            fixed_space_dimension(&[Matrix::identity(2)], Side::Right, 2, 2).unwrap(),
            4
        );
        // U alone fixes the first coordinate axis in every column.
        assert_eq!(fixed_space_dimension(&[u()], Side::Right, 2, 3).unwrap(), 3);
        assert!(fixed_space_dimension(&[u()], Side::Left, 2, 3).is_err());
    }

    #[test]
    fn closure_under_nothing_is_identity() {
        let v = Subspace::span(3, &[vec![int(1), int(1), int(0)]]).unwrap();
        assert_eq!(invariant_closure(&v, &[]).unwrap(), v);
        let closed = invariant_closure(&Subspace::span(2, &[vec![int(1), int(0)]]).unwrap(), &[uhat()]).unwrap();
        assert_eq!(closed, Subspace::full(2));
    }
}
