//! Dense matrices over the rationals.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::scalar::{self, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// A dense `rows × cols` matrix of exact rationals, stored row-major.
///
/// The arithmetic operators panic on shape mismatch; the `checked_*` methods
/// return [`Error::DimensionMismatch`] instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::mismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Scalar::one())
    }

    pub fn scalar(n: usize, value: Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = value.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from integer entries given row by row.
    ///
    /// Panics if the rows are ragged.
    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        Self::from_fn(r, c, |i, j| {
            let row = rows[i].as_ref();
            assert_eq!(row.len(), c, "ragged rows");
            scalar::int(row[j])
        })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::mismatch(format!(
                    "row {i} has {} entries, expected {c}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    /// Builds an `n × columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(n: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        if let Some(bad) = columns.iter().position(|c| c.len() != n) {
            return Err(Error::mismatch(format!("column {bad} does not have length {n}")));
        }
        Ok(Self::from_fn(n, columns.len(), |i, j| columns[j][i].clone()))
    }

    /// Block-diagonal matrix with the given square or rectangular blocks.
    pub fn block_diag(blocks: &[Matrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::mismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        // integer product after clearing row denominators of self and column
        // denominators of rhs; one reduction per output entry
        let row_den: Vec<BigInt> = (0..self.rows).map(|i| lcm_denoms(self.row(i).iter())).collect();
        let col_den: Vec<BigInt> = (0..rhs.cols)
            .map(|j| lcm_denoms((0..rhs.rows).map(|k| &rhs[(k, j)])))
            .collect();
        let lhs: Vec<BigInt> = self
            .data
            .iter()
            .enumerate()
            .map(|(idx, x)| x.numer() * (&row_den[idx / self.cols] / x.denom()))
            .collect();
        let rhs_int: Vec<BigInt> = rhs
            .data
            .iter()
            .enumerate()
            .map(|(idx, x)| x.numer() * (&col_den[idx % rhs.cols] / x.denom()))
            .collect();
        let mut acc = vec![BigInt::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &lhs[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs_int[k * rhs.cols + j];
                    if !b.is_zero() {
                        acc[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        let data = acc
            .into_iter()
            .enumerate()
            .map(|(idx, n)| Scalar::new(n, &row_den[idx / rhs.cols] * &col_den[idx % rhs.cols]))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    pub fn checked_add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::mismatch(format!(
                "shapes {:?} and {:?} differ",
                self.shape(),
                rhs.shape()
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// `self - λI`.
    pub fn shift(&self, lambda: &Scalar) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] -= lambda;
        }
        m
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, exp: i64) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::mismatch("power of a non-square matrix"));
        }
        let mut base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Reduced row-echelon form and rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let (m, pivots) = self.rref_with_pivots();
        (m, pivots.len())
    }

    /// Reduced row-echelon form together with the pivot column of each nonzero row.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        // fraction-free Gauss-Jordan on integer rows, each kept primitive
        let mut rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let den = lcm_denoms(row.iter());
                let mut v: Vec<BigInt> = row.iter().map(|x| x.numer() * (&den / x.denom())).collect();
                make_primitive(&mut v);
                v
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(p, r);
            let (before, rest) = rows.split_at_mut(r);
            let (pivot_row, after) = rest.split_first_mut().expect("row r exists");
            let piv = pivot_row[c].clone();
            for row in before.iter_mut().chain(after.iter_mut()) {
                if row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                    *x = &*x * &piv - &f * y;
                }
                make_primitive(row);
            }
            pivots.push(c);
            r += 1;
        }
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for (i, row) in rows.into_iter().enumerate() {
            match pivots.get(i) {
                Some(&c) => {
                    let piv = row[c].clone();
                    data.extend(row.into_iter().map(|x| Scalar::new(x, piv.clone())));
                }
                None => data.extend(row.into_iter().map(Scalar::from_integer)),
            }
        }
        (
            Matrix {
                rows: self.rows,
                cols: self.cols,
                data,
            },
            pivots,
        )
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// `{v : Mv = 0}` in canonical form.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis: Vec<Vec<Scalar>> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect();
        Subspace::span(self.cols, &basis).expect("kernel vectors have ambient length")
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::from_columns(self)
    }

    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::mismatch("determinant of a non-square matrix"));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = &m[(i, c)] / &pivot;
                for j in c..n {
                    let v = &factor * &m[(c, j)];
                    m[(i, j)] -= v;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::mismatch("inverse of a non-square matrix"));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &Matrix::identity(n));
        let (r, pivots) = aug.rref_with_pivots();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(r.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// `P⁻¹ · self · P`.
    pub fn conjugate_by(&self, p: &Matrix) -> Result<Matrix> {
        p.inverse()?.checked_mul(&self.checked_mul(p)?)
    }

    /// JSON matrix literal `{"rows": R, "cols": C, "entries": [["p/q", ...], ...]}`.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = (0..self.rows)
            .map(|i| {
                Value::Array(
                    self.row(i)
                        .iter()
                        .map(|x| Value::String(scalar::format_scalar(x)))
                        .collect(),
                )
            })
            .collect();
        json!({ "rows": self.rows, "cols": self.cols, "entries": entries })
    }

    /// Parses a JSON matrix literal; `path` prefixes error locations.
    pub fn from_json(value: &Value, path: &str) -> Result<Matrix> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::format(path, "expected a matrix object"))?;
        let dim = |key: &str| -> Result<usize> {
            let p = format!("{path}.{key}");
            let v = obj.get(key).ok_or_else(|| Error::format(&p, "missing field"))?;
            v.as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| Error::format(&p, "expected a non-negative integer"))
        };
        let rows = dim("rows")?;
        let cols = dim("cols")?;
        let ep = format!("{path}.entries");
        let entries = obj
            .get("entries")
            .ok_or_else(|| Error::format(&ep, "missing field"))?
            .as_array()
            .ok_or_else(|| Error::format(&ep, "expected an array of rows"))?;
        if entries.len() != rows {
            return Err(Error::format(&ep, format!("{} rows, expected {rows}", entries.len())));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for (i, row) in entries.iter().enumerate() {
            let rp = format!("{ep}[{i}]");
            let row = row.as_array().ok_or_else(|| Error::format(&rp, "expected an array"))?;
            if row.len() != cols {
                return Err(Error::format(&rp, format!("{} entries, expected {cols}", row.len())));
            }
            for (j, e) in row.iter().enumerate() {
                let xp = format!("{rp}[{j}]");
                let s = e
                    .as_str()
                    .ok_or_else(|| Error::format(&xp, "expected a string \"p\" or \"p/q\""))?;
                data.push(scalar::parse_scalar(s).map_err(|e| Error::format(&xp, e.to_string()))?);
            }
        }
        Matrix::new(rows, cols, data)
    }
}

fn lcm_denoms<'a>(xs: impl Iterator<Item = &'a Scalar>) -> BigInt {
    xs.fold(
        BigInt::one(),
        |acc, x| if x.denom().is_one() { acc } else { acc.lcm(x.denom()) },
    )
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).unwrap()
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs).unwrap()
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        self.checked_sub(rhs).unwrap()
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}{}", self.rows, self.cols, self)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(scalar::format_scalar).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{int, ratio};

    #[test]
    fn rref_examples() {
        let (r, rank) = Matrix::identity(3).rref();
        assert_eq!((r, rank), (Matrix::identity(3), 3));

        let u = Matrix::from_i64(&[[1, 1], [0, 1]]);
        assert_eq!(u.rref(), (Matrix::identity(2), 2));

        let m = Matrix::from_i64(&[[1, 2], [2, 4]]);
        assert_eq!(m.rref(), (Matrix::from_i64(&[[1, 2], [0, 0]]), 1));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(3).kernel().dim(), 0);
        let u_minus_i = Matrix::from_i64(&[[0, 1], [0, 0]]);
        let k = u_minus_i.kernel();
        assert_eq!(k, Subspace::span(2, &[vec![int(1), int(0)]]).unwrap());
        assert_eq!(Matrix::zeros(2, 2).kernel(), Subspace::full(2));
    }

    #[test]
    fn inverse_and_det() {
        let m = Matrix::from_i64(&[[2, 1], [7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, Matrix::from_i64(&[[4, -1], [-7, 2]]));
        assert_eq!(m.det().unwrap(), int(1));
        assert_eq!(Matrix::from_i64(&[[1, 2], [2, 4]]).inverse(), Err(Error::Singular));
        let h = Matrix::from_fn(3, 3, |i, j| ratio(1, (i + j + 1) as i64));
        assert_eq!(h.det().unwrap(), ratio(1, 2160));
        assert!((&h * &h.inverse().unwrap()).is_identity());
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let u = Matrix::from_i64(&[[1, 1], [0, 1]]);
        assert_eq!(u.pow(5).unwrap(), Matrix::from_i64(&[[1, 5], [0, 1]]));
        assert_eq!(u.pow(-3).unwrap(), Matrix::from_i64(&[[1, -3], [0, 1]]));
        assert!(u.pow(0).unwrap().is_identity());
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let a = Matrix::zeros(2, 3);
        assert!(matches!(a.checked_mul(&a), Err(Error::DimensionMismatch(_))));
        assert!(Matrix::new(2, 2, vec![int(1)]).is_err());
        assert!(Matrix::from_rows(vec![vec![int(1)], vec![]]).is_err());
    }

    #[test]
    fn json_round_trip_and_paths() {
        let m = Matrix::from_fn(2, 3, |i, j| ratio(i as i64 - 2 * j as i64, 3));
        let v = m.to_json();
        assert_eq!(v["entries"][0][1], "-2/3");
        assert_eq!(Matrix::from_json(&v, "m").unwrap(), m);

        let bad = json!({"rows": 1, "cols": 2, "entries": [["1", 2]]});
        match Matrix::from_json(&bad, "matrices[0]") {
            Err(Error::Format { path, .. }) => assert_eq!(path, "matrices[0].entries[0][1]"),
            other => panic!("unexpected {other:?}"),
        }
        let short = json!({"rows": 2, "cols": 1, "entries": [["1"]]});
        assert!(matches!(Matrix::from_json(&short, "x"), Err(Error::Format { .. })));
    }
}
