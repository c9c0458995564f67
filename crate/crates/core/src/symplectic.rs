//! Standard twist matrices, the symplectic form, and transvections of
//! homology classes.
//!
//! Vectors are columns in the basis `(a₁, b₁, a₂, b₂, …, a_g, b_g)` and
//! matrices act on the left. The form has `ω(aᵢ, bᵢ) = +1`, and the twist
//! about a class `c` acts by `x ↦ x + ω(c, x)·c`; with these conventions the
//! twists about `aᵢ` and `bᵢ` are exactly the block matrices `Aᵢ` and `Bᵢ`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::scalar::int;
use crate::linalg::Matrix;

/// `U = [[1,1],[0,1]]` and `Û = [[1,0],[−1,1]]`.
pub fn standard_blocks() -> (Matrix, Matrix) {
    (
        Matrix::from_i64(&[[1, 1], [0, 1]]),
        Matrix::from_i64(&[[1, 0], [-1, 1]]),
    )
}

/// Which curve of the `i`-th handle a twist is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwistKind {
    A,
    B,
}

impl TwistKind {
    pub fn letter(self) -> char {
        match self {
            TwistKind::A => 'a',
            TwistKind::B => 'b',
        }
    }

    pub fn other(self) -> TwistKind {
        match self {
            TwistKind::A => TwistKind::B,
            TwistKind::B => TwistKind::A,
        }
    }
}

impl std::str::FromStr for TwistKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(TwistKind::A),
            "b" | "B" => Ok(TwistKind::B),
            _ => Err(Error::Parse {
                offset: 0,
                message: format!("expected 'a' or 'b', found {s:?}"),
            }),
        }
    }
}

/// `Diag(I₂, …, U or Û, …, I₂, I_{m−2g})` with the special block at handle `i`
/// (1-based).
pub fn twist_matrix(g: usize, i: usize, kind: TwistKind, m: usize) -> Result<Matrix> {
    if g == 0 || i == 0 || i > g {
        return Err(Error::OutOfRange(format!("handle index {i} for genus {g}")));
    }
    if m < 2 * g {
        return Err(Error::OutOfRange(format!("ambient dimension {m} < 2g = {}", 2 * g)));
    }
    let (u, uhat) = standard_blocks();
    let mut out = Matrix::identity(m);
    out.set_block(
        2 * (i - 1),
        2 * (i - 1),
        match kind {
            TwistKind::A => &u,
            TwistKind::B => &uhat,
        },
    );
    Ok(out)
}

/// Block-diagonal `J` with `g` blocks `[[0,1],[−1,0]]`.
pub fn symplectic_form(g: usize) -> Matrix {
    let j = Matrix::from_i64(&[[0, 1], [-1, 0]]);
    Matrix::block_diag(&vec![j; g])
}

/// `Mᵀ J M == J`.
pub fn is_symplectic(m: &Matrix, g: usize) -> Result<bool> {
    if m.shape() != (2 * g, 2 * g) {
        return Err(Error::mismatch(format!(
            "{:?} matrix tested against genus {g}",
            m.shape()
        )));
    }
    let j = symplectic_form(g);
    Ok(&(&m.transpose() * &j) * m == j)
}

/// A class in `H₁(S̄; ℤ) ≅ ℤ^{2g}`, coordinates in the basis `(a₁, b₁, …, a_g, b_g)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    coords: Vec<i64>,
}

impl HomologyClass {
    pub fn new(g: usize, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != 2 * g {
            return Err(Error::mismatch(format!(
                "homology class with {} coordinates for genus {g}",
                coords.len()
            )));
        }
        Ok(HomologyClass { coords })
    }

    pub fn zero(g: usize) -> Self {
        HomologyClass { coords: vec![0; 2 * g] }
    }

    /// The basis class `aᵢ` or `bᵢ` (1-based).
    pub fn basis(g: usize, i: usize, kind: TwistKind) -> Result<Self> {
        if i == 0 || i > g {
            return Err(Error::OutOfRange(format!("handle index {i} for genus {g}")));
        }
        let mut c = Self::zero(g);
        c.coords[2 * (i - 1) + (kind == TwistKind::B) as usize] = 1;
        Ok(c)
    }

    pub fn genus(&self) -> usize {
        self.coords.len() / 2
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// If this is `aᵢ` or `bᵢ` exactly, which one.
    pub fn as_basis(&self) -> Option<(usize, TwistKind)> {
        let mut nonzero = self.coords.iter().enumerate().filter(|(_, &c)| c != 0);
        match (nonzero.next(), nonzero.next()) {
            (Some((idx, 1)), None) => Some((idx / 2 + 1, if idx % 2 == 0 { TwistKind::A } else { TwistKind::B })),
            _ => None,
        }
    }

    pub fn neg(&self) -> Self {
        HomologyClass {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &HomologyClass) -> Result<Self> {
        self.check_genus(other)?;
        Ok(HomologyClass {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    fn check_genus(&self, other: &HomologyClass) -> Result<()> {
        if self.coords.len() != other.coords.len() {
            return Err(Error::mismatch(format!(
                "classes of genus {} and {}",
                self.genus(),
                other.genus()
            )));
        }
        Ok(())
    }

    /// Intersection pairing `ω(self, other)`.
    pub fn pairing(&self, other: &HomologyClass) -> Result<i64> {
        self.check_genus(other)?;
        Ok(self
            .coords
            .chunks(2)
            .zip(other.coords.chunks(2))
            .map(|(c, d)| c[0] * d[1] - c[1] * d[0])
            .sum())
    }

    /// Parses `"a1"`, `"b3"`, an integer vector `"[c1,…,c2g]"`, or a signed
    /// sum of these such as `"a1+a2-b3"`.
    pub fn parse(s: &str, g: usize) -> Result<Self> {
        let mut cur = crate::word::Cursor::new(s);
        cur.skip_ws();
        let mut sign = if cur.eat('-') { -1 } else { 1 };
        cur.skip_ws();
        let mut acc = HomologyClass::zero(g);
        loop {
            let c = cur.curve(g)?;
            acc = acc.add(&if sign < 0 { c.neg() } else { c })?;
            cur.skip_ws();
            if cur.at_end() {
                return Ok(acc);
            }
            sign = if cur.eat('+') {
                1
            } else if cur.eat('-') {
                -1
            } else {
                return Err(cur.error("expected '+', '-' or end of homology class"));
            };
            cur.skip_ws();
        }
    }
}

impl fmt::Display for HomologyClass {
    /// `a1`/`b1` for basis classes, an integer vector otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_basis() {
            Some((i, kind)) => write!(f, "{}{i}", kind.letter()),
            None => {
                let parts: Vec<String> = self.coords.iter().map(i64::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

/// Matrix of `x ↦ x + ω(c, x)·c`, i.e. `I + c·cᵀ·J`.
pub fn transvection(c: &HomologyClass) -> Matrix {
    transvection_power(c, 1)
}

/// `T_c^e = I + e·c·cᵀ·J`, valid for every integer `e` because `(T_c − I)² = 0`.
pub fn transvection_power(c: &HomologyClass, e: i64) -> Matrix {
    let g = c.genus();
    let n = 2 * g;
    // row vector cᵀJ: (cᵀJ)_k = ω(c, e_k)
    let dual: Vec<i64> = (0..n)
        .map(|k| if k % 2 == 0 { -c.coords[k + 1] } else { c.coords[k - 1] })
        .collect();
    Matrix::from_fn(n, n, |i, j| {
        let delta = (i == j) as i64;
        int(delta + e * c.coords[i] * dual[j])
    })
}

/// The standard (possibly extended) twist matrices `Ãᵢ, B̃ᵢ` acting on `ℚ^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub g: usize,
    pub m: usize,
    pub a: Vec<Matrix>,
    pub b: Vec<Matrix>,
}

impl GeneratorSet {
    pub fn standard(g: usize, m: usize) -> Result<Self> {
        let build = |kind| (1..=g).map(|i| twist_matrix(g, i, kind, m)).collect::<Result<Vec<_>>>();
        Ok(GeneratorSet {
            g,
            m,
            a: build(TwistKind::A)?,
            b: build(TwistKind::B)?,
        })
    }

    /// `A₁, B₁, A₂, B₂, …` in that order.
    pub fn interleaved(&self) -> Vec<Matrix> {
        self.a
            .iter()
            .zip(&self.b)
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect()
    }

    pub fn get(&self, i: usize, kind: TwistKind) -> &Matrix {
        match kind {
            TwistKind::A => &self.a[i - 1],
            TwistKind::B => &self.b[i - 1],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_satisfy_braid_and_order_six() {
        let (u, uhat) = standard_blocks();
        assert_eq!(&(&u * &uhat) * &u, &(&uhat * &u) * &uhat);
        assert_eq!(u.det().unwrap(), int(1));
        assert_eq!(uhat.det().unwrap(), int(1));
        let prod = &u * &uhat;
        assert_eq!(prod.pow(3).unwrap(), -&Matrix::identity(2));
    }

    #[test]
    fn twist_matrix_examples() {
        let (u, uhat) = standard_blocks();
        assert_eq!(twist_matrix(1, 1, TwistKind::A, 2).unwrap(), u);
        assert_eq!(
            twist_matrix(2, 2, TwistKind::B, 4).unwrap(),
            Matrix::block_diag(&[Matrix::identity(2), uhat])
        );
        assert_eq!(
            twist_matrix(2, 1, TwistKind::A, 5).unwrap(),
            Matrix::block_diag(&[u, Matrix::identity(3)])
        );
        assert!(twist_matrix(2, 3, TwistKind::A, 4).is_err());
        assert!(twist_matrix(2, 0, TwistKind::A, 4).is_err());
        assert!(twist_matrix(2, 1, TwistKind::A, 3).is_err());
    }

    #[test]
    fn form_conventions() {
        assert_eq!(symplectic_form(1), Matrix::from_i64(&[[0, 1], [-1, 0]]));
        let a1 = HomologyClass::basis(2, 1, TwistKind::A).unwrap();
        let b1 = HomologyClass::basis(2, 1, TwistKind::B).unwrap();
        let a2 = HomologyClass::basis(2, 2, TwistKind::A).unwrap();
        assert_eq!(a1.pairing(&b1).unwrap(), 1);
        assert_eq!(b1.pairing(&a1).unwrap(), -1);
        assert_eq!(a1.pairing(&a2).unwrap(), 0);
        let j = symplectic_form(3);
        assert_eq!(&j * &j, -&Matrix::identity(6));
        assert_eq!(j.transpose(), -&j);
    }

    #[test]
    fn transvections_of_basis_classes_are_the_twist_matrices() {
        for g in 1..=4 {
            for i in 1..=g {
                for kind in [TwistKind::A, TwistKind::B] {
                    let c = HomologyClass::basis(g, i, kind).unwrap();
                    assert_eq!(transvection(&c), twist_matrix(g, i, kind, 2 * g).unwrap());
                }
            }
            assert!(transvection(&HomologyClass::zero(g)).is_identity());
        }
    }

    #[test]
    fn symplectic_membership() {
        for g in 1..=5 {
            let gens = GeneratorSet::standard(g, 2 * g).unwrap();
            assert!(gens.interleaved().iter().all(|m| is_symplectic(m, g).unwrap()));
            assert!(is_symplectic(&Matrix::identity(2 * g), g).unwrap());
            let mut d = Matrix::identity(2 * g);
            d[(0, 0)] = int(2);
            assert!(!is_symplectic(&d, g).unwrap());
        }
        assert!(is_symplectic(&Matrix::identity(3), 1).is_err());
    }

    #[test]
    fn class_text_forms() {
        assert_eq!(
            HomologyClass::parse("b3", 3).unwrap(),
            HomologyClass::basis(3, 3, TwistKind::B).unwrap()
        );
        let c = HomologyClass::parse("[1, 0, -2, 5]", 2).unwrap();
        assert_eq!(c.coords(), &[1, 0, -2, 5]);
        assert_eq!(c.to_string(), "[1,0,-2,5]");
        assert_eq!(HomologyClass::parse("[0,1]", 1).unwrap().to_string(), "b1");
        assert!(HomologyClass::parse("a4", 3).is_err());
        assert!(HomologyClass::parse("[1,0]", 2).is_err());
        assert!(HomologyClass::parse("a1 x", 2).is_err());
        let sum = HomologyClass::parse("a1 + a2 - [0,1,0,1]", 2).unwrap();
        assert_eq!(sum.coords(), &[1, -1, 1, -1]);
        assert_eq!(HomologyClass::parse("-b1", 1).unwrap().coords(), &[0, -1]);
        assert!(HomologyClass::parse("a1+", 2).is_err());
    }
}
