//! Matrix-level checks of the commutation, braid and lantern relations.
//!
//! A written word `w₁w₂` maps to the product `M(w₁)·M(w₂)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::normalize::RepresentationTuple;
use crate::symplectic::{transvection, transvection_power, GeneratorSet, HomologyClass};

fn same_square(x: &Matrix, y: &Matrix) -> Result<()> {
    if !x.is_square() || x.shape() != y.shape() {
        return Err(Error::mismatch(format!(
            "expected square matrices of equal size, got {:?} and {:?}",
            x.shape(),
            y.shape()
        )));
    }
    Ok(())
}

/// `XYX == YXY`.
pub fn check_braid(x: &Matrix, y: &Matrix) -> Result<bool> {
    same_square(x, y)?;
    Ok(&(x * y) * x == &(y * x) * y)
}

/// `XY == YX`.
pub fn check_commute(x: &Matrix, y: &Matrix) -> Result<bool> {
    same_square(x, y)?;
    Ok(x * y == y * x)
}

fn common_genus(classes: &[HomologyClass]) -> Result<usize> {
    let g = classes.first().map_or(0, HomologyClass::genus);
    if let Some(bad) = classes.iter().position(|c| c.genus() != g) {
        return Err(Error::mismatch(format!(
            "class {} has genus {}, expected {g}",
            bad + 1,
            classes[bad].genus()
        )));
    }
    Ok(g)
}

fn product(classes: &[HomologyClass], g: usize) -> Matrix {
    classes
        .iter()
        .fold(Matrix::identity(2 * g), |acc, c| &acc * &transvection(c))
}

/// `T_a·T_b·T_c·T_d == T_x·T_y·T_z` for classes `(a, b, c, d, x, y, z)`.
///
/// Only the symplectic image is checked: `true` does not mean the classes
/// bound an embedded lantern, but `false` rules one out.
pub fn check_lantern(classes: &[HomologyClass; 7]) -> Result<bool> {
    let g = common_genus(classes)?;
    Ok(product(&classes[..4], g) == product(&classes[4..], g))
}

/// The lantern solved for the first boundary twist:
/// `T_d == (T_{e'}·T_e⁻¹)(T_x·T_a⁻¹)(T_y·T_b⁻¹)` for classes laid out as
/// `(d, e, a, b, e', x, y)`, the same positions [`check_lantern`] reads as
/// `T_d·T_e·T_a·T_b == T_{e'}·T_x·T_y`.
pub fn check_lantern_rewritten(classes: &[HomologyClass; 7]) -> Result<bool> {
    let g = common_genus(classes)?;
    let [d, e, a, b, e_prev, x, y] = classes;
    let inv = |c: &HomologyClass| transvection_power(c, -1);
    let rhs = [
        &transvection(e_prev) * &inv(e),
        &transvection(x) * &inv(a),
        &transvection(y) * &inv(b),
    ]
    .iter()
    .fold(Matrix::identity(2 * g), |acc, m| &acc * m);
    Ok(transvection(d) == rhs)
}

/// `(A₁B₁A₂B₂⋯A_gB_g)³ == −I_{2g}`.
pub fn check_minus_identity(g: usize) -> Result<bool> {
    if g == 0 {
        return Err(Error::Domain("genus must be at least 1".into()));
    }
    let chain = GeneratorSet::standard(g, 2 * g)?
        .interleaved()
        .iter()
        .fold(Matrix::identity(2 * g), |acc, m| &acc * m);
    Ok(chain.pow(3)? == -&Matrix::identity(2 * g))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationKind {
    Braid,
    Commute,
}

/// A pair `(j, k)` (1-based, `j < k`) whose expected relation fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub j: usize,
    pub k: usize,
    pub expected: RelationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.expected {
            RelationKind::Braid => "braid",
            RelationKind::Commute => "commutation",
        };
        write!(f, "{rel} relation fails for (L{}, L{})", self.j, self.k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub pairs_checked: usize,
    pub violations: Vec<Violation>,
}

impl RelationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The relation expected between `L_j` and `L_k` (1-based): braid for
/// `(2i−1, 2i)`, commutation otherwise.
pub fn expected_relation(j: usize, k: usize) -> RelationKind {
    let (lo, hi) = (j.min(k), j.max(k));
    if lo % 2 == 1 && hi == lo + 1 {
        RelationKind::Braid
    } else {
        RelationKind::Commute
    }
}

/// Checks every pair of the tuple against the chain pattern: `aᵢ` meets `bᵢ`
/// once, every other pair of curves is disjoint.
pub fn relation_profile(t: &RepresentationTuple) -> RelationReport {
    let ls = t.matrices();
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    for j in 0..ls.len() {
        for k in j + 1..ls.len() {
            pairs_checked += 1;
            let expected = expected_relation(j + 1, k + 1);
            let holds = match expected {
                RelationKind::Braid => check_braid(&ls[j], &ls[k]),
                RelationKind::Commute => check_commute(&ls[j], &ls[k]),
            }
            .expect("tuple matrices share a square shape");
            if !holds {
                violations.push(Violation {
                    j: j + 1,
                    k: k + 1,
                    expected,
                });
            }
        }
    }
    RelationReport {
        pairs_checked,
        violations,
    }
}
