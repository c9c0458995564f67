//! Conjugating a tuple of twist images to the standard block form.
//!
//! Given invertible `L₁, …, L_{2g}` acting on `ℚ^m` (with `L_{2i−1}` the image
//! of the twist about `aᵢ` and `L_{2i}` that about `bᵢ`), [`normalize`] builds
//! a basis in which every `L_{2i−1}` is `Ãᵢ = Diag(Aᵢ, I)` and every `L_{2i}` is
//! `B̃ᵢ = Diag(Bᵢ, I)`.
//!
//! The construction works handle by handle. With `Eʲ = ker(L_j − I)` and
//! `W₀ = ℚ^m`, step `k` (1-based) does:
//!
//! 1. `F = W_{k−1} ∩ E^{2k−1}`, `F' = W_{k−1} ∩ E^{2k}`, each of codimension 1
//!    in `W_{k−1}` and distinct; `W_k = F ∩ F'`.
//! 2. Pick `w ∈ F \ F'`, `w' ∈ F' \ F` and a basis of `W_k`; together with the
//!    `2k − 2` vectors already fixed this is a basis of `ℚ^m`.
//! 3. In that basis `L_{2k−1}·w' = x·w + w' + Σ xⱼ·wⱼ` with `x ≠ 0`; replace
//!    `w` by `x·w + Σ xⱼ·wⱼ`.
//! 4. Now `L_{2k}·w = w + y·w' + Σ yⱼ·wⱼ` with `y = −1`; replace `w'` by
//!    `w' − Σ yⱼ·wⱼ`.
//!
//! After step `g` the basis vectors, as columns, form the conjugator `P`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{scalar, Matrix, Scalar, Subspace};
use crate::relations::{relation_profile, RelationReport};
use crate::symplectic::GeneratorSet;
use num_traits::{One, Zero};

/// Images `L₁, …, L_{2g}` of the standard twists, all invertible `m × m`, `m ≥ 2g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationTuple {
    g: usize,
    m: usize,
    matrices: Vec<Matrix>,
}

impl RepresentationTuple {
    pub fn new(g: usize, m: usize, matrices: Vec<Matrix>) -> Result<Self> {
        if g == 0 {
            return Err(Error::Domain("genus must be at least 1".into()));
        }
        if m < 2 * g {
            return Err(Error::mismatch(format!("ambient dimension {m} < 2g = {}", 2 * g)));
        }
        if matrices.len() != 2 * g {
            return Err(Error::mismatch(format!(
                "{} matrices supplied, expected 2g = {}",
                matrices.len(),
                2 * g
            )));
        }
        for (idx, l) in matrices.iter().enumerate() {
            if l.shape() != (m, m) {
                return Err(Error::mismatch(format!(
                    "L{} is {:?}, expected {m}x{m}",
                    idx + 1,
                    l.shape()
                )));
            }
            if !l.is_invertible() {
                return Err(Error::HypothesisViolation(format!("L{} is not invertible", idx + 1)));
            }
        }
        Ok(RepresentationTuple { g, m, matrices })
    }

    /// `Ã₁, B̃₁, …, Ã_g, B̃_g` on `ℚ^m`.
    pub fn standard(g: usize, m: usize) -> Result<Self> {
        let gens = GeneratorSet::standard(g, m)?;
        Ok(RepresentationTuple {
            g,
            m,
            matrices: gens.interleaved(),
        })
    }

    pub fn identity(g: usize, m: usize) -> Result<Self> {
        Self::new(g, m, vec![Matrix::identity(m); 2 * g])
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// `L_j`, 1-based.
    pub fn get(&self, j: usize) -> &Matrix {
        &self.matrices[j - 1]
    }

    /// Replaces `L_j` (1-based), re-validating the tuple.
    pub fn with_replaced(&self, j: usize, l: Matrix) -> Result<Self> {
        let mut matrices = self.matrices.clone();
        matrices[j - 1] = l;
        Self::new(self.g, self.m, matrices)
    }

    /// `{M·L_j·M⁻¹}`.
    pub fn conjugated(&self, m: &Matrix) -> Result<Self> {
        let inv = m.inverse()?;
        let matrices = self
            .matrices
            .iter()
            .map(|l| Ok(&m.checked_mul(l)? * &inv))
            .collect::<Result<Vec<_>>>()?;
        Ok(RepresentationTuple {
            g: self.g,
            m: self.m,
            matrices,
        })
    }

    /// `{"g": g, "m": m, "matrices": [...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "g": self.g,
            "m": self.m,
            "matrices": self.matrices.iter().map(Matrix::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::format("$", "expected an object"))?;
        let count = |key: &str| -> Result<usize> {
            obj.get(key)
                .ok_or_else(|| Error::format(key, "missing field"))?
                .as_u64()
                .map(|v| v as usize)
                .ok_or_else(|| Error::format(key, "expected a non-negative integer"))
        };
        let g = count("g")?;
        let m = count("m")?;
        let list = obj
            .get("matrices")
            .ok_or_else(|| Error::format("matrices", "missing field"))?
            .as_array()
            .ok_or_else(|| Error::format("matrices", "expected an array"))?;
        if list.len() != 2 * g {
            return Err(Error::format(
                "matrices",
                format!("{} matrices, expected 2g = {}", list.len(), 2 * g),
            ));
        }
        let mut matrices = Vec::with_capacity(list.len());
        for (idx, v) in list.iter().enumerate() {
            let path = format!("matrices[{idx}]");
            let l = Matrix::from_json(v, &path)?;
            if l.shape() != (m, m) {
                return Err(Error::format(path, format!("{:?} matrix, expected {m}x{m}", l.shape())));
            }
            matrices.push(l);
        }
        Self::new(g, m, matrices)
    }
}

/// Which hypotheses of the normalization a tuple satisfies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    /// Per matrix: `(L_j − I)² = 0` and `rank(L_j − I) = 1`.
    pub unipotent_rank1: Vec<bool>,
    pub relation_pattern_ok: bool,
    pub relations: RelationReport,
    /// `ker(L₁ − I) ≠ ker(L₂ − I)`.
    pub eigenspaces_distinct: bool,
    pub overall: bool,
}

impl HypothesisReport {
    /// First failing clause, if any.
    pub fn first_failure(&self) -> Option<String> {
        if let Some(j) = self.unipotent_rank1.iter().position(|ok| !ok) {
            return Some(format!("L{} is not a rank-one unipotent", j + 1));
        }
        if let Some(v) = self.relations.violations.first() {
            return Some(v.to_string());
        }
        if !self.eigenspaces_distinct {
            return Some("ker(L1 - I) == ker(L2 - I)".into());
        }
        None
    }
}

/// Jordan type `Diag([[1,1],[0,1]], I_{m−2})`.
pub fn is_unipotent_rank1(l: &Matrix) -> bool {
    let n = l.shift(&Scalar::one());
    (&n * &n).is_zero() && n.rank() == 1
}

fn fixed_space(l: &Matrix) -> Subspace {
    l.shift(&Scalar::one()).kernel()
}

pub fn verify_hypotheses(t: &RepresentationTuple) -> HypothesisReport {
    let unipotent_rank1: Vec<bool> = t.matrices.iter().map(is_unipotent_rank1).collect();
    let relations = relation_profile(t);
    let eigenspaces_distinct = fixed_space(t.get(1)) != fixed_space(t.get(2));
    let relation_pattern_ok = relations.is_ok();
    let overall = unipotent_rank1.iter().all(|&ok| ok) && relation_pattern_ok && eigenspaces_distinct;
    HypothesisReport {
        unipotent_rank1,
        relation_pattern_ok,
        relations,
        eigenspaces_distinct,
        overall,
    }
}

/// Conjugator `P` with `P⁻¹·L_{2i−1}·P = Ãᵢ` and `P⁻¹·L_{2i}·P = B̃ᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationResult {
    pub p: Matrix,
    pub normalized: GeneratorSet,
}

impl NormalizationResult {
    pub fn to_json(&self) -> Value {
        json!({
            "P": self.p.to_json(),
            "normalized": RepresentationTuple {
                g: self.normalized.g,
                m: self.normalized.m,
                matrices: self.normalized.interleaved(),
            }
            .to_json(),
        })
    }
}

/// `P⁻¹·L_j·P` for every `j` equals the standard generator.
pub fn certifies(t: &RepresentationTuple, p: &Matrix) -> Result<bool> {
    let Ok(inv) = p.inverse() else {
        return Ok(false);
    };
    let standard = GeneratorSet::standard(t.g, t.m)?.interleaved();
    Ok(t.matrices.iter().zip(&standard).all(|(l, s)| &(&inv * l) * p == *s))
}

fn degenerate(step: usize, message: impl Into<String>) -> Error {
    Error::DegenerateStep {
        step,
        message: message.into(),
    }
}

fn combination(terms: &[(&Scalar, &[Scalar])], n: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); n];
    for (c, v) in terms {
        for (o, x) in out.iter_mut().zip(v.iter()) {
            *o += *c * x;
        }
    }
    out
}

pub fn normalize(t: &RepresentationTuple) -> Result<NormalizationResult> {
    let report = verify_hypotheses(t);
    if !report.overall {
        return Err(Error::HypothesisViolation(
            report.first_failure().unwrap_or_else(|| "hypotheses not met".into()),
        ));
    }
    let (g, m) = (t.g, t.m);
    let eigenspaces: Vec<Subspace> = t.matrices.iter().map(fixed_space).collect();
    // fixed[..2(k-1)] are final; W_{k-1} is tracked as a subspace
    let mut fixed: Vec<Vec<Scalar>> = Vec::with_capacity(m);
    let mut w_prev = Subspace::full(m);

    for k in 1..=g {
        let (la, lb) = (t.get(2 * k - 1), t.get(2 * k));
        let f_a = w_prev.intersect(&eigenspaces[2 * k - 2])?;
        let f_b = w_prev.intersect(&eigenspaces[2 * k - 1])?;
        let target = w_prev.dim().checked_sub(1).ok_or_else(|| degenerate(k, "W is zero"))?;
        if f_a.dim() != target || f_b.dim() != target {
            return Err(degenerate(
                k,
                format!(
                    "eigenspaces meet W_{} in dimensions {} and {}, expected {target}",
                    k - 1,
                    f_a.dim(),
                    f_b.dim()
                ),
            ));
        }
        if f_a == f_b {
            return Err(degenerate(
                k,
                format!("L{} and L{} fix the same hyperplane of W_{}", 2 * k - 1, 2 * k, k - 1),
            ));
        }
        let w_next = f_a.intersect(&f_b)?;
        let mut w_a = f_a
            .basis_vectors()
            .into_iter()
            .find(|v| !f_b.contains(v))
            .expect("distinct hyperplanes of equal dimension");
        let mut w_b = f_b
            .basis_vectors()
            .into_iter()
            .find(|v| !f_a.contains(v))
            .expect("distinct hyperplanes of equal dimension");
        let tail = w_next.basis_vectors();
        let pos = fixed.len();

        let basis_matrix = |w_a: &[Scalar], w_b: &[Scalar]| -> Result<Matrix> {
            let mut cols = fixed.clone();
            cols.push(w_a.to_vec());
            cols.push(w_b.to_vec());
            cols.extend(tail.iter().cloned());
            Matrix::from_columns(m, &cols)
        };

        // L_{2k-1} in the working basis: read column of w_b
        let p = basis_matrix(&w_a, &w_b)?;
        let la_local = la
            .conjugate_by(&p)
            .map_err(|_| degenerate(k, "working basis is singular"))?;
        let x = la_local[(pos, pos + 1)].clone();
        if x.is_zero() {
            return Err(degenerate(k, format!("coefficient x vanishes for L{}", 2 * k - 1)));
        }
        let mut terms: Vec<(&Scalar, &[Scalar])> = vec![(&x, &w_a)];
        let xs: Vec<Scalar> = (0..tail.len())
            .map(|j| la_local[(pos + 2 + j, pos + 1)].clone())
            .collect();
        terms.extend(xs.iter().zip(&tail).map(|(c, v)| (c, v.as_slice())));
        w_a = combination(&terms, m);

        // L_{2k} in the corrected basis: read column of w_a
        let p = basis_matrix(&w_a, &w_b)?;
        let lb_local = lb
            .conjugate_by(&p)
            .map_err(|_| degenerate(k, "working basis is singular"))?;
        let y = lb_local[(pos + 1, pos)].clone();
        if y != -Scalar::one() {
            return Err(degenerate(
                k,
                format!(
                    "coefficient y = {} for L{}, expected -1",
                    scalar::format_scalar(&y),
                    2 * k
                ),
            ));
        }
        let minus_ys: Vec<Scalar> = (0..tail.len()).map(|j| -lb_local[(pos + 2 + j, pos)].clone()).collect();
        let one = Scalar::one();
        let mut terms: Vec<(&Scalar, &[Scalar])> = vec![(&one, &w_b)];
        terms.extend(minus_ys.iter().zip(&tail).map(|(c, v)| (c, v.as_slice())));
        w_b = combination(&terms, m);

        fixed.push(w_a);
        fixed.push(w_b);
        w_prev = w_next;
    }
    fixed.extend(w_prev.basis_vectors());
    let p = Matrix::from_columns(m, &fixed)?;
    if !certifies(t, &p)? {
        return Err(degenerate(
            g,
            "assembled basis does not conjugate the tuple to standard form",
        ));
    }
    Ok(NormalizationResult {
        p,
        normalized: GeneratorSet::standard(g, m)?,
    })
}

/// Outcome of [`recognize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    Trivial,
    ConjugateToStandard(Matrix),
    Unrecognized { report: HypothesisReport, reason: String },
}

/// Sorts a tuple with `m = 2g` into trivial, conjugate to standard (with
/// certificate), or neither.
pub fn recognize(t: &RepresentationTuple) -> Result<Recognition> {
    if t.m != 2 * t.g {
        return Err(Error::mismatch(format!(
            "recognize needs m = 2g, got m = {} with g = {}",
            t.m, t.g
        )));
    }
    if t.matrices.iter().all(Matrix::is_identity) {
        return Ok(Recognition::Trivial);
    }
    let report = verify_hypotheses(t);
    if !report.overall {
        let reason = report.first_failure().unwrap_or_default();
        return Ok(Recognition::Unrecognized { report, reason });
    }
    match normalize(t) {
        Ok(res) => Ok(Recognition::ConjugateToStandard(res.p)),
        Err(e @ Error::DegenerateStep { .. }) => Ok(Recognition::Unrecognized {
            report,
            reason: e.to_string(),
        }),
        Err(e) => Err(e),
    }
}

/// Whether `P1⁻¹·P2` commutes with every standard extended generator, i.e.
/// whether two certificates differ by an element of the commutant.
pub fn conjugator_ambiguity(p1: &Matrix, p2: &Matrix, g: usize, m: usize) -> Result<bool> {
    for (name, p) in [("P1", p1), ("P2", p2)] {
        if p.shape() != (m, m) {
            return Err(Error::mismatch(format!("{name} is {:?}, expected {m}x{m}", p.shape())));
        }
    }
    let q = &p1.inverse()? * p2;
    if !q.is_invertible() {
        return Err(Error::Singular);
    }
    let gens = GeneratorSet::standard(g, m)?;
    Ok(gens.interleaved().iter().all(|s| &q * s == s * &q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{int, ratio};
    use crate::symplectic::{twist_matrix, TwistKind};

    fn conjugator(m: usize, seed: i64) -> Matrix {
        // unit lower triangular times a permuted upper triangular: always invertible
        let lower = Matrix::from_fn(m, m, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Greater => ratio((seed + 3 * i as i64 - j as i64) % 5, 1 + (i as i64 % 3)),
            std::cmp::Ordering::Equal => int(1),
            std::cmp::Ordering::Less => int(0),
        });
        let upper = Matrix::from_fn(m, m, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => int((seed * (i as i64 + 2) + j as i64) % 7 - 3),
            std::cmp::Ordering::Equal => int(2 + (i as i64 + seed) % 3),
            std::cmp::Ordering::Greater => int(0),
        });
        &lower * &upper
    }

    #[test]
    fn standard_tuple_normalizes_to_itself() {
        for (g, m) in [(1, 2), (2, 4), (2, 5), (3, 6)] {
            let t = RepresentationTuple::standard(g, m).unwrap();
            let report = verify_hypotheses(&t);
            assert!(report.overall, "{report:?}");
            let res = normalize(&t).unwrap();
            assert!(certifies(&t, &res.p).unwrap());
            assert!(conjugator_ambiguity(&res.p, &Matrix::identity(m), g, m).unwrap());
            assert_eq!(res.normalized, GeneratorSet::standard(g, m).unwrap());
        }
    }

    #[test]
    fn conjugated_tuple_round_trip() {
        for (g, m, seed) in [(2, 4, 1), (2, 6, 2), (3, 6, 3), (3, 8, 4)] {
            let c = conjugator(m, seed);
            let t = RepresentationTuple::standard(g, m).unwrap().conjugated(&c).unwrap();
            let res = normalize(&t).unwrap();
            assert!(certifies(&t, &res.p).unwrap());
            assert!(conjugator_ambiguity(&res.p, &c, g, m).unwrap());
        }
    }

    #[test]
    fn hypothesis_failures() {
        let a1 = twist_matrix(2, 1, TwistKind::A, 4).unwrap();
        let std = RepresentationTuple::standard(2, 4).unwrap();

        let same = std.with_replaced(2, a1.clone()).unwrap();
        let report = verify_hypotheses(&same);
        assert!(!report.eigenspaces_distinct);
        assert!(!report.overall);
        assert!(matches!(normalize(&same), Err(Error::HypothesisViolation(_))));

        let ident = std.with_replaced(1, Matrix::identity(4)).unwrap();
        let report = verify_hypotheses(&ident);
        assert_eq!(report.unipotent_rank1, vec![false, true, true, true]);
        assert!(!report.overall);

        let broken = std.with_replaced(2, Matrix::identity(4)).unwrap();
        let report = verify_hypotheses(&broken);
        assert_eq!(report.relations.violations[0].j, 1);
        assert_eq!(report.relations.violations[0].k, 2);
    }

    #[test]
    fn recognize_branches() {
        let id = RepresentationTuple::identity(2, 4).unwrap();
        assert_eq!(recognize(&id).unwrap(), Recognition::Trivial);

        let c = conjugator(4, 5);
        let t = RepresentationTuple::standard(2, 4).unwrap().conjugated(&c).unwrap();
        match recognize(&t).unwrap() {
            Recognition::ConjugateToStandard(p) => assert!(certifies(&t, &p).unwrap()),
            other => panic!("{other:?}"),
        }

        let a1 = twist_matrix(2, 1, TwistKind::A, 4).unwrap();
        let all_a1 = RepresentationTuple::new(2, 4, vec![a1; 4]).unwrap();
        assert!(matches!(recognize(&all_a1).unwrap(), Recognition::Unrecognized { .. }));

        let wide = RepresentationTuple::standard(2, 5).unwrap();
        assert!(recognize(&wide).is_err());
    }

    #[test]
    fn ambiguity_examples() {
        let p1 = conjugator(4, 7);
        assert!(conjugator_ambiguity(&p1, &p1, 2, 4).unwrap());
        let d = Matrix::block_diag(&[Matrix::scalar(2, int(2)), Matrix::scalar(2, int(3))]);
        assert!(conjugator_ambiguity(&p1, &(&p1 * &d), 2, 4).unwrap());
        let a1 = twist_matrix(2, 1, TwistKind::A, 4).unwrap();
        assert!(!conjugator_ambiguity(&p1, &(&p1 * &a1), 2, 4).unwrap());
        let swap = Matrix::from_i64(&[[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert!(!conjugator_ambiguity(&p1, &(&p1 * &swap), 2, 4).unwrap());
        assert!(conjugator_ambiguity(&p1, &Matrix::zeros(4, 4), 2, 4).is_err());
    }

    #[test]
    fn tuple_validation_and_json() {
        assert!(RepresentationTuple::new(2, 3, vec![Matrix::identity(3); 4]).is_err());
        assert!(RepresentationTuple::new(1, 2, vec![Matrix::identity(2)]).is_err());
        assert!(RepresentationTuple::new(1, 2, vec![Matrix::identity(2), Matrix::zeros(2, 2)]).is_err());
        let t = RepresentationTuple::standard(2, 5)
            .unwrap()
            .conjugated(&conjugator(5, 2))
            .unwrap();
        assert_eq!(RepresentationTuple::from_json(&t.to_json()).unwrap(), t);

        let mut v = t.to_json();
        v["matrices"][3]["entries"][1][2] = json!(7);
        match RepresentationTuple::from_json(&v) {
            Err(Error::Format { path, .. }) => assert_eq!(path, "matrices[3].entries[1][2]"),
            other => panic!("{other:?}"),
        }
    }
}
