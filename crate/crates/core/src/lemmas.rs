//! Exact solutions of the uniqueness constraint systems for the standard
//! generators.
//!
//! The linear constraints (commutation, fixed points) are solved as nullspaces.
//! The single quadratic constraint, a braid relation on a 2×2 block, is
//! reduced to one variable by eliminating the unknown that appears linearly,
//! after which the common roots of the remaining univariate equations are read
//! off their gcd.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{commutant, fixed_space_dimension, scalar, Matrix, MatrixSolutionSpace, Polynomial, Scalar, Side};
use crate::symplectic::{standard_blocks, GeneratorSet, TwistKind};

/// Polynomial in two unknowns `(a, b)`, keyed by exponent pairs.
#[derive(Clone, PartialEq, Eq, Default)]
struct Bivariate(BTreeMap<(u32, u32), Scalar>);

impl Bivariate {
    fn term(c: Scalar, ea: u32, eb: u32) -> Self {
        let mut p = Bivariate::default();
        p.add_term((ea, eb), c);
        p
    }

    fn add_term(&mut self, key: (u32, u32), c: Scalar) {
        let entry = self.0.entry(key).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&key);
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add(&self, other: &Bivariate) -> Bivariate {
        let mut out = self.clone();
        for (k, c) in &other.0 {
            out.add_term(*k, c.clone());
        }
        out
    }

    fn neg(&self) -> Bivariate {
        Bivariate(self.0.iter().map(|(k, c)| (*k, -c)).collect())
    }

    fn mul(&self, other: &Bivariate) -> Bivariate {
        let mut out = Bivariate::default();
        for ((a1, b1), c1) in &self.0 {
            for ((a2, b2), c2) in &other.0 {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }

    /// If `self = c·v + f(other variable)` with `c` a nonzero constant and `v`
    /// the chosen variable (0 = a, 1 = b), returns `f / (−c)` so that `v = f/(−c)`.
    fn solve_linear(&self, var: usize) -> Option<Polynomial> {
        let exp = |k: &(u32, u32)| if var == 0 { k.0 } else { k.1 };
        let other = |k: &(u32, u32)| if var == 0 { k.1 } else { k.0 };
        let mut c = None;
        let mut rest = Vec::new();
        for (k, v) in &self.0 {
            match exp(k) {
                0 => rest.push((other(k) as usize, v.clone())),
                1 if other(k) == 0 => c = Some(v.clone()),
                _ => return None,
            }
        }
        let c = c?;
        let deg = rest.iter().map(|(d, _)| *d).max().unwrap_or(0);
        let mut coeffs = vec![Scalar::zero(); deg + 1];
        for (d, v) in rest {
            coeffs[d] = -v / &c;
        }
        Some(Polynomial::new(coeffs))
    }

    /// Substitutes `var := value(other)` and returns a polynomial in the other variable.
    fn substitute(&self, var: usize, value: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (k, c) in &self.0 {
            let (e_var, e_other) = if var == 0 { (k.0, k.1) } else { (k.1, k.0) };
            let mut mono = Polynomial::constant(c.clone());
            for _ in 0..e_var {
                mono = &mono * value;
            }
            let mut shift = vec![Scalar::zero(); e_other as usize];
            shift.push(Scalar::one());
            mono = &mono * &Polynomial::new(shift);
            out = &out + &mono;
        }
        out
    }
}

impl fmt::Display for Bivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((ea, eb), c) in self.0.iter().rev() {
            let neg = c < &Scalar::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mut parts = Vec::new();
            if !mag.is_one() || (*ea == 0 && *eb == 0) {
                parts.push(scalar::format_scalar(&mag));
            }
            for (name, e) in [("a", *ea), ("b", *eb)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

type PolyMatrix = [[Bivariate; 2]; 2];

fn poly_matrix(m: &Matrix) -> PolyMatrix {
    std::array::from_fn(|i| std::array::from_fn(|j| Bivariate::term(m[(i, j)].clone(), 0, 0)))
}

fn poly_mul(x: &PolyMatrix, y: &PolyMatrix) -> PolyMatrix {
    std::array::from_fn(|i| std::array::from_fn(|j| x[i][0].mul(&y[0][j]).add(&x[i][1].mul(&y[1][j]))))
}

/// Certificate for the 2×2 system `XC = CX`, `XDX = DXD`, `X` invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidCentralizerCertificate {
    /// Basis `K₁, K₂` of the commutant of `C`; the unknown is `X = a·K₁ + b·K₂`.
    pub linear_basis: Vec<Matrix>,
    /// Nonzero entries of `XDX − DXD`, as text in `a`, `b`.
    pub equations: Vec<String>,
    /// The eliminated unknown and its value, e.g. `("b", -a^2 + 2a)`.
    pub eliminated: (char, Polynomial),
    /// Remaining equations after substitution, in the surviving unknown.
    pub reduced: Vec<Polynomial>,
    /// Monic gcd of `reduced`: its roots are exactly the common complex solutions.
    pub gcd: Polynomial,
    /// Rational roots of `gcd` with multiplicity.
    pub roots: Vec<(Scalar, usize)>,
    /// Part of `gcd` without rational roots; constant iff every complex
    /// solution is rational.
    pub residual: Polynomial,
    /// `det X` after substitution.
    pub determinant: Polynomial,
    /// Solutions with `det X ≠ 0`.
    pub solutions: Vec<Matrix>,
}

impl BraidCentralizerCertificate {
    /// Exactly one invertible solution, and none outside ℚ.
    pub fn is_singleton(&self) -> bool {
        self.solutions.len() == 1 && self.residual.degree() == Some(0)
    }
}

impl fmt::Display for BraidCentralizerCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (var, value) = &self.eliminated;
        let other = if *var == 'a' { "b" } else { "a" };
        writeln!(f, "X = a*{} + b*{}", self.linear_basis[0], self.linear_basis[1])?;
        for e in &self.equations {
            writeln!(f, "  {e} = 0")?;
        }
        writeln!(f, "eliminate {var} = {}", value.display_in(other))?;
        for r in &self.reduced {
            writeln!(f, "  {} = 0", r.display_in(other))?;
        }
        writeln!(f, "gcd = {}", self.gcd.display_in(other))?;
        writeln!(f, "det X = {}", self.determinant.display_in(other))?;
        write!(f, "invertible solutions: {}", self.solutions.len())?;
        for s in &self.solutions {
            write!(f, " {s}")?;
        }
        Ok(())
    }
}

/// Solves `XC = CX`, `XDX = DXD` over 2×2 invertible matrices.
pub fn solve_braid_centralizer(commuting: &Matrix, braiding: &Matrix) -> Result<BraidCentralizerCertificate> {
    for m in [commuting, braiding] {
        if m.shape() != (2, 2) {
            return Err(Error::mismatch("expected 2x2 matrices"));
        }
    }
    let space = commutant(2, std::slice::from_ref(commuting))?;
    if space.dim() != 2 {
        return Err(Error::Domain(format!(
            "commutant of the commuting matrix has dimension {}, expected 2",
            space.dim()
        )));
    }
    let (k1, k2) = (&space.basis[0], &space.basis[1]);
    let x: PolyMatrix = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            Bivariate::term(k1[(i, j)].clone(), 1, 0).add(&Bivariate::term(k2[(i, j)].clone(), 0, 1))
        })
    });
    let d = poly_matrix(braiding);
    let lhs = poly_mul(&poly_mul(&x, &d), &x);
    let rhs = poly_mul(&poly_mul(&d, &x), &d);
    let mut eqs: Vec<Bivariate> = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let e = lhs[i][j].add(&rhs[i][j].neg());
            if !e.is_zero() && !eqs.contains(&e) {
                eqs.push(e);
            }
        }
    }
    let det = x[0][0].mul(&x[1][1]).add(&x[0][1].mul(&x[1][0]).neg());

    let (var, pivot, value) = [1usize, 0]
        .iter()
        .find_map(|&var| {
            eqs.iter()
                .enumerate()
                .find_map(|(idx, e)| e.solve_linear(var).map(|v| (var, idx, v)))
        })
        .ok_or_else(|| Error::Domain("no equation is linear in a single unknown".into()))?;

    let reduced: Vec<Polynomial> = eqs
        .iter()
        .enumerate()
        .filter(|&(idx, _)| idx != pivot)
        .map(|(_, e)| e.substitute(var, &value))
        .filter(|p| !p.is_zero())
        .collect();
    let gcd = reduced.iter().fold(Polynomial::zero(), |acc, p| acc.gcd(p));
    if gcd.is_zero() {
        return Err(Error::Domain("solution set is not finite".into()));
    }
    let (roots, residual) = gcd.rational_roots();
    let determinant = det.substitute(var, &value);
    let solutions = roots
        .iter()
        .filter(|(r, _)| !determinant.eval(r).is_zero())
        .map(|(r, _)| {
            let v = value.eval(r);
            let (a, b) = if var == 1 { (r.clone(), v) } else { (v, r.clone()) };
            &k1.scale(&a) + &k2.scale(&b)
        })
        .collect();

    Ok(BraidCentralizerCertificate {
        linear_basis: space.basis.clone(),
        equations: eqs.iter().map(ToString::to_string).collect(),
        eliminated: (if var == 1 { 'b' } else { 'a' }, value),
        reduced,
        gcd,
        roots,
        residual,
        determinant,
        solutions,
    })
}

/// `{X : XU = UX, XÛX = ÛXÛ, X invertible}`; the unique solution is `U`.
pub fn solve_2x2_braid_centralizer() -> Result<(Matrix, BraidCentralizerCertificate)> {
    let (u, uhat) = standard_blocks();
    let cert = solve_braid_centralizer(&u, &uhat)?;
    let x = unique_solution(&cert)?;
    Ok((x, cert))
}

fn unique_solution(cert: &BraidCentralizerCertificate) -> Result<Matrix> {
    if !cert.is_singleton() {
        return Err(Error::Domain(format!(
            "expected a unique solution, found {} (residual {})",
            cert.solutions.len(),
            cert.residual
        )));
    }
    Ok(cert.solutions[0].clone())
}

/// Solution of the block constraint system for handle `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSolution {
    pub x: Matrix,
    /// Dimension of the solution space of the linear (commutation) constraints.
    pub linear_dimension: usize,
    pub block_certificate: BraidCentralizerCertificate,
}

/// Solves, for `role = A`: `X` unipotent, `X` commutes with every `Aᵢ` and
/// with every `Bⱼ` (`j ≠ k`), and `X·B_k·X = B_k·X·B_k`. The roles of the
/// `A`'s and `B`'s swap for `role = B`. The unique solution is `A_k` (`B_k`).
pub fn solve_block_constraint(g: usize, k: usize, role: TwistKind) -> Result<BlockSolution> {
    if g == 0 || k == 0 || k > g {
        return Err(Error::OutOfRange(format!("handle {k} for genus {g}")));
    }
    let n = 2 * g;
    let gens = GeneratorSet::standard(g, n)?;
    let other = role.other();
    let mut linear: Vec<Matrix> = (1..=g).map(|i| gens.get(i, role).clone()).collect();
    linear.extend((1..=g).filter(|&j| j != k).map(|j| gens.get(j, other).clone()));
    let braid_with = gens.get(k, other).clone();

    let space = linear_stage(g, k, role)?;
    let off = 2 * (k - 1);

    // every solution is block diagonal; blocks away from k are scalar
    for (idx, z) in space.basis.iter().enumerate() {
        for bi in 0..g {
            for bj in 0..g {
                let block = z.block(2 * bi, 2 * bj, 2, 2);
                let ok = if bi != bj {
                    block.is_zero()
                } else if bi != k - 1 {
                    block[(0, 1)].is_zero() && block[(1, 0)].is_zero() && block[(0, 0)] == block[(1, 1)]
                } else {
                    true
                };
                if !ok {
                    return Err(Error::Domain(format!(
                        "linear solution {idx} has unexpected block ({},{})",
                        bi + 1,
                        bj + 1
                    )));
                }
            }
        }
    }
    // eigenvalues all 1 forces each scalar block to I₂; the k-th block is a
    // 2x2 braid-centralizer problem
    let (u, uhat) = standard_blocks();
    let (commuting, braiding) = match role {
        TwistKind::A => (u, uhat),
        TwistKind::B => (uhat, u),
    };
    let cert = solve_braid_centralizer(&commuting, &braiding)?;
    let block = unique_solution(&cert)?;
    let mut x = Matrix::identity(n);
    x.set_block(off, off, &block);

    let unipotent = {
        let nil = x.shift(&Scalar::one());
        nil.pow(n as i64)?.is_zero()
    };
    let commutes = linear.iter().all(|l| &x * l == l * &x);
    let braids = &(&x * &braid_with) * &x == &(&braid_with * &x) * &braid_with;
    if !(unipotent && commutes && braids) {
        return Err(Error::Domain("assembled solution fails re-substitution".into()));
    }
    Ok(BlockSolution {
        x,
        linear_dimension: space.dim(),
        block_certificate: cert,
    })
}

/// Solution space of the commutation constraints alone.
pub fn linear_stage(g: usize, k: usize, role: TwistKind) -> Result<MatrixSolutionSpace> {
    if g == 0 || k == 0 || k > g {
        return Err(Error::OutOfRange(format!("handle {k} for genus {g}")));
    }
    let gens = GeneratorSet::standard(g, 2 * g)?;
    let mut linear: Vec<Matrix> = (1..=g).map(|i| gens.get(i, role).clone()).collect();
    linear.extend((1..=g).filter(|&j| j != k).map(|j| gens.get(j, role.other()).clone()));
    commutant(2 * g, &linear)
}

/// Dimensions of the three solution spaces for a generator set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroSpaceReport {
    /// `dim {X : MX = X ∀M}` with `X` of shape `rows × cols`.
    pub right_fixed: usize,
    /// `dim {Y : YM = Y ∀M}` with `Y` of shape `cols × rows`.
    pub left_fixed: usize,
    /// `dim {Z : ZM = MZ ∀M}`.
    pub commutant: usize,
}

impl ZeroSpaceReport {
    pub fn as_tuple(&self) -> (usize, usize, usize) {
        (self.right_fixed, self.left_fixed, self.commutant)
    }
}

/// Fixed-space and commutant dimensions for `{Aᵢ, Bᵢ}` in genus `g`, with `X`
/// of shape `2g × cols`.
pub fn zero_space_checks(g: usize, shape: (usize, usize)) -> Result<ZeroSpaceReport> {
    let gens = GeneratorSet::standard(g, 2 * g)?;
    zero_space_checks_for(&gens.interleaved(), shape)
}

/// As [`zero_space_checks`] for an arbitrary set of square matrices.
pub fn zero_space_checks_for(ms: &[Matrix], shape: (usize, usize)) -> Result<ZeroSpaceReport> {
    let (rows, cols) = shape;
    Ok(ZeroSpaceReport {
        right_fixed: fixed_space_dimension(ms, Side::Right, rows, cols)?,
        left_fixed: fixed_space_dimension(ms, Side::Left, cols, rows)?,
        commutant: commutant(rows, ms)?.dim(),
    })
}
