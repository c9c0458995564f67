//! Which rigidity statements apply to representations of the genus-`g`
//! mapping class group in dimension `n`.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    /// Every representation is trivial.
    TrivialOnly,
    /// The image is abelian, a quotient of ℤ/10.
    AbelianImageZ10,
    /// Trivial, or conjugate to the symplectic representation.
    TrivialOrSymplectic,
    /// Dimension too small for a faithful representation.
    BelowFaithfulness,
    /// The derived subgroup of the Torelli group acts trivially, for `k = n − 2g`.
    TorelliDerivedKilled(usize),
    /// None of the above applies.
    NoStatement,
}

impl VerdictKind {
    pub fn name(&self) -> &'static str {
        match self {
            VerdictKind::TrivialOnly => "TrivialOnly",
            VerdictKind::AbelianImageZ10 => "AbelianImageZ10",
            VerdictKind::TrivialOrSymplectic => "TrivialOrSymplectic",
            VerdictKind::BelowFaithfulness => "BelowFaithfulness",
            VerdictKind::TorelliDerivedKilled(_) => "TorelliDerivedKilled",
            VerdictKind::NoStatement => "NoStatement",
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictKind::TorelliDerivedKilled(k) => write!(f, "TorelliDerivedKilled({k})"),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub citation: &'static str,
}

impl Verdict {
    pub fn to_json(&self) -> Value {
        let mut v = json!({ "kind": self.kind.name(), "citation": self.citation });
        if let VerdictKind::TorelliDerivedKilled(k) = self.kind {
            v["k"] = json!(k);
        }
        v
    }
}

/// All statements that apply to `(g, n)`; a single `NoStatement` when none does.
pub fn classify(g: usize, n: usize) -> Result<Vec<Verdict>> {
    if g < 2 {
        return Err(Error::Domain(format!("genus must be at least 2, got {g}")));
    }
    if n < 1 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    let mut out = Vec::new();
    if g >= 3 && n < 2 * g {
        out.push(Verdict {
            kind: VerdictKind::TrivialOnly,
            citation: "g >= 3, n < 2g: every homomorphism Mod(S_g) -> GL_n(C) is trivial",
        });
    }
    if g == 2 && n <= 3 {
        out.push(Verdict {
            kind: VerdictKind::AbelianImageZ10,
            citation: "g = 2, n <= 3: the image factors through the abelianization Z/10",
        });
    }
    if g >= 3 && n == 2 * g {
        out.push(Verdict {
            kind: VerdictKind::TrivialOrSymplectic,
            citation: "g >= 3, n = 2g: trivial or conjugate to the action on H_1(S_g; C)",
        });
    }
    if n >= 2 * g && g >= n - 2 * g + 3 {
        out.push(Verdict {
            kind: VerdictKind::TorelliDerivedKilled(n - 2 * g),
            citation: "n = 2g + k, g >= k + 3: the commutator subgroup of the Torelli group acts trivially",
        });
    }
    if g >= 3 && n <= 3 * g - 3 {
        out.push(Verdict {
            kind: VerdictKind::BelowFaithfulness,
            citation: "g >= 3, n <= 3g - 3: no faithful linear representation in this dimension",
        });
    }
    if out.is_empty() {
        out.push(Verdict {
            kind: VerdictKind::NoStatement,
            citation: "no rigidity statement is available for this (g, n)",
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use VerdictKind::*;

    fn kinds(g: usize, n: usize) -> Vec<VerdictKind> {
        classify(g, n).unwrap().into_iter().map(|v| v.kind).collect()
    }

    #[test]
    fn anchors() {
        assert!(kinds(3, 5).contains(&TrivialOnly));
        assert!(kinds(3, 6).contains(&TrivialOrSymplectic));
        assert!(kinds(3, 6).contains(&TorelliDerivedKilled(0)));
        assert_eq!(kinds(2, 3), vec![AbelianImageZ10]);
        assert!(kinds(6, 15).contains(&TorelliDerivedKilled(3)));
        assert_eq!(kinds(2, 5), vec![NoStatement]);
        assert_eq!(kinds(3, 12), vec![NoStatement]);
        assert!(classify(1, 2).is_err());
        assert!(classify(3, 0).is_err());
    }

    #[test]
    fn json_shape() {
        let v = classify(6, 15).unwrap();
        let t = v.iter().find(|v| v.kind.name() == "TorelliDerivedKilled").unwrap();
        assert_eq!(t.to_json()["k"], 3);
    }
}
