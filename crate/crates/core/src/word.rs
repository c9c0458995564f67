//! Words in Dehn twists and their action on homology.
//!
//! Grammar (whitespace allowed between tokens):
//!
//! ```text
//! word   := factor+
//! factor := "t(" curve ")" ( "^" integer )?
//! curve  := "a" index | "b" index | "[" int ( "," int )* "]"
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::symplectic::{transvection_power, HomologyClass, TwistKind};

/// A product of twist powers, read left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistWord {
    pub g: usize,
    pub factors: Vec<(HomologyClass, i64)>,
}

impl TwistWord {
    pub fn new(g: usize, factors: Vec<(HomologyClass, i64)>) -> Result<Self> {
        for (c, e) in &factors {
            if c.genus() != g {
                return Err(Error::mismatch(format!("factor {c} is not of genus {g}")));
            }
            if *e == 0 {
                return Err(Error::Domain(format!("zero exponent on t({c})")));
            }
        }
        Ok(TwistWord { g, factors })
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &TwistWord) -> Result<TwistWord> {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        TwistWord::new(self.g, factors)
    }

    /// `self^k` for `k ≥ 1`.
    pub fn repeat(&self, k: usize) -> TwistWord {
        TwistWord {
            g: self.g,
            factors: (0..k).flat_map(|_| self.factors.iter().cloned()).collect(),
        }
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (c, e)) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "t({c})")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn parse_word(src: &str, g: usize) -> Result<TwistWord> {
    let mut cur = Cursor::new(src);
    let mut factors = Vec::new();
    loop {
        cur.skip_ws();
        if cur.at_end() {
            break;
        }
        cur.expect("t")?;
        cur.skip_ws();
        cur.expect("(")?;
        cur.skip_ws();
        let curve = cur.curve(g)?;
        cur.skip_ws();
        cur.expect(")")?;
        let mut exp = 1;
        let save = cur.pos;
        cur.skip_ws();
        if cur.eat('^') {
            cur.skip_ws();
            let at = cur.pos;
            exp = cur.integer()?;
            if exp == 0 {
                return Err(Error::Parse {
                    offset: at,
                    message: "zero exponent".into(),
                });
            }
        } else {
            cur.pos = save;
        }
        factors.push((curve, exp));
    }
    if factors.is_empty() {
        return Err(cur.error("empty word"));
    }
    TwistWord::new(g, factors)
}

/// Product of `T_c^e` over the factors, in written order.
pub fn evaluate_word(w: &TwistWord) -> Matrix {
    w.factors.iter().fold(Matrix::identity(2 * w.g), |acc, (c, e)| {
        &acc * &transvection_power(c, *e)
    })
}

/// Byte cursor shared by the word and homology-class parsers.
pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |c| format!("{c:?}"));
            Err(self.error(format!("expected {s:?}, found {found}")))
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().map_or(false, |c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let digits = self.digits();
        if digits.is_empty() {
            self.pos = start;
            return Err(self.error("expected an integer"));
        }
        let value: i64 = digits.parse().map_err(|_| Error::Parse {
            offset: start,
            message: "integer out of range".into(),
        })?;
        Ok(if neg { -value } else { value })
    }

    pub(crate) fn curve(&mut self, g: usize) -> Result<HomologyClass> {
        let start = self.pos;
        match self.peek() {
            Some(letter @ ('a' | 'b')) => {
                self.pos += 1;
                let digits = self.digits();
                if digits.is_empty() {
                    return Err(self.error("expected a handle index"));
                }
                let i: usize = digits.parse().map_err(|_| Error::Parse {
                    offset: start + 1,
                    message: "index out of range".into(),
                })?;
                let kind = if letter == 'a' { TwistKind::A } else { TwistKind::B };
                HomologyClass::basis(g, i, kind).map_err(|_| Error::Parse {
                    offset: start + 1,
                    message: format!("index {i} outside 1..={g}"),
                })
            }
            Some('[') => {
                self.pos += 1;
                let mut coords = Vec::new();
                loop {
                    self.skip_ws();
                    coords.push(self.integer()?);
                    self.skip_ws();
                    if self.eat(']') {
                        break;
                    }
                    self.expect(",")?;
                }
                HomologyClass::new(g, coords).map_err(|e| Error::Parse {
                    offset: start,
                    message: e.to_string(),
                })
            }
            Some(c) => Err(self.error(format!("unknown curve {c:?}; expected a<i>, b<i> or [..]"))),
            None => Err(self.error("expected a curve, found end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::is_symplectic;

    #[test]
    fn parse_examples() {
        let w = parse_word("t(a1)", 1).unwrap();
        assert_eq!(w.factors, vec![(HomologyClass::basis(1, 1, TwistKind::A).unwrap(), 1)]);

        let w = parse_word("t(a1) t(b1)^-1", 2).unwrap();
        assert_eq!(
            w.factors,
            vec![
                (HomologyClass::basis(2, 1, TwistKind::A).unwrap(), 1),
                (HomologyClass::basis(2, 1, TwistKind::B).unwrap(), -1)
            ]
        );
        assert_eq!(w.to_string(), "t(a1) t(b1)^-1");
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match parse_word("t(c9)", 2) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_word("t(a1) t(a3)", 2) {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 9);
                assert!(message.contains("outside"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_word("t([1,0,1])", 2),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(parse_word("t(a1)^0", 1), Err(Error::Parse { offset: 6, .. })));
        assert!(matches!(parse_word("", 1), Err(Error::Parse { .. })));
        assert!(matches!(parse_word("t(a1", 1), Err(Error::Parse { offset: 4, .. })));
        assert!(matches!(parse_word("t(a1)^", 1), Err(Error::Parse { offset: 6, .. })));
    }

    #[test]
    fn evaluation_examples() {
        let lhs = evaluate_word(&parse_word("t(a1) t(b1) t(a1)", 1).unwrap());
        let rhs = evaluate_word(&parse_word("t(b1) t(a1) t(b1)", 1).unwrap());
        assert_eq!(lhs, rhs);
        assert!(evaluate_word(&parse_word("t(a1)^-1 t(a1)", 1).unwrap()).is_identity());

        let chain = parse_word("t(a1) t(b1) t(a2) t(b2) t(a3) t(b3)", 3).unwrap();
        assert_eq!(evaluate_word(&chain.repeat(3)), -&Matrix::identity(6));
        assert!(is_symplectic(&evaluate_word(&chain), 3).unwrap());
    }

    #[test]
    fn vector_curves_and_whitespace() {
        let w = parse_word(" t( [ 1 , -1 ] )^ 2t(b1)", 1).unwrap();
        assert_eq!(w.factors[0].0.coords(), &[1, -1]);
        assert_eq!(w.factors[0].1, 2);
        assert_eq!(w.to_string(), "t([1,-1])^2 t(b1)");
    }
}
