//! Command-line front end.
//!
//! Every subcommand prints one JSON document to stdout. Exit status: 0 on
//! success or a true verdict, 1 on a false verdict or failed hypothesis, 2 on
//! malformed input.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::classify::classify;
use crate::error::{Error, Result};
use crate::lemmas::{
    solve_2x2_braid_centralizer, solve_block_constraint, zero_space_checks, BraidCentralizerCertificate,
};
use crate::linalg::{char_poly, rational_eigen, scalar, Matrix};
use crate::normalize::{normalize, verify_hypotheses, RepresentationTuple};
use crate::relations::{check_lantern, check_lantern_rewritten, relation_profile, RelationKind};
use crate::symplectic::{is_symplectic, twist_matrix, HomologyClass, TwistKind};
use crate::word::{evaluate_word, parse_word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "mcgsp",
    version,
    about = "Exact computations with the symplectic representation of mapping class groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the twist matrix A_i or B_i, padded to m×m (default m = 2g).
    Gen {
        g: usize,
        i: usize,
        kind: TwistKind,
        m: Option<usize>,
    },
    /// Evaluate a twist word such as "t(a1) t(b1)^-1" on homology.
    Eval { g: usize, word: String },
    /// Check the braid/commutation pattern of a tuple file.
    VerifyRelations { file: PathBuf },
    /// Find P with P^-1 L_j P equal to the standard generators.
    Normalize { file: PathBuf },
    /// List the rigidity statements for genus g and dimension n.
    Classify { g: usize, n: usize },
    /// Characteristic polynomial and rational eigenvalues of a matrix file.
    Charpoly { file: PathBuf },
    /// Solve a uniqueness system: X=U | X=A k g | X=B k g | zero-spaces g.
    SolveLemma {
        #[arg(num_args = 1..=3, allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Check the lantern relation on seven homology classes.
    Lantern {
        g: usize,
        #[arg(num_args = 7, allow_hyphen_values = true)]
        classes: Vec<String>,
    },
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((doc, code)) => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap_or_default());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::HypothesisViolation(_) | Error::DegenerateStep { .. } | Error::Singular => EXIT_FALSE,
        _ => EXIT_MALFORMED,
    }
}

fn verdict(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FALSE
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path).map_err(|e| Error::format(path.display().to_string(), e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        offset: e.column(),
        message: format!("{}: line {}: {e}", path.display(), e.line()),
    })
}

fn execute(cmd: Command) -> Result<(Value, i32)> {
    match cmd {
        Command::Gen { g, i, kind, m } => {
            let m = twist_matrix(g, i, kind, m.unwrap_or(2 * g))?;
            Ok((m.to_json(), EXIT_OK))
        }
        Command::Eval { g, word } => {
            let w = parse_word(&word, g)?;
            let m = evaluate_word(&w);
            let symplectic = is_symplectic(&m, g)?;
            let doc = json!({ "word": w.to_string(), "matrix": m.to_json(), "symplectic": symplectic });
            Ok((doc, EXIT_OK))
        }
        Command::VerifyRelations { file } => {
            let t = RepresentationTuple::from_json(&read_json(&file)?)?;
            let report = relation_profile(&t);
            let violations: Vec<Value> = report
                .violations
                .iter()
                .map(|v| {
                    let kind = match v.expected {
                        RelationKind::Braid => "braid",
                        RelationKind::Commute => "commute",
                    };
                    json!({ "j": v.j, "k": v.k, "expected": kind })
                })
                .collect();
            let hyp = verify_hypotheses(&t);
            let doc = json!({
                "ok": report.is_ok(),
                "pairs_checked": report.pairs_checked,
                "violations": violations,
                "unipotent_rank1": hyp.unipotent_rank1,
                "eigenspaces_distinct": hyp.eigenspaces_distinct,
            });
            Ok((doc, verdict(report.is_ok())))
        }
        Command::Normalize { file } => {
            let t = RepresentationTuple::from_json(&read_json(&file)?)?;
            Ok((normalize(&t)?.to_json(), EXIT_OK))
        }
        Command::Classify { g, n } => {
            let verdicts: Vec<Value> = classify(g, n)?.iter().map(|v| v.to_json()).collect();
            Ok((json!({ "g": g, "n": n, "verdicts": verdicts }), EXIT_OK))
        }
        Command::Charpoly { file } => {
            let m = Matrix::from_json(&read_json(&file)?, "$")?;
            let p = char_poly(&m)?;
            let spec = rational_eigen(&m)?;
            let eig: Vec<Value> = spec
                .eigenvalues
                .iter()
                .map(|(l, k)| json!({ "value": scalar::format_scalar(l), "multiplicity": k }))
                .collect();
            let doc = json!({
                "charpoly": p.display_in("t"),
                "coefficients": p.coeffs().iter().map(scalar::format_scalar).collect::<Vec<_>>(),
                "rational_eigenvalues": eig,
                "irrational_factor": spec.residual.display_in("t"),
            });
            Ok((doc, EXIT_OK))
        }
        Command::SolveLemma { args } => solve_lemma(&args),
        Command::Lantern { g, classes } => {
            let parsed = classes
                .iter()
                .map(|s| HomologyClass::parse(s, g))
                .collect::<Result<Vec<_>>>()?;
            let arr: [HomologyClass; 7] = parsed
                .try_into()
                .map_err(|_| Error::mismatch("expected seven classes"))?;
            let direct = check_lantern(&arr)?;
            let rewritten = check_lantern_rewritten(&arr)?;
            let doc = json!({ "lantern": direct, "rewritten": rewritten });
            Ok((doc, verdict(direct && rewritten)))
        }
    }
}

fn certificate_json(c: &BraidCentralizerCertificate) -> Value {
    let (var, value) = &c.eliminated;
    let other = if *var == 'a' { "b" } else { "a" };
    json!({
        "linear_basis": c.linear_basis.iter().map(Matrix::to_json).collect::<Vec<_>>(),
        "equations": c.equations,
        "eliminated": format!("{var} = {}", value.display_in(other)),
        "reduced": c.reduced.iter().map(|p| p.display_in(other)).collect::<Vec<_>>(),
        "gcd": c.gcd.display_in(other),
        "roots": c.roots.iter().map(|(r, k)| json!({ "value": scalar::format_scalar(r), "multiplicity": k })).collect::<Vec<_>>(),
        "determinant": c.determinant.display_in(other),
        "singleton": c.is_singleton(),
    })
}

fn index_arg(args: &[String], pos: usize, name: &str) -> Result<usize> {
    let s = args
        .get(pos)
        .ok_or_else(|| Error::Domain(format!("missing argument <{name}>")))?;
    s.parse()
        .map_err(|_| Error::Domain(format!("<{name}> must be a non-negative integer, got {s:?}")))
}

fn solve_lemma(args: &[String]) -> Result<(Value, i32)> {
    let expect_len = |n: usize| {
        if args.len() != n {
            Err(Error::Domain(format!("{} takes {} argument(s)", args[0], n - 1)))
        } else {
            Ok(())
        }
    };
    match args[0].as_str() {
        "X=U" => {
            expect_len(1)?;
            let (x, cert) = solve_2x2_braid_centralizer()?;
            Ok((
                json!({ "solution": x.to_json(), "certificate": certificate_json(&cert) }),
                EXIT_OK,
            ))
        }
        lhs @ ("X=A" | "X=B") => {
            expect_len(3)?;
            let k = index_arg(args, 1, "k")?;
            let g = index_arg(args, 2, "g")?;
            let role = if lhs == "X=A" { TwistKind::A } else { TwistKind::B };
            let sol = solve_block_constraint(g, k, role)?;
            let doc = json!({
                "solution": sol.x.to_json(),
                "linear_dimension": sol.linear_dimension,
                "certificate": certificate_json(&sol.block_certificate),
            });
            Ok((doc, EXIT_OK))
        }
        "zero-spaces" => {
            expect_len(2)?;
            let g = index_arg(args, 1, "g")?;
            let mut rows = Vec::new();
            for c in 1..=2 * g {
                let r = zero_space_checks(g, (2 * g, c))?;
                rows.push(json!({
                    "shape": [2 * g, c],
                    "right_fixed": r.right_fixed,
                    "left_fixed": r.left_fixed,
                    "commutant": r.commutant,
                }));
            }
            let ok = rows.iter().all(|r| r["right_fixed"] == 0 && r["left_fixed"] == 0);
            Ok((json!({ "g": g, "checks": rows }), verdict(ok)))
        }
        other => Err(Error::Domain(format!(
            "unknown lemma {other:?}; expected X=U, X=A, X=B or zero-spaces"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("mcgsp").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gen_and_eval() {
        let (code, out, _) = call(&["gen", "1", "1", "a"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["entries"][0][1], "1");

        let (code, out, _) = call(&["eval", "1", "t(a1) t(b1)"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"symplectic\": true"));

        let (code, _, err) = call(&["eval", "2", "t(c9)"]);
        assert_eq!(code, 2);
        assert!(err.contains("byte 2"), "{err}");
    }

    #[test]
    fn lemma_and_lantern() {
        assert_eq!(call(&["solve-lemma", "X=U"]).0, 0);
        assert_eq!(call(&["solve-lemma", "X=B", "2", "3"]).0, 0);
        assert_eq!(call(&["solve-lemma", "zero-spaces", "2"]).0, 0);
        assert_eq!(call(&["solve-lemma", "X=Q"]).0, 2);
        let lag = ["lantern", "3", "a1", "a2", "a3", "a1+a2+a3", "a1+a2", "a2+a3", "a1+a3"];
        assert_eq!(call(&lag).0, 0);
        let bad = ["lantern", "3", "a1", "a2", "a3", "a1+a2+a3", "a1+a2", "a2+a3", "b1"];
        assert_eq!(call(&bad).0, 1);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&[]).0, 2);
        assert_eq!(call(&["classify", "x", "3"]).0, 2);
        assert_eq!(call(&["classify", "1", "3"]).0, 2);
        assert_eq!(call(&["gen", "1", "1", "c"]).0, 2);
    }
}
