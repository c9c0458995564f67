//! Hides the standard generators behind a rational change of basis and
//! recovers a conjugator from the matrices alone.

use mcg_symplectic::linalg::scalar::ratio;
use mcg_symplectic::linalg::Matrix;
use mcg_symplectic::normalize::{
    certifies, conjugator_ambiguity, normalize, recognize, verify_hypotheses, Recognition, RepresentationTuple,
};

fn main() -> mcg_symplectic::Result<()> {
    let (g, m) = (2, 5);
    let hidden = Matrix::from_fn(m, m, |i, j| {
        ratio(((3 * i + 5 * j) % 7) as i64 - 3, 1 + ((i * j) % 4) as i64)
    })
    .checked_add(&Matrix::scalar(m, ratio(4, 1)))?;
    let t = RepresentationTuple::standard(g, m)?.conjugated(&hidden)?;
    println!("L1 = {}", t.get(1));

    let report = verify_hypotheses(&t);
    println!("hypotheses hold: {}", report.overall);

    let res = normalize(&t)?;
    println!("P = {}", res.p);
    println!("P^-1 L_j P is standard for every j: {}", certifies(&t, &res.p)?);
    println!(
        "P and the hidden conjugator differ by a commuting matrix: {}",
        conjugator_ambiguity(&res.p, &hidden, g, m)?
    );

    let square = RepresentationTuple::standard(2, 4)?.conjugated(&hidden.block(0, 0, 4, 4))?;
    match recognize(&square)? {
        Recognition::ConjugateToStandard(p) => println!("recognized as conjugate to standard via {p}"),
        other => println!("{other:?}"),
    }
    let broken = square.with_replaced(2, square.get(3).clone())?;
    if let Recognition::Unrecognized { reason, .. } = recognize(&broken)? {
        println!("after replacing L2 by L3: {reason}");
    }
    Ok(())
}
