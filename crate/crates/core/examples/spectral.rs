//! Characteristic polynomials, rational eigenvalues, generalized kernels and
//! commutants over the rationals.

use mcg_symplectic::linalg::scalar::{int, ratio};
use mcg_symplectic::linalg::{char_poly, commutant, generalized_kernel, rational_eigen, Matrix};

fn main() -> mcg_symplectic::Result<()> {
    let m = Matrix::from_rows(vec![
        vec![int(2), int(1), int(0), int(0)],
        vec![int(0), int(2), int(0), int(0)],
        vec![int(0), int(0), ratio(-1, 3), int(1)],
        vec![int(0), int(0), int(0), int(5)],
    ])?;
    let p = ratio(1, 2);
    let conj = Matrix::from_fn(4, 4, |i, j| if i <= j { int(1 + (i + j) as i64) } else { p.clone() });
    let m = m.conjugate_by(&conj)?;
    println!("M = {m}");
    println!("det(tI - M) = {}", char_poly(&m)?);

    let spec = rational_eigen(&m)?;
    for (lambda, mult) in &spec.eigenvalues {
        let chain: Vec<usize> = (1..=mult + 1)
            .map(|k| generalized_kernel(&m, lambda, k).map(|s| s.dim()))
            .collect::<Result<_, _>>()?;
        println!("eigenvalue {lambda}: multiplicity {mult}, dim ker (M - ({lambda})I)^k = {chain:?}");
    }

    let comm = commutant(4, std::slice::from_ref(&m))?;
    println!("commutant of M has dimension {}", comm.dim());
    let z = comm.combine(&(1..=comm.dim() as i64).map(int).collect::<Vec<_>>());
    let ker = generalized_kernel(&m, &int(2), 2)?;
    println!(
        "ker (M - 2)^2 is invariant under a commuting Z: {}",
        ker.is_invariant_under(&z)
    );
    Ok(())
}
