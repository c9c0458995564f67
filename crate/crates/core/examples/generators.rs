//! The twist matrices A_i, B_i and their description as transvections.
//!
//!     cargo run --example generators -- 3 8

use mcg_symplectic::symplectic::{is_symplectic, transvection, twist_matrix, HomologyClass, TwistKind};

fn main() -> mcg_symplectic::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let g = args.first().copied().unwrap_or(2);
    let m = args.get(1).copied().unwrap_or(2 * g);

    for i in 1..=g {
        for kind in [TwistKind::A, TwistKind::B] {
            let t = twist_matrix(g, i, kind, m)?;
            println!("{}{i} ({m}x{m}) = {t}", kind.letter().to_ascii_uppercase());
        }
    }

    // on the 2g-dimensional part each generator is the transvection along its curve
    for i in 1..=g {
        for kind in [TwistKind::A, TwistKind::B] {
            let c = HomologyClass::basis(g, i, kind)?;
            let t = transvection(&c);
            assert_eq!(t, twist_matrix(g, i, kind, 2 * g)?);
            assert!(is_symplectic(&t, g)?);
        }
    }
    println!(
        "all {} generators are transvections and preserve the symplectic form",
        2 * g
    );
    Ok(())
}
