//! Exact solutions of the uniqueness systems, with certificates.

use mcg_symplectic::lemmas::{linear_stage, solve_2x2_braid_centralizer, solve_block_constraint, zero_space_checks};
use mcg_symplectic::symplectic::TwistKind;

fn main() -> mcg_symplectic::Result<()> {
    let (x, cert) = solve_2x2_braid_centralizer()?;
    println!("XU = UX, XÛX = ÛXÛ, X invertible:\n{cert}");
    println!("unique solution X = {x}\n");

    for g in 1..=4 {
        let r = zero_space_checks(g, (2 * g, 2 * g))?;
        println!(
            "g = {g}: right fixed {}, left fixed {}, commutant {}",
            r.right_fixed, r.left_fixed, r.commutant
        );
    }

    let (g, k) = (3, 2);
    for role in [TwistKind::A, TwistKind::B] {
        let sol = solve_block_constraint(g, k, role)?;
        println!(
            "\nrole {:?}, g = {g}, k = {k}: linear stage has dimension {} ({} by direct count)",
            role,
            sol.linear_dimension,
            linear_stage(g, k, role)?.dim()
        );
        println!("X = {}", sol.x);
    }
    Ok(())
}
