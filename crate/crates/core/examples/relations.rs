//! Checks the defining relations among the twist matrices, then the lantern
//! relation on a configuration of seven classes.

use mcg_symplectic::relations::{
    check_braid, check_commute, check_lantern, check_lantern_rewritten, check_minus_identity,
};
use mcg_symplectic::symplectic::{GeneratorSet, HomologyClass, TwistKind::*};

fn main() -> mcg_symplectic::Result<()> {
    let g = 3;
    let gens = GeneratorSet::standard(g, 2 * g)?;
    for i in 1..=g {
        println!(
            "A{i} B{i} A{i} = B{i} A{i} B{i}: {}",
            check_braid(gens.get(i, A), gens.get(i, B))?
        );
    }
    println!("A1 B2 = B2 A1: {}", check_commute(gens.get(1, A), gens.get(2, B))?);
    println!("A1 B1 = B1 A1: {}", check_commute(gens.get(1, A), gens.get(1, B))?);
    for g in 1..=5 {
        println!("g = {g}: (A1 B1 ... Ag Bg)^3 = -I: {}", check_minus_identity(g)?);
    }

    let classes = ["a1", "a2", "a3", "a1+a2+a3", "a1+a2", "a2+a3", "a1+a3"]
        .map(|s| HomologyClass::parse(s, 3).expect("valid class"));
    println!("lantern: {}", check_lantern(&classes)?);
    println!(
        "lantern, solved for the first boundary: {}",
        check_lantern_rewritten(&classes)?
    );

    let mut wrong = classes.clone();
    wrong[6] = HomologyClass::parse("a1+b3", 3)?;
    println!("lantern with a1+a3 replaced by a1+b3: {}", check_lantern(&wrong)?);
    Ok(())
}
