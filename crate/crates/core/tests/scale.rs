//! Inputs with ten-digit numerators and denominators.

use mcg_symplectic::linalg::scalar::ratio;
use mcg_symplectic::linalg::{char_poly, Matrix};
use mcg_symplectic::normalize::{certifies, conjugator_ambiguity, normalize, RepresentationTuple};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn big_entry(r: &mut impl Rng) -> mcg_symplectic::linalg::Scalar {
    ratio(
        r.gen_range(-9_999_999_999..=9_999_999_999),
        r.gen_range(1_000_000_000..=9_999_999_999),
    )
}

#[test]
fn normalization_with_large_entries() {
    let mut r = ChaCha8Rng::seed_from_u64(10);
    for (g, m) in [(2, 5), (3, 6)] {
        let p = Matrix::from_fn(m, m, |_, _| big_entry(&mut r));
        assert!(p.is_invertible());
        let t = RepresentationTuple::standard(g, m).unwrap().conjugated(&p).unwrap();
        let res = normalize(&t).unwrap();
        assert!(certifies(&t, &res.p).unwrap());
        assert!(conjugator_ambiguity(&res.p, &p, g, m).unwrap());
    }
}

#[test]
fn charpoly_with_large_entries() {
    let mut r = ChaCha8Rng::seed_from_u64(11);
    let m = Matrix::from_fn(6, 6, |_, _| big_entry(&mut r));
    let p = char_poly(&m).unwrap();
    assert_eq!(p.coeff(5), -m.trace());
    assert_eq!(p.coeff(0), m.det().unwrap());
    let q = Matrix::from_fn(6, 6, |i, j| big_entry(&mut r) + ratio((i == j) as i64 * 3, 1));
    assert_eq!(char_poly(&m.conjugate_by(&q).unwrap()).unwrap(), p);
}
