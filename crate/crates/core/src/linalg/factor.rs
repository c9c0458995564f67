//! Integer factorization for rational-root candidate enumeration.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u64 = 10_000;
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// All positive divisors of `n` (`n > 0`), sorted ascending.
pub(crate) fn divisors(n: &BigUint) -> Vec<BigUint> {
    assert!(!n.is_zero(), "divisors of zero");
    let mut divs = vec![BigUint::one()];
    for (p, e) in factorize(n) {
        let current = divs.clone();
        let mut pk = BigUint::one();
        for _ in 0..e {
            pk *= &p;
            divs.extend(current.iter().map(|d| d * &pk));
        }
    }
    divs.sort();
    divs
}

/// Prime factorization as `(prime, exponent)` pairs.
pub(crate) fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut primes = Vec::new();
    let mut rest = n.clone();
    let mut p = 2u64;
    while p < TRIAL_LIMIT && !rest.is_one() {
        let bp = BigUint::from(p);
        if &bp * &bp > rest {
            break;
        }
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            primes.push(bp.clone());
        }
        p += if p == 2 { 1 } else { 2 };
    }
    split(rest, &mut primes);
    primes.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

fn split(n: BigUint, primes: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        primes.push(n);
        return;
    }
    let d = pollard_brent(&n);
    split(&n / &d, primes);
    split(d, primes);
}

fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        if small < 2 {
            return false;
        }
        if WITNESSES.contains(&small) {
            return true;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &WITNESSES {
        let a = BigUint::from(a);
        if (&a % n).is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Finds a nontrivial factor of a composite `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let (mut x, mut y) = (BigUint::from(2u32), BigUint::from(2u32));
        let mut d = BigUint::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1u32;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors_of_small_numbers() {
        let d: Vec<u64> = divisors(&BigUint::from(12u32))
            .iter()
            .map(|x| x.to_u64().unwrap())
            .collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(&BigUint::one()), vec![BigUint::one()]);
    }

    #[test]
    fn factors_beyond_trial_division() {
        // 1000003 * 1000033 * 2^3
        let n = BigUint::from(1_000_003u64) * BigUint::from(1_000_033u64) * BigUint::from(8u32);
        let f = factorize(&n);
        assert_eq!(
            f,
            vec![
                (BigUint::from(2u32), 3),
                (BigUint::from(1_000_003u64), 1),
                (BigUint::from(1_000_033u64), 1)
            ]
        );
        assert_eq!(divisors(&n).len(), 16);
    }
}
