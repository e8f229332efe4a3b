//! Integer factorisation, used only to enumerate rational-root candidates.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u32 = 50_000;

/// All positive divisors of `n`, ascending. `n` must be nonzero.
pub(crate) fn divisors(n: &BigUint) -> Vec<BigUint> {
    assert!(!n.is_zero(), "divisors of zero requested");
    let mut divs = vec![BigUint::one()];
    for (prime, exp) in factorize(n) {
        let current = divs.len();
        let mut power = BigUint::one();
        for _ in 0..exp {
            power *= &prime;
            for d in 0..current {
                let next = &divs[d] * &power;
                divs.push(next);
            }
        }
    }
    divs.sort();
    divs
}

/// Prime factorisation as (prime, exponent) pairs, ascending.
pub(crate) fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut p: u32 = 2;
    while p <= TRIAL_LIMIT && !rest.is_one() {
        if (&rest % p).is_zero() {
            let mut e = 0;
            while (&rest % p).is_zero() {
                rest /= p;
                e += 1;
            }
            out.push((BigUint::from(p), e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        let mut big = Vec::new();
        split_large(rest, &mut big);
        big.sort();
        for f in big {
            match out.last_mut() {
                Some((last, e)) if *last == f => *e += 1,
                _ => out.push((f, 1)),
            }
        }
    }
    out
}

/// Splits a cofactor with no prime factor below `TRIAL_LIMIT` into primes.
fn split_large(n: BigUint, out: &mut Vec<BigUint>) {
    let limit = BigUint::from(TRIAL_LIMIT);
    if n.is_one() {
        return;
    }
    // No factor below the trial limit, so anything under its square is prime.
    if n < &limit * &limit || is_probable_prime(&n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(&n);
    let other = &n / &d;
    split_large(d, out);
    split_large(other, out);
}

/// Miller-Rabin over the first twenty prime bases. Deterministic below
/// 3.3e24; beyond that the error probability is below 4^-20.
fn is_probable_prime(n: &BigUint) -> bool {
    const BASES: [u32; 20] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    ];
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for base in BASES {
        let a = BigUint::from(base);
        if &a >= n {
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

/// Returns a nontrivial divisor of the odd composite `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let (mut x, mut y) = (BigUint::from(2u32), BigUint::from(2u32));
        let mut d = BigUint::one();
        let mut steps: u64 = 0;
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
            steps += 1;
            if steps > 5_000_000 {
                break;
            }
        }
        if d != *n && d != one && !d.is_zero() {
            return d;
        }
        c += 1u32;
        debug_assert!(c.to_u32().is_some());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn divs(n: u64) -> Vec<u64> {
        divisors(&BigUint::from(n))
            .into_iter()
            .map(|d| d.to_u64().unwrap())
            .collect()
    }

    #[test]
    fn small_divisors() {
        assert_eq!(divs(1), vec![1]);
        assert_eq!(divs(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divs(49), vec![1, 7, 49]);
    }

    #[test]
    fn divisor_count_matches_brute_force() {
        for n in 1..400u64 {
            let brute: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divs(n), brute);
        }
    }

    #[test]
    fn large_semiprime_is_split() {
        // 1000003 * 1000033, both beyond the trial-division range
        let n = BigUint::from(1_000_003u64) * BigUint::from(1_000_033u64);
        let f = factorize(&n);
        assert_eq!(
            f,
            vec![
                (BigUint::from(1_000_003u64), 1),
                (BigUint::from(1_000_033u64), 1)
            ]
        );
        assert_eq!(divisors(&n).len(), 4);
    }
}
