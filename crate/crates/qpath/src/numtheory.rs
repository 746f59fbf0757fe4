//! Integer-side counting: binomials, Catalan numbers, and the small
//! amount of multiplicative number theory the subset-product checks need.
//!
//! Everything here is desk scale (trial division, brute-force discrete
//! logs). The point is independence: these routines are used as oracles
//! against the polynomial and enumeration routes, so they deliberately
//! share no code with them.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k as u64))
}

/// The n-th Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigUint {
    let c = binomial(2 * n, n as i64);
    let (q, r) = num_integer::div_rem(c, BigUint::from(n + 1));
    debug_assert!(r.is_zero(), "C(2n, n) is always divisible by n + 1");
    q
}

/// Checks the doubling identity `C(2n, n) = 2 (2n - 1) C_{n-1}` that makes
/// 2n - 1 an interesting modulus for central binomials in the first place.
pub fn verify_eq1(n: u64) -> bool {
    assert!(n >= 1, "the doubling identity starts at n = 1");
    let lhs = binomial(2 * n, n as i64);
    let rhs = BigUint::from(2 * (2 * n - 1)) * catalan(n - 1);
    lhs == rhs
}

/// Trial-division primality for desk-scale inputs.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `base^exp mod m` on machine words (m fits in u64, intermediate in u128).
fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    debug_assert!(m >= 1);
    let m = m as u128;
    let mut base = base as u128 % m;
    let mut acc: u128 = 1 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u64
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            factors.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    factors
}

/// The smallest primitive root mod a prime p. Returns 1 for p = 2, whose
/// unit group is trivial.
pub fn primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!(
            "{p} is not prime; primitive roots need a prime modulus"
        )));
    }
    if p == 2 {
        return Ok(1);
    }
    let factors = prime_factors(p - 1);
    for g in 2..p {
        if factors.iter().all(|&f| mod_pow(g, (p - 1) / f, p) != 1) {
            return Ok(g);
        }
    }
    unreachable!("every odd prime has a primitive root below p");
}

/// The exponent j with `g^j = x (mod p)`, found by direct scan. Requires
/// p prime, g a primitive root, and x a unit mod p.
pub fn discrete_log(p: u64, g: u64, x: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!(
            "{p} is not prime; discrete logs need a prime modulus"
        )));
    }
    let x = x % p;
    if x == 0 {
        return Err(Error::InvalidArgument(
            "discrete log of 0 does not exist".into(),
        ));
    }
    let mut pow: u64 = 1 % p;
    for j in 0..p - 1 {
        if pow == x {
            return Ok(j);
        }
        pow = (pow as u128 * g as u128 % p as u128) as u64;
    }
    Err(Error::InvalidArgument(format!(
        "{g} does not generate the units mod {p}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(10, 4), BigUint::from(210u32));
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(5, -1), BigUint::zero());
        assert_eq!(binomial(5, 6), BigUint::zero());
        // Central binomials outgrow u64 quickly; make sure nothing truncates.
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn catalan_values() {
        let expected = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(n as u64), BigUint::from(c));
        }
    }

    #[test]
    fn doubling_identity_small_cases() {
        // C(4, 2) = 6 = 2 * 3 * C_1.
        for n in 1..=20 {
            assert!(verify_eq1(n), "doubling identity failed at n = {n}");
        }
    }

    #[test]
    fn primality_small_cases() {
        let primes: Vec<u64> = (0..60).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(7919));
        assert!(!is_prime(7917));
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(2).unwrap(), 1);
        assert_eq!(primitive_root(3).unwrap(), 2);
        assert_eq!(primitive_root(5).unwrap(), 2);
        // 2 has order 3 mod 7, so the smallest generator is 3.
        assert_eq!(primitive_root(7).unwrap(), 3);
        assert_eq!(primitive_root(11).unwrap(), 2);
        assert_eq!(primitive_root(13).unwrap(), 2);
        assert_eq!(primitive_root(41).unwrap(), 6);
        assert!(primitive_root(8).is_err());
    }

    #[test]
    fn primitive_root_generates_all_units(){
        for p in [3u64, 5, 7, 11, 13, 17, 101] {
            let g = primitive_root(p).unwrap();
            let mut seen = vec![false; p as usize];
            let mut pow = 1u64;
            for _ in 0..p - 1 {
                seen[pow as usize] = true;
                pow = pow * g % p;
            }
            assert!((1..p).all(|x| seen[x as usize]), "g = {g} misses units mod {p}");
        }
    }

    #[test]
    fn discrete_log_values() {
        assert_eq!(discrete_log(13, 2, 5).unwrap(), 9);
        assert_eq!(discrete_log(13, 2, 1).unwrap(), 0);
        assert_eq!(discrete_log(7, 3, 6).unwrap(), 3);
        assert!(discrete_log(13, 2, 0).is_err());
        assert!(discrete_log(12, 2, 5).is_err());
        // 4 generates only the squares mod 13.
        assert!(discrete_log(13, 4, 2).is_err());
    }

    #[test]
    fn discrete_log_inverts_power() {
        let p = 13;
        let g = primitive_root(p).unwrap();
        for x in 1..p {
            let j = discrete_log(p, g, x).unwrap();
            assert_eq!(mod_pow(g, j, p), x);
        }
    }
}
