use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Least non-negative residue of `a` modulo `n`.
pub fn residue(a: i64, n: u64) -> u64 {
    (a as i128).rem_euclid(n as i128) as u64
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    let mut b = base % n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, b, n);
        }
        b = mul_mod(b, b, n);
        exp >>= 1;
    }
    acc
}

pub fn gcd_i64_u64(a: i64, n: u64) -> u64 {
    (a.unsigned_abs()).gcd(&n)
}

fn require_unit(a: i64, n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if gcd_i64_u64(a, n) != 1 {
        return Err(Error::NotUnit { a: a.to_string(), n });
    }
    Ok(())
}

/// Prime factorization by trial division, ascending primes with exponents.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    Ok(factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

/// Euler's totient of an arbitrary-precision integer, by trial division.
///
/// Intended for inputs whose prime factors are small (factorials and their
/// multiples); cost grows with the square root of the largest prime factor.
pub fn euler_phi_big(n: &BigUint) -> Result<BigUint> {
    if n.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let mut rest = n.clone();
    let mut phi = n.clone();
    let mut d = 2u64;
    loop {
        let dd = BigUint::from(d) * d;
        if dd > rest {
            break;
        }
        if (&rest % d).is_zero() {
            while (&rest % d).is_zero() {
                rest /= d;
            }
            phi = phi / d * (d - 1);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        phi = &phi / &rest * (&rest - 1u32);
    }
    Ok(phi)
}

/// Multiplicative order of `a` modulo `n`: the least `k >= 1` with `a^k = 1 mod n`.
pub fn mult_order(a: i64, n: u64) -> Result<u64> {
    require_unit(a, n)?;
    if n == 1 {
        return Ok(1);
    }
    let a = residue(a, n);
    let mut order = euler_phi(n)?;
    for (p, _) in factorize(order) {
        while order % p == 0 && pow_mod(a, order / p, n) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

/// The inverse of `p` modulo `n`, normalized into `[1, n]`.
pub fn mod_inverse(p: i64, n: u64) -> Result<u64> {
    require_unit(p, n)?;
    if n == 1 {
        return Ok(1);
    }
    let a = BigInt::from(residue(p, n));
    let m = BigInt::from(n);
    let ext = a.extended_gcd(&m);
    let inv = ext.x.mod_floor(&m).to_u64().expect("inverse below modulus");
    Ok(if inv == 0 { n } else { inv })
}

/// `(1 + q + ... + q^(f-1)) mod m` for an arbitrary-precision length `f`.
///
/// Binary splitting over the bits of `f`: with `S_k` the sum of length `k`,
/// `S_2k = S_k (1 + q^k)` and `S_(2k+1) = S_2k + q^2k`. Every intermediate
/// value is reduced modulo `m`.
pub fn geometric_sum_mod_big(q: i64, f: &BigUint, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    if m == 1 {
        return Ok(0);
    }
    let q = residue(q, m);
    let mut sum = 0u64;
    let mut pow = 1u64;
    for i in (0..f.bits()).rev() {
        sum = mul_mod(sum, (1 + pow) % m, m);
        pow = mul_mod(pow, pow, m);
        if f.bit(i) {
            sum = (sum + pow) % m;
            pow = mul_mod(pow, q, m);
        }
    }
    Ok(sum)
}

pub fn geometric_sum_mod(q: i64, f: u64, m: u64) -> Result<u64> {
    geometric_sum_mod_big(q, &BigUint::from(f), m)
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).len() == 1 && factorize(n)[0].1 == 1
}

/// Primes in `[2, limit]` by the sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter(|(_, &p)| p)
        .map(|(i, _)| i as u64)
        .collect()
}

pub fn lcm_u64(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / a.gcd(&b))
        .checked_mul(b)
        .ok_or(Error::Overflow("lcm"))
}
