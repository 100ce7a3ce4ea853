//! Exact rational and modular arithmetic.
//!
//! Everything downstream (weights, degrees, residue eigenvalues, period
//! bounds) is expressed with [`Rational`] and the modular helpers here. Moduli
//! are `u64` with `u128` intermediates; quantities that grow without bound
//! (degrees, factorials, totients of factorials) use `num-bigint`.

mod modular;
mod rational;

pub use modular::{
    euler_phi, euler_phi_big, factorial, factorize, gcd_i64_u64, geometric_sum_mod,
    geometric_sum_mod_big, is_prime, lcm_u64, mod_inverse, mult_order, pow_mod, primes_up_to,
    residue,
};
pub use rational::{frac_part, Rational};

/// Serde adapter writing arbitrary-precision integers as decimal strings.
pub(crate) mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(n)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.trim().parse().map_err(serde::de::Error::custom)
    }
}
