//! Orbits and periods of the Higgs-de Rham flow on discrete invariants, the
//! equivariance obstruction on a cyclic cover, and explicit period bounds.
//!
//! The flow on shapes only tracks weights and the degree of the zeroth piece.
//! Hodge filtrations are not modelled, so reported periods are lower bounds
//! for the periods of actual bundles.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigUint;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{self, Rational};
use crate::error::{Error, Result};
use crate::parabolic::{
    check_characteristic, flow_step_shape, inverse_cartier_weights, pardeg, ParabolicShape,
    WeightSystem,
};

/// Why an orbit computation stopped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Termination {
    PeriodFound,
    CapReached,
    /// `pardeg != 0` and `|p| >= 2`: the parabolic degree is multiplied by `p`
    /// at every step, so no state can recur.
    NeverPeriodic { pardeg: Rational },
}

/// Orbit of a state under the flow operator.
///
/// When a period is found, `states` holds `preperiod + period + 1` entries and
/// the last one equals `states[preperiod]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowTrajectory<S> {
    pub states: Vec<S>,
    pub preperiod: usize,
    pub period: Option<usize>,
    pub p: i64,
    pub termination: Termination,
}

fn iterate<S, F>(start: S, p: i64, cap: usize, mut step: F) -> Result<FlowTrajectory<S>>
where
    S: Clone + Eq + Hash,
    F: FnMut(&S) -> Result<S>,
{
    let mut seen: HashMap<S, usize> = HashMap::new();
    let mut states = vec![start.clone()];
    seen.insert(start, 0);
    for _ in 0..cap {
        let next = step(states.last().expect("nonempty"))?;
        if let Some(&first) = seen.get(&next) {
            let period = states.len() - first;
            states.push(next);
            return Ok(FlowTrajectory {
                states,
                preperiod: first,
                period: Some(period),
                p,
                termination: Termination::PeriodFound,
            });
        }
        seen.insert(next.clone(), states.len());
        states.push(next);
    }
    Ok(FlowTrajectory {
        states,
        preperiod: 0,
        period: None,
        p,
        termination: Termination::CapReached,
    })
}

/// Iterates the inverse Cartier weight law until the system recurs.
///
/// The weight map is a bijection when `gcd(p, N) = 1`, so the preperiod is
/// always zero.
pub fn weight_orbit(ws: &WeightSystem, p: i64, cap: usize) -> Result<FlowTrajectory<WeightSystem>> {
    check_characteristic(p, ws.denominator())?;
    let traj = iterate(ws.clone(), p, cap, |w| inverse_cartier_weights(w, p))?;
    debug_assert_eq!(traj.preperiod, 0);
    Ok(traj)
}

/// Period of the weight system under `m -> p m mod N`.
///
/// `L = lcm` over distinct nonzero numerators `m` of `ord_{N / gcd(N, m)}(p)`
/// fixes every weight, so the period divides `L`. It can be a proper divisor
/// when `p^k` permutes weights within a puncture (`N = 52, p = 85`:
/// `{11/52, 15/52}` has `L = 12` but period 6), so the least divisor `k` of
/// `L` whose multiplier `p^k mod N` fixes the system is returned.
pub fn weight_period_closed_form(ws: &WeightSystem, p: i64) -> Result<u64> {
    let n = ws.denominator();
    check_characteristic(p, n)?;
    let mut lcm = 1u64;
    let mut done = std::collections::BTreeSet::new();
    for (_, m, _) in ws.iter() {
        if m == 0 || !done.insert(m) {
            continue;
        }
        let order = arith::mult_order(p, n / n.gcd(&m))?;
        lcm = arith::lcm_u64(lcm, order)?;
    }
    let mut divisors = divisors(lcm);
    divisors.sort_unstable();
    let base = arith::residue(p, n);
    for k in divisors {
        let mult = arith::pow_mod(base, k, n);
        if ws.map_numerators(|m| ((m as u128 * mult as u128) % n as u128) as u64) == *ws {
            return Ok(k);
        }
    }
    unreachable!("p^L fixes every weight")
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1];
    for (prime, exp) in arith::factorize(n) {
        let current = out.clone();
        let mut power = 1;
        for _ in 0..exp {
            power *= prime;
            out.extend(current.iter().map(|d| d * power));
        }
    }
    out
}

/// The integers entering the explicit period bound for `(N, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodBoundParams {
    #[serde(rename = "N")]
    pub n: u64,
    pub p: i64,
    /// `q = p mod N` in `[1, N]`.
    pub q: u64,
    /// `gcd(N, q - 1)`.
    pub d: u64,
    pub n_prime: u64,
    pub q_prime: u64,
    /// Largest `k` with `d^k | q'`; `None` when `q = 1` or `d = 1`.
    pub k: Option<u32>,
    pub f: u64,
}

/// Computes the bound `f` for which `N` divides `1 + p + ... + p^(f-1)`.
///
/// With `q = p mod N`, `d = gcd(N, q - 1)`, `N = d N'`, `q - 1 = d q'` and
/// `k` maximal with `d^k | q'`, the bound is `phi(N d^(k+1))`. When `q = 1` the
/// sum is `f mod N` and the bound is `N`; when `d = 1` it is `phi(N)`.
pub fn katz_period_params(n: u64, p: i64) -> Result<PeriodBoundParams> {
    check_characteristic(p, n)?;
    let q = match arith::residue(p, n) {
        0 => n,
        r => r,
    };
    let mut params = PeriodBoundParams {
        n,
        p,
        q,
        d: n,
        n_prime: 1,
        q_prime: 0,
        k: None,
        f: n,
    };
    if q != 1 {
        let d = n.gcd(&(q - 1));
        params.d = d;
        params.n_prime = n / d;
        params.q_prime = (q - 1) / d;
        if d == 1 {
            params.f = arith::euler_phi(n)?;
        } else {
            let mut k = 0u32;
            let mut rest = params.q_prime;
            while rest.is_multiple_of(d) {
                rest /= d;
                k += 1;
            }
            params.k = Some(k);
            let modulus = (0..=k).try_fold(n, |acc, _| acc.checked_mul(d));
            let modulus = modulus.ok_or(Error::Overflow("N d^(k+1)"))?;
            params.f = arith::euler_phi(modulus)?;
        }
    }
    if arith::geometric_sum_mod(p, params.f, n)? != 0 {
        return Err(Error::BoundViolated { n, p, f: params.f });
    }
    Ok(params)
}

pub fn katz_period_bound(n: u64, p: i64) -> Result<u64> {
    Ok(katz_period_params(n, p)?.f)
}

/// Least `f >= 1` with `target | 1 + p + ... + p^(f-1)`, searched up to the
/// explicit bound for `target`.
fn least_divisible_sum_length(target: u64, p: i64) -> Result<u64> {
    if target == 1 {
        return Ok(1);
    }
    let cap = katz_period_bound(target, p)?;
    let q = arith::residue(p, target);
    let mut sum = 0u64;
    let mut pow = 1u64;
    for f in 1..=cap + 1 {
        sum = (sum + pow) % target;
        if sum == 0 {
            return Ok(f);
        }
        pow = ((pow as u128 * q as u128) % target as u128) as u64;
    }
    Err(Error::SearchExhausted(cap + 1))
}

/// Least `f >= 1` with `N | l (1 + p + ... + p^(f-1))`.
pub fn minimal_geometric_period(n: u64, p: i64, l: u64) -> Result<u64> {
    check_characteristic(p, n)?;
    if l >= n {
        return Err(Error::CharacterOutOfRange { character: l, n });
    }
    least_divisible_sum_length(n / n.gcd(&l), p)
}

/// Characters `l mod N` by which the group generator scales the components of
/// a flow isomorphism on the cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivarianceDefects {
    #[serde(rename = "N")]
    modulus: u64,
    defects: Vec<u64>,
}

impl EquivarianceDefects {
    pub fn new(modulus: u64, defects: Vec<u64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if let Some(&l) = defects.iter().find(|&&l| l >= modulus) {
            return Err(Error::CharacterOutOfRange {
                character: l,
                n: modulus,
            });
        }
        Ok(EquivarianceDefects { modulus, defects })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn defects(&self) -> &[u64] {
        &self.defects
    }
}

/// Least `f` making every composite flow isomorphism equivariant:
/// `N | l (1 + p + ... + p^(f-1))` for all defects `l` at once.
pub fn minimal_equivariance_period(defects: &EquivarianceDefects, p: i64) -> Result<u64> {
    let n = defects.modulus;
    check_characteristic(p, n)?;
    let target = defects
        .defects
        .iter()
        .try_fold(1u64, |acc, &l| arith::lcm_u64(acc, n / n.gcd(&l)))?;
    least_divisible_sum_length(target, p)
}

/// `phi(N (N-2)!)`, a period bound independent of `p`.
pub fn global_period_bound(n: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    arith::euler_phi_big(&(arith::factorial(n - 2) * n))
}

/// Period of a torsion line bundle of order `m` under `L -> L^p`.
pub fn rank_one_period(m: u64, p: i64) -> Result<u64> {
    check_characteristic(p, m)?;
    arith::mult_order(p, m)
}

/// One row of a prime scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub p: u64,
    pub period: u64,
    pub bound: u64,
    #[serde(rename = "sum_mod_N")]
    pub sum_mod_n: u64,
}

/// Minimal weight period and explicit bound for every prime `p <= p_max`
/// coprime to `N`, in ascending order of `p`.
pub fn prime_scan(ws: &WeightSystem, p_max: u64) -> Result<Vec<ScanRow>> {
    if p_max < 2 {
        return Err(Error::ScanRange);
    }
    let n = ws.denominator();
    let global = if n >= 2 {
        Some(global_period_bound(n)?)
    } else {
        None
    };
    let primes: Vec<u64> = arith::primes_up_to(p_max)
        .into_iter()
        .filter(|p| n.gcd(p) == 1)
        .collect();
    primes
        .par_iter()
        .map(|&p| {
            let pi = i64::try_from(p).map_err(|_| Error::Overflow("prime"))?;
            let period = weight_period_closed_form(ws, pi)?;
            let bound = katz_period_bound(n, pi)?;
            let sum_mod_n = arith::geometric_sum_mod(pi, bound, n)?;
            if let Some(g) = &global {
                if BigUint::from(period) > *g {
                    return Err(Error::BoundViolated { n, p: pi, f: period });
                }
            }
            Ok(ScanRow {
                p,
                period,
                bound,
                sum_mod_n,
            })
        })
        .collect()
}

/// CSV with header `p,period,bound,sum_mod_N`.
pub fn scan_to_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from("p,period,bound,sum_mod_N\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.p, r.period, r.bound, r.sum_mod_n));
    }
    out
}

/// Iterates [`flow_step_shape`] until the shape recurs.
///
/// A shape of nonzero parabolic degree is reported as never periodic without
/// iterating when `|p| >= 2`.
pub fn flow_trajectory(
    shape: &ParabolicShape,
    p: i64,
    cap: usize,
) -> Result<FlowTrajectory<ParabolicShape>> {
    check_characteristic(p, shape.curve().denominator())?;
    let degree = pardeg(shape);
    if !degree.is_zero() && p.unsigned_abs() >= 2 {
        return Ok(FlowTrajectory {
            states: vec![shape.clone()],
            preperiod: 0,
            period: None,
            p,
            termination: Termination::NeverPeriodic { pardeg: degree },
        });
    }
    iterate(shape.clone(), p, cap, |s| flow_step_shape(s, p))
}
