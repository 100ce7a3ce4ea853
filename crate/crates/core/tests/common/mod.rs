//! Test-only oracles and random generators.
//!
//! The oracles here work on raw integers and naive algorithms and never call
//! the code paths they are used to check.

#![allow(dead_code)]

use std::collections::BTreeMap;

use hdflow::bis_local::{CharacterSystem, LowerBlock, ResidueBlock, ResidueBlockAssembly};
use hdflow::matrix::RationalMatrix;
use hdflow::parabolic::{ParabolicShape, WeightSystem};
use hdflow::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn coprime_units(n: u64, below: u64) -> Vec<i64> {
    (1..below).filter(|&p| gcd(p, n) == 1).map(|p| p as i64).collect()
}

pub fn small_primes(below: u64) -> Vec<u64> {
    (2..below)
        .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .collect()
}

/// Length of the orbit of `x` under multiplication by `p` modulo `m`.
pub fn brute_orbit_len(x: u64, p: u64, m: u64) -> u64 {
    let start = x % m;
    let mut cur = start * p % m;
    let mut len = 1;
    while cur != start {
        cur = cur * p % m;
        len += 1;
    }
    len
}

/// Period of a multiset of numerators under `m -> p m mod n`, by iterating
/// sorted vectors until the first state reappears.
pub fn brute_multiset_period(numerators: &[u64], p: u64, n: u64) -> u64 {
    let mut start: Vec<u64> = numerators.iter().map(|m| m % n).collect();
    start.sort_unstable();
    let mut cur = start.clone();
    let mut steps = 0;
    loop {
        cur = cur.iter().map(|m| m * p % n).collect();
        cur.sort_unstable();
        steps += 1;
        if cur == start {
            return steps;
        }
    }
}

/// Random weight system: 1..=3 punctures, 1..=4 entries each.
pub fn random_weights(rng: &mut ChaCha8Rng, n: u64) -> WeightSystem {
    let mut ws = WeightSystem::new(n).unwrap();
    for i in 0..rng.gen_range(1..=3) {
        for _ in 0..rng.gen_range(1..=4) {
            ws.insert_numerator(format!("D{i}"), rng.gen_range(0..n), rng.gen_range(1..=3))
                .unwrap();
        }
    }
    ws
}

pub fn random_chars(rng: &mut ChaCha8Rng, n: u64) -> CharacterSystem {
    let mut cs = CharacterSystem::new(n).unwrap();
    for i in 0..rng.gen_range(1..=3) {
        for _ in 0..rng.gen_range(1..=4) {
            cs.insert(format!("P{i}"), rng.gen_range(0..n), rng.gen_range(1..=3))
                .unwrap();
        }
    }
    cs
}

/// Random shape of rank `1..=4` on `1..=3` punctures.
pub fn random_shape(rng: &mut ChaCha8Rng, n: u64) -> ParabolicShape {
    let rank: u64 = rng.gen_range(1..=4);
    let mut ws = WeightSystem::new(n).unwrap();
    for i in 0..rng.gen_range(1..=3) {
        for _ in 0..rank {
            ws.insert_numerator(format!("D{i}"), rng.gen_range(0..n), 1).unwrap();
        }
    }
    ParabolicShape::from_weights(rank, rng.gen_range(-20i64..=20), ws).unwrap()
}

/// Weight-level twist oracle: enumerate the filtration `V_beta = V(-a(beta) D)`
/// with `a(beta) = ceil(alpha + beta)`, `alpha = -gamma`, on a grid of `beta`
/// fine enough to see every jump. Returns `(deg V_0 - deg V, jump)`.
pub fn twist_jump_oracle(gamma: &Rational) -> (BigInt, Rational) {
    let alpha = -gamma;
    let den = gamma.denom().clone();
    let steps = BigInt::from(4) * &den;
    let a = |beta: &Rational| -> BigInt { (&alpha + beta).ceil() };
    let a0 = a(&Rational::zero());
    let mut jump = None;
    let mut j = BigInt::from(0);
    while j < steps {
        let beta = Rational::new(j.clone(), steps.clone());
        let after = Rational::new(&j * 2 + 1, &steps * 2);
        if a(&after) != a(&beta) {
            assert!(jump.is_none(), "rank one has a single jump");
            jump = Some(beta);
        }
        j += 1;
    }
    (-a0, jump.expect("a jump in [0, 1)"))
}

/// Cyclic-cover degree oracle for one flow step of a rank-one shape.
///
/// Upstairs the bundle has degree `N deg0 + sum m_i` and the eigenvector at
/// the `i`-th branch point has character `-m_i`. Frobenius pullback multiplies
/// the degree and every character by `p`. Pushing forward, the invariant
/// sections at a branch point of character `c` start at `y^t e` with the least
/// `t >= 0` such that `t + c = 0 mod N`; the zeroth piece downstairs has
/// degree `(D - sum t_i) / N` and weight `t_i / N`.
pub fn cover_flow_oracle(deg0: i64, numerators: &[u64], n: u64, p: u64) -> (BigInt, Vec<u64>) {
    let n_i = n as i64;
    let upstairs: BigInt =
        BigInt::from(n_i) * deg0 + numerators.iter().map(|&m| BigInt::from(m)).sum::<BigInt>();
    let chars: Vec<i64> = numerators.iter().map(|&m| (-(m as i64)).rem_euclid(n_i)).collect();
    let upstairs = upstairs * p;
    let chars: Vec<i64> = chars.iter().map(|&c| (c * p as i64).rem_euclid(n_i)).collect();
    let mut downstairs_weights = Vec::new();
    let mut lost = BigInt::from(0);
    for c in chars {
        let t = (0..n_i).find(|t| (t + c) % n_i == 0).unwrap();
        downstairs_weights.push(t as u64);
        lost += t;
    }
    let (deg, rem) = (upstairs - lost).div_rem(&BigInt::from(n_i));
    assert_eq!(rem, BigInt::from(0), "pushforward degree must be integral");
    (deg, downstairs_weights)
}

/// `det(t I - M)` by Gaussian elimination over the rationals.
pub fn det_shifted(m: &RationalMatrix, t: &Rational) -> Rational {
    let n = m.rows();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let d = if i == j { t.clone() } else { Rational::zero() };
                    &d - &m[(i, j)]
                })
                .collect()
        })
        .collect();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det = &det * &a[col][col];
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &a[col][col];
            for c in col..n {
                let v = &f * &a[col][c];
                a[r][c] = &a[r][c] - &v;
            }
        }
    }
    det
}

/// Characteristic polynomial coefficients (lowest first) by evaluating
/// `det(t I - M)` at `t = 0..=n` and Lagrange interpolation.
pub fn charpoly_by_interpolation(m: &RationalMatrix) -> Vec<Rational> {
    let n = m.rows();
    let xs: Vec<Rational> = (0..=n as i64).map(Rational::from).collect();
    let ys: Vec<Rational> = xs.iter().map(|x| det_shifted(m, x)).collect();
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (i, xi) in xs.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] = &next[k + 1] + b;
                next[k] = &next[k] - &(b * xj);
            }
            basis = next;
            denom = &denom * &(xi - xj);
        }
        let scale = &ys[i] / &denom;
        for (k, b) in basis.iter().enumerate() {
            coeffs[k] = &coeffs[k] + &(b * &scale);
        }
    }
    while coeffs.last().is_some_and(Rational::is_zero) {
        coeffs.pop();
    }
    coeffs
}

/// Coefficients of `prod (x - r)^k`, lowest first.
pub fn poly_from_roots(roots: &BTreeMap<Rational, u64>) -> Vec<Rational> {
    let mut p = vec![Rational::one()];
    for (r, &k) in roots {
        for _ in 0..k {
            let mut next = vec![Rational::zero(); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                next[i + 1] = &next[i + 1] + c;
                next[i] = &next[i] - &(c * r);
            }
            p = next;
        }
    }
    p
}

fn int_matrix(rows: Vec<Vec<i64>>) -> RationalMatrix {
    RationalMatrix::from_rows(
        rows.into_iter()
            .map(|r| r.into_iter().map(Rational::from).collect())
            .collect(),
    )
    .unwrap()
}

/// Random nilpotent `s x s` matrix `P U P^{-1}` with `U` strictly upper
/// triangular and `P = L R` a product of unit triangular integer matrices.
pub fn random_nilpotent(rng: &mut ChaCha8Rng, s: usize) -> RationalMatrix {
    let strict = |rng: &mut ChaCha8Rng, upper: bool, unit: bool| -> Vec<Vec<i64>> {
        (0..s)
            .map(|i| {
                (0..s)
                    .map(|j| {
                        if i == j {
                            i64::from(unit)
                        } else if (j > i) == upper {
                            rng.gen_range(-3..=3)
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let u = int_matrix(strict(rng, true, false));
    let l = int_matrix(strict(rng, false, true));
    let r = int_matrix(strict(rng, true, true));
    let p = l.mul(&r).unwrap();
    let p_inv = unit_triangular_inverse(&r, true)
        .mul(&unit_triangular_inverse(&l, false))
        .unwrap();
    assert_eq!(p.mul(&p_inv).unwrap(), RationalMatrix::identity(s));
    p.mul(&u).unwrap().mul(&p_inv).unwrap()
}

/// Inverse of a unit triangular matrix by substitution, column by column.
fn unit_triangular_inverse(m: &RationalMatrix, upper: bool) -> RationalMatrix {
    let n = m.rows();
    let mut inv = RationalMatrix::identity(n);
    for col in 0..n {
        let order: Vec<usize> = if upper {
            (0..n).rev().collect()
        } else {
            (0..n).collect()
        };
        for &i in &order {
            let mut acc = if i == col { Rational::one() } else { Rational::zero() };
            for k in 0..n {
                let off_diag = if upper { k > i } else { k < i };
                if off_diag {
                    acc = &acc - &(&m[(i, k)] * &inv[(k, col)]);
                }
            }
            inv[(i, col)] = acc;
        }
    }
    inv
}

/// Random assembly of total size at most `max_size`.
pub fn random_assembly(rng: &mut ChaCha8Rng, max_size: usize) -> ResidueBlockAssembly {
    let n: u64 = rng.gen_range(2..=12);
    let lambda = Rational::new(rng.gen_range(-6i64..=6), rng.gen_range(1i64..=4));
    let mut levels: Vec<u64> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    if levels.is_empty() {
        levels.push(rng.gen_range(0..n));
    }
    let mut blocks = Vec::new();
    let mut total = 0;
    for level in levels {
        let room = max_size - total;
        if room == 0 {
            break;
        }
        let s = rng.gen_range(1..=room.min(4));
        total += s;
        blocks.push(ResidueBlock {
            level,
            residue: random_nilpotent(rng, s),
        });
    }
    let mut lower_blocks = Vec::new();
    for i in 0..blocks.len() {
        for j in 0..i {
            if rng.gen_bool(0.7) {
                let (r, c) = (blocks[i].residue.rows(), blocks[j].residue.rows());
                let rows = (0..r)
                    .map(|_| (0..c).map(|_| rng.gen_range(-5..=5)).collect())
                    .collect();
                lower_blocks.push(LowerBlock {
                    row: i,
                    col: j,
                    matrix: int_matrix(rows),
                });
            }
        }
    }
    ResidueBlockAssembly {
        modulus: n,
        lambda,
        blocks,
        lower_blocks,
    }
}

pub struct GoldenCase {
    pub name: String,
    pub exit_code: i32,
    pub args: Vec<String>,
}

pub fn golden_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn golden_cases() -> Vec<GoldenCase> {
    let text = std::fs::read_to_string(golden_dir().join("cases.txt")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let parts: Vec<&str> = l.split('|').map(str::trim).collect();
            let [name, code, args] = parts.as_slice() else {
                panic!("bad golden line {l:?}");
            };
            GoldenCase {
                name: name.to_string(),
                exit_code: code.parse().unwrap(),
                args: args.split_whitespace().map(str::to_string).collect(),
            }
        })
        .collect()
}

/// Runs a golden case from the crate root, where relative input paths resolve.
pub fn run_golden(case: &GoldenCase) -> hdflow::cli::CommandResult {
    std::env::set_current_dir(env!("CARGO_MANIFEST_DIR")).unwrap();
    let argv = std::iter::once("hdflow".to_string()).chain(case.args.iter().cloned());
    hdflow::cli::run(argv)
}

/// Compares every case against `golden/<name>.out`. With `HDFLOW_BLESS=1`
/// the expected files are rewritten instead. Returns the mismatching names.
pub fn check_golden() -> Vec<String> {
    let bless = std::env::var_os("HDFLOW_BLESS").is_some();
    let mut failures = Vec::new();
    for case in golden_cases() {
        let path = golden_dir().join(format!("{}.out", case.name));
        let first = run_golden(&case);
        let second = run_golden(&case);
        if bless {
            std::fs::write(&path, &first.stdout).unwrap();
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_default();
        if first.exit_code != case.exit_code
            || first.stdout != expected
            || second.stdout != first.stdout
            || second.exit_code != first.exit_code
        {
            failures.push(case.name);
        }
    }
    failures
}
