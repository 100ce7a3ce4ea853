//! Local dictionary at a branch point of a cyclic cover of order `N`.
//!
//! Let `sigma` generate `G = Z/N`, acting on a local coordinate by
//! `sigma(y) = zeta y`. An eigenvector `e` with `sigma(e) = zeta^c e` carries the
//! character `c mod N`; its invariant multiples are `y^t e` with
//! `t = -c mod N`, so it contributes the parabolic weight `<-c/N>` to the
//! pushforward. Frobenius pullback multiplies characters by `p`, which on
//! weights is the inverse Cartier law.
//!
//! The residue side builds the block lower-triangular residue of a pushforward
//! `lambda`-connection and checks its eigenvalue law exactly.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{self, Rational};
use crate::error::{Error, Result};
use crate::matrix::{RationalMatrix, RationalPoly};
use crate::parabolic::{check_characteristic, WeightSystem};

/// Per-branch-point multisets of characters `c mod N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CharacterRepr", into = "CharacterRepr")]
pub struct CharacterSystem {
    modulus: u64,
    points: BTreeMap<String, BTreeMap<u64, u64>>,
}

#[derive(Serialize, Deserialize)]
struct CharacterEntry {
    character: u64,
    mult: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CharacterRepr {
    #[serde(rename = "N")]
    modulus: u64,
    characters: BTreeMap<String, Vec<CharacterEntry>>,
}

impl TryFrom<CharacterRepr> for CharacterSystem {
    type Error = Error;
    fn try_from(r: CharacterRepr) -> Result<Self> {
        let mut cs = CharacterSystem::new(r.modulus)?;
        for (label, entries) in r.characters {
            for e in entries {
                cs.insert(label.clone(), e.character, e.mult)?;
            }
        }
        Ok(cs)
    }
}

impl From<CharacterSystem> for CharacterRepr {
    fn from(cs: CharacterSystem) -> Self {
        CharacterRepr {
            modulus: cs.modulus,
            characters: cs
                .points
                .into_iter()
                .map(|(l, m)| {
                    let entries = m
                        .into_iter()
                        .map(|(character, mult)| CharacterEntry { character, mult })
                        .collect();
                    (l, entries)
                })
                .collect(),
        }
    }
}

impl CharacterSystem {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(CharacterSystem {
            modulus: n,
            points: BTreeMap::new(),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn insert(&mut self, label: impl Into<String>, character: u64, mult: u64) -> Result<()> {
        let label = label.into();
        if character >= self.modulus {
            return Err(Error::CharacterOutOfRange {
                character,
                n: self.modulus,
            });
        }
        if mult == 0 {
            return Err(Error::ZeroMultiplicity(label));
        }
        *self.points.entry(label).or_default().entry(character).or_default() += mult;
        Ok(())
    }

    /// All `(label, character, multiplicity)` triples.
    pub fn iter(&self) -> impl Iterator<Item = (&str, u64, u64)> + '_ {
        self.points
            .iter()
            .flat_map(|(l, cs)| cs.iter().map(move |(&c, &k)| (l.as_str(), c, k)))
    }

    fn map_characters(&self, f: impl Fn(u64) -> u64) -> CharacterSystem {
        let mut out = CharacterSystem {
            modulus: self.modulus,
            points: BTreeMap::new(),
        };
        for (label, c, k) in self.iter() {
            *out.points
                .entry(label.to_string())
                .or_default()
                .entry(f(c))
                .or_default() += k;
        }
        out
    }
}

/// Inline form `P:1x2,3x1;Q:0x1`.
impl std::fmt::Display for CharacterSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .points
            .iter()
            .map(|(l, cs)| {
                let entries: Vec<String> = cs.iter().map(|(c, k)| format!("{c}x{k}")).collect();
                format!("{l}:{}", entries.join(","))
            })
            .collect();
        f.write_str(&parts.join(";"))
    }
}

/// Character `c` contributes the weight `<-c/N>`.
pub fn chars_to_weights(cs: &CharacterSystem) -> WeightSystem {
    let n = cs.modulus;
    let mut ws = WeightSystem::new(n).expect("positive modulus");
    for (label, c, k) in cs.iter() {
        ws.insert_numerator(label, (n - c) % n, k)
            .expect("numerator below N, positive multiplicity");
    }
    ws
}

/// Inverse of [`chars_to_weights`] on a cyclic cover of order `n`: the weight
/// `m/n` goes to the character `-m mod n`. `n` may be any multiple of the
/// weight denominator; otherwise the weights must still have denominators
/// dividing `n`.
pub fn weights_to_chars(ws: &WeightSystem, n: u64) -> Result<CharacterSystem> {
    let mut cs = CharacterSystem::new(n)?;
    for label in ws.punctures() {
        for (w, k) in ws.entries(label) {
            let scaled = &w * &Rational::from_integer(n);
            let m = scaled.to_integer().ok_or_else(|| Error::DenominatorMismatch {
                weight: w.to_string(),
                n,
            })?;
            let m = u64::try_from(m).expect("0 <= m < n");
            cs.insert(label, (n - m) % n, k)?;
        }
    }
    Ok(cs)
}

/// Frobenius pullback: `c -> p c mod N`.
pub fn frobenius_on_chars(cs: &CharacterSystem, p: i64) -> Result<CharacterSystem> {
    let n = cs.modulus;
    check_characteristic(p, n)?;
    let p = arith::residue(p, n);
    Ok(cs.map_characters(|c| ((c as u128 * p as u128) % n as u128) as u64))
}

/// One eigen-block of the pushforward: level `m_i` and the nilpotent residue
/// of the corresponding diagonal block upstairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueBlock {
    pub level: u64,
    pub residue: RationalMatrix,
}

/// Off-diagonal block at block position `(row, col)` with `row > col`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBlock {
    pub row: usize,
    pub col: usize,
    pub matrix: RationalMatrix,
}

/// Input data for the residue of a pushforward `lambda`-connection.
/// Lower blocks that are not listed are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResidueBlockAssembly {
    #[serde(rename = "N")]
    pub modulus: u64,
    pub lambda: Rational,
    pub blocks: Vec<ResidueBlock>,
    #[serde(default)]
    pub lower_blocks: Vec<LowerBlock>,
}

impl ResidueBlockAssembly {
    /// Checks level ordering, block shapes and nilpotence of diagonal residues.
    pub fn validate(&self) -> Result<()> {
        if self.modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let levels: Vec<u64> = self.blocks.iter().map(|b| b.level).collect();
        let ordered = levels.windows(2).all(|w| w[0] < w[1]);
        if !ordered || levels.last().is_some_and(|&m| m >= self.modulus) {
            return Err(Error::InvalidLevels(format!("{levels:?} with N = {}", self.modulus)));
        }
        for (i, b) in self.blocks.iter().enumerate() {
            if !b.residue.is_square() || b.residue.rows() == 0 {
                return Err(Error::MatrixShape(format!(
                    "diagonal block {i} must be a non-empty square matrix"
                )));
            }
            if !b.residue.is_nilpotent() {
                return Err(Error::NotNilpotent(i));
            }
        }
        for lb in &self.lower_blocks {
            if lb.row <= lb.col || lb.row >= self.blocks.len() {
                return Err(Error::MatrixShape(format!(
                    "lower block ({}, {}) is not strictly below the diagonal",
                    lb.row, lb.col
                )));
            }
            let (r, c) = (self.blocks[lb.row].residue.rows(), self.blocks[lb.col].residue.rows());
            if lb.matrix.rows() != r || lb.matrix.cols() != c {
                return Err(Error::MatrixShape(format!(
                    "lower block ({}, {}) must be {r}x{c}",
                    lb.row, lb.col
                )));
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(|b| b.residue.rows()).sum()
    }

    /// `lambda * m_i / N` for each block.
    pub fn shifts(&self) -> Vec<Rational> {
        self.blocks
            .iter()
            .map(|b| &self.lambda * &Rational::new(b.level, self.modulus))
            .collect()
    }
}

/// Result of [`assemble_pushforward_residue`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PushforwardResidue {
    pub matrix: RationalMatrix,
    pub charpoly: RationalPoly,
    /// Distinct eigenvalues with multiplicities, ascending.
    pub eigenvalues: Vec<(Rational, u64)>,
}

/// Builds the residue matrix of the pushforward and reads its eigenvalues off
/// the exact characteristic polynomial.
///
/// The diagonal blocks are `residue_i + (lambda m_i / N) I`, the listed lower
/// blocks sit below the diagonal and everything above it is zero. The
/// characteristic polynomial must equal `prod_i (x - lambda m_i / N)^{s_i}`;
/// a mismatch is reported as [`Error::EigenvalueLaw`].
pub fn assemble_pushforward_residue(asm: &ResidueBlockAssembly) -> Result<PushforwardResidue> {
    asm.validate()?;
    let n = asm.size();
    let offsets: Vec<usize> = asm
        .blocks
        .iter()
        .scan(0, |acc, b| {
            let start = *acc;
            *acc += b.residue.rows();
            Some(start)
        })
        .collect();
    let shifts = asm.shifts();

    let mut matrix = RationalMatrix::zeros(n, n);
    for ((b, &off), shift) in asm.blocks.iter().zip(&offsets).zip(&shifts) {
        let s = b.residue.rows();
        for i in 0..s {
            for j in 0..s {
                matrix[(off + i, off + j)] = b.residue[(i, j)].clone();
            }
            matrix[(off + i, off + i)] = &matrix[(off + i, off + i)] + shift;
        }
    }
    for lb in &asm.lower_blocks {
        let (ro, co) = (offsets[lb.row], offsets[lb.col]);
        for i in 0..lb.matrix.rows() {
            for j in 0..lb.matrix.cols() {
                matrix[(ro + i, co + j)] = lb.matrix[(i, j)].clone();
            }
        }
    }

    let charpoly = matrix.charpoly()?;

    let mut expected: BTreeMap<Rational, u64> = BTreeMap::new();
    for (b, shift) in asm.blocks.iter().zip(&shifts) {
        *expected.entry(shift.clone()).or_default() += b.residue.rows() as u64;
    }
    let closed_form = expected
        .iter()
        .fold(RationalPoly::one(), |acc, (root, &k)| {
            (0..k).fold(acc, |a, _| a.mul(&RationalPoly::linear_root(root)))
        });
    if charpoly != closed_form {
        return Err(Error::EigenvalueLaw(format!(
            "charpoly {charpoly} differs from {closed_form}"
        )));
    }

    let mut rest = charpoly.clone();
    let mut eigenvalues = Vec::new();
    for root in expected.keys() {
        let (k, quotient) = rest.root_multiplicity(root);
        if k > 0 {
            eigenvalues.push((root.clone(), k as u64));
        }
        rest = quotient;
    }
    if rest.degree() != Some(0) {
        return Err(Error::EigenvalueLaw(format!("unexplained factor {rest}")));
    }

    Ok(PushforwardResidue {
        matrix,
        charpoly,
        eigenvalues,
    })
}

/// Residue eigenvalues of the pullback: `-lambda m_i + N lambda (m_i / N)`
/// per level, each repeated `s_i` times.
pub fn pullback_residue_eigenvalues(
    levels: &[(u64, u64)],
    lambda: &Rational,
    n: u64,
) -> Result<Vec<Rational>> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if let Some(&(m, _)) = levels.iter().find(|(m, _)| *m >= n) {
        return Err(Error::InvalidLevels(format!("level {m} with N = {n}")));
    }
    let big_n = Rational::from_integer(n);
    Ok(levels
        .iter()
        .flat_map(|&(m, s)| {
            let m = Rational::from_integer(m);
            let value = -(lambda * &m) + &big_n * &(lambda * &(&m / &big_n));
            std::iter::repeat_n(value, s as usize)
        })
        .collect())
}

/// A graded level that fails the adjustedness condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjustedViolation {
    pub puncture: String,
    pub weight: Rational,
    pub eigenvalue: Rational,
    pub expected: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjustedReport {
    pub adjusted: bool,
    pub violations: Vec<AdjustedViolation>,
}

/// Checks that the residue acts on each graded piece of weight `w` with
/// eigenvalue `lambda w`.
pub fn check_adjusted(
    claimed: &BTreeMap<String, Vec<(Rational, Rational)>>,
    lambda: &Rational,
) -> Result<AdjustedReport> {
    let mut violations = Vec::new();
    for (puncture, levels) in claimed {
        for (weight, eigenvalue) in levels {
            if weight.is_negative() || *weight >= 1 {
                return Err(Error::WeightOutOfRange {
                    weight: weight.to_string(),
                });
            }
            let expected = lambda * weight;
            if *eigenvalue != expected {
                violations.push(AdjustedViolation {
                    puncture: puncture.clone(),
                    weight: weight.clone(),
                    eigenvalue: eigenvalue.clone(),
                    expected,
                });
            }
        }
    }
    Ok(AdjustedReport {
        adjusted: violations.is_empty(),
        violations,
    })
}
