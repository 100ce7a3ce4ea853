//! Discrete data of parabolic bundles on a curve and the weight-level action of
//! the parabolic Cartier and inverse Cartier transforms.
//!
//! A weight system with denominator `N` stores, for each puncture, a multiset
//! of weights `m/N` with `0 <= m < N`. Internally the numerators `m` are kept,
//! so equality is multiset equality after reduction of the rationals.
//! Weight-zero entries are significant: multiplicities at a puncture always
//! add up to the rank of the bundle carrying the system.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{self, frac_part, Rational};
use crate::error::{Error, Result};

/// Rejects `p = 0` and any `p` sharing a factor with `n`.
pub(crate) fn check_characteristic(p: i64, n: u64) -> Result<()> {
    if p == 0 {
        return Err(Error::ZeroCharacteristic);
    }
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if arith::gcd_i64_u64(p, n) != 1 {
        return Err(Error::NotUnit {
            a: p.to_string(),
            n,
        });
    }
    Ok(())
}

/// Genus, ordered puncture labels and the weight denominator `N` of a curve.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CurveRepr", into = "CurveRepr")]
pub struct CurveShape {
    genus: u64,
    punctures: Vec<String>,
    denominator: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveRepr {
    genus: u64,
    punctures: Vec<String>,
    #[serde(rename = "N")]
    denominator: u64,
}

impl TryFrom<CurveRepr> for CurveShape {
    type Error = Error;
    fn try_from(r: CurveRepr) -> Result<Self> {
        CurveShape::new(r.genus, r.punctures, r.denominator)
    }
}

impl From<CurveShape> for CurveRepr {
    fn from(c: CurveShape) -> Self {
        CurveRepr {
            genus: c.genus,
            punctures: c.punctures,
            denominator: c.denominator,
        }
    }
}

impl CurveShape {
    pub fn new(genus: u64, punctures: Vec<String>, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::ZeroModulus);
        }
        let mut seen = BTreeSet::new();
        for label in &punctures {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicatePuncture(label.clone()));
            }
        }
        Ok(CurveShape {
            genus,
            punctures,
            denominator,
        })
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn punctures(&self) -> &[String] {
        &self.punctures
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }
}

/// Per-puncture multisets of parabolic weights `m/N`, `0 <= m < N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WeightSystemRepr", into = "WeightSystemRepr")]
pub struct WeightSystem {
    denominator: u64,
    points: BTreeMap<String, BTreeMap<u64, u64>>,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct WeightEntry {
    pub weight: Rational,
    pub mult: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightSystemRepr {
    #[serde(rename = "N")]
    denominator: u64,
    weights: BTreeMap<String, Vec<WeightEntry>>,
}

impl TryFrom<WeightSystemRepr> for WeightSystem {
    type Error = Error;
    fn try_from(r: WeightSystemRepr) -> Result<Self> {
        let mut ws = WeightSystem::new(r.denominator)?;
        for (label, entries) in r.weights {
            for e in entries {
                ws.insert(label.clone(), &e.weight, e.mult)?;
            }
        }
        Ok(ws)
    }
}

impl From<WeightSystem> for WeightSystemRepr {
    fn from(ws: WeightSystem) -> Self {
        let weights = ws
            .points
            .keys()
            .map(|label| {
                let entries = ws
                    .entries(label)
                    .map(|(weight, mult)| WeightEntry { weight, mult })
                    .collect();
                (label.clone(), entries)
            })
            .collect();
        WeightSystemRepr {
            denominator: ws.denominator,
            weights,
        }
    }
}

impl WeightSystem {
    /// An empty system with weight denominator `n`.
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(WeightSystem {
            denominator: n,
            points: BTreeMap::new(),
        })
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    /// Adds `mult` copies of `weight` at `label`.
    pub fn insert(&mut self, label: impl Into<String>, weight: &Rational, mult: u64) -> Result<()> {
        let label = label.into();
        if weight.is_negative() || *weight >= 1 {
            return Err(Error::WeightOutOfRange {
                weight: weight.to_string(),
            });
        }
        let scaled = weight * &Rational::from_integer(self.denominator);
        let numer = scaled
            .to_integer()
            .ok_or_else(|| Error::DenominatorMismatch {
                weight: weight.to_string(),
                n: self.denominator,
            })?;
        let numer = u64::try_from(numer).expect("0 <= m < N");
        self.insert_numerator(label, numer, mult)
    }

    /// Adds `mult` copies of the weight `m/N` at `label`.
    pub fn insert_numerator(&mut self, label: impl Into<String>, m: u64, mult: u64) -> Result<()> {
        let label = label.into();
        if m >= self.denominator {
            return Err(Error::WeightOutOfRange {
                weight: format!("{m}/{}", self.denominator),
            });
        }
        if mult == 0 {
            return Err(Error::ZeroMultiplicity(label));
        }
        *self.points.entry(label).or_default().entry(m).or_default() += mult;
        Ok(())
    }

    pub fn punctures(&self) -> impl Iterator<Item = &str> {
        self.points.keys().map(String::as_str)
    }

    pub fn contains_puncture(&self, label: &str) -> bool {
        self.points.contains_key(label)
    }

    /// Numerator multiset at a puncture: weight `m/N` with its multiplicity.
    pub fn numerators(&self, label: &str) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.points
            .get(label)
            .into_iter()
            .flat_map(|m| m.iter().map(|(&k, &v)| (k, v)))
    }

    /// `(weight, multiplicity)` pairs at a puncture, ascending by weight.
    pub fn entries(&self, label: &str) -> impl Iterator<Item = (Rational, u64)> + '_ {
        let n = self.denominator;
        self.numerators(label)
            .map(move |(m, mult)| (Rational::new(m, n), mult))
    }

    /// All `(label, numerator, multiplicity)` triples.
    pub fn iter(&self) -> impl Iterator<Item = (&str, u64, u64)> + '_ {
        self.points
            .iter()
            .flat_map(|(l, ms)| ms.iter().map(move |(&m, &k)| (l.as_str(), m, k)))
    }

    pub fn total_multiplicity(&self, label: &str) -> u64 {
        self.numerators(label).map(|(_, k)| k).sum()
    }

    /// True when every stored weight is zero.
    pub fn is_trivial(&self) -> bool {
        self.iter().all(|(_, m, _)| m == 0)
    }

    /// `sum w * mult` over all punctures.
    pub fn weighted_sum(&self) -> Rational {
        let total: u64 = self.iter().map(|(_, m, k)| m * k).sum();
        Rational::new(total, self.denominator)
    }

    /// Applies `m -> f(m)` to every numerator, merging collisions.
    pub(crate) fn map_numerators(&self, f: impl Fn(u64) -> u64) -> WeightSystem {
        let mut out = WeightSystem {
            denominator: self.denominator,
            points: BTreeMap::new(),
        };
        for (label, m, mult) in self.iter() {
            *out.points
                .entry(label.to_string())
                .or_default()
                .entry(f(m))
                .or_default() += mult;
        }
        out
    }
}

/// Inline form `D1:1/5x2,2/5x1;D2:0x3`.
impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for label in self.points.keys() {
            if !first {
                f.write_str(";")?;
            }
            first = false;
            write!(f, "{label}:")?;
            let entries: Vec<String> = self
                .entries(label)
                .map(|(w, k)| format!("{w}x{k}"))
                .collect();
            f.write_str(&entries.join(","))?;
        }
        Ok(())
    }
}

/// Rank, degree of the zeroth filtration piece, and weights of a parabolic bundle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ShapeRepr", into = "ShapeRepr")]
pub struct ParabolicShape {
    rank: u64,
    deg0: BigInt,
    weights: WeightSystem,
    curve: CurveShape,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ShapeRepr {
    rank: u64,
    deg0: String,
    curve: CurveShape,
    weights: WeightSystem,
}

impl TryFrom<ShapeRepr> for ParabolicShape {
    type Error = Error;
    fn try_from(r: ShapeRepr) -> Result<Self> {
        let deg0: BigInt = r
            .deg0
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("deg0 {:?} is not an integer", r.deg0)))?;
        ParabolicShape::new(r.rank, deg0, r.weights, r.curve)
    }
}

impl From<ParabolicShape> for ShapeRepr {
    fn from(s: ParabolicShape) -> Self {
        ShapeRepr {
            rank: s.rank,
            deg0: s.deg0.to_string(),
            curve: s.curve,
            weights: s.weights,
        }
    }
}

impl ParabolicShape {
    /// Validates and builds a shape. Curve punctures absent from `weights`
    /// carry the trivial structure `(0, rank)`.
    pub fn new(
        rank: u64,
        deg0: impl Into<BigInt>,
        mut weights: WeightSystem,
        curve: CurveShape,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if weights.denominator != curve.denominator {
            return Err(Error::ModulusMismatch {
                given: weights.denominator,
                expected: curve.denominator,
            });
        }
        if let Some(stray) = weights
            .punctures()
            .find(|l| !curve.punctures.iter().any(|c| c == l))
        {
            return Err(Error::UnknownPuncture(stray.to_string()));
        }
        for label in &curve.punctures {
            if !weights.contains_puncture(label) {
                weights.insert_numerator(label.clone(), 0, rank)?;
            }
            let total = weights.total_multiplicity(label);
            if total != rank {
                return Err(Error::MultiplicityMismatch {
                    puncture: label.clone(),
                    total,
                    rank,
                });
            }
        }
        Ok(ParabolicShape {
            rank,
            deg0: deg0.into(),
            weights,
            curve,
        })
    }

    /// A shape on a genus-zero curve whose punctures are those of `weights`.
    pub fn from_weights(rank: u64, deg0: impl Into<BigInt>, weights: WeightSystem) -> Result<Self> {
        let curve = CurveShape::new(
            0,
            weights.punctures().map(str::to_string).collect(),
            weights.denominator,
        )?;
        ParabolicShape::new(rank, deg0, weights, curve)
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn deg0(&self) -> &BigInt {
        &self.deg0
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn curve(&self) -> &CurveShape {
        &self.curve
    }
}

/// The parabolic degree `deg V_0 + sum_i sum_w w * mult`.
pub fn pardeg(shape: &ParabolicShape) -> Rational {
    Rational::from_integer(shape.deg0.clone()) + shape.weights.weighted_sum()
}

/// `N * pardeg`, the degree of the pullback along a totally ramified cyclic
/// cover of order `N`.
pub fn pullback_degree(shape: &ParabolicShape, n: u64) -> Result<BigInt> {
    if n != shape.curve.denominator {
        return Err(Error::ModulusMismatch {
            given: n,
            expected: shape.curve.denominator,
        });
    }
    let scaled = pardeg(shape) * Rational::from_integer(n);
    scaled
        .to_integer()
        .ok_or_else(|| Error::NonIntegralPullback(scaled.to_string()))
}

/// A line bundle of degree `underlying_degree` twisted by `O(sum gamma_i D_i)`
/// with rational exponents `gamma_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicLineBundleSpec {
    #[serde(with = "crate::arith::bigint_string")]
    pub underlying_degree: BigInt,
    pub twists: BTreeMap<String, Rational>,
}

/// The shape of a rational twist: weight `<gamma_i>` at each puncture and
/// zeroth piece of degree `d + sum floor(gamma_i)`.
///
/// The curve has genus zero, the twist labels as punctures, and `N` the least
/// common denominator of the twists.
pub fn line_bundle_shape(lb: &ParabolicLineBundleSpec) -> ParabolicShape {
    let n = lb
        .twists
        .values()
        .map(|g| g.denom().clone())
        .fold(BigInt::from(1), |acc, d| acc.lcm(&d));
    let n = u64::try_from(n).expect("common denominator fits in u64");
    let curve = CurveShape::new(0, lb.twists.keys().cloned().collect(), n)
        .expect("map keys are distinct");
    line_bundle_shape_on(lb, &curve).expect("denominators divide their lcm")
}

/// As [`line_bundle_shape`], on a given curve.
pub fn line_bundle_shape_on(lb: &ParabolicLineBundleSpec, curve: &CurveShape) -> Result<ParabolicShape> {
    let mut weights = WeightSystem::new(curve.denominator)?;
    let mut deg0 = lb.underlying_degree.clone();
    for (label, gamma) in &lb.twists {
        weights.insert(label.clone(), &frac_part(gamma), 1)?;
        deg0 += gamma.floor();
    }
    ParabolicShape::new(1, deg0, weights, curve.clone())
}

/// Weights of `C^{-1}_par`: each `m/N` goes to `<p m / N>`.
pub fn inverse_cartier_weights(ws: &WeightSystem, p: i64) -> Result<WeightSystem> {
    let n = ws.denominator;
    check_characteristic(p, n)?;
    let p = arith::residue(p, n);
    Ok(ws.map_numerators(|m| ((m as u128 * p as u128) % n as u128) as u64))
}

/// Weights of `C_par`: each `m/N` goes to `<D m / N>` with `p D = 1 mod N`.
pub fn cartier_weights(ws: &WeightSystem, p: i64) -> Result<WeightSystem> {
    let n = ws.denominator;
    check_characteristic(p, n)?;
    let delta = arith::mod_inverse(p, n)?;
    Ok(ws.map_numerators(|m| ((m as u128 * delta as u128) % n as u128) as u64))
}

/// One step of the flow on shapes: weights follow the inverse Cartier law and
/// `deg0' = p deg0 + sum floor(p m / N) mult`, so that `pardeg` scales by `p`.
pub fn flow_step_shape(shape: &ParabolicShape, p: i64) -> Result<ParabolicShape> {
    let weights = inverse_cartier_weights(&shape.weights, p)?;
    let n = BigInt::from(shape.curve.denominator);
    let carry: BigInt = shape
        .weights
        .iter()
        .map(|(_, m, mult)| (BigInt::from(p) * m).div_floor(&n) * mult)
        .sum();
    let deg0 = BigInt::from(p) * &shape.deg0 + carry;
    Ok(ParabolicShape {
        rank: shape.rank,
        deg0,
        weights,
        curve: shape.curve.clone(),
    })
}

/// Only shapes of parabolic degree zero can recur under the flow.
pub fn is_periodicity_candidate(shape: &ParabolicShape) -> bool {
    pardeg(shape).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn ws(n: u64, entries: &[(&str, &str, u64)]) -> WeightSystem {
        let mut w = WeightSystem::new(n).unwrap();
        for (l, x, k) in entries {
            w.insert(*l, &q(x), *k).unwrap();
        }
        w
    }

    #[test]
    fn pardeg_examples() {
        let s = ParabolicShape::from_weights(1, 3, WeightSystem::new(1).unwrap()).unwrap();
        assert_eq!(pardeg(&s), q("3"));
        let s = ParabolicShape::from_weights(2, -1, ws(2, &[("D", "1/2", 2)])).unwrap();
        assert_eq!(pardeg(&s), q("0"));
        let s = ParabolicShape::from_weights(1, 0, ws(3, &[("D1", "1/3", 1), ("D2", "2/3", 1)]))
            .unwrap();
        assert_eq!(pardeg(&s), q("1"));
    }

    #[test]
    fn pullback_degree_examples() {
        let s = ParabolicShape::from_weights(1, 0, ws(5, &[("D", "2/5", 1)])).unwrap();
        assert_eq!(pullback_degree(&s, 5).unwrap(), BigInt::from(2));
        let s = ParabolicShape::from_weights(2, -1, ws(4, &[("D", "1/4", 1), ("D", "3/4", 1)]))
            .unwrap();
        assert_eq!(pullback_degree(&s, 4).unwrap(), BigInt::from(0));
        assert!(matches!(
            pullback_degree(&s, 8),
            Err(Error::ModulusMismatch { .. })
        ));
    }

    #[test]
    fn weight_validation() {
        let mut w = WeightSystem::new(5).unwrap();
        assert!(matches!(
            w.insert("D", &q("1/3"), 1),
            Err(Error::DenominatorMismatch { .. })
        ));
        assert!(matches!(
            w.insert("D", &q("1"), 1),
            Err(Error::WeightOutOfRange { .. })
        ));
        assert!(matches!(
            w.insert("D", &q("-1/5"), 1),
            Err(Error::WeightOutOfRange { .. })
        ));
        assert!(matches!(
            w.insert("D", &q("1/5"), 0),
            Err(Error::ZeroMultiplicity(_))
        ));
        assert!(WeightSystem::new(0).is_err());
    }

    #[test]
    fn shape_validation() {
        let curve = CurveShape::new(1, vec!["A".into(), "B".into()], 4).unwrap();
        // B is filled with (0, 2)
        let s = ParabolicShape::new(2, 0, ws(4, &[("A", "1/4", 2)]), curve.clone()).unwrap();
        assert_eq!(s.weights().entries("B").collect::<Vec<_>>(), vec![(q("0"), 2)]);
        assert!(matches!(
            ParabolicShape::new(3, 0, ws(4, &[("A", "1/4", 2)]), curve.clone()),
            Err(Error::MultiplicityMismatch { .. })
        ));
        assert!(matches!(
            ParabolicShape::new(1, 0, ws(4, &[("C", "1/4", 1)]), curve.clone()),
            Err(Error::UnknownPuncture(_))
        ));
        assert!(matches!(
            ParabolicShape::new(1, 0, ws(2, &[("A", "1/2", 1)]), curve),
            Err(Error::ModulusMismatch { .. })
        ));
        assert!(CurveShape::new(0, vec!["A".into(), "A".into()], 2).is_err());
    }

    #[test]
    fn zero_weight_entries_are_significant() {
        let a = ws(3, &[("D", "0", 1), ("D", "1/3", 1)]);
        let b = ws(3, &[("D", "1/3", 1)]);
        assert_ne!(a, b);
        // insertion order and reduction do not matter
        let c = ws(3, &[("D", "1/3", 1), ("D", "0/7", 1)]);
        assert_eq!(a, c);
    }

    #[test]
    fn line_bundle_examples() {
        let lb = ParabolicLineBundleSpec {
            underlying_degree: 4.into(),
            twists: [("D".to_string(), q("0"))].into(),
        };
        let s = line_bundle_shape(&lb);
        assert_eq!(s.deg0(), &BigInt::from(4));
        assert!(s.weights().is_trivial());

        let lb = ParabolicLineBundleSpec {
            underlying_degree: 0.into(),
            twists: [("D".to_string(), q("3/2"))].into(),
        };
        let s = line_bundle_shape(&lb);
        assert_eq!(s.deg0(), &BigInt::from(1));
        assert_eq!(s.weights().entries("D").collect::<Vec<_>>(), vec![(q("1/2"), 1)]);

        let lb = ParabolicLineBundleSpec {
            underlying_degree: 2.into(),
            twists: [("D".to_string(), q("-1/4"))].into(),
        };
        let s = line_bundle_shape(&lb);
        assert_eq!(s.deg0(), &BigInt::from(1));
        assert_eq!(s.weights().entries("D").collect::<Vec<_>>(), vec![(q("3/4"), 1)]);
        // pardeg of the twist is d + sum gamma
        assert_eq!(pardeg(&s), q("7/4"));
    }

    #[test]
    fn line_bundle_on_curve_rejects_foreign_denominator() {
        let lb = ParabolicLineBundleSpec {
            underlying_degree: 0.into(),
            twists: [("D".to_string(), q("1/3"))].into(),
        };
        let curve = CurveShape::new(0, vec!["D".into()], 4).unwrap();
        assert!(line_bundle_shape_on(&lb, &curve).is_err());
    }

    #[test]
    fn cartier_examples() {
        let w = ws(5, &[("D", "2/5", 1)]);
        assert_eq!(inverse_cartier_weights(&w, 7).unwrap(), ws(5, &[("D", "4/5", 1)]));
        let w = ws(5, &[("D", "4/5", 1)]);
        assert_eq!(cartier_weights(&w, 7).unwrap(), ws(5, &[("D", "2/5", 1)]));
        let zero = ws(7, &[("D", "0", 3)]);
        assert_eq!(inverse_cartier_weights(&zero, 3).unwrap(), zero);
        assert_eq!(cartier_weights(&zero, 3).unwrap(), zero);

        let w = ws(9, &[("D", "1/9", 1), ("D", "4/9", 1), ("D", "7/9", 1)]);
        assert_eq!(inverse_cartier_weights(&w, 4).unwrap(), w);

        let w = ws(12, &[("D", "1/12", 1), ("D", "5/12", 1)]);
        let there = inverse_cartier_weights(&w, 7).unwrap();
        assert_eq!(cartier_weights(&there, 7).unwrap(), w);
    }

    #[test]
    fn cartier_rejects_non_units() {
        let w = ws(6, &[("D", "1/6", 1)]);
        assert!(matches!(inverse_cartier_weights(&w, 3), Err(Error::NotUnit { .. })));
        assert!(matches!(cartier_weights(&w, 4), Err(Error::NotUnit { .. })));
        assert_eq!(inverse_cartier_weights(&w, 0), Err(Error::ZeroCharacteristic));
    }

    #[test]
    fn flow_step_examples() {
        let trivial = ParabolicShape::from_weights(2, 0, ws(3, &[("D", "0", 2)])).unwrap();
        assert_eq!(flow_step_shape(&trivial, 5).unwrap(), trivial);

        let s = ParabolicShape::from_weights(1, 0, ws(5, &[("D", "1/5", 1)])).unwrap();
        let t = flow_step_shape(&s, 2).unwrap();
        assert_eq!(t.deg0(), &BigInt::from(0));
        assert_eq!(t.weights(), &ws(5, &[("D", "2/5", 1)]));

        let s = ParabolicShape::from_weights(1, -1, ws(5, &[("D", "4/5", 1)])).unwrap();
        let t = flow_step_shape(&s, 2).unwrap();
        assert_eq!(t.deg0(), &BigInt::from(-1));
        assert_eq!(t.weights(), &ws(5, &[("D", "3/5", 1)]));
        assert_eq!(pardeg(&s), q("-1/5"));
        assert_eq!(pardeg(&t), q("-2/5"));
    }

    #[test]
    fn periodicity_candidates() {
        let s = ParabolicShape::from_weights(1, 0, ws(2, &[("D", "0", 1)])).unwrap();
        assert!(is_periodicity_candidate(&s));
        let s = ParabolicShape::from_weights(1, 1, ws(2, &[("D", "0", 1)])).unwrap();
        assert!(!is_periodicity_candidate(&s));
        let s = ParabolicShape::from_weights(2, -1, ws(2, &[("D", "1/2", 2)])).unwrap();
        assert!(is_periodicity_candidate(&s));
    }

    #[test]
    fn inline_display() {
        let w = ws(5, &[("D2", "0", 3), ("D1", "2/5", 1), ("D1", "1/5", 2)]);
        assert_eq!(w.to_string(), "D1:1/5x2,2/5x1;D2:0x3");
    }
}
