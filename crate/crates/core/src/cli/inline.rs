//! Shell-friendly inline grammar for weight and character systems.
//!
//! Punctures are separated by `;`, entries by `,`, and each entry is
//! `value x multiplicity` (`x1` may be omitted). Whitespace is ignored:
//! `D1:1/5x2, 2/5x1 ; D2:0x3`.

use std::collections::BTreeMap;

use crate::arith::Rational;
use crate::bis_local::CharacterSystem;
use crate::parabolic::WeightSystem;

use super::CliError;

fn strip_ws(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

/// Splits `A:e1,e2;B:e3` into labelled entry lists.
fn sections(s: &str) -> Result<Vec<(String, Vec<String>)>, CliError> {
    let s = strip_ws(s);
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';')
        .filter(|part| !part.is_empty())
        .map(|part| {
            let (label, body) = part
                .split_once(':')
                .ok_or_else(|| CliError::Usage(format!("expected LABEL:ENTRIES, got {part:?}")))?;
            if label.is_empty() {
                return Err(CliError::Usage(format!("empty puncture label in {part:?}")));
            }
            let entries = body
                .split(',')
                .filter(|e| !e.is_empty())
                .map(str::to_string)
                .collect();
            Ok((label.to_string(), entries))
        })
        .collect()
}

fn split_mult(entry: &str) -> Result<(&str, u64), CliError> {
    match entry.rsplit_once('x') {
        Some((value, mult)) => {
            let mult = mult
                .parse()
                .map_err(|_| CliError::Usage(format!("bad multiplicity in {entry:?}")))?;
            Ok((value, mult))
        }
        None => Ok((entry, 1)),
    }
}

fn rational(s: &str) -> Result<Rational, CliError> {
    s.parse()
        .map_err(|_| CliError::Usage(format!("{s:?} is not a rational number")))
}

pub fn parse_weights(s: &str, n: u64) -> Result<WeightSystem, CliError> {
    let mut ws = WeightSystem::new(n)?;
    for (label, entries) in sections(s)? {
        for e in entries {
            let (value, mult) = split_mult(&e)?;
            ws.insert(label.clone(), &rational(value)?, mult)?;
        }
    }
    Ok(ws)
}

pub fn parse_chars(s: &str, n: u64) -> Result<CharacterSystem, CliError> {
    let mut cs = CharacterSystem::new(n)?;
    for (label, entries) in sections(s)? {
        for e in entries {
            let (value, mult) = split_mult(&e)?;
            let c = value
                .parse()
                .map_err(|_| CliError::Usage(format!("{value:?} is not a character")))?;
            cs.insert(label.clone(), c, mult)?;
        }
    }
    Ok(cs)
}

/// `D:3/2;E:-1/4`, one twist per puncture.
pub fn parse_twists(s: &str) -> Result<BTreeMap<String, Rational>, CliError> {
    let mut out = BTreeMap::new();
    for (label, entries) in sections(s)? {
        let [value] = entries.as_slice() else {
            return Err(CliError::Usage(format!("puncture {label:?} needs exactly one twist")));
        };
        if out.insert(label.clone(), rational(value)?).is_some() {
            return Err(CliError::Usage(format!("puncture {label:?} listed twice")));
        }
    }
    Ok(out)
}

/// `2x1,4x3`: levels with block sizes.
pub fn parse_levels(s: &str) -> Result<Vec<(u64, u64)>, CliError> {
    strip_ws(s)
        .split(',')
        .filter(|e| !e.is_empty())
        .map(|e| {
            let (value, mult) = split_mult(e)?;
            let m = value
                .parse()
                .map_err(|_| CliError::Usage(format!("{value:?} is not a level")))?;
            Ok((m, mult))
        })
        .collect()
}

/// `4,6`.
pub fn parse_u64_list(s: &str) -> Result<Vec<u64>, CliError> {
    strip_ws(s)
        .split(',')
        .filter(|e| !e.is_empty())
        .map(|e| {
            e.parse()
                .map_err(|_| CliError::Usage(format!("{e:?} is not a non-negative integer")))
        })
        .collect()
}

/// `D:1/3@1/3,0@0;E:1/2@1/2`: graded weights with claimed residue eigenvalues.
pub fn parse_claims(s: &str) -> Result<BTreeMap<String, Vec<(Rational, Rational)>>, CliError> {
    let mut out: BTreeMap<String, Vec<(Rational, Rational)>> = BTreeMap::new();
    for (label, entries) in sections(s)? {
        for e in entries {
            let (w, ev) = e
                .split_once('@')
                .ok_or_else(|| CliError::Usage(format!("expected WEIGHT@EIGENVALUE, got {e:?}")))?;
            out.entry(label.clone())
                .or_default()
                .push((rational(w)?, rational(ev)?));
        }
    }
    Ok(out)
}
