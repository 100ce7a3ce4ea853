//! Dense matrices and polynomials over the rationals, just enough for exact
//! characteristic polynomials of residue matrices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// A dense row-major matrix of exact rationals. Serializes as an array of rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Rational>>", into = "Vec<Vec<Rational>>")]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl TryFrom<Vec<Vec<Rational>>> for RationalMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<Rational>>) -> Result<Self> {
        RationalMatrix::from_rows(rows)
    }
}

impl From<RationalMatrix> for Vec<Vec<Rational>> {
    fn from(m: RationalMatrix) -> Self {
        m.data.chunks(m.cols.max(1)).take(m.rows).map(<[_]>::to_vec).collect()
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::MatrixShape("ragged rows".into()));
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn mul(&self, rhs: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::MatrixShape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `M^n = 0`, where `n` is the size of the square matrix `M`.
    pub fn is_nilpotent(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let mut pow = Self::identity(self.rows);
        for _ in 0..self.rows {
            pow = pow.mul(self).expect("square");
            if pow.is_zero() {
                return true;
            }
        }
        pow.is_zero()
    }

    /// Characteristic polynomial `det(x I - M)`, via reduction to upper
    /// Hessenberg form by exact similarity transforms followed by the
    /// standard three-term recurrence on leading principal minors.
    pub fn charpoly(&self) -> Result<RationalPoly> {
        if !self.is_square() {
            return Err(Error::MatrixShape("charpoly of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(piv) = (m..n).find(|&i| !h[(i, m - 1)].is_zero()) else {
                continue;
            };
            if piv != m {
                h.swap_rows(piv, m);
                h.swap_cols(piv, m);
            }
            let pivot = h[(m, m - 1)].clone();
            for i in m + 1..n {
                if h[(i, m - 1)].is_zero() {
                    continue;
                }
                let u = &h[(i, m - 1)] / &pivot;
                for j in 0..n {
                    let t = &u * &h[(m, j)];
                    h[(i, j)] = &h[(i, j)] - &t;
                }
                for j in 0..n {
                    let t = &u * &h[(j, i)];
                    h[(j, m)] = &h[(j, m)] + &t;
                }
            }
        }
        // p_k = det(x I - H_k) for the leading k x k block of H.
        let mut polys: Vec<RationalPoly> = vec![RationalPoly::one()];
        for k in 0..n {
            let mut next = polys[k].mul(&RationalPoly::linear_root(&h[(k, k)]));
            let mut subdiag = Rational::one();
            for i in (0..k).rev() {
                subdiag = &subdiag * &h[(i + 1, i)];
                if subdiag.is_zero() {
                    break;
                }
                let coeff = &subdiag * &h[(i, k)];
                next = next.sub(&polys[i].scale(&coeff));
            }
            polys.push(next);
        }
        Ok(polys.pop().expect("nonempty"))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Polynomial with rational coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn one() -> Self {
        RationalPoly::new(vec![Rational::one()])
    }

    /// `x - root`.
    pub fn linear_root(root: &Rational) -> Self {
        RationalPoly::new(vec![-root, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn mul(&self, rhs: &RationalPoly) -> RationalPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return RationalPoly::new(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        RationalPoly::new(out)
    }

    pub fn sub(&self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        RationalPoly::new(
            (0..len)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Synthetic division by `x - root`: quotient and remainder.
    pub fn div_linear(&self, root: &Rational) -> (RationalPoly, Rational) {
        let Some(deg) = self.degree() else {
            return (self.clone(), Rational::zero());
        };
        let mut quotient = vec![Rational::zero(); deg];
        let mut carry = Rational::zero();
        for i in (0..=deg).rev() {
            let cur = &self.coeffs[i] + &(&carry * root);
            if i == 0 {
                return (RationalPoly::new(quotient), cur);
            }
            quotient[i - 1] = cur.clone();
            carry = cur;
        }
        unreachable!()
    }

    /// Multiplicity of `root` as a root.
    pub fn root_multiplicity(&self, root: &Rational) -> (usize, RationalPoly) {
        let mut rest = self.clone();
        let mut k = 0;
        while rest.degree().is_some_and(|d| d > 0) {
            let (quot, rem) = rest.div_linear(root);
            if !rem.is_zero() {
                break;
            }
            rest = quot;
            k += 1;
        }
        (k, rest)
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}
