use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::newton::newton_polygon_slopes;
use super::valuation::{check_prime, vp_unchecked, PadicValue};
use crate::error::{Error, Result};

/// A square matrix of exact rationals, viewed p-adically for a fixed prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    p: u64,
    entries: Vec<Vec<BigRational>>,
}

impl RationalMatrix {
    pub fn new(entries: Vec<Vec<BigRational>>, p: u64) -> Result<Self> {
        check_prime(p)?;
        let n = entries.len();
        if let Some(row) = entries.iter().find(|r| r.len() != n) {
            return Err(Error::InvalidArgument(format!(
                "matrix is not square: {n} rows but a row of length {}",
                row.len()
            )));
        }
        Ok(RationalMatrix { p, entries })
    }

    pub fn from_integers(entries: &[Vec<i64>], p: u64) -> Result<Self> {
        Self::new(
            entries
                .iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
            p,
        )
    }

    /// Parses rows of rational literals such as `"3/7"` or `"-2"`.
    pub fn parse<S: AsRef<str>>(rows: &[Vec<S>], p: u64) -> Result<Self> {
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s.as_ref())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries, p)
    }

    pub fn identity(n: usize, p: u64) -> Result<Self> {
        Self::new(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                        .collect()
                })
                .collect(),
            p,
        )
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, r)| {
            r.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }

    pub fn minus_identity(&self) -> Self {
        let mut m = self.clone();
        for (i, row) in m.entries.iter_mut().enumerate() {
            row[i] -= BigRational::one();
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dim();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(BigRational::zero(), |acc, k| {
                            acc + &self.entries[i][k] * &other.entries[k][j]
                        })
                    })
                    .collect()
            })
            .collect();
        RationalMatrix { p: self.p, entries }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim(), self.p).expect("prime already checked");
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Smallest valuation of an entry; `+∞` for the zero matrix.
    pub fn min_entry_valuation(&self) -> PadicValue {
        self.entries
            .iter()
            .flatten()
            .map(|x| vp_unchecked(x, self.p))
            .min()
            .unwrap_or(PadicValue::Infinity)
    }

    /// Coefficients of `det(xI − A)` from `x^n` down to the constant term,
    /// by Berkowitz' division-free recursion on leading principal blocks.
    pub fn char_poly(&self) -> Vec<BigRational> {
        let a = &self.entries;
        let n = a.len();
        let mut poly = vec![BigRational::one()];
        for k in 0..n {
            // block [[A_k, c], [r, a_kk]] with A_k the leading k×k block
            let r: Vec<&BigRational> = (0..k).map(|j| &a[k][j]).collect();
            let mut v: Vec<BigRational> = (0..k).map(|i| a[i][k].clone()).collect();
            // t_j = r · A_k^j · c
            let mut t = Vec::with_capacity(k);
            for j in 0..k {
                if j > 0 {
                    v = (0..k)
                        .map(|i| (0..k).fold(BigRational::zero(), |acc, l| acc + &a[i][l] * &v[l]))
                        .collect();
                }
                t.push(r.iter().zip(&v).fold(BigRational::zero(), |acc, (x, y)| acc + *x * y));
            }
            // det = (x − a_kk) p_k(x) − Σ_i x^{k−1−i} Σ_{m≤i} c_m t_{i−m}
            let mut next = vec![BigRational::zero(); k + 2];
            for (m, c) in poly.iter().enumerate() {
                next[m] += c;
                next[m + 1] -= c * &a[k][k];
            }
            for i in 0..k {
                let s = (0..=i).fold(BigRational::zero(), |acc, m| acc + &poly[m] * &t[i - m]);
                next[i + 2] -= s;
            }
            poly = next;
        }
        poly
    }

    pub fn determinant(&self) -> BigRational {
        let poly = self.char_poly();
        let c = poly.last().cloned().expect("char poly is nonempty");
        if self.dim().is_multiple_of(2) {
            c
        } else {
            -c
        }
    }

    pub fn is_invertible(&self) -> bool {
        !self.determinant().is_zero()
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::InvalidArgument(format!("malformed rational {s:?}"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(t).map_err(|_| bad())?)),
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        rows.serialize(serializer)
    }
}

/// Minimum valuation of an eigenvalue of `m`, from the Newton polygon of its
/// characteristic polynomial. Zero eigenvalues count as `+∞`.
pub fn eigenvalue_deviation_bound(m: &RationalMatrix) -> PadicValue {
    if m.dim() == 0 {
        return PadicValue::Infinity;
    }
    let mut coeffs = m.char_poly();
    coeffs.reverse();
    newton_polygon_slopes(&coeffs, m.p)
        .expect("char poly is monic and p is prime")
        .into_iter()
        .min()
        .unwrap_or(PadicValue::Infinity)
}
