use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::valuation::{check_prime, vp_unchecked, PadicValue};
use crate::error::{Error, Result};

/// Valuations of the roots of `Σ c_i X^i` (coefficients in ascending degree)
/// in an algebraic closure of `Q_p`, with multiplicity, read off the lower
/// convex hull of the points `(i, v_p(c_i))`. Sorted ascending; roots equal
/// to zero come last as `+∞`.
pub fn newton_polygon_slopes(coeffs: &[BigRational], p: u64) -> Result<Vec<PadicValue>> {
    check_prime(p)?;
    let degree = coeffs
        .iter()
        .rposition(|c| !c.is_zero())
        .ok_or_else(|| Error::InvalidArgument("zero polynomial has no Newton polygon".into()))?;
    let low = coeffs.iter().position(|c| !c.is_zero()).expect("nonzero coefficient exists");

    let points: Vec<(i64, BigRational)> = (low..=degree)
        .filter(|&i| !coeffs[i].is_zero())
        .map(|i| {
            let v = vp_unchecked(&coeffs[i], p);
            (i as i64, v.finite().cloned().expect("nonzero coefficient"))
        })
        .collect();

    // lower hull, monotone chain
    let mut hull: Vec<(i64, BigRational)> = Vec::new();
    for pt in points {
        while hull.len() >= 2 {
            let (x1, y1) = &hull[hull.len() - 2];
            let (x2, y2) = &hull[hull.len() - 1];
            // drop the middle point unless it lies strictly below the chord
            let cross = (y2 - y1) * BigRational::from_integer(BigInt::from(pt.0 - x1))
                - (&pt.1 - y1) * BigRational::from_integer(BigInt::from(x2 - x1));
            if cross >= BigRational::zero() {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }

    let mut slopes = Vec::with_capacity(degree);
    for pair in hull.windows(2) {
        let (x1, y1) = &pair[0];
        let (x2, y2) = &pair[1];
        let run = x2 - x1;
        let root_valuation = (y1 - y2) / BigRational::from_integer(BigInt::from(run));
        for _ in 0..run {
            slopes.push(PadicValue::Finite(root_valuation.clone()));
        }
    }
    slopes.extend(std::iter::repeat_n(PadicValue::Infinity, low));
    slopes.sort();
    Ok(slopes)
}

/// `v_p(λ)` where `1 − λ` is a primitive `l^n`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclotomicValuation {
    pub p: u64,
    pub l: u64,
    pub n: u32,
    /// Computed from the Newton polygon of `Φ_{l^n}(1 − X)`.
    pub value: PadicValue,
    /// The closed form `n/(p^n − 1)` quoted for `l = p`. It coincides with
    /// `value` only when `n = 1`.
    pub quoted_exponent: Option<PadicValue>,
}

/// Coefficients (ascending) of `Φ_{l^n}(1 − X) = Σ_{k<l} (1 − X)^{k l^{n−1}}`.
pub fn shifted_cyclotomic(l: u64, n: u32) -> Vec<BigRational> {
    let step = l.pow(n - 1) as usize;
    let degree = step * (l as usize - 1);
    let mut coeffs = vec![BigInt::zero(); degree + 1];
    for k in 0..l as usize {
        let e = k * step;
        // (1 − X)^e
        let mut binom = BigInt::one();
        for (j, c) in coeffs.iter_mut().enumerate().take(e + 1) {
            if j > 0 {
                binom = binom * BigInt::from(e - j + 1) / BigInt::from(j);
            }
            if j % 2 == 0 {
                *c += &binom;
            } else {
                *c -= &binom;
            }
        }
    }
    coeffs.into_iter().map(BigRational::from_integer).collect()
}

pub fn cyclotomic_unit_valuation(p: u64, l: u64, n: u32) -> Result<CyclotomicValuation> {
    check_prime(p)?;
    check_prime(l)?;
    if n == 0 {
        return Err(Error::InvalidArgument("root-of-unity order exponent must be positive".into()));
    }
    if l != p {
        return Ok(CyclotomicValuation {
            p,
            l,
            n,
            value: PadicValue::int(0),
            quoted_exponent: None,
        });
    }
    let slopes = newton_polygon_slopes(&shifted_cyclotomic(l, n), p)?;
    let value = slopes[0].clone();
    debug_assert!(slopes.iter().all(|s| *s == value), "cyclotomic roots are Galois conjugate");
    let quoted = BigRational::new(BigInt::from(n), BigInt::from(p).pow(n) - 1);
    Ok(CyclotomicValuation {
        p,
        l,
        n,
        value,
        quoted_exponent: Some(PadicValue::Finite(quoted)),
    })
}
