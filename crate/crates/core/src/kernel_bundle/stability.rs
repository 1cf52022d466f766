use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::chern::{big_int, discriminant, Form, KernelBundleSpec};
use crate::error::{Error, Result};
use crate::monodromy::rational_string;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilityOutcome {
    Stable,
    NotStable,
    PreconditionViolated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub outcome: StabilityOutcome,
    /// Twists sorted descending.
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    #[serde(serialize_with = "rational_string")]
    pub slope: BigRational,
    pub reason: Option<String>,
}

/// Stability of a bundle `E` of rank `r` on `P^r` presented as
/// `0 → ⊕_{i≤c} O(a_i) → ⊕_{j≤c+r} O(b_j) → E → 0`. With both sequences
/// sorted descending and `a_i < b_{r+i}` for every `i`, `E` is stable iff
/// `b_1 < μ(E)`.
pub fn bs_stability(spec: &KernelBundleSpec) -> Result<StabilityReport> {
    if spec.form != Form::Cokernel {
        return Err(Error::InvalidArgument(
            "stability criterion needs a cokernel presentation; dualize a kernel presentation first".into(),
        ));
    }
    let mut a = spec.a.clone();
    let mut b = spec.b.clone();
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    let r = spec.rank();
    let total: i64 = b.iter().sum::<i64>() - a.iter().sum::<i64>();
    let slope = BigRational::new(BigInt::from(total), BigInt::from(r));

    let mut reason = None;
    if spec.n != r {
        reason = Some(format!("rank {r} differs from the ambient dimension {}", spec.n));
    } else if let Some(i) = (0..a.len()).find(|&i| a[i] >= b[r + i]) {
        reason = Some(format!(
            "a_{} = {} is not below b_{} = {}",
            i + 1,
            a[i],
            r + i + 1,
            b[r + i]
        ));
    }
    let outcome = match reason {
        Some(_) => StabilityOutcome::PreconditionViolated,
        None if BigRational::from_integer(BigInt::from(b[0])) < slope => StabilityOutcome::Stable,
        None => StabilityOutcome::NotStable,
    };
    Ok(StabilityReport { outcome, a, b, slope, reason })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LangerReport {
    pub rank: usize,
    #[serde(serialize_with = "rational_string")]
    pub delta_h: BigRational,
    pub h_top: u64,
    #[serde(serialize_with = "rational_string")]
    pub bound: BigRational,
    /// Smallest integer strictly above `bound`.
    #[serde(serialize_with = "big_int")]
    pub a_min: BigInt,
}

/// `(r−1)/r · Δ·H^{n−2} + 1/(r(r−1)·H^n)`.
pub fn langer_bound(rank: usize, delta_h: &BigRational, h_top: u64) -> Result<LangerReport> {
    if rank < 2 {
        return Err(Error::InvalidArgument(format!("restriction bound needs rank ≥ 2, got {rank}")));
    }
    if h_top == 0 {
        return Err(Error::InvalidArgument("H^n must be positive".into()));
    }
    let r = BigInt::from(rank);
    let bound = BigRational::new(&r - 1, r.clone()) * delta_h
        + BigRational::new(BigInt::one(), &r * (&r - 1) * BigInt::from(h_top));
    let a_min = bound.floor().to_integer() + 1;
    Ok(LangerReport { rank, delta_h: delta_h.clone(), h_top, bound, a_min })
}

/// Restriction bound for a bundle on `P^n`, where `Δ·H^{n−2} = Δ`.
pub fn langer_restriction_degree(spec: &KernelBundleSpec, h_top: u64) -> Result<LangerReport> {
    if spec.rank() < 2 {
        return Err(Error::InvalidArgument(format!("restriction bound needs rank ≥ 2, got {}", spec.rank())));
    }
    let d = discriminant(spec)?;
    langer_bound(spec.rank(), &BigRational::from_integer(d), h_top)
}
