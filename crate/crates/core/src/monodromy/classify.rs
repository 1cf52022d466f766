use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::valuation::check_prime;
use crate::error::{Error, Result};

/// Outcome of the moment criterion on `End(End E)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LarsenClass {
    /// `G ⊇ SL` or `G` finite.
    SlOrFinite,
    /// `G^0 = SL` or `G` finite; the determinant has finite order.
    Sl0OrFinite,
    OrthogonalOrFinite,
    SymplecticOrFinite,
    Inconclusive,
}

impl fmt::Display for LarsenClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LarsenClass::SlOrFinite => "G_E contains SL or G_E finite",
            LarsenClass::Sl0OrFinite => "G_E^0 = SL or G_E finite",
            LarsenClass::OrthogonalOrFinite => "O or SO or finite",
            LarsenClass::SymplecticOrFinite => "Sp or finite",
            LarsenClass::Inconclusive => "inconclusive",
        })
    }
}

/// `dim_endend` is the dimension of the invariants of `End(End E)`;
/// `sym2_nonzero` and `wedge2_nonzero` say whether `Sym² E` and `Λ² E` have
/// nonzero invariants.
pub fn larsen_classify(
    rank: usize,
    dim_endend: u64,
    sym2_nonzero: bool,
    wedge2_nonzero: bool,
    det_finite_order: bool,
) -> Result<LarsenClass> {
    if rank == 0 {
        return Err(Error::InvalidArgument("rank must be positive".into()));
    }
    if dim_endend == 0 {
        return Err(Error::InvalidArgument("End(End E) always has invariants".into()));
    }
    // At most one invariant bilinear form fits when dim ≤ 3.
    if sym2_nonzero && wedge2_nonzero && dim_endend <= 3 {
        return Err(Error::InvalidArgument(format!(
            "both Sym² and Λ² invariants claimed with dim End(End E) = {dim_endend}"
        )));
    }
    Ok(match dim_endend {
        2 if det_finite_order => LarsenClass::Sl0OrFinite,
        2 => LarsenClass::SlOrFinite,
        3 if sym2_nonzero => LarsenClass::OrthogonalOrFinite,
        3 if wedge2_nonzero && rank >= 3 => LarsenClass::SymplecticOrFinite,
        _ => LarsenClass::Inconclusive,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SimplicityVerdict {
    AlmostSimple,
    Inconclusive,
}

impl fmt::Display for SimplicityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SimplicityVerdict::AlmostSimple => "almost simple",
            SimplicityVerdict::Inconclusive => "inconclusive",
        })
    }
}

/// A proper product of type-A factors has at least 4 invariants in
/// `V^{⊗r}`, so `≤ 3` invariants or a prime-power `r` force almost simplicity.
pub fn almost_simplicity_test(
    r: usize,
    dim_inv_r: u64,
    r_is_prime_power: bool,
) -> Result<SimplicityVerdict> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!("rank {r} < 2")));
    }
    Ok(if dim_inv_r <= 3 || r_is_prime_power {
        SimplicityVerdict::AlmostSimple
    } else {
        SimplicityVerdict::Inconclusive
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthEstimate {
    /// `log_p(#G_{n+1} / #G_n)` for each step.
    pub steps: Vec<u32>,
    /// Number of trailing steps required to agree.
    pub tail: usize,
    pub k: Option<u32>,
}

/// Estimates `k` in `#G_n ∼ c·p^{kn}` from successive quotient sizes. The
/// last `max(2, ⌈steps/3⌉)` exponents must agree; with fewer than two steps
/// nothing is concluded.
pub fn analytic_dimension_estimate(sizes: &[BigUint], p: u64) -> Result<GrowthEstimate> {
    check_prime(p)?;
    if sizes.iter().any(|s| s.is_zero()) {
        return Err(Error::InvalidArgument("quotient sizes must be positive".into()));
    }
    let pb = BigUint::from(p);
    let mut steps = Vec::with_capacity(sizes.len().saturating_sub(1));
    for (i, w) in sizes.windows(2).enumerate() {
        let (mut ratio, rem) = w[1].div_rem(&w[0]);
        if !rem.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "size {} at index {} is not divisible by the previous size {}",
                w[1],
                i + 1,
                w[0]
            )));
        }
        let mut k = 0u32;
        while !ratio.is_one() {
            let (next, rem) = ratio.div_rem(&pb);
            if !rem.is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "ratio {} / {} is not a power of {p}",
                    w[1], w[0]
                )));
            }
            ratio = next;
            k += 1;
        }
        steps.push(k);
    }
    let tail = 2.max(steps.len().div_ceil(3));
    let k = if steps.len() < 2 {
        None
    } else {
        let last = &steps[steps.len() - tail..];
        last.iter().all(|&x| x == last[0]).then_some(last[0])
    };
    Ok(GrowthEstimate { steps, tail, k })
}
