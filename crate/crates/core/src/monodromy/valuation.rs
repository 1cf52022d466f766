use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A p-adic valuation, normalized so that `v_p(p) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PadicValue {
    Finite(BigRational),
    Infinity,
}

impl PadicValue {
    pub fn int(v: i64) -> Self {
        PadicValue::Finite(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        PadicValue::Finite(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, PadicValue::Infinity)
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            PadicValue::Finite(q) => Some(q),
            PadicValue::Infinity => None,
        }
    }

    /// `v(x) ≥ q`.
    pub fn at_least(&self, q: &BigRational) -> bool {
        match self {
            PadicValue::Finite(v) => v >= q,
            PadicValue::Infinity => true,
        }
    }
}

impl Ord for PadicValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (PadicValue::Finite(a), PadicValue::Finite(b)) => a.cmp(b),
            (PadicValue::Finite(_), PadicValue::Infinity) => Ordering::Less,
            (PadicValue::Infinity, PadicValue::Finite(_)) => Ordering::Greater,
            (PadicValue::Infinity, PadicValue::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for PadicValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PadicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PadicValue::Finite(q) => write!(f, "{q}"),
            PadicValue::Infinity => f.write_str("inf"),
        }
    }
}

/// Serialized as an exact rational string (`"3/2"`) or `"inf"`.
impl Serialize for PadicValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Whether `n = l^k` for a prime `l` and `k ≥ 1`.
pub fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let l = (2..=n).find(|d| n.is_multiple_of(*d)).expect("n >= 2 has a divisor");
    let mut m = n;
    while m.is_multiple_of(l) {
        m /= l;
    }
    m == 1
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p as i64))
    }
}

/// `v_p` of a nonzero integer.
pub(crate) fn int_valuation(x: &BigInt, p: u64) -> i64 {
    debug_assert!(!x.is_zero());
    let p = BigInt::from(p);
    let mut x = x.abs();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

/// Exact p-adic valuation of a rational; `+∞` for zero.
pub fn vp(x: &BigRational, p: u64) -> Result<PadicValue> {
    check_prime(p)?;
    Ok(vp_unchecked(x, p))
}

pub(crate) fn vp_unchecked(x: &BigRational, p: u64) -> PadicValue {
    if x.is_zero() {
        PadicValue::Infinity
    } else {
        PadicValue::int(int_valuation(x.numer(), p) - int_valuation(x.denom(), p))
    }
}
