use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Serialize, Serializer};

use super::matrix::{eigenvalue_deviation_bound, RationalMatrix};
use super::valuation::{check_prime, PadicValue};
use crate::error::{Error, Result};

/// Per-generator evidence: the congruence level of `G − I` and the
/// valuation lower bound on the eigenvalues of `G − I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorEvidence {
    pub congruence_valuation: PadicValue,
    pub eigenvalue_bound: PadicValue,
    pub is_identity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateResult {
    pub passed: bool,
    pub p: u64,
    #[serde(serialize_with = "rational_string")]
    pub q: BigRational,
    #[serde(serialize_with = "rational_string")]
    pub threshold: BigRational,
    /// `true` when the threshold is an inclusive bound (`p = 2`).
    pub threshold_inclusive: bool,
    pub per_generator: Vec<GeneratorEvidence>,
    pub reason: Option<String>,
}

pub(crate) fn rational_string<S: Serializer>(
    q: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(q)
}

/// The level `q` must clear: `q > 1/(p−1)` for odd `p`, `q ≥ 1` for `p = 2`.
pub fn certificate_threshold(p: u64) -> (BigRational, bool) {
    if p == 2 {
        (BigRational::one(), true)
    } else {
        (BigRational::new(BigInt::one(), BigInt::from(p - 1)), false)
    }
}

pub fn clears_threshold(p: u64, q: &BigRational) -> bool {
    let (t, inclusive) = certificate_threshold(p);
    if inclusive {
        *q >= t
    } else {
        *q > t
    }
}

/// Checks that every generator is congruent to the identity modulo `p^q`
/// with `q` above the connectedness threshold, and records the eigenvalue
/// evidence that no generator other than `I` has finite order.
pub fn connectedness_certificate(
    generators: &[RationalMatrix],
    q: &BigRational,
) -> Result<CertificateResult> {
    if !q.is_positive() {
        return Err(Error::InvalidArgument(format!("level q = {q} must be positive")));
    }
    let first = generators
        .first()
        .ok_or_else(|| Error::InvalidArgument("no generators given".into()))?;
    let p = first.p();
    check_prime(p)?;
    for (i, g) in generators.iter().enumerate() {
        if g.p() != p {
            return Err(Error::InvalidArgument(format!(
                "generator {i} is over p = {} but generator 0 is over p = {p}",
                g.p()
            )));
        }
        if g.dim() != first.dim() {
            return Err(Error::InvalidArgument(format!("generator {i} has a different size")));
        }
        if !g.is_invertible() {
            return Err(Error::InvalidArgument(format!("generator {i} is singular")));
        }
    }

    let (threshold, inclusive) = certificate_threshold(p);
    let per_generator: Vec<GeneratorEvidence> = generators
        .iter()
        .map(|g| {
            let m = g.minus_identity();
            GeneratorEvidence {
                congruence_valuation: m.min_entry_valuation(),
                eigenvalue_bound: eigenvalue_deviation_bound(&m),
                is_identity: g.is_identity(),
            }
        })
        .collect();

    let reason = if !clears_threshold(p, q) {
        Some(if inclusive { "q < 1".to_string() } else { "q ≤ 1/(p−1)".to_string() })
    } else {
        per_generator
            .iter()
            .position(|e| !e.congruence_valuation.at_least(q))
            .map(|i| {
                format!(
                    "generator {i}: G − I has an entry of valuation {} < q",
                    per_generator[i].congruence_valuation
                )
            })
    };

    Ok(CertificateResult {
        passed: reason.is_none(),
        p,
        q: q.clone(),
        threshold,
        threshold_inclusive: inclusive,
        per_generator,
        reason,
    })
}

impl CertificateResult {
    pub fn threshold_display(&self) -> String {
        if self.threshold_inclusive {
            format!("q ≥ {}", self.threshold)
        } else {
            format!("q > {}", self.threshold)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>], p: u64) -> RationalMatrix {
        RationalMatrix::from_integers(rows, p).unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn unipotent_generator_passes() {
        let g = m(&[vec![1, 3], vec![0, 1]], 3);
        let c = connectedness_certificate(&[g], &r(1, 1)).unwrap();
        assert!(c.passed);
        assert_eq!(c.threshold, r(1, 2));
        assert_eq!(c.per_generator[0].congruence_valuation, PadicValue::int(1));
        assert_eq!(c.per_generator[0].eigenvalue_bound, PadicValue::Infinity);
    }

    #[test]
    fn low_level_fails_threshold() {
        let g = m(&[vec![1, 3], vec![0, 1]], 3);
        let c = connectedness_certificate(&[g], &r(1, 3)).unwrap();
        assert!(!c.passed);
        assert_eq!(c.reason.as_deref(), Some("q ≤ 1/(p−1)"));
        let g = m(&[vec![4]], 3);
        assert!(!connectedness_certificate(&[g], &r(1, 2)).unwrap().passed);
    }

    #[test]
    fn two_adic_boundary() {
        let g = m(&[vec![3, 0], vec![0, 3]], 2);
        let c = connectedness_certificate(std::slice::from_ref(&g), &r(1, 1)).unwrap();
        assert!(c.passed);
        assert_eq!(c.per_generator[0].eigenvalue_bound, PadicValue::int(1));
        assert!(!connectedness_certificate(&[g], &r(1, 2)).unwrap().passed);
    }

    #[test]
    fn congruence_failure_reports_generator() {
        let g0 = m(&[vec![1, 9], vec![0, 1]], 3);
        let g1 = m(&[vec![1, 1], vec![0, 1]], 3);
        let c = connectedness_certificate(&[g0, g1], &r(1, 1)).unwrap();
        assert!(!c.passed);
        assert!(c.reason.unwrap().starts_with("generator 1"));
    }

    #[test]
    fn rejections() {
        let sing = m(&[vec![1, 1], vec![1, 1]], 3);
        assert!(connectedness_certificate(&[sing], &r(1, 1)).is_err());
        let g = m(&[vec![1]], 3);
        assert!(connectedness_certificate(std::slice::from_ref(&g), &r(0, 1)).is_err());
        assert!(connectedness_certificate(std::slice::from_ref(&g), &r(-1, 1)).is_err());
        assert!(connectedness_certificate(&[], &r(1, 1)).is_err());
        let h = m(&[vec![1]], 5);
        assert!(connectedness_certificate(&[g, h], &r(1, 1)).is_err());
    }
}
