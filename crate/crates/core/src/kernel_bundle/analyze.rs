use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::chern::{numeric_invariants, total_chern, ChowClass, Form, KernelBundleSpec, NumericInvariants};
use super::stability::{bs_stability, langer_restriction_degree, LangerReport, StabilityOutcome, StabilityReport};
use super::vanishing::{cohomology_vanishing, VanishingReport};
use crate::error::Result;
use crate::monodromy::{
    almost_simplicity_test, certificate_threshold, clears_threshold, is_prime, is_prime_power, rational_string,
    SimplicityVerdict,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conclusion {
    pub claim: String,
    pub because: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BundleReport {
    pub spec: KernelBundleSpec,
    /// The cokernel presentation the geometry is run on: the input itself,
    /// or the presentation of the dual bundle when given as a kernel.
    pub resolution: KernelBundleSpec,
    pub via_dual: bool,
    pub chern: ChowClass,
    pub invariants: NumericInvariants,
    pub stability: StabilityReport,
    pub restriction: Option<LangerReport>,
    /// Vanishing of `Γ(P^r, E^{⊗n})` for `0 < n < r`.
    pub section_vanishing: Vec<VanishingReport>,
    pub p: u64,
    #[serde(serialize_with = "rational_string")]
    pub q: BigRational,
    pub threshold: String,
    /// Asserted by the caller, not computed.
    pub trivial_mod_pq: bool,
    pub sections_at_r: Option<u64>,
    pub conclusions: Vec<Conclusion>,
    pub withheld: Vec<String>,
    pub group: Option<String>,
}

/// Runs the geometric checks on a presentation and, when the reduction
/// modulo `p^q` is asserted trivial with `q` above the connectedness
/// threshold, draws the group-theoretic conclusions they support.
pub fn analyze_bundle(
    spec: &KernelBundleSpec,
    p: u64,
    q: &BigRational,
    trivial_mod_pq: bool,
    sections_at_r: Option<u64>,
) -> Result<BundleReport> {
    if !is_prime(p) {
        return Err(crate::Error::NotPrime(p as i64));
    }
    let (resolution, via_dual) = match spec.form {
        Form::Cokernel => (spec.clone(), false),
        Form::Kernel => (spec.dual(), true),
    };
    let r = spec.rank();
    let chern = total_chern(spec);
    let invariants = numeric_invariants(spec);
    let stability = bs_stability(&resolution)?;
    let stable = stability.outcome == StabilityOutcome::Stable;
    let restriction = if r >= 2 && spec.n >= 2 { Some(langer_restriction_degree(spec, 1)?) } else { None };

    let mut conclusions = Vec::new();
    let mut withheld = Vec::new();
    let degree_zero = invariants.c1.is_zero();

    let mut section_vanishing = Vec::new();
    if stable && degree_zero {
        for n in 1..r {
            section_vanishing.push(cohomology_vanishing(&resolution, n, 0, 0)?);
        }
    }
    let sections_vanish = stable && degree_zero && section_vanishing.iter().all(|v| v.vanishes);

    if stable {
        let d = restriction.as_ref().map(|l| l.a_min.to_string()).unwrap_or_else(|| "any".into());
        conclusions.push(Conclusion {
            claim: format!("E is stable and stays stable on curves of degree d ≥ {d}"),
            because: match &restriction {
                Some(l) => format!(
                    "b_1 = {} < μ = {}; restriction bound {} for D ∈ |dH|",
                    stability.b[0], stability.slope, l.bound
                ),
                None => format!("b_1 = {} < μ = {}", stability.b[0], stability.slope),
            },
        });
    } else {
        withheld.push(format!(
            "stability not certified: {}",
            stability.reason.clone().unwrap_or_else(|| format!("b_1 = {} ≥ μ = {}", stability.b[0], stability.slope))
        ));
    }
    if !degree_zero {
        withheld.push(format!("degree {} is not 0", invariants.c1));
    }
    if stable && degree_zero && r >= 2 {
        conclusions.push(Conclusion {
            claim: format!("Γ(E^{{⊗n}}) = 0 for 0 < n < {r}"),
            because: if sections_vanish {
                "long exact sequences down to line-bundle cohomology".into()
            } else {
                "not established".into()
            },
        });
    }

    let (t, inclusive) = certificate_threshold(p);
    let threshold = if inclusive { format!("q ≥ {t}") } else { format!("q > {t}") };
    let level_ok = clears_threshold(p, q);
    let mut group = None;

    if !trivial_mod_pq {
        withheld.push("reduction modulo p^q not asserted trivial; no group conclusions".into());
    } else if !level_ok {
        withheld.push(format!("q = {q} fails {threshold}; no group conclusions"));
    } else if !sections_vanish {
        withheld.push("geometric hypotheses not all certified; no group conclusions".into());
    } else {
        conclusions.push(Conclusion {
            claim: "G_E is connected".into(),
            because: format!("E trivial modulo p^{q} with {threshold}"),
        });
        conclusions.push(Conclusion {
            claim: "G_E is semisimple".into(),
            because: "E stable with trivial determinant, as is its reduction".into(),
        });
        conclusions.push(Conclusion {
            claim: "every simple component of G_E is of type A".into(),
            because: format!("E_x is faithful and irreducible with no invariants in E_x^{{⊗n}} for 0 < n < {r}"),
        });
        if r == 2 {
            conclusions.push(Conclusion {
                claim: "G = SL(2)".into(),
                because: "the only faithful irreducible two-dimensional representation of a semisimple group is SL(2)"
                    .into(),
            });
            group = Some("SL(2)".into());
        } else {
            let verdict = match sections_at_r {
                Some(s) => almost_simplicity_test(r, s, is_prime_power(r as u64))?,
                None if is_prime_power(r as u64) => SimplicityVerdict::AlmostSimple,
                None => SimplicityVerdict::Inconclusive,
            };
            match verdict {
                SimplicityVerdict::AlmostSimple => {
                    conclusions.push(Conclusion {
                        claim: "G_E is almost simple of type A".into(),
                        because: match sections_at_r {
                            Some(s) if s <= 3 => format!("dim Γ(E^{{⊗{r}}}) = {s} ≤ 3"),
                            _ => format!("rank {r} is a prime power"),
                        },
                    });
                    group = Some("almost simple of type A".into());
                }
                SimplicityVerdict::Inconclusive => {
                    withheld.push(match sections_at_r {
                        Some(s) => format!("dim Γ(E^{{⊗{r}}}) = {s} > 3 and {r} is not a prime power"),
                        None => format!("dim Γ(E^{{⊗{r}}}) not supplied and {r} is not a prime power"),
                    });
                }
            }
        }
    }

    Ok(BundleReport {
        spec: spec.clone(),
        resolution,
        via_dual,
        chern,
        invariants,
        stability,
        restriction,
        section_vanishing,
        p,
        q: q.clone(),
        threshold,
        trivial_mod_pq,
        sections_at_r,
        conclusions,
        withheld,
        group,
    })
}

impl fmt::Display for BundleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bundle: {}", self.spec)?;
        if self.via_dual {
            writeln!(f, "resolution of the dual: {}", self.resolution)?;
        }
        writeln!(f, "c(E) = {}", self.chern)?;
        let inv = &self.invariants;
        write!(f, "rank {}, c_1 = {}, slope {}", inv.rank, inv.c1, inv.slope)?;
        if let (Some(c2), Some(d)) = (&inv.c2, &inv.discriminant) {
            write!(f, ", c_2 = {c2}, discriminant {d}")?;
        }
        writeln!(f)?;
        writeln!(f, "stability: {:?}", self.stability.outcome)?;
        if let Some(l) = &self.restriction {
            writeln!(f, "restriction bound: a > {} so curve degree d ≥ {}", l.bound, l.a_min)?;
        }
        writeln!(f, "p = {}, q = {} ({}), trivial mod p^q asserted: {}", self.p, self.q, self.threshold, self.trivial_mod_pq)?;
        for w in &self.withheld {
            writeln!(f, "withheld: {w}")?;
        }
        for c in &self.conclusions {
            writeln!(f, "{} [{}]", c.claim, c.because)?;
        }
        match &self.group {
            Some(g) if g.starts_with("SL") => write!(f, "G = {g}"),
            Some(g) => write!(f, "G is {g}"),
            None => write!(f, "no group determined"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn syzygy_example_gives_sl2() {
        let r = analyze_bundle(&KernelBundleSpec::example_syzygy(), 3, &q(1, 1), true, None).unwrap();
        assert!(r.via_dual);
        assert_eq!(r.stability.outcome, StabilityOutcome::Stable);
        assert_eq!(r.restriction.as_ref().unwrap().a_min, 7.into());
        assert_eq!(r.group.as_deref(), Some("SL(2)"));
        assert!(r.to_string().ends_with("G = SL(2)"));
    }

    #[test]
    fn conclusions_are_gated() {
        let e = KernelBundleSpec::example_syzygy();
        let r = analyze_bundle(&e, 3, &q(1, 1), false, None).unwrap();
        assert_eq!(r.group, None);
        assert!(r.conclusions.iter().all(|c| !c.claim.starts_with("G_E")));

        let r = analyze_bundle(&e, 5, &q(1, 4), true, None).unwrap();
        assert_eq!(r.group, None);
        assert!(r.withheld.iter().any(|w| w.contains("fails")));

        assert!(analyze_bundle(&e, 9, &q(1, 1), true, None).is_err());
    }

    #[test]
    fn higher_rank_uses_simplicity_test() {
        let e = KernelBundleSpec::kernel(3, vec![1; 4], vec![4]).unwrap();
        let r = analyze_bundle(&e, 3, &q(1, 1), true, None).unwrap();
        assert_eq!(r.group.as_deref(), Some("almost simple of type A"));
        let e6 = KernelBundleSpec::kernel(6, vec![1; 7], vec![7]).unwrap();
        let r = analyze_bundle(&e6, 3, &q(1, 1), true, Some(4)).unwrap();
        assert_eq!(r.group, None);
        let r = analyze_bundle(&e6, 3, &q(1, 1), true, Some(2)).unwrap();
        assert!(r.group.is_some());
    }
}
