use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use super::chern::{numeric_invariants, Form, KernelBundleSpec};
use super::stability::{bs_stability, StabilityOutcome};
use crate::error::{Error, Result};

/// Why `H^k(P^r, E^{⊗n}(m))` vanishes, or why the calculus cannot say so.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Justification {
    /// `H^k(O(m)) = 0` for `0 < k < r`.
    IntermediateLineBundle,
    /// `H^0(O(m)) = 0` for `m < 0`.
    NegativeTwistSections,
    /// Cohomology above the dimension of the space.
    AboveDimension,
    /// From `0 → ⊕E^{⊗n−1}(m+a_i) → ⊕E^{⊗n−1}(m+b_j) → E^{⊗n}(m) → 0`:
    /// `H^k` of the middle and `H^{k+1}` of the left sum vanish. Entries
    /// are indices into the report.
    ExactSequence { middle: Vec<usize>, left: Vec<usize> },
    /// A line-bundle term outside both vanishing rules.
    NotEstablished,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingEntry {
    pub power: usize,
    pub twist: i64,
    pub degree: usize,
    pub vanishes: bool,
    pub justification: Justification,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub resolution: KernelBundleSpec,
    pub power: usize,
    pub twist: i64,
    pub degree: usize,
    pub vanishes: bool,
    /// Index of the queried term; every entry only refers to earlier ones.
    pub root: usize,
    pub entries: Vec<VanishingEntry>,
    /// Longest chain of exact-sequence steps below the query.
    pub depth: usize,
}

struct Calculus<'a> {
    r: usize,
    a: &'a [i64],
    b: &'a [i64],
    memo: HashMap<(usize, i64, usize), usize>,
    entries: Vec<VanishingEntry>,
}

impl Calculus<'_> {
    fn term(&mut self, power: usize, twist: i64, degree: usize) -> usize {
        if let Some(&i) = self.memo.get(&(power, twist, degree)) {
            return i;
        }
        let (vanishes, justification) = if degree > self.r {
            (true, Justification::AboveDimension)
        } else if power == 0 {
            if 0 < degree && degree < self.r {
                (true, Justification::IntermediateLineBundle)
            } else if degree == 0 && twist < 0 {
                (true, Justification::NegativeTwistSections)
            } else {
                (false, Justification::NotEstablished)
            }
        } else {
            let middle: Vec<usize> = self.b.iter().map(|&t| self.term(power - 1, twist + t, degree)).collect();
            let left: Vec<usize> = self.a.iter().map(|&t| self.term(power - 1, twist + t, degree + 1)).collect();
            let ok = middle.iter().chain(&left).all(|&i| self.entries[i].vanishes);
            (ok, Justification::ExactSequence { middle, left })
        };
        self.entries.push(VanishingEntry { power, twist, degree, vanishes, justification });
        let i = self.entries.len() - 1;
        self.memo.insert((power, twist, degree), i);
        i
    }
}

/// Runs the long-exact-sequence induction for `H^k(P^r, E^{⊗n}(m))` on a
/// stable degree-0 bundle `E` of rank `r` on `P^r` with a cokernel
/// presentation. All twists are negative under these hypotheses.
pub fn cohomology_vanishing(spec: &KernelBundleSpec, power: usize, twist: i64, degree: usize) -> Result<VanishingReport> {
    if spec.form != Form::Cokernel {
        return Err(Error::InvalidArgument("vanishing calculus needs a cokernel presentation".into()));
    }
    let r = spec.rank();
    if spec.n != r {
        return Err(Error::InvalidArgument(format!("rank {r} differs from the ambient dimension {}", spec.n)));
    }
    if let Some(t) = spec.a.iter().chain(&spec.b).find(|&&t| t >= 0) {
        return Err(Error::InvalidArgument(format!("twist O({t}) is not negative")));
    }
    let inv = numeric_invariants(spec);
    if !inv.c1.is_zero() {
        return Err(Error::InvalidArgument(format!("degree {} is not 0", inv.c1)));
    }
    let st = bs_stability(spec)?;
    if st.outcome != StabilityOutcome::Stable {
        return Err(Error::InvalidArgument(format!(
            "bundle is not certified stable ({})",
            st.reason.unwrap_or_else(|| "b_1 ≥ μ".into())
        )));
    }

    let mut calc = Calculus { r, a: &spec.a, b: &spec.b, memo: HashMap::new(), entries: Vec::new() };
    let root = calc.term(power, twist, degree);
    let entries = calc.entries;
    let mut depth = vec![0usize; entries.len()];
    for (i, e) in entries.iter().enumerate() {
        if let Justification::ExactSequence { middle, left } = &e.justification {
            depth[i] = 1 + middle.iter().chain(left).map(|&j| depth[j]).max().unwrap_or(0);
        }
    }
    Ok(VanishingReport {
        resolution: spec.clone(),
        power,
        twist,
        degree,
        vanishes: entries[root].vanishes,
        root,
        depth: depth[root],
        entries,
    })
}
