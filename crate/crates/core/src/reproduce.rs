//! Fixed computations built from the library operations: the table of small
//! non-self-dual E6 modules, the odd-D exclusion, the type-A classification
//! sweep, the tensor-power containment sweep, and the plane syzygy bundle.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::One;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::kernel_bundle::{analyze_bundle, BundleReport, KernelBundleSpec};
use crate::rep::{
    classify_components, conjecture_scan_all, contains_module, enumerate_dominant_weights, self_dual_submodule_search,
    weyl_dimension, weyl_dimension_u128, ClassificationVerdict, ConjectureRecord, UniformConjectureRecord,
};
use crate::root_system::{Family, RootSystem};
use crate::weight::Weight;

fn decimal<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// Results of a sweep that may stop early when its budget runs out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sweep<T> {
    pub items: Vec<T>,
    /// Work items not reached before the budget expired.
    pub skipped: usize,
    pub complete: bool,
}

impl<T> Sweep<T> {
    fn run<I>(work: Vec<I>, budget: &Budget, mut f: impl FnMut(I) -> Result<Option<T>>) -> Result<Self> {
        let total = work.len();
        let mut items = Vec::new();
        let mut done = 0;
        for w in work {
            if budget.expired() {
                break;
            }
            if let Some(t) = f(w)? {
                items.push(t);
            }
            done += 1;
        }
        Ok(Sweep { items, skipped: total - done, complete: done == total })
    }
}

/// All dominant weights with every label in `0..=max_label`, sorted.
pub fn weights_with_labels_at_most(rank: usize, max_label: i32) -> Vec<Weight> {
    let mut out = vec![Weight::zero(rank)];
    for i in 0..rank {
        let mut next = Vec::with_capacity(out.len() * (max_label as usize + 1));
        for w in &out {
            for a in 0..=max_label {
                let mut v = w.clone();
                v.labels_mut()[i] = a;
                next.push(v);
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Smallest `M` such that `dim V(m·λ_i) > c·m` for every `i` and every
/// `m ≥ M`.
///
/// `dim V(m·λ_i) = ∏_α (1 + m·x_α)` with `x_α = ⟨λ_i, α^∨⟩ / ⟨δ, α^∨⟩`, and
/// `log(dim/m)` has derivative `(Σ_α m·x_α/(1 + m·x_α) − 1)/m`. Each summand
/// grows with `m`, so once the sum exceeds 1 the ratio `dim/m` only grows.
pub fn max_label_cutoff(rs: &RootSystem, c: u64) -> Result<i32> {
    let rank = rs.rank();
    let xs: Vec<Vec<Ratio<i64>>> = (0..rank)
        .map(|i| {
            let fw = Weight::fundamental(rank, i);
            let delta = rs.delta();
            rs.positive_roots()
                .iter()
                .filter_map(|root| {
                    let num = rs.coroot_pairing(&fw, root);
                    (num > 0).then(|| Ratio::new(num, rs.coroot_pairing(&delta, root)))
                })
                .collect()
        })
        .collect();
    for m in 1..=100_000i32 {
        let ok = (0..rank).try_fold(true, |acc, i| -> Result<bool> {
            if !acc {
                return Ok(false);
            }
            let mr = Ratio::from_integer(i64::from(m));
            let growth: Ratio<i64> = xs[i].iter().map(|x| mr * x / (Ratio::one() + mr * x)).sum();
            let dim = weyl_dimension(rs, &Weight::fundamental(rank, i).scaled(m))?;
            Ok(growth > Ratio::one() && dim > BigUint::from(c) * BigUint::from(m as u64))
        })?;
        if ok {
            return Ok(m);
        }
    }
    Err(Error::InvalidArgument(format!("no label cutoff found for {rs} with constant {c}")))
}

/// Weights grouped into `k·λ_i` families or listed on their own.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightFamily {
    /// Such as `(a,0,0,0,0,0)` or `(1,1,0,0,0,0)`.
    pub pattern: String,
    pub members: Vec<Weight>,
    /// Largest multiple occurring, for `k·λ_i` families.
    pub parameter_max: Option<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightTable {
    pub root_system: String,
    pub constant: u64,
    /// Every weight with a label at or above this has `dim > constant·max label`.
    pub label_cutoff: i32,
    pub candidates: usize,
    /// One weight per dual pair: the lexicographically larger one.
    pub weights: Vec<Weight>,
    pub families: Vec<WeightFamily>,
}

/// Dominant weights `λ` with `dim V(λ) ≤ c·max_i a_i` and `V(λ)` not
/// self-dual, one per dual pair.
pub fn non_self_dual_table(rs: &RootSystem, c: u64) -> Result<WeightTable> {
    let cutoff = max_label_cutoff(rs, c)?;
    let bound = BigUint::from(c) * BigUint::from((cutoff - 1).max(1) as u64);
    let candidates = enumerate_dominant_weights(rs, &bound, true)?;
    let mut weights = Vec::new();
    for w in &candidates {
        let cap = BigUint::from(c) * BigUint::from(w.max_label().max(0) as u64);
        if weyl_dimension(rs, w)? <= cap && *w >= rs.dual_involution(w)? {
            weights.push(w.clone());
        }
    }
    let families = group_families(&weights);
    Ok(WeightTable {
        root_system: rs.to_string(),
        constant: c,
        label_cutoff: cutoff,
        candidates: candidates.len(),
        weights,
        families,
    })
}

fn group_families(weights: &[Weight]) -> Vec<WeightFamily> {
    let support = |w: &Weight| -> Option<usize> {
        let nz: Vec<usize> = (0..w.len()).filter(|&i| w.labels()[i] != 0).collect();
        (nz.len() == 1).then(|| nz[0])
    };
    let mut families: Vec<WeightFamily> = Vec::new();
    let mut letters = 'a'..='z';
    let mut by_node: Vec<(usize, Vec<Weight>)> = Vec::new();
    let mut singles = Vec::new();
    for w in weights {
        match support(w) {
            Some(i) => match by_node.iter_mut().find(|(j, _)| *j == i) {
                Some((_, v)) => v.push(w.clone()),
                None => by_node.push((i, vec![w.clone()])),
            },
            None => singles.push(w.clone()),
        }
    }
    by_node.sort_by_key(|(i, _)| *i);
    for (i, members) in by_node {
        let letter = letters.next().unwrap_or('k');
        let labels: Vec<String> = (0..members[0].len())
            .map(|j| if j == i { letter.to_string() } else { "0".into() })
            .collect();
        let parameter_max = members.iter().map(|w| w.labels()[i]).max();
        families.push(WeightFamily { pattern: format!("({})", labels.join(",")), members, parameter_max });
    }
    for w in singles {
        families.push(WeightFamily { pattern: format!("({w})"), members: vec![w], parameter_max: None });
    }
    families
}

/// The table for E6 with constant 24576.
pub fn e6_table() -> Result<WeightTable> {
    non_self_dual_table(&RootSystem::simple(Family::E, 6)?, 24576)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DlRecord {
    pub lambda: Weight,
    #[serde(serialize_with = "decimal")]
    pub dimension: BigUint,
    /// First `(n, μ)` with a self-dual `V(μ) ⊆ V(λ)^{⊗n}`.
    pub found: Option<(usize, Weight)>,
    /// `2λ − t·α` with `α` the spin node carrying the larger label and
    /// `t` the difference of the two spin labels.
    pub constructed: Weight,
    pub constructed_in_square: bool,
    pub constructed_self_dual: bool,
}

/// For `D_l` with `l` odd: every `λ` with labels `≤ max_label` and unequal
/// spin labels has a self-dual summand in `V(λ)^{⊗n}` for some `n ≤ n_max`.
pub fn dl_exclusion(l: usize, max_label: i32, n_max: usize, budget: &Budget) -> Result<Sweep<DlRecord>> {
    if l.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("D{l} has w0 = −1; the exclusion concerns odd l")));
    }
    let rs = RootSystem::simple(Family::D, l)?;
    let work: Vec<Weight> = weights_with_labels_at_most(l, max_label)
        .into_iter()
        .filter(|w| w.labels()[l - 2] != w.labels()[l - 1])
        .collect();
    Sweep::run(work, budget, |lambda| {
        let (a, b) = (lambda.labels()[l - 2], lambda.labels()[l - 1]);
        let (node, t) = if a > b { (l - 2, a - b) } else { (l - 1, b - a) };
        let constructed = lambda.scaled(2).add_scaled(&rs.simple_root(node), -t);
        Ok(Some(DlRecord {
            dimension: weyl_dimension(&rs, &lambda)?,
            found: self_dual_submodule_search(&rs, &lambda, n_max)?,
            constructed_in_square: contains_module(&rs, &lambda, 2, &constructed)? > 0,
            constructed_self_dual: rs.is_self_dual(&constructed)?,
            constructed,
            lambda,
        }))
    })
}

/// Simple root systems of rank at most `max_rank`, `D3` included.
pub fn simple_systems_up_to(max_rank: usize) -> Vec<RootSystem> {
    let mut out = Vec::new();
    for rank in 1..=max_rank {
        for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            if let Ok(rs) = RootSystem::simple(family, rank) {
                out.push(rs);
            }
        }
    }
    out
}

/// Every nonzero module of dimension `≤ max_dim` over the simple systems of
/// rank `≤ max_rank`, classified by the invariant-vanishing test.
pub fn invar_sweep(max_rank: usize, max_dim: u64, budget: &Budget) -> Result<Sweep<ClassificationVerdict>> {
    let mut work = Vec::new();
    for rs in simple_systems_up_to(max_rank) {
        for w in enumerate_dominant_weights(&rs, &BigUint::from(max_dim), false)? {
            if !w.is_zero() {
                work.push((rs.clone(), w));
            }
        }
    }
    Sweep::run(work, budget, |(rs, w)| classify_components(&rs, &w, true).map(Some))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureSweepEntry {
    pub root_system: String,
    pub lambda: Weight,
    pub dimension: u128,
    pub pairs: Vec<ConjectureRecord>,
    pub uniform: UniformConjectureRecord,
}

/// Both readings of the containment conjecture for every nonzero `λ` with
/// labels `≤ max_label` on each system, skipping modules above `max_dim`.
pub fn conjecture_sweep(
    systems: &[RootSystem],
    max_label: i32,
    slack: usize,
    max_dim: Option<u128>,
    budget: &Budget,
) -> Result<Sweep<ConjectureSweepEntry>> {
    let mut work = Vec::new();
    for rs in systems {
        for w in weights_with_labels_at_most(rs.rank(), max_label) {
            if !w.is_zero() {
                work.push((rs.clone(), w));
            }
        }
    }
    Sweep::run(work, budget, |(rs, lambda)| {
        let dimension = weyl_dimension_u128(&rs, &lambda)?;
        if max_dim.is_some_and(|m| dimension > m) {
            return Ok(None);
        }
        let (pairs, uniform) = conjecture_scan_all(&rs, &lambda, slack)?;
        Ok(Some(ConjectureSweepEntry { root_system: rs.to_string(), lambda, dimension, pairs, uniform }))
    })
}

/// The systems the containment sweep covers by default.
pub fn default_conjecture_systems() -> Vec<RootSystem> {
    ["A1", "A2", "A3", "B2"].iter().map(|s| s.parse().expect("valid root system")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyzygyExample {
    pub report: BundleReport,
    /// The curve degree quoted alongside the example, next to the exact
    /// minimum from the restriction bound.
    pub quoted_degree: &'static str,
}

/// `Syz(X², Y², pZ² + XY)(3)`, trivial modulo `p`.
pub fn syzygy_example(p: u64) -> Result<SyzygyExample> {
    let report = analyze_bundle(&KernelBundleSpec::example_syzygy(), p, &Ratio::one(), true, None)?;
    Ok(SyzygyExample { report, quoted_degree: "d > 7" })
}
