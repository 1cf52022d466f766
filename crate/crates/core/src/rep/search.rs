use num_bigint::BigUint;
use serde::Serialize;

use super::character::{weight_multiplicities, weyl_dimension, weyl_dimension_u128, Multiplicity, WeightMultiset};
use super::tensor::{min_invariant_power, tensor_with_character, Decomposition};
use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::weight::Weight;

/// Smallest `n ≤ n_max` such that `V(λ)^{⊗n}` has a self-dual irreducible
/// summand, with the lexicographically smallest such highest weight.
pub fn self_dual_submodule_search(rs: &RootSystem, lambda: &Weight, n_max: usize) -> Result<Option<(usize, Weight)>> {
    rs.check_dominant(lambda)?;
    let ch = weight_multiplicities(rs, lambda)?;
    let mut d = Decomposition::irreducible(lambda.clone());
    for n in 1..=n_max {
        for (w, _) in d.iter() {
            if rs.is_self_dual(w)? {
                return Ok(Some((n, w.clone())));
            }
        }
        if n < n_max {
            d = tensor_with_character(rs, &d, &ch)?;
        }
    }
    Ok(None)
}

/// All dominant weights with `dim V(λ) ≤ dim_bound`, optionally keeping only
/// those that are not self-dual. Sorted lexicographically.
///
/// The Weyl dimension is strictly increasing in every label, so the search
/// only ever extends weights that are still within the bound.
pub fn enumerate_dominant_weights(rs: &RootSystem, dim_bound: &BigUint, only_non_self_dual: bool) -> Result<Vec<Weight>> {
    if *dim_bound < BigUint::from(1u32) {
        return Err(Error::InvalidArgument("dimension bound must be at least 1".into()));
    }
    let mut out = Vec::new();
    let mut stack = vec![(rs.zero(), 0usize)];
    while let Some((w, first)) = stack.pop() {
        for j in first..rs.rank() {
            let mut next = w.clone();
            next.labels_mut()[j] += 1;
            if weyl_dimension(rs, &next)? <= *dim_bound {
                stack.push((next, j));
            }
        }
        if !only_non_self_dual || !rs.is_self_dual(&w)? {
            out.push(w);
        }
    }
    out.sort();
    Ok(out)
}

/// Outcome of testing the tensor-power containment conjecture for one pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureRecord {
    pub lambda: Weight,
    pub mu: Weight,
    /// Exponent of `Λ/Λ_r`, or 2 when the fundamental group is trivial.
    pub bound: usize,
    pub searched_up_to: usize,
    pub n_found: Option<usize>,
    pub holds: bool,
    /// Powers `n` at which `nλ − μ` is outside the root lattice.
    pub lattice_obstructed: Vec<usize>,
    /// Whether `V(μ)` was absent at every obstructed power that was examined.
    pub lattice_consistent: bool,
}

fn conjecture_bound(rs: &RootSystem) -> usize {
    let pi = rs.fundamental_group();
    if pi.is_trivial() {
        2
    } else {
        pi.exponent as usize
    }
}

/// Smallest `n` with `V(μ) ⊆ V(λ)^{⊗n}`, searched up to `bound + slack`,
/// for a dominant weight `μ` of `V(λ)`.
pub fn conjecture_scan(rs: &RootSystem, lambda: &Weight, mu: &Weight, slack: usize) -> Result<ConjectureRecord> {
    rs.check_dominant(lambda)?;
    rs.check_dominant(mu)?;
    let ch = weight_multiplicities(rs, lambda)?;
    if ch.dominant_multiplicity(mu) == 0 {
        return Err(Error::InvalidArgument(format!("{mu} is not a weight of V({lambda})")));
    }
    let (mut records, _) = scan_powers(rs, lambda, &ch, std::slice::from_ref(mu), slack)?;
    Ok(records.pop().expect("one target"))
}

/// The uniform reading of the conjecture: one power `n` whose tensor power
/// contains every dominant weight of `V(λ)` at once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniformConjectureRecord {
    pub lambda: Weight,
    pub bound: usize,
    pub searched_up_to: usize,
    pub n_uniform: Option<usize>,
    pub holds: bool,
}

pub fn conjecture_uniform(rs: &RootSystem, lambda: &Weight, slack: usize) -> Result<UniformConjectureRecord> {
    Ok(conjecture_scan_all(rs, lambda, slack)?.1)
}

/// Both readings for every dominant weight `μ` of `V(λ)`, sharing one
/// sequence of tensor powers.
pub fn conjecture_scan_all(
    rs: &RootSystem,
    lambda: &Weight,
    slack: usize,
) -> Result<(Vec<ConjectureRecord>, UniformConjectureRecord)> {
    rs.check_dominant(lambda)?;
    let ch = weight_multiplicities(rs, lambda)?;
    let targets: Vec<Weight> = ch.dominant_entries().iter().map(|(w, _)| w.clone()).collect();
    scan_powers(rs, lambda, &ch, &targets, slack)
}

fn scan_powers(
    rs: &RootSystem,
    lambda: &Weight,
    ch: &WeightMultiset,
    targets: &[Weight],
    slack: usize,
) -> Result<(Vec<ConjectureRecord>, UniformConjectureRecord)> {
    let bound = conjecture_bound(rs);
    let limit = bound + slack;
    let mut found: Vec<Option<usize>> = vec![None; targets.len()];
    let mut obstructed: Vec<Vec<usize>> = vec![Vec::new(); targets.len()];
    let mut consistent = vec![true; targets.len()];
    let mut n_uniform = None;
    let mut d = Decomposition::irreducible(lambda.clone());
    for n in 1..=limit {
        let mut all_present = true;
        for (t, mu) in targets.iter().enumerate() {
            let present = d.multiplicity(mu) > 0;
            all_present &= present;
            if found[t].is_some() {
                continue;
            }
            if !rs.in_root_lattice(&lambda.scaled(n as i32).add_scaled(mu, -1))? {
                obstructed[t].push(n);
                consistent[t] &= !present;
            }
            if present {
                found[t] = Some(n);
            }
        }
        if all_present && n_uniform.is_none() {
            n_uniform = Some(n);
        }
        if n_uniform.is_some() || n == limit {
            break;
        }
        d = tensor_with_character(rs, &d, ch)?;
    }
    let records = targets
        .iter()
        .enumerate()
        .map(|(t, mu)| ConjectureRecord {
            lambda: lambda.clone(),
            mu: mu.clone(),
            bound,
            searched_up_to: found[t].unwrap_or(limit),
            n_found: found[t],
            holds: found[t].is_some_and(|n| n <= bound),
            lattice_obstructed: std::mem::take(&mut obstructed[t]),
            lattice_consistent: consistent[t],
        })
        .collect();
    let uniform = UniformConjectureRecord {
        lambda: lambda.clone(),
        bound,
        searched_up_to: n_uniform.unwrap_or(limit),
        n_uniform,
        holds: n_uniform.is_some_and(|n| n <= bound),
    };
    Ok((records, uniform))
}

/// Verdict of the invariant-vanishing test on a faithful irreducible module
/// of dimension `r`: either some `V^{⊗n}`, `n < r`, has invariants (the
/// hypothesis fails and nothing is forced) or every component must be of
/// type A.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationVerdict {
    pub root_system: String,
    pub lambda: Weight,
    pub dimension: u128,
    /// First `(n, dim (V^{⊗n})^g)` with `n < dimension`, if any.
    pub witness: Option<(usize, Multiplicity)>,
    /// True when no witness exists, so the invariant-vanishing hypothesis holds.
    pub type_a_forced: bool,
    pub all_components_type_a: bool,
    /// False only for a module satisfying the hypothesis on a non-type-A
    /// system, which would contradict the classification.
    pub consistent: bool,
    /// False when the search was capped before reaching `dimension − 1`.
    pub complete: bool,
}

pub fn classify_components(rs: &RootSystem, lambda: &Weight, require_faithful: bool) -> Result<ClassificationVerdict> {
    classify_components_within(rs, lambda, require_faithful, None)
}

/// [`classify_components`] with an optional cap on the tensor powers searched.
pub fn classify_components_within(
    rs: &RootSystem,
    lambda: &Weight,
    require_faithful: bool,
    max_power: Option<usize>,
) -> Result<ClassificationVerdict> {
    rs.check_dominant(lambda)?;
    if require_faithful {
        for (c, range) in rs.component_ranges() {
            if lambda.labels()[range].iter().all(|&a| a == 0) {
                return Err(Error::InvalidArgument(format!(
                    "V({lambda}) is not faithful: trivial on component {c}"
                )));
            }
        }
    }
    let dimension = weyl_dimension_u128(rs, lambda)?;
    let wanted = usize::try_from(dimension.saturating_sub(1)).unwrap_or(usize::MAX);
    let n_max = max_power.map_or(wanted, |cap| cap.min(wanted));
    let witness = if n_max >= 1 {
        min_invariant_power(rs, lambda, n_max)?
    } else {
        None
    };
    let all_components_type_a = rs.all_type_a();
    let complete = witness.is_some() || n_max == wanted;
    let type_a_forced = witness.is_none() && complete;
    Ok(ClassificationVerdict {
        root_system: rs.to_string(),
        lambda: lambda.clone(),
        dimension,
        witness,
        type_a_forced,
        all_components_type_a,
        consistent: !type_a_forced || all_components_type_a,
        complete,
    })
}
