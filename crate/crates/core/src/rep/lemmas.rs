//! Checkers for the two structural facts about highest-weight strings used
//! in the type-A classification.

use super::character::weight_multiplicities;
use super::tensor::{tensor_decompose, Decomposition};
use crate::error::Result;
use crate::root_system::RootSystem;
use crate::weight::Weight;

/// `m_λ(λ − tα_i) = 1` for `0 ≤ t ≤ ⟨λ, α_i^∨⟩`.
pub fn verify_line_multiplicities(rs: &RootSystem, lambda: &Weight, i: usize) -> Result<bool> {
    rs.check_dominant(lambda)?;
    rs.check_root_index(i)?;
    let ch = weight_multiplicities(rs, lambda)?;
    let alpha = rs.simple_root(i);
    Ok((0..=lambda[i]).all(|t| ch.multiplicity(rs, &lambda.add_scaled(&alpha, -t)) == 1))
}

/// `V(2λ − tα_i) ⊆ V(λ) ⊗ V(λ)` for every `0 ≤ t ≤ ⟨λ, α_i^∨⟩`.
pub fn verify_cartan_chain(rs: &RootSystem, lambda: &Weight, i: usize) -> Result<bool> {
    rs.check_dominant(lambda)?;
    rs.check_root_index(i)?;
    let square = tensor_decompose(rs, lambda, lambda)?;
    Ok(chain_present(rs, &square, lambda, i))
}

/// [`verify_cartan_chain`] for every simple root, sharing one decomposition
/// of `V(λ) ⊗ V(λ)`.
pub fn verify_cartan_chains(rs: &RootSystem, lambda: &Weight) -> Result<Vec<bool>> {
    rs.check_dominant(lambda)?;
    let square = tensor_decompose(rs, lambda, lambda)?;
    Ok((0..rs.rank()).map(|i| chain_present(rs, &square, lambda, i)).collect())
}

fn chain_present(rs: &RootSystem, square: &Decomposition, lambda: &Weight, i: usize) -> bool {
    let alpha = rs.simple_root(i);
    let doubled = lambda.scaled(2);
    (0..=lambda[i]).all(|t| square.multiplicity(&doubled.add_scaled(&alpha, -t)) >= 1)
}
