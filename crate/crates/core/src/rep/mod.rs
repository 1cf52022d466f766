//! Characters, tensor products and invariants of irreducible modules.

mod character;
mod lemmas;
mod search;
mod tensor;

pub use character::{weight_multiplicities, weyl_dimension, weyl_dimension_u128, Multiplicity, WeightMultiset};
pub use lemmas::{verify_cartan_chain, verify_cartan_chains, verify_line_multiplicities};
pub use search::{
    classify_components, classify_components_within, conjecture_scan, conjecture_scan_all, conjecture_uniform,
    enumerate_dominant_weights, self_dual_submodule_search, ClassificationVerdict, ConjectureRecord,
    UniformConjectureRecord,
};
pub use tensor::{
    contains_module, invariant_dimension, min_invariant_power, tensor_decompose, tensor_decompose_oracle,
    tensor_power, tensor_with, Decomposition,
};
