//! Exact computations around monodromy groups of vector bundles: weights and
//! characters of semisimple Lie algebras, p-adic valuation certificates, and
//! Chern-class numerics for kernel bundles on projective space.

pub mod budget;
pub mod error;
pub mod kernel_bundle;
pub mod lattice;
pub mod monodromy;
pub mod rep;
pub mod reproduce;
pub mod root_system;
pub mod weight;

pub use budget::Budget;
pub use error::{Error, Result};
pub use root_system::{Component, Family, FundamentalGroupInfo, Root, RootSystem};
pub use weight::Weight;
