use clap::{Args, Subcommand};
use monodromy_core::rep::{
    conjecture_scan, conjecture_scan_all, contains_module, enumerate_dominant_weights, invariant_dimension,
    min_invariant_power, self_dual_submodule_search, tensor_decompose, tensor_decompose_oracle, verify_cartan_chain,
    verify_line_multiplicities, weight_multiplicities, weyl_dimension, Decomposition, Multiplicity,
};
use monodromy_core::{RootSystem, Weight};
use num_bigint::BigUint;
use serde::Serialize;

use crate::output::{lines, CliError, CliResult, Output};
use crate::parse;
use crate::rootsys::RsWeight;

#[derive(Subcommand)]
pub enum Cmd {
    /// Dimension of the irreducible module.
    Dim(RsWeight),
    /// Weight multiplicities, dominant weights only unless --all.
    Mults {
        #[command(flatten)]
        target: RsWeight,
        #[arg(long)]
        all: bool,
    },
    /// Decomposition of V(left) ⊗ V(right).
    Tensor {
        #[arg(long)]
        rs: RootSystem,
        #[arg(long, allow_hyphen_values = true)]
        left: Weight,
        #[arg(long, allow_hyphen_values = true)]
        right: Weight,
        /// Use the character-stripping algorithm instead of Klimyk's rule.
        #[arg(long)]
        oracle: bool,
    },
    /// Dimension of the invariants in a tensor product of irreducibles.
    Invariants {
        #[arg(long)]
        rs: RootSystem,
        /// One factor; repeat for more.
        #[arg(long = "weight", required = true, allow_hyphen_values = true)]
        weights: Vec<Weight>,
    },
    /// Smallest n ≤ n-max with nonzero invariants in V^{⊗n}.
    MinInvPower {
        #[command(flatten)]
        target: RsWeight,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Multiplicity of V(mu) in V(weight)^{⊗n}.
    Contains {
        #[command(flatten)]
        target: RsWeight,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu: Weight,
    },
    /// m(λ − tα_i) = 1 along each simple-root string.
    VerifyGewicht(NodeCheck),
    /// V(2λ − tα_i) ⊆ V(λ) ⊗ V(λ) along each simple-root string.
    VerifyKompo(NodeCheck),
    /// First tensor power with a self-dual irreducible summand.
    SelfdualSearch {
        #[command(flatten)]
        target: RsWeight,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
    /// All dominant weights whose module has dimension ≤ bound.
    Enumerate {
        #[arg(long)]
        rs: RootSystem,
        #[arg(long, value_parser = parse::big_uint)]
        bound: BigUint,
        #[arg(long)]
        non_self_dual: bool,
    },
    /// Smallest power of V(λ) containing V(mu), against the lattice bound;
    /// without --mu, every dominant weight of V(λ) and the uniform power.
    Conjecture {
        #[command(flatten)]
        target: RsWeight,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<Weight>,
        /// Powers searched beyond the bound.
        #[arg(long, default_value_t = 2)]
        slack: usize,
    },
}

#[derive(Args)]
pub struct NodeCheck {
    #[command(flatten)]
    target: RsWeight,
    /// Simple root, numbered from 1; all of them when omitted.
    #[arg(long)]
    node: Option<usize>,
}

#[derive(Serialize)]
struct Entry<'a> {
    weight: &'a Weight,
    multiplicity: Multiplicity,
}

#[derive(Serialize)]
struct Dimensioned<T> {
    #[serde(serialize_with = "decimal")]
    dimension: BigUint,
    #[serde(flatten)]
    inner: T,
}

#[derive(Serialize)]
struct Summands<'a> {
    summands: &'a Decomposition,
}

#[derive(Serialize)]
struct NodeResult {
    node: usize,
    holds: bool,
}

#[derive(Serialize)]
struct NodeReport {
    lambda: Weight,
    nodes: Vec<NodeResult>,
    all_hold: bool,
}

#[derive(Serialize)]
struct Found<T> {
    found: Option<T>,
}

fn decimal<S: serde::Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

fn entry_lines<'a>(entries: impl Iterator<Item = (&'a Weight, Multiplicity)>) -> String {
    lines(entries.map(|(w, m)| format!("({w}): {m}")))
}

fn node_check(
    NodeCheck { target: RsWeight { rs, weight }, node }: NodeCheck,
    check: fn(&RootSystem, &Weight, usize) -> monodromy_core::Result<bool>,
) -> CliResult {
    let nodes: Vec<usize> = match node {
        Some(0) => return Err(CliError::Usage("--node counts from 1".into())),
        Some(i) => vec![i],
        None => (1..=rs.rank()).collect(),
    };
    let nodes = nodes
        .into_iter()
        .map(|i| Ok(NodeResult { node: i, holds: check(&rs, &weight, i - 1)? }))
        .collect::<Result<Vec<_>, CliError>>()?;
    let all_hold = nodes.iter().all(|n| n.holds);
    let text = lines(nodes.iter().map(|n| format!("node {}: {}", n.node, n.holds)));
    Output::new(&NodeReport { lambda: weight, nodes, all_hold }, text)
}

pub fn run(cmd: Cmd) -> CliResult {
    match cmd {
        Cmd::Dim(RsWeight { rs, weight }) => {
            let d = weyl_dimension(&rs, &weight)?;
            Output::new(&d.to_string(), d.to_string())
        }
        Cmd::Mults { target: RsWeight { rs, weight }, all } => {
            let ch = weight_multiplicities(&rs, &weight)?;
            if all {
                let full = ch.expand(&rs);
                let entries: Vec<Entry> = full.iter().map(|(w, &m)| Entry { weight: w, multiplicity: m }).collect();
                Output::new(&entries, entry_lines(full.iter().map(|(w, &m)| (w, m))))
            } else {
                Output::new(&ch, entry_lines(ch.dominant_entries().iter().map(|(w, m)| (w, *m))))
            }
        }
        Cmd::Tensor { rs, left, right, oracle } => {
            let d = if oracle { tensor_decompose_oracle(&rs, &left, &right)? } else { tensor_decompose(&rs, &left, &right)? };
            let dimension = d.dimension(&rs)?;
            let text = format!("{}\ndimension {dimension}", entry_lines(d.iter()));
            Output::new(&Dimensioned { dimension, inner: Summands { summands: &d } }, text)
        }
        Cmd::Invariants { rs, weights } => {
            let d = invariant_dimension(&rs, &weights)?;
            Output::new(&d, d.to_string())
        }
        Cmd::MinInvPower { target: RsWeight { rs, weight }, n_max } => {
            let found = min_invariant_power(&rs, &weight, n_max)?;
            let text = match found {
                Some((n, d)) => format!("n = {n}, invariants of dimension {d}"),
                None => format!("no invariants for n ≤ {n_max}"),
            };
            Output::new(&Found { found }, text)
        }
        Cmd::Contains { target: RsWeight { rs, weight }, n, mu } => {
            let m = contains_module(&rs, &weight, n, &mu)?;
            Output::new(&m, m.to_string())
        }
        Cmd::VerifyGewicht(c) => node_check(c, verify_line_multiplicities),
        Cmd::VerifyKompo(c) => node_check(c, verify_cartan_chain),
        Cmd::SelfdualSearch { target: RsWeight { rs, weight }, n_max } => {
            let found = self_dual_submodule_search(&rs, &weight, n_max)?;
            let text = match &found {
                Some((n, mu)) => format!("n = {n}, self-dual summand ({mu})"),
                None => format!("no self-dual summand for n ≤ {n_max}"),
            };
            Output::new(&Found { found }, text)
        }
        Cmd::Enumerate { rs, bound, non_self_dual } => {
            let ws = enumerate_dominant_weights(&rs, &bound, non_self_dual)?;
            let text = lines(ws.iter().map(|w| format!("({w})")));
            Output::new(&ws, text)
        }
        Cmd::Conjecture { target: RsWeight { rs, weight }, mu: Some(mu), slack } => {
            let r = conjecture_scan(&rs, &weight, &mu, slack)?;
            let found = r.n_found.map_or("none".to_string(), |n| n.to_string());
            let text = format!(
                "n_found = {found}, bound = {}, holds = {}, lattice obstructions at {:?}",
                r.bound, r.holds, r.lattice_obstructed
            );
            Output::new(&r, text)
        }
        Cmd::Conjecture { target: RsWeight { rs, weight }, mu: None, slack } => {
            let (pairs, uniform) = conjecture_scan_all(&rs, &weight, slack)?;
            let mut text: Vec<String> = pairs
                .iter()
                .map(|r| {
                    let found = r.n_found.map_or("none".to_string(), |n| n.to_string());
                    format!("mu ({}): n_found = {found}, bound = {}, holds = {}", r.mu, r.bound, r.holds)
                })
                .collect();
            let n_uniform = uniform.n_uniform.map_or("none".to_string(), |n| n.to_string());
            text.push(format!("uniform: n = {n_uniform}, holds = {}", uniform.holds));
            #[derive(Serialize)]
            struct All<A, B> {
                pairs: A,
                uniform: B,
            }
            Output::new(&All { pairs: &pairs, uniform: &uniform }, lines(text))
        }
    }
}
