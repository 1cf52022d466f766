use clap::{Args, Subcommand};
use monodromy_core::{RootSystem, Weight};
use serde::Serialize;

use crate::output::{lines, CliResult, Output};

#[derive(Subcommand)]
pub enum Cmd {
    /// Cartan matrix, row i holding ⟨α_i, α_j^∨⟩.
    Cartan(RsArg),
    /// Positive roots in simple-root coordinates and Dynkin labels.
    Posroots(RsArg),
    /// Invariant factors of the weight lattice modulo the root lattice.
    Pi0(RsArg),
    /// Highest weight of the dual module.
    Dual(RsWeight),
}

#[derive(Args)]
pub struct RsArg {
    /// Root system such as A2, E6 or A1xB2.
    #[arg(long)]
    pub rs: RootSystem,
}

#[derive(Args)]
pub struct RsWeight {
    #[arg(long)]
    pub rs: RootSystem,
    /// Dynkin labels, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: Weight,
}

#[derive(Serialize)]
struct RootEntry<'a> {
    coefficients: &'a [i32],
    labels: &'a Weight,
    height: i32,
}

#[derive(Serialize)]
struct Pi0<'a> {
    root_system: String,
    #[serde(flatten)]
    info: &'a monodromy_core::FundamentalGroupInfo,
    cartan_determinant: i64,
}

#[derive(Serialize)]
struct Dual {
    weight: Weight,
    dual: Weight,
    self_dual: bool,
}

pub fn run(cmd: Cmd) -> CliResult {
    match cmd {
        Cmd::Cartan(RsArg { rs }) => {
            let text = lines(rs.cartan().iter().map(|row| {
                row.iter().map(|x| format!("{x:>3}")).collect::<Vec<_>>().join("")
            }));
            Output::new(rs.cartan(), text)
        }
        Cmd::Posroots(RsArg { rs }) => {
            let roots: Vec<RootEntry> = rs
                .positive_roots()
                .iter()
                .map(|r| RootEntry { coefficients: &r.coefficients, labels: &r.labels, height: r.height })
                .collect();
            let text = lines(roots.iter().map(|r| {
                let c: Vec<String> = r.coefficients.iter().map(i32::to_string).collect();
                format!("height {:>2}  [{}]  labels ({})", r.height, c.join(","), r.labels)
            }));
            Output::new(&roots, text)
        }
        Cmd::Pi0(RsArg { rs }) => {
            let info = rs.fundamental_group();
            let factors: Vec<String> = info.invariant_factors.iter().filter(|&&d| d > 1).map(|d| format!("Z/{d}")).collect();
            let group = if factors.is_empty() { "trivial".to_string() } else { factors.join(" x ") };
            let text = format!("{group} (order {}, exponent {})", info.order, info.exponent);
            let out = Pi0 { root_system: rs.to_string(), info: &info, cartan_determinant: rs.cartan_determinant() };
            Output::new(&out, text)
        }
        Cmd::Dual(RsWeight { rs, weight }) => {
            let dual = rs.dual_involution(&weight)?;
            let self_dual = dual == weight;
            let text = format!("{dual}{}", if self_dual { " (self-dual)" } else { "" });
            Output::new(&Dual { weight, dual, self_dual }, text)
        }
    }
}
