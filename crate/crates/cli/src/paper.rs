use clap::{Args, Subcommand};
use monodromy_core::reproduce::{
    conjecture_sweep, default_conjecture_systems, dl_exclusion, e6_table, invar_sweep, syzygy_example, Sweep,
};
use monodromy_core::{Budget, RootSystem};
use serde::Serialize;

use crate::output::{lines, CliResult, Output};

#[derive(Subcommand)]
pub enum Cmd {
    /// Non-self-dual E6 modules of dimension ≤ 24576 · max label.
    E6Table,
    /// The plane syzygy bundle of (X², Y², pZ² + XY), twisted by 3.
    Beispi {
        #[arg(long, default_value_t = 3)]
        p: u64,
    },
    /// Self-dual summands in tensor powers for D_l, l odd, with unequal
    /// spin labels.
    DlExclusion {
        #[arg(long, default_value_t = 5)]
        l: usize,
        #[arg(long, default_value_t = 1)]
        max_label: i32,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Invariant-vanishing classification over small faithful modules.
    InvarSweep {
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
        #[arg(long, default_value_t = 10)]
        max_dim: u64,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Tensor-power containment against the fundamental-group bound.
    ConjectureSweep {
        /// Root systems; defaults to A1, A2, A3 and B2.
        #[arg(long = "rs")]
        systems: Vec<RootSystem>,
        #[arg(long, default_value_t = 2)]
        max_label: i32,
        #[arg(long, default_value_t = 2)]
        slack: usize,
        /// Skip modules above this dimension.
        #[arg(long)]
        max_dim: Option<u128>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Args)]
pub struct BudgetArgs {
    /// Stop after this many seconds and report what was reached.
    #[arg(long)]
    max_seconds: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        self.max_seconds.map_or_else(Budget::unlimited, Budget::seconds)
    }
}

fn progress<T>(sweep: &Sweep<T>) -> String {
    if sweep.complete {
        "complete".into()
    } else {
        format!("interrupted by the time budget, {} items not reached", sweep.skipped)
    }
}

pub fn run(cmd: Cmd) -> CliResult {
    match cmd {
        Cmd::E6Table => {
            let t = e6_table()?;
            let mut text = vec![format!(
                "{}: {} weights in {} families with dim ≤ {} · max label, not self-dual (one per dual pair)",
                t.root_system,
                t.weights.len(),
                t.families.len(),
                t.constant
            )];
            text.extend(t.families.iter().map(|f| match f.parameter_max {
                Some(m) => {
                    let letter = f.pattern.chars().find(char::is_ascii_alphabetic).unwrap_or('a');
                    format!("{} with {letter} ≤ {m}", f.pattern)
                }
                None => f.pattern.clone(),
            }));
            Output::new(&t, lines(text))
        }
        Cmd::Beispi { p } => {
            let e = syzygy_example(p)?;
            let a_min = e.report.restriction.as_ref().map(|l| l.a_min.to_string()).unwrap_or_default();
            let text = format!("quoted: {}, exact minimum from the bound: {a_min}\n{}", e.quoted_degree, e.report);
            Output::new(&e, text)
        }
        Cmd::DlExclusion { l, max_label, n_max, budget } => {
            let s = dl_exclusion(l, max_label, n_max, &budget.budget())?;
            let mut text: Vec<String> = s
                .items
                .iter()
                .map(|r| {
                    let found = r.found.as_ref().map_or("none".into(), |(n, mu)| format!("n = {n}, ({mu})"));
                    format!(
                        "({}) dim {}: {found}; 2λ − tα = ({}) in square {}, self-dual {}",
                        r.lambda, r.dimension, r.constructed, r.constructed_in_square, r.constructed_self_dual
                    )
                })
                .collect();
            let failures = s.items.iter().filter(|r| r.found.is_none()).count();
            text.push(format!("{} weights, {failures} without a self-dual summand, {}", s.items.len(), progress(&s)));
            Output::new(&s, lines(text))
        }
        Cmd::InvarSweep { max_rank, max_dim, budget } => {
            let s = invar_sweep(max_rank, max_dim, &budget.budget())?;
            let mut text: Vec<String> = s
                .items
                .iter()
                .map(|v| {
                    let w = v.witness.map_or("no witness".into(), |(n, d)| format!("witness n = {n} (dim {d})"));
                    format!("{} ({}) dim {}: {w}, type A forced {}", v.root_system, v.lambda, v.dimension, v.type_a_forced)
                })
                .collect();
            let bad = s.items.iter().filter(|v| !v.consistent).count();
            text.push(format!("{} modules, {bad} inconsistent, {}", s.items.len(), progress(&s)));
            Output::new(&s, lines(text))
        }
        Cmd::ConjectureSweep { systems, max_label, slack, max_dim, budget } => {
            let systems = if systems.is_empty() { default_conjecture_systems() } else { systems };
            let s = conjecture_sweep(&systems, max_label, slack, max_dim, &budget.budget())?;
            let mut text = Vec::new();
            let (mut pairs, mut violations, mut uniform_violations) = (0, 0, 0);
            for e in &s.items {
                let failed: Vec<String> = e
                    .pairs
                    .iter()
                    .filter(|r| !r.holds)
                    .map(|r| format!("({}) at n = {}", r.mu, r.n_found.map_or("none".into(), |n| n.to_string())))
                    .collect();
                pairs += e.pairs.len();
                violations += failed.len();
                uniform_violations += usize::from(!e.uniform.holds);
                let uniform = e.uniform.n_uniform.map_or("none".into(), |n| n.to_string());
                let verdict = if failed.is_empty() { "holds".to_string() } else { format!("fails for {}", failed.join(", ")) };
                text.push(format!(
                    "{} ({}) bound {}: {verdict}; uniform n = {uniform} ({})",
                    e.root_system,
                    e.lambda,
                    e.uniform.bound,
                    if e.uniform.holds { "within bound" } else { "beyond bound" }
                ));
            }
            text.push(format!(
                "{pairs} pairs, {violations} violations; {} weights, {uniform_violations} beyond the bound uniformly; {}",
                s.items.len(),
                progress(&s)
            ));
            #[derive(Serialize)]
            struct Summary<'a, T> {
                pairs: usize,
                violations: usize,
                uniform_violations: usize,
                #[serde(flatten)]
                sweep: &'a T,
            }
            Output::new(&Summary { pairs, violations, uniform_violations, sweep: &s }, lines(text))
        }
    }
}
