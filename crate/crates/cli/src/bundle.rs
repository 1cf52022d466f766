use clap::{Args, Subcommand};
use monodromy_core::kernel_bundle::{
    analyze_bundle, bs_stability, cohomology_vanishing, langer_restriction_degree, numeric_invariants, total_chern,
    Justification, KernelBundleSpec,
};
use num_rational::BigRational;
use serde::Serialize;

use crate::output::{lines, CliResult, Output};
use crate::parse;

#[derive(Subcommand)]
pub enum Cmd {
    /// Total Chern class in Z[h]/h^{n+1}.
    Chern(SpecArg),
    /// Rank, c_1, slope, c_2 and discriminant.
    Invariants(SpecArg),
    /// Stability of a cokernel presentation of rank n on P^n.
    BsStable {
        #[command(flatten)]
        spec: SpecArg,
        /// Run on the dual presentation, turning a kernel into a cokernel.
        #[arg(long)]
        dualize: bool,
    },
    /// Curve degree above which restriction preserves stability.
    Langer {
        #[command(flatten)]
        spec: SpecArg,
        /// Self-intersection H^n of the hyperplane class.
        #[arg(long, default_value_t = 1)]
        h_top: u64,
    },
    /// Derivation of H^k(P^r, E^{⊗n}(m)) = 0.
    Vanishing {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        power: usize,
        #[arg(long, allow_hyphen_values = true)]
        twist: i64,
        #[arg(long, default_value_t = 0)]
        degree: usize,
    },
    /// Full pipeline from the presentation to the monodromy group.
    Analyze {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        p: u64,
        #[arg(long, value_parser = parse::rational)]
        q: BigRational,
        /// Assert that the bundle is trivial modulo p^q.
        #[arg(long)]
        trivial_mod_pq: bool,
        /// dim Γ(P^r, E^{⊗r}) when known.
        #[arg(long)]
        sections_at_r: Option<u64>,
    },
}

#[derive(Args)]
pub struct SpecArg {
    /// `example-beispi`, inline JSON such as
    /// '{"n":2,"form":"kernel","a":[1,1,1],"b":[3]}', or a JSON file.
    #[arg(long, value_parser = parse::bundle_spec)]
    spec: KernelBundleSpec,
}

#[derive(Serialize)]
struct Chern {
    spec: KernelBundleSpec,
    chern: monodromy_core::kernel_bundle::ChowClass,
    coefficients: Vec<String>,
}

fn justification(j: &Justification) -> String {
    match j {
        Justification::ExactSequence { middle, left } => format!("exact sequence from {middle:?} and {left:?}"),
        other => format!("{other:?}"),
    }
}

pub fn run(cmd: Cmd) -> CliResult {
    match cmd {
        Cmd::Chern(SpecArg { spec }) => {
            let chern = total_chern(&spec);
            let coefficients = (0..=spec.n).map(|i| chern.coefficient(i).to_string()).collect();
            let text = format!("c({spec}) = {chern}");
            Output::new(&Chern { spec, chern, coefficients }, text)
        }
        Cmd::Invariants(SpecArg { spec }) => {
            let inv = numeric_invariants(&spec);
            let opt = |x: &Option<num_bigint::BigInt>| x.as_ref().map_or("n/a".to_string(), ToString::to_string);
            let text = format!(
                "rank {}\nc_1 {}\nslope {}\nc_2 {}\ndiscriminant {}",
                inv.rank,
                inv.c1,
                inv.slope,
                opt(&inv.c2),
                opt(&inv.discriminant)
            );
            Output::new(&inv, text)
        }
        Cmd::BsStable { spec: SpecArg { spec }, dualize } => {
            let spec = if dualize { spec.dual() } else { spec };
            let s = bs_stability(&spec)?;
            let mut text = format!("{:?} (slope {}, b_1 = {})", s.outcome, s.slope, s.b[0]);
            if let Some(r) = &s.reason {
                text.push_str(&format!("\n{r}"));
            }
            Output::new(&s, text)
        }
        Cmd::Langer { spec: SpecArg { spec }, h_top } => {
            let l = langer_restriction_degree(&spec, h_top)?;
            let text = format!("a > {} (discriminant term {}), so a ≥ {}", l.bound, l.delta_h, l.a_min);
            Output::new(&l, text)
        }
        Cmd::Vanishing { spec: SpecArg { spec }, power, twist, degree } => {
            let v = cohomology_vanishing(&spec, power, twist, degree)?;
            let mut text = vec![format!(
                "H^{degree}(E^⊗{power}({twist})) = 0: {} (depth {})",
                v.vanishes, v.depth
            )];
            text.extend(v.entries.iter().enumerate().map(|(i, e)| {
                format!(
                    "[{i}] H^{}(E^⊗{}({})) vanishes: {}, {}",
                    e.degree,
                    e.power,
                    e.twist,
                    e.vanishes,
                    justification(&e.justification)
                )
            }));
            Output::new(&v, lines(text))
        }
        Cmd::Analyze { spec: SpecArg { spec }, p, q, trivial_mod_pq, sections_at_r } => {
            let r = analyze_bundle(&spec, p, &q, trivial_mod_pq, sections_at_r)?;
            Output::new(&r, r.to_string())
        }
    }
}
