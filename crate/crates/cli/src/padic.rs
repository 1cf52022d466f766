use clap::Subcommand;
use monodromy_core::monodromy::{
    almost_simplicity_test, analytic_dimension_estimate, connectedness_certificate, cyclotomic_unit_valuation,
    eigenvalue_deviation_bound, is_prime_power, larsen_classify, newton_polygon_slopes, vp, RationalMatrix,
};
use num_bigint::BigUint;
use num_rational::BigRational;
use serde::Serialize;

use crate::output::{lines, CliResult, Output};
use crate::parse::{self, Rows};

#[derive(Subcommand)]
pub enum Cmd {
    /// p-adic valuation of a rational.
    Vp {
        #[arg(long)]
        p: u64,
        #[arg(value_parser = parse::rational, allow_hyphen_values = true)]
        x: BigRational,
    },
    /// Root valuations from the Newton polygon.
    Newton {
        #[arg(long)]
        p: u64,
        /// Coefficients from the constant term up, comma separated.
        #[arg(long, value_parser = parse::rational, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        coeffs: Vec<BigRational>,
    },
    /// Valuation of 1 − ζ for a primitive l^n-th root of unity ζ.
    Cyclotomic {
        #[arg(long)]
        p: u64,
        /// Defaults to p.
        #[arg(long)]
        l: Option<u64>,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Smallest valuation among the eigenvalues of a matrix.
    Eigbound {
        #[arg(long)]
        p: u64,
        /// JSON rows of rationals, e.g. '[["1","3"],["0","1"]]'.
        #[arg(long, value_parser = parse::matrix)]
        matrix: Rows,
    },
    /// Connectedness certificate for generators congruent to 1 modulo p^q.
    Certify {
        #[arg(long)]
        p: u64,
        #[arg(long, value_parser = parse::rational)]
        q: BigRational,
        /// One generator as JSON rows; repeat for more.
        #[arg(long = "generator", value_parser = parse::matrix, required = true)]
        generators: Vec<Rows>,
    },
    /// Moment criterion on dim End(End V)^G and the square pieces.
    Larsen {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        dim_endend: u64,
        #[arg(long)]
        sym2: bool,
        #[arg(long)]
        wedge2: bool,
        #[arg(long)]
        det_finite: bool,
    },
    /// Almost-simplicity from the invariants of V^{⊗r}.
    AlmostSimple {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        dim_inv: u64,
    },
    /// Growth exponent k with #G_n ∼ c·p^{kn}.
    Growth {
        #[arg(long)]
        p: u64,
        /// Sizes #G_1, #G_2, ..., comma separated.
        #[arg(long, value_parser = parse::big_uint, value_delimiter = ',', required = true)]
        sizes: Vec<BigUint>,
    },
}

#[derive(Serialize)]
struct Valued<T: Serialize> {
    value: T,
}

pub fn run(cmd: Cmd) -> CliResult {
    match cmd {
        Cmd::Vp { p, x } => {
            let v = vp(&x, p)?;
            Output::new(&Valued { value: &v }, v.to_string())
        }
        Cmd::Newton { p, coeffs } => {
            let slopes = newton_polygon_slopes(&coeffs, p)?;
            let text: Vec<String> = slopes.iter().map(ToString::to_string).collect();
            Output::new(&slopes, text.join(" "))
        }
        Cmd::Cyclotomic { p, l, n } => {
            let c = cyclotomic_unit_valuation(p, l.unwrap_or(p), n)?;
            Output::new(&c, c.value.to_string())
        }
        Cmd::Eigbound { p, matrix } => {
            let m = RationalMatrix::new(matrix.0, p)?;
            let v = eigenvalue_deviation_bound(&m);
            Output::new(&Valued { value: &v }, v.to_string())
        }
        Cmd::Certify { p, q, generators } => {
            let gens = generators
                .into_iter()
                .map(|g| RationalMatrix::new(g.0, p))
                .collect::<Result<Vec<_>, _>>()?;
            let c = connectedness_certificate(&gens, &q)?;
            let mut text = vec![format!(
                "{} (p = {}, q = {}, {})",
                if c.passed { "passed" } else { "failed" },
                c.p,
                c.q,
                c.threshold_display()
            )];
            text.extend(c.per_generator.iter().enumerate().map(|(i, g)| {
                format!(
                    "generator {}: v(G−1) = {}, eigenvalues of G−1 ≥ {}",
                    i + 1,
                    g.congruence_valuation,
                    g.eigenvalue_bound
                )
            }));
            text.extend(c.reason.clone());
            Output::new(&c, lines(text))
        }
        Cmd::Larsen { rank, dim_endend, sym2, wedge2, det_finite } => {
            let class = larsen_classify(rank, dim_endend, sym2, wedge2, det_finite)?;
            Output::new(&Valued { value: class }, class.to_string())
        }
        Cmd::AlmostSimple { r, dim_inv } => {
            let v = almost_simplicity_test(r, dim_inv, is_prime_power(r as u64))?;
            Output::new(&Valued { value: v }, v.to_string())
        }
        Cmd::Growth { p, sizes } => {
            let g = analytic_dimension_estimate(&sizes, p)?;
            let text = match g.k {
                Some(k) => format!("k = {k} (steps {:?})", g.steps),
                None => format!("no stable growth (steps {:?})", g.steps),
            };
            Output::new(&g, text)
        }
    }
}
