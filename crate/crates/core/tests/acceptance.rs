//! End-to-end acceptance checks, one PASS/FAIL line each. Runs without the
//! libtest harness so the verdicts are always printed.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use monodromy_core::kernel_bundle::StabilityOutcome;
use monodromy_core::monodromy::{
    almost_simplicity_test, connectedness_certificate, cyclotomic_unit_valuation, larsen_classify,
    newton_polygon_slopes, shifted_cyclotomic, vp, LarsenClass, PadicValue, RationalMatrix, SimplicityVerdict,
};
use monodromy_core::rep::{
    tensor_decompose, tensor_decompose_oracle, verify_cartan_chains, verify_line_multiplicities, weyl_dimension,
};
use monodromy_core::reproduce::{
    conjecture_sweep, default_conjecture_systems, dl_exclusion, e6_table, invar_sweep, simple_systems_up_to,
    syzygy_example, weights_with_labels_at_most,
};
use monodromy_core::{Budget, RootSystem, Weight};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn w(labels: &[i32]) -> Weight {
    Weight::from(labels)
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn e6_table_reproduction() -> Check {
    let t = e6_table().map_err(|e| e.to_string())?;
    let mut expected: BTreeSet<Weight> = BTreeSet::new();
    for a in 1..=5 {
        expected.insert(w(&[a, 0, 0, 0, 0, 0]));
    }
    for b in 1..=2 {
        expected.insert(w(&[0, 0, b, 0, 0, 0]));
    }
    for s in [
        [1, 1, 0, 0, 0, 0],
        [1, 0, 1, 0, 0, 0],
        [1, 0, 0, 0, 1, 0],
        [2, 0, 0, 0, 0, 1],
        [0, 1, 1, 0, 0, 0],
        [1, 2, 0, 0, 0, 0],
        [2, 1, 0, 0, 0, 0],
        [3, 0, 0, 0, 0, 1],
    ] {
        expected.insert(w(&s));
    }
    let got: BTreeSet<Weight> = t.weights.iter().cloned().collect();
    ensure(got == expected, || format!("table {got:?} differs from {expected:?}"))?;
    ensure(t.families.len() == 10, || format!("{} families", t.families.len()))?;
    let maxes: Vec<_> = t.families.iter().filter_map(|f| f.parameter_max).collect();
    ensure(maxes == [5, 2], || format!("family parameters {maxes:?}"))?;
    Ok(format!("15 weights in 10 families, label cutoff {}", t.label_cutoff))
}

fn syzygy_example_pipeline() -> Check {
    let e = syzygy_example(3).map_err(|e| e.to_string())?;
    let r = &e.report;
    let inv = &r.invariants;
    ensure(inv.rank == 2 && inv.c1.is_zero(), || format!("rank {} c1 {}", inv.rank, inv.c1))?;
    ensure(inv.c2 == Some(BigInt::from(3)), || format!("c2 {:?}", inv.c2))?;
    ensure(inv.discriminant == Some(BigInt::from(12)), || format!("discriminant {:?}", inv.discriminant))?;
    ensure(r.stability.outcome == StabilityOutcome::Stable, || format!("{:?}", r.stability.outcome))?;
    let l = r.restriction.as_ref().ok_or("no restriction bound")?;
    ensure(l.bound == q(13, 2) && l.a_min == BigInt::from(7), || format!("bound {} a_min {}", l.bound, l.a_min))?;
    ensure(e.quoted_degree == "d > 7", || e.quoted_degree.to_string())?;
    let sections = r.section_vanishing.first().ok_or("no section vanishing report")?;
    ensure(sections.power == 1 && sections.twist == 0 && sections.degree == 0 && sections.vanishes, || {
        "Γ(P², E) = 0 not established".into()
    })?;
    ensure(r.group.as_deref() == Some("SL(2)"), || format!("group {:?}", r.group))?;
    ensure(r.to_string().ends_with("G = SL(2)"), || "report does not end in G = SL(2)".into())?;
    Ok("r=2, c1=0, c2=3, Δ=12, stable, bound 13/2 (a_min 7, quoted d > 7), Γ(E)=0, G = SL(2)".into())
}

fn lemma_sweeps() -> Check {
    let mut cases: Vec<(RootSystem, i32)> = simple_systems_up_to(4).into_iter().map(|rs| (rs, 3)).collect();
    cases.push(("E6".parse().unwrap(), 1));
    let (mut checked, mut failures) = (0usize, Vec::new());
    let names: Vec<String> = cases.iter().map(|(rs, _)| rs.to_string()).collect();
    for (rs, max_label) in &cases {
        for lambda in weights_with_labels_at_most(rs.rank(), *max_label) {
            let chains = verify_cartan_chains(rs, &lambda).map_err(|e| e.to_string())?;
            for i in 0..rs.rank() {
                let lines = verify_line_multiplicities(rs, &lambda, i).map_err(|e| e.to_string())?;
                if !lines || !chains[i] {
                    failures.push(format!("{rs} ({lambda}) node {}", i + 1));
                }
            }
            checked += 1;
        }
    }
    ensure(failures.is_empty(), || format!("failures: {failures:?}"))?;
    Ok(format!("{checked} weights over {}, zero failures", names.join(" ")))
}

fn tensor_oracle() -> Check {
    let systems: Vec<RootSystem> = ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xA2", "A1xB2", "A1xG2", "A1xA1xA1"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let mut rng = StdRng::seed_from_u64(0x5eed_2024);
    for k in 0..200 {
        let rs = &systems[rng.gen_range(0..systems.len())];
        let mut draw = || Weight::new((0..rs.rank()).map(|_| rng.gen_range(0..=3)).collect::<Vec<_>>());
        let (l, m) = (draw(), draw());
        let a = tensor_decompose(rs, &l, &m).map_err(|e| e.to_string())?;
        let b = tensor_decompose_oracle(rs, &l, &m).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("pair {k}: {rs} ({l}) ⊗ ({m}) disagrees"))?;
        let dim = weyl_dimension(rs, &l).unwrap() * weyl_dimension(rs, &m).unwrap();
        ensure(a.dimension(rs).unwrap() == dim, || format!("pair {k}: {rs} ({l}) ⊗ ({m}) loses dimension"))?;
    }
    Ok("200 seeded pairs agree and conserve dimension".into())
}

fn invariant_classification() -> Check {
    let s = invar_sweep(3, 10, &Budget::unlimited()).map_err(|e| e.to_string())?;
    ensure(s.complete, || "sweep incomplete".into())?;
    for v in &s.items {
        ensure(v.consistent && v.complete, || format!("{} ({}) inconsistent", v.root_system, v.lambda))?;
        let type_a = v.root_system.starts_with('A') || v.root_system == "D3";
        if !type_a {
            ensure(v.witness.is_some_and(|(n, _)| (n as u128) < v.dimension), || {
                format!("{} ({}) has no witness", v.root_system, v.lambda)
            })?;
        }
    }
    let b2 = s
        .items
        .iter()
        .find(|v| v.root_system == "B2" && v.lambda == w(&[1, 0]))
        .ok_or("B2 (1,0) missing")?;
    ensure(b2.dimension == 5 && b2.witness.map(|x| x.0) == Some(2), || format!("B2 (1,0): {:?}", b2.witness))?;
    let forced = s.items.iter().filter(|v| v.type_a_forced).count();
    Ok(format!("{} modules, {forced} force type A, zero counterexamples", s.items.len()))
}

fn odd_d_exclusion() -> Check {
    let s = dl_exclusion(5, 1, 4, &Budget::unlimited()).map_err(|e| e.to_string())?;
    ensure(s.complete && s.items.len() == 16, || format!("{} weights", s.items.len()))?;
    let mut by_n = [0usize; 5];
    for r in &s.items {
        let (n, _) = r.found.as_ref().ok_or_else(|| format!("({}) has no self-dual summand", r.lambda))?;
        by_n[*n] += 1;
        ensure(r.constructed_in_square && r.constructed_self_dual, || {
            format!("({}): 2λ − tα = ({}) not a self-dual summand of the square", r.lambda, r.constructed)
        })?;
    }
    Ok(format!("16 weights, found at n = 1..4: {:?}, construction verified", &by_n[1..]))
}

fn conjecture_scan_completes() -> Check {
    let s = conjecture_sweep(&default_conjecture_systems(), 2, 2, None, &Budget::unlimited())
        .map_err(|e| e.to_string())?;
    ensure(s.complete && s.skipped == 0, || "sweep incomplete".into())?;
    let (mut pairs, mut violations, mut uniform) = (0, Vec::new(), 0);
    for e in &s.items {
        for r in &e.pairs {
            pairs += 1;
            ensure(r.lattice_consistent, || format!("{} ({}) μ ({}) lattice inconsistency", e.root_system, e.lambda, r.mu))?;
            if !r.holds {
                violations.push(format!("{} ({})→({})", e.root_system, e.lambda, r.mu));
            }
        }
        uniform += usize::from(!e.uniform.holds);
    }
    let first: Vec<&String> = violations.iter().take(3).collect();
    Ok(format!(
        "{pairs} pairs scanned over {} weights; {} pairs exceed the bound (e.g. {first:?}), {uniform} weights exceed it uniformly",
        s.items.len(),
        violations.len()
    ))
}

fn padic_suite() -> Check {
    let mut rng = StdRng::seed_from_u64(77);
    let primes = [2u64, 3, 5, 7];
    for k in 0..100 {
        let p = primes[rng.gen_range(0..primes.len())];
        let degree = rng.gen_range(1..=5);
        let roots: Vec<BigRational> = (0..degree)
            .map(|_| {
                if rng.gen_ratio(1, 12) {
                    return BigRational::zero();
                }
                let num = rng.gen_range(1i64..=60) * if rng.gen_bool(0.5) { 1 } else { -1 };
                let den = rng.gen_range(1i64..=60);
                q(num, den)
            })
            .collect();
        // ascending coefficients of ∏ (X − r)
        let mut coeffs = vec![BigRational::one()];
        for r in &roots {
            let mut next = vec![BigRational::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            coeffs = next;
        }
        let slopes = newton_polygon_slopes(&coeffs, p).map_err(|e| e.to_string())?;
        let mut brute: Vec<PadicValue> = roots.iter().map(|r| vp(r, p).unwrap()).collect();
        brute.sort();
        ensure(slopes == brute, || format!("polynomial {k} over p = {p}: {slopes:?} vs {brute:?}"))?;
    }
    for p in primes {
        let one = cyclotomic_unit_valuation(p, p, 1).map_err(|e| e.to_string())?;
        ensure(one.value == PadicValue::Finite(q(1, p as i64 - 1)), || format!("p = {p}: {}", one.value))?;
        let mut previous: Option<PadicValue> = None;
        for n in 1..=4u32 {
            let c = cyclotomic_unit_valuation(p, p, n).map_err(|e| e.to_string())?;
            ensure(c.value <= PadicValue::Finite(q(1, p as i64 - 1)), || format!("p = {p}, n = {n} above 1/(p−1)"))?;
            if let Some(prev) = &previous {
                ensure(c.value < *prev, || format!("p = {p}: not decreasing at n = {n}"))?;
            }
            let oracle = newton_polygon_slopes(&shifted_cyclotomic(p, n), p).map_err(|e| e.to_string())?;
            ensure(oracle.iter().all(|s| *s == c.value), || format!("p = {p}, n = {n}: Newton polygon disagrees"))?;
            previous = Some(c.value);
        }
    }
    Ok("100 split polynomials and cyclotomic valuations for p ∈ {2,3,5,7}, n ≤ 4".into())
}

fn certificate_thresholds() -> Check {
    let cert = |p: u64, gens: &[[[i64; 2]; 2]], level: BigRational| -> Result<bool, String> {
        let ms: Vec<RationalMatrix> = gens
            .iter()
            .map(|g| RationalMatrix::from_integers(&[g[0].to_vec(), g[1].to_vec()], p).unwrap())
            .collect();
        connectedness_certificate(&ms, &level).map(|c| c.passed).map_err(|e| e.to_string())
    };
    for p in [3u64, 5, 7] {
        let pi = p as i64;
        let gens = [[[1, pi], [0, 1]], [[1 + pi, 0], [pi, 1 - pi]]];
        let at = q(1, pi - 1);
        ensure(!cert(p, &gens, at.clone())?, || format!("p = {p}: q = 1/(p−1) passed"))?;
        // lcm(p, p − 1) = p(p − 1)
        let above = at + q(1, pi * (pi - 1));
        ensure(cert(p, &gens, above.clone())?, || format!("p = {p}: q = {above} failed"))?;
        ensure(!cert(p, &[[[1, 1], [0, 1]]], above.clone())?, || format!("p = {p}: non-congruent generator passed"))?;
    }
    let gens2 = [[[1, 2], [0, 1]], [[3, 2], [2, 3]]];
    ensure(cert(2, &gens2, q(1, 1))?, || "p = 2, q = 1 failed".into())?;
    ensure(!cert(2, &gens2, q(1, 2))?, || "p = 2, q = 1/2 passed".into())?;
    Ok("odd p fails at 1/(p−1) and passes at 1/(p−1) + 1/(p(p−1)); p = 2 passes at q = 1".into())
}

fn classifier_fixtures() -> Check {
    let l = |r, d, s, a, det| larsen_classify(r, d, s, a, det).map_err(|e| e.to_string());
    ensure(l(3, 2, false, false, false)? == LarsenClass::SlOrFinite, || "dim 2 → SL".into())?;
    ensure(l(3, 2, false, false, true)? == LarsenClass::Sl0OrFinite, || "dim 2, finite det → SL0".into())?;
    ensure(l(3, 3, true, false, false)? == LarsenClass::OrthogonalOrFinite, || "dim 3, Sym² → O".into())?;
    ensure(l(4, 3, false, true, false)? == LarsenClass::SymplecticOrFinite, || "dim 3, Λ² → Sp".into())?;
    ensure(l(4, 5, false, false, false)? == LarsenClass::Inconclusive, || "dim 5 → inconclusive".into())?;
    let a = |r, d| almost_simplicity_test(r, d, monodromy_core::monodromy::is_prime_power(r as u64)).unwrap();
    ensure(a(6, 3) == SimplicityVerdict::AlmostSimple, || "dim 3 → almost simple".into())?;
    ensure(a(6, 4) == SimplicityVerdict::Inconclusive, || "dim 4, r = 6 → inconclusive".into())?;
    ensure(a(4, 4) == SimplicityVerdict::AlmostSimple, || "r = 4 prime power → almost simple".into())?;
    Ok("SL / SL0 / O / Sp cases and the dim 3 / dim 4 boundary".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check, Duration); 10] = [
        ("E6 table reproduction", e6_table_reproduction, Duration::from_secs(300)),
        ("syzygy bundle pipeline", syzygy_example_pipeline, Duration::from_secs(1)),
        ("string lemma sweeps", lemma_sweeps, Duration::from_secs(600)),
        ("two-algorithm tensor oracle", tensor_oracle, Duration::from_secs(300)),
        ("invariant-vanishing classification", invariant_classification, Duration::from_secs(900)),
        ("odd D exclusion", odd_d_exclusion, Duration::from_secs(600)),
        ("tensor-power containment scan", conjecture_scan_completes, Duration::from_secs(1200)),
        ("p-adic suite", padic_suite, Duration::from_secs(60)),
        ("certificate thresholds", certificate_thresholds, Duration::from_secs(1)),
        ("classifier fixtures", classifier_fixtures, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *limit => Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
