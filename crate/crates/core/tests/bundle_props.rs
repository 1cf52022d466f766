use monodromy_core::kernel_bundle::{
    bs_stability, cohomology_vanishing, langer_bound, total_chern, ChowClass, Justification, KernelBundleSpec,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn product(n: usize, twists: &[i64]) -> ChowClass {
    twists.iter().fold(ChowClass::one(n), |acc, &t| acc.mul(&ChowClass::linear(n, t)))
}

fn kernel_spec() -> impl Strategy<Value = KernelBundleSpec> {
    (1usize..5, prop::collection::vec(-5i64..=5, 0..4)).prop_flat_map(|(n, b)| {
        let extra = 1..4usize;
        (Just(n), Just(b.clone()), extra).prop_flat_map(|(n, b, extra)| {
            prop::collection::vec(-5i64..=5, b.len() + extra)
                .prop_map(move |a| KernelBundleSpec::kernel(n, a, b.clone()).unwrap())
        })
    })
}

proptest! {
    #[test]
    fn chern_series_is_exact(spec in kernel_spec()) {
        let c = total_chern(&spec);
        prop_assert_eq!(c.mul(&product(spec.n, &spec.b)), product(spec.n, &spec.a));
    }

    #[test]
    fn dual_presentation_flips_odd_classes(spec in kernel_spec()) {
        prop_assert_eq!(total_chern(&spec.dual()), total_chern(&spec).dual());
        prop_assert_eq!(spec.dual().dual(), spec);
    }

    #[test]
    fn whitney_sum(n in 1usize..6, a in prop::collection::vec(-6i64..=6, 1..5)) {
        let spec = KernelBundleSpec::kernel(n, a.clone(), vec![]).unwrap();
        prop_assert_eq!(total_chern(&spec), product(n, &a));
    }

    #[test]
    fn langer_monotone_in_discriminant(r in 2usize..7, d in -50i64..50, step in 0i64..20, h in 1u64..4) {
        let lo = langer_bound(r, &BigRational::from_integer(BigInt::from(d)), h).unwrap();
        let hi = langer_bound(r, &BigRational::from_integer(BigInt::from(d + step)), h).unwrap();
        prop_assert!(lo.bound <= hi.bound);
        prop_assert!(lo.a_min <= hi.a_min);
        prop_assert!(BigRational::from_integer(lo.a_min.clone()) > lo.bound);
        prop_assert!(BigRational::from_integer(lo.a_min - 1) <= lo.bound);
    }

    #[test]
    fn stability_ignores_twist_order(
        r in 1usize..4,
        a in prop::collection::vec(-6i64..=2, 0..3),
        extra in prop::collection::vec(-6i64..=2, 3),
        seed in any::<u64>(),
    ) {
        let mut b: Vec<i64> = a.iter().map(|x| x + 1).collect();
        b.extend(extra.iter().take(r).copied());
        let spec = KernelBundleSpec::cokernel(r, a.clone(), b.clone()).unwrap();
        let mut a2 = a.clone();
        let mut b2 = b.clone();
        let ka = seed as usize % a2.len().max(1);
        a2.rotate_left(ka);
        b2.reverse();
        let kb = (seed >> 8) as usize % b2.len();
        b2.rotate_left(kb);
        let shuffled = KernelBundleSpec::cokernel(r, a2, b2).unwrap();
        prop_assert_eq!(bs_stability(&spec).unwrap(), bs_stability(&shuffled).unwrap());
    }

    #[test]
    fn vanishing_report_is_justified(r in 2usize..4, c in 1usize..3, shift in 1i64..3, m in -2i64..=0) {
        // degree 0 and stable: c·(r+c)·s = (c+r)·c·s
        let (ri, ci) = (r as i64, c as i64);
        let a = vec![-(ri + ci) * shift; c];
        let b = vec![-ci * shift; c + r];
        let spec = KernelBundleSpec::cokernel(r, a, b).unwrap();
        for n in 1..r {
            for k in 0..r - n {
                let rep = cohomology_vanishing(&spec, n, m, k).unwrap();
                prop_assert!(rep.vanishes);
                for (i, e) in rep.entries.iter().enumerate() {
                    match &e.justification {
                        Justification::ExactSequence { middle, left } => {
                            for &j in middle.iter().chain(left) {
                                prop_assert!(j < i);
                                prop_assert_eq!(rep.entries[j].power + 1, e.power);
                                if e.vanishes {
                                    prop_assert!(rep.entries[j].vanishes);
                                }
                            }
                        }
                        Justification::NotEstablished => prop_assert!(!e.vanishes),
                        _ => prop_assert!(e.vanishes && (e.power == 0 || e.degree > r)),
                    }
                }
            }
        }
    }
}
