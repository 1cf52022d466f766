use monodromy_core::rep::{
    contains_module, invariant_dimension, tensor_decompose, tensor_decompose_oracle, weight_multiplicities,
    weyl_dimension, weyl_dimension_u128,
};
use monodromy_core::{RootSystem, Weight};
use num_bigint::BigUint;
use proptest::prelude::*;

const SYSTEMS: &[&str] = &["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "A1xA1", "A1xB2"];

fn system_and_weights(count: usize, max_label: i32) -> impl Strategy<Value = (RootSystem, Vec<Weight>)> {
    prop::sample::select(SYSTEMS).prop_flat_map(move |name| {
        let rs: RootSystem = name.parse().unwrap();
        let w = prop::collection::vec(0..=max_label, rs.rank()).prop_map(Weight::new);
        (Just(rs), prop::collection::vec(w, count))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn character_mass_is_the_dimension((rs, ws) in system_and_weights(1, 3)) {
        let ch = weight_multiplicities(&rs, &ws[0]).unwrap();
        prop_assert_eq!(ch.total_mass(&rs), weyl_dimension_u128(&rs, &ws[0]).unwrap());
        prop_assert_eq!(ch.dominant_multiplicity(&ws[0]), 1);
    }

    #[test]
    fn tensor_algorithms_agree((rs, ws) in system_and_weights(2, 2)) {
        let k = tensor_decompose(&rs, &ws[0], &ws[1]).unwrap();
        let o = tensor_decompose_oracle(&rs, &ws[0], &ws[1]).unwrap();
        prop_assert_eq!(&k, &o);
        let product = weyl_dimension(&rs, &ws[0]).unwrap() * weyl_dimension(&rs, &ws[1]).unwrap();
        prop_assert_eq!(k.dimension(&rs).unwrap(), product);
        prop_assert_eq!(k, tensor_decompose(&rs, &ws[1], &ws[0]).unwrap());
    }

    #[test]
    fn duality((rs, ws) in system_and_weights(2, 2)) {
        let (l, m) = (&ws[0], &ws[1]);
        let dl = rs.dual_involution(l).unwrap();
        prop_assert_eq!(rs.dual_involution(&dl).unwrap(), l.clone());
        prop_assert_eq!(weyl_dimension(&rs, &dl).unwrap(), weyl_dimension(&rs, l).unwrap());
        prop_assert_eq!(dl.clone(), rs.dual_via_reflection(l));
        prop_assert_eq!(invariant_dimension(&rs, &[l.clone(), dl.clone()]).unwrap(), 1);
        // (V ⊗ W)* = V* ⊗ W*
        let dm = rs.dual_involution(m).unwrap();
        let dual_of_product: Vec<(Weight, u128)> = tensor_decompose(&rs, l, m)
            .unwrap()
            .iter()
            .map(|(w, k)| (rs.dual_involution(w).unwrap(), k))
            .collect();
        let product_of_duals = tensor_decompose(&rs, &dl, &dm).unwrap();
        for (w, k) in dual_of_product {
            prop_assert_eq!(product_of_duals.multiplicity(&w), k);
        }
    }

    #[test]
    fn summands_respect_the_root_lattice((rs, ws) in system_and_weights(2, 2), n in 1usize..4) {
        let (l, mu) = (&ws[0], &ws[1]);
        if contains_module(&rs, l, n, mu).unwrap() > 0 {
            prop_assert!(rs.in_root_lattice(&l.scaled(n as i32).add_scaled(mu, -1)).unwrap());
        }
    }

    #[test]
    fn dimension_grows_in_each_label((rs, ws) in system_and_weights(1, 3), i in 0usize..8) {
        let i = i % rs.rank();
        let bigger = ws[0].add_scaled(&Weight::fundamental(rs.rank(), i), 1);
        prop_assert!(weyl_dimension(&rs, &bigger).unwrap() > weyl_dimension(&rs, &ws[0]).unwrap());
        prop_assert!(weyl_dimension(&rs, &ws[0]).unwrap() >= BigUint::from(1u8));
    }
}
