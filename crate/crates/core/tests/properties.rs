use std::collections::HashSet;

use llt_core::lattice::{enumerate_configs, Boundary};
use llt_core::relations::group_by_matching;
use llt_core::swap::{
    bead_sequence, enumerate_noncrossing_matchings, induced_matching, phi, walks, weight_change, Side,
};
use llt_core::tableaux::llt_poly;
use llt_core::{Color, Polynomial, ShapeTuple, SkewShape};
use proptest::prelude::*;

fn skew(rows: usize) -> impl Strategy<Value = SkewShape> {
    prop::collection::vec(0u32..=3, rows).prop_flat_map(move |mut outer| {
        outer.sort_unstable_by(|a, b| b.cmp(a));
        let bounds: Vec<_> = outer.iter().map(|&o| 0..=o).collect();
        (Just(outer), bounds).prop_map(|(outer, mut inner)| {
            inner.sort_unstable_by(|a, b| b.cmp(a));
            for i in 0..inner.len() {
                inner[i] = inner[i].min(outer[i]);
            }
            SkewShape::from_parts(&outer, &inner).unwrap()
        })
    })
}

fn pair() -> impl Strategy<Value = ShapeTuple> {
    ((1usize..=2).prop_flat_map(skew), (1usize..=2).prop_flat_map(skew))
        .prop_map(|(a, b)| ShapeTuple::new(vec![a, b]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phi_is_an_involution_onto_the_swapped_boundary(t in pair(), n in 1usize..=3) {
        let target = Boundary::of(&t.swap_adjacent(1).unwrap()).unwrap();
        let configs = enumerate_configs(&t, n).unwrap();
        let mut images = HashSet::new();
        for cfg in &configs {
            let image = phi(cfg).unwrap();
            image.validate(&target).unwrap();
            prop_assert_eq!(&phi(&image).unwrap(), cfg);
            prop_assert!(weight_change(cfg).unwrap().consistent());
            images.insert(image);
        }
        prop_assert_eq!(images.len(), configs.len());
    }

    #[test]
    fn walks_are_disjoint_and_correctly_typed(t in pair(), n in 1usize..=3) {
        for cfg in enumerate_configs(&t, n).unwrap() {
            let ws = walks(&cfg).unwrap();
            let mut seen = HashSet::new();
            for w in &ws {
                let end_ok = matches!((w.end.side, w.end.color), (Side::Top, Color::Blue) | (Side::Bottom, Color::Red));
                prop_assert!(end_ok);
                for (e, _) in w.edges() {
                    prop_assert!(seen.insert(e));
                }
            }
        }
    }

    #[test]
    fn induced_matchings_are_candidates(t in pair(), n in 1usize..=3) {
        let candidates = enumerate_noncrossing_matchings(&bead_sequence(&t).unwrap());
        for cfg in enumerate_configs(&t, n).unwrap() {
            prop_assert!(candidates.contains(&induced_matching(&cfg).unwrap()));
        }
    }

    #[test]
    fn matching_classes_partition_the_llt(t in pair(), n in 1usize..=3) {
        let classes = group_by_matching(&t, n).unwrap();
        let sum = classes.iter().fold(Polynomial::zero(n), |acc, c| acc.try_add(&c.g).unwrap());
        prop_assert_eq!(sum, llt_poly(&t, n).unwrap());
    }
}
