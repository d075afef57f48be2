use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use discharge_lab::coloring::{enumerate_all, is_valid, solve, swap_two_three};
use discharge_lab::corpus::{random_graph, GenParams};
use discharge_lab::discharging::{apply_rules_in_order, discharge, initial_charges, Rule, RuleOptions};
use discharge_lab::plane_graph::PlaneGraph;
use discharge_lab::plg;
use num_rational::Ratio;

fn graph(seed: u64, max_n: usize, start: usize, class_g: bool, inside_only: bool) -> PlaneGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph(&mut rng, GenParams { max_n, start, class_g, inside_only })
}

fn class_start() -> impl Strategy<Value = usize> {
    prop::sample::select(vec![3usize, 5, 7, 8, 9])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_and_dart_counts(seed in any::<u64>(), start in 3usize..10, extra in 0usize..12, inside in any::<bool>()) {
        let g = graph(seed, start + extra, start, false, inside);
        prop_assert_eq!(g.euler_characteristic(), 2);
        let darts: usize = g.faces().iter().map(|f| f.len()).sum();
        prop_assert_eq!(darts, 2 * g.edge_count());
        let degrees: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degrees, 2 * g.edge_count());
    }

    #[test]
    fn plg_text_roundtrips(seed in any::<u64>(), start in 3usize..10, extra in 0usize..10) {
        let g = graph(seed, start + extra, start, false, false);
        let text = plg::write(&g);
        let back = plg::parse(&text).unwrap();
        prop_assert_eq!(plg::write(&back), text);
    }

    #[test]
    fn swapping_two_and_three_preserves_colourings(seed in any::<u64>(), start in class_start(), extra in 0usize..12) {
        let g = graph(seed, start + extra, start, true, false);
        prop_assert!(g.is_class_g());
        let c = solve(&g).expect("class members are colourable");
        prop_assert!(is_valid(g.adjacency(), &c));
        prop_assert!(is_valid(g.adjacency(), &swap_two_three(&c)));
    }

    #[test]
    fn colouring_sets_are_closed_under_swap(seed in any::<u64>(), start in 3usize..8, extra in 0usize..5) {
        let g = graph(seed, start + extra, start, false, false);
        let mut all = enumerate_all(&g).unwrap();
        let mut swapped: Vec<_> = all.iter().map(|c| swap_two_three(c)).collect();
        all.sort();
        swapped.sort();
        prop_assert_eq!(all, swapped);
    }

    #[test]
    fn shuffled_rules_give_the_same_ledger(seed in any::<u64>(), start in class_start(), extra in 0usize..14, order_seed in any::<u64>()) {
        let g = graph(seed, start + extra, start, true, false);
        let opts = RuleOptions::default();
        let base = discharge(&g, opts);
        let mut order = Rule::ALL.to_vec();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(order_seed));
        let shuffled = apply_rules_in_order(&g, &initial_charges(&g), &order, opts);
        prop_assert_eq!(shuffled.to_json(), base.to_json());
    }

    #[test]
    fn charge_total_is_ten_minus_outer_degree(seed in any::<u64>(), start in 3usize..10, extra in 0usize..14, split in any::<bool>(), ten_thirds in any::<bool>()) {
        let g = graph(seed, start + extra, start, false, false);
        let ledger = discharge(&g, RuleOptions { r12_split: split, r3_ten_thirds: ten_thirds });
        let d0 = g.face_degree(g.outer_face()) as i64;
        prop_assert_eq!(ledger.total_initial(), Ratio::from_integer(10 - d0));
        prop_assert_eq!(ledger.total_final(), ledger.total_initial());
    }
}
