use bimeet_core::generators::{generate, GenKind, GenParams};
use bimeet_core::oracles::{
    bfs, bfs_hops, check_constraint, dijkstra, enumerate_paths, min_cost_by_hops, Verdict,
    ENUMERATION_CAP,
};
use bimeet_core::{Graph, Query, UNREACHED};
use proptest::prelude::*;

/// Admissibility straight from the hop table: some k > kmin is strictly
/// cheaper than the best kmin-hop walk.
fn violated_by_table(g: &Graph, q: Query) -> bool {
    [q.source, q.target].into_iter().any(|root| {
        let table = min_cost_by_hops(g, root);
        (0..g.vertex_count()).any(|w| match table.kmin(w) {
            None => false,
            Some(kmin) => {
                let base = table.get(kmin, w);
                (kmin + 1..table.hop_classes()).any(|k| table.get(k, w) < base)
            }
        })
    })
}

fn small_instance() -> impl Strategy<Value = (Graph, Query)> {
    (2usize..=ENUMERATION_CAP, 0u64..1_000_000, 0.5f64..3.0, 0u64..20).prop_map(
        |(n, seed, density, spread)| {
            let p = GenParams::new(GenKind::Random, n, seed)
                .with_density(density)
                .with_weights(1, 1 + spread);
            generate(&p).unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn dijkstra_matches_brute_force((g, q) in small_instance()) {
        let paths = enumerate_paths(&g, q, ENUMERATION_CAP).unwrap();
        let best = paths.iter().map(|p| p.1).min();
        prop_assert_eq!(dijkstra(&g, q).cost, best);
    }

    #[test]
    fn hop_table_minimum_is_the_distance((g, q) in small_instance()) {
        let table = min_cost_by_hops(&g, q.source);
        for w in 0..g.vertex_count() {
            let exact = dijkstra(&g, Query::new(q.source, w)).cost.unwrap_or(UNREACHED);
            prop_assert_eq!(table.min_over_hops(w), exact);
        }
    }

    #[test]
    fn fast_checker_agrees_with_hop_table((g, q) in small_instance()) {
        let report = check_constraint(&g, q);
        prop_assert_eq!(report.verdict == Verdict::Violated, violated_by_table(&g, q));
        if let Some(w) = report.witness {
            let table = min_cost_by_hops(&g, w.root);
            prop_assert_eq!(table.kmin(w.w), Some(w.kmin as usize));
            prop_assert_eq!(table.get(w.k as usize, w.w), w.cheap_cost);
            prop_assert!(w.k > w.kmin);
            prop_assert!(w.cheap_cost < table.get(w.kmin as usize, w.w));
            prop_assert_eq!(w.kmin_cost, table.get(w.kmin as usize, w.w));
        }
    }

    #[test]
    fn bfs_is_dijkstra_with_unit_weights((g, q) in small_instance()) {
        let unit = g.with_uniform_weight(1);
        let hops = bfs_hops(&g, q.source);
        for (w, h) in hops.iter().enumerate() {
            let d = dijkstra(&unit, Query::new(q.source, w)).cost;
            prop_assert_eq!(h.map(u64::from), d);
        }
        prop_assert_eq!(bfs(&g, q).cost, hops[q.target].map(u64::from));
    }
}

#[test]
fn uniform_weights_are_admissible() {
    for seed in 0..50 {
        let (g, q) = generate(&GenParams::new(GenKind::Random, 30, seed)).unwrap();
        let g = g.with_uniform_weight(3);
        assert_eq!(check_constraint(&g, q).verdict, Verdict::Satisfied);
    }
}
