use clustered::colouring::{optimal_cluster_colouring, parity_colouring, two_colour, verify_clustering, TwoColourOutcome};
use clustered::generators::random_graph;
use clustered::graph::{bfs_layering, block_decomposition, tree_depth, treewidth_exact};
use clustered::harness::chromatic_number;
use clustered::minors::has_minor;
use clustered::{Graph, Limits, Search};
use proptest::prelude::*;

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0..=1.0f64, any::<u64>()).prop_map(|(n, p, seed)| random_graph(n, p, seed).unwrap())
}

fn connected(g: Graph) -> Graph {
    let comps = g.connected_components();
    let mut edges = g.edges();
    for w in comps.windows(2) {
        edges.push((w[0][0], w[1][0]));
    }
    Graph::new(g.n(), &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_list_round_trips(g in small_graph(15)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn layering_edges_span_at_most_one_layer(g in small_graph(15).prop_map(connected)) {
        let lay = bfs_layering(&g, 0).unwrap();
        for (u, v) in g.edges() {
            prop_assert!(lay.layer[u].abs_diff(lay.layer[v]) <= 1);
        }
        let total: usize = lay.layers.iter().map(Vec::len).sum();
        prop_assert_eq!(total, g.n());
    }

    #[test]
    fn blocks_cover_every_edge_once(g in small_graph(12).prop_map(connected)) {
        let bf = block_decomposition(&g, 0).unwrap();
        for (u, v) in g.edges() {
            let owners = bf.blocks.iter().filter(|b| b.contains(&u) && b.contains(&v)).count();
            prop_assert_eq!(owners, 1);
        }
    }

    #[test]
    fn parity_layers_have_bounded_clusters(g in small_graph(14).prop_map(connected)) {
        let col = parity_colouring(&g, 0).unwrap();
        let rep = verify_clustering(&g, &col).unwrap();
        prop_assert!(rep.num_colours <= 2);
        let lay = bfs_layering(&g, 0).unwrap();
        let widest = lay.layers.iter().map(Vec::len).max().unwrap();
        prop_assert!(rep.max_component <= widest.max(1) * g.n());
    }

    #[test]
    fn treewidth_below_tree_depth(g in small_graph(10)) {
        let l = Limits::default();
        prop_assert!(treewidth_exact(&g, &l).unwrap() < tree_depth(&g, &l).unwrap().max(1));
    }

    #[test]
    fn proper_oracle_matches_subset_programme(g in small_graph(8)) {
        let out = optimal_cluster_colouring(&g, 1, &Limits::default()).unwrap();
        prop_assert_eq!(out.exact(), Some(chromatic_number(&g)));
        prop_assert!(verify_clustering(&g, &out.witness).unwrap().max_component <= 1);
    }

    #[test]
    fn induced_subgraphs_are_minors(g in small_graph(9), keep in proptest::collection::vec(any::<bool>(), 9)) {
        let vs: Vec<usize> = (0..g.n()).filter(|&v| keep[v]).collect();
        let (sub, _) = g.induced(&vs);
        match has_minor(&g, &sub, &Limits::default()) {
            Search::Found(m) => prop_assert!(m.is_valid(&g, &sub)),
            other => prop_assert!(false, "expected a model, got {}", other.label()),
        }
    }

    #[test]
    fn forests_two_colour(n in 2usize..40, seed in any::<u64>()) {
        let mut rng = clustered::rng::SplitMix64::new(seed);
        let t = clustered::harness::bounded_degree_tree(n, 3, &mut rng);
        match two_colour(&t, 2).unwrap() {
            TwoColourOutcome::Coloured(col) => prop_assert!(verify_clustering(&t, &col).unwrap().num_colours <= 2),
            TwoColourOutcome::Witness(m) => prop_assert!(m.check(&t).is_ok()),
        }
    }
}
