use proptest::prelude::*;
use proptest::sample::Index;
use rainbow_core::families::{build_mop_with_outer_cycle, MopConstruction};
use rainbow_core::recognition::count_hamiltonian_cycles;
use rainbow_core::{
    are_isomorphic, block_decomposition, bridges, canonical_code, canonical_form, cut_vertices,
    find_k23_minor, find_k4_minor, is_mop, is_outerplanar, is_rainbow_connected, is_two_connected,
    outer_cycle, rainbow_path_exists, rc_exact, rc_oracle, EdgeColoring, Graph, VertexSet,
};

fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| from_bits(n, &bits))
    })
}

/// A random spanning tree plus random extra edges.
fn arb_connected(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec(any::<Index>(), n - 1),
            prop::collection::vec(prop::bool::weighted(0.3), n * (n - 1) / 2),
        )
            .prop_map(move |(parents, extra)| {
                let mut g = from_bits(n, &extra);
                for (i, p) in parents.iter().enumerate() {
                    let v = i + 1;
                    let u = p.index(v);
                    if !g.has_edge(u, v) {
                        g = g.with_edge(u, v).unwrap();
                    }
                }
                g
            })
    })
}

fn with_perm(g: Graph) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    let n = g.order();
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(move |p| (g, p))
}

fn with_colors(g: Graph, k: usize) -> impl Strategy<Value = (Graph, EdgeColoring)> {
    prop::collection::vec(0..k, g.size()).prop_map(move |c| {
        let col = EdgeColoring::new(&g, &c, k).unwrap();
        (g, col)
    })
}

/// Rainbow path by explicit enumeration of simple paths.
fn rainbow_path_brute(g: &Graph, c: &EdgeColoring, u: usize, v: usize) -> bool {
    fn go(g: &Graph, c: &EdgeColoring, at: usize, v: usize, seen: VertexSet, used: u32) -> bool {
        if at == v {
            return true;
        }
        g.neighbors(at).iter().any(|w| {
            let col = c.color_of(at, w).unwrap();
            !seen.contains(w)
                && used >> col & 1 == 0
                && go(g, c, w, v, seen.union(VertexSet::singleton(w)), used | 1 << col)
        })
    }
    go(g, c, u, v, VertexSet::singleton(u), 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_code_is_label_invariant((g, p) in arb_graph(1, 9).prop_flat_map(with_perm)) {
        let h = g.relabel(&p).unwrap();
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
        let (canon, labeling) = canonical_form(&g);
        prop_assert_eq!(g.relabel(&labeling).unwrap(), canon);
    }

    #[test]
    fn adding_an_edge_changes_the_class(g in arb_graph(2, 8)) {
        if let Some(&(u, v)) = g.non_edges().first() {
            prop_assert!(!are_isomorphic(&g, &g.with_edge(u, v).unwrap()));
        }
    }

    #[test]
    fn radius_and_diameter(g in arb_connected(1, 10)) {
        let (r, d) = (g.radius().unwrap(), g.diameter().unwrap());
        prop_assert!(r <= d && d <= 2 * r);
    }

    #[test]
    fn join_size((g, h) in (arb_graph(1, 5), arb_graph(1, 5))) {
        let j = g.join(&h).unwrap();
        prop_assert_eq!(j.order(), g.order() + h.order());
        prop_assert_eq!(j.size(), g.size() + h.size() + g.order() * h.order());
    }

    #[test]
    fn lowpoint_bridges_match_removal(g in arb_graph(1, 7)) {
        let comps = g.components().len();
        let oracle: Vec<_> = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| g.without_edge(u, v).unwrap().components().len() > comps)
            .collect();
        prop_assert_eq!(bridges(&g), oracle);
    }

    #[test]
    fn cut_vertices_match_removal(g in arb_connected(2, 8)) {
        let oracle: VertexSet = (0..g.order())
            .filter(|&v| {
                let rest = g.vertices().difference(VertexSet::singleton(v));
                !g.is_connected_set(rest)
            })
            .collect();
        prop_assert_eq!(cut_vertices(&g), oracle);
    }

    #[test]
    fn blocks_partition_the_edges(g in arb_connected(2, 9)) {
        let d = block_decomposition(&g).unwrap();
        prop_assert_eq!(d.block_sizes(&g).iter().sum::<usize>(), g.size());
        for b in &d.blocks {
            let h = g.induced(*b).unwrap();
            prop_assert!(h.size() == 1 || is_two_connected(&h));
        }
    }

    #[test]
    fn outerplanarity_is_closed_under_subgraphs(g in arb_graph(2, 8)) {
        if is_outerplanar(&g) {
            for (u, v) in g.edges() {
                prop_assert!(is_outerplanar(&g.without_edge(u, v).unwrap()));
            }
            for v in 0..g.order() {
                let rest = g.vertices().difference(VertexSet::singleton(v));
                prop_assert!(is_outerplanar(&g.induced(rest).unwrap()));
            }
            prop_assert!(g.size() + 3 <= 2 * g.order() || g.order() < 2);
        }
    }

    #[test]
    fn outerplanarity_is_decided_by_blocks(g in arb_connected(2, 9)) {
        let d = block_decomposition(&g).unwrap();
        let per_block = d.blocks.iter().all(|&b| is_outerplanar(&g.induced(b).unwrap()));
        prop_assert_eq!(is_outerplanar(&g), per_block);
    }

    #[test]
    fn minor_witnesses_are_valid(g in arb_graph(4, 9)) {
        let k4 = find_k4_minor(&g);
        let k23 = find_k23_minor(&g);
        for w in k4.iter().chain(k23.iter()) {
            prop_assert!(w.is_valid_for(&g));
        }
        prop_assert_eq!(is_outerplanar(&g), k4.is_none() && k23.is_none());
    }

    #[test]
    fn mop_constructions(picks in prop::collection::vec(any::<Index>(), 0..=7)) {
        let mut steps = Vec::new();
        let mut outer = vec![0usize, 1, 2];
        for p in &picks {
            let i = p.index(outer.len());
            let (u, v) = (outer[i], outer[(i + 1) % outer.len()]);
            steps.push((u, v));
            outer.insert(i + 1, 3 + steps.len() - 1);
        }
        let (g, cycle) = build_mop_with_outer_cycle(&MopConstruction::new(steps)).unwrap();
        prop_assert!(is_mop(&g));
        prop_assert_eq!(g.size(), 2 * g.order() - 3);
        prop_assert_eq!(count_hamiltonian_cycles(&g), 1);
        let found = outer_cycle(&g).unwrap();
        let n = g.order();
        // Same cyclic sequence up to rotation and reflection.
        let start = cycle.iter().position(|&v| v == found[0]).unwrap();
        let fwd: Vec<_> = (0..n).map(|i| cycle[(start + i) % n]).collect();
        let bwd: Vec<_> = (0..n).map(|i| cycle[(start + n - i) % n]).collect();
        prop_assert!(found == fwd || found == bwd);
    }

    #[test]
    fn dp_matches_simple_path_search((g, c) in arb_connected(2, 7).prop_flat_map(|g| with_colors(g, 4))) {
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                prop_assert_eq!(rainbow_path_exists(&g, &c, u, v).unwrap(), rainbow_path_brute(&g, &c, u, v));
            }
        }
    }

    #[test]
    fn color_renaming_invariance(
        ((g, c), rename) in arb_connected(2, 8)
            .prop_flat_map(|g| with_colors(g, 4))
            .prop_flat_map(|gc| (Just(gc), Just((0..6).collect::<Vec<_>>()).prop_shuffle()))
    ) {
        let renamed = c.renamed(&rename, 6).unwrap();
        prop_assert_eq!(is_rainbow_connected(&g, &c).unwrap(), is_rainbow_connected(&g, &renamed).unwrap());
    }

    #[test]
    fn adding_edges_keeps_rainbow_colorings(
        (g, c, extra) in arb_connected(2, 7)
            .prop_flat_map(|g| with_colors(g, 4))
            .prop_flat_map(|(g, c)| (Just(g), Just(c), prop::collection::vec(0..4usize, 21)))
    ) {
        if let Some(&(u, v)) = g.non_edges().first() {
            let h = g.with_edge(u, v).unwrap();
            let ch = c.extended(&h, &extra, 4).unwrap();
            if is_rainbow_connected(&g, &c).unwrap() {
                prop_assert!(is_rainbow_connected(&h, &ch).unwrap());
            }
            prop_assert!(rc_exact(&h).unwrap().rc <= rc_exact(&g).unwrap().rc);
        }
    }

    #[test]
    fn witnesses_are_valid_and_minimal(g in arb_connected(2, 8)) {
        let r = rc_exact(&g).unwrap();
        prop_assert!(is_rainbow_connected(&g, &r.witness).unwrap());
        prop_assert_eq!(r.witness.k(), r.rc);
        prop_assert!(r.rc >= g.diameter().unwrap());
        if g.size() <= 10 {
            prop_assert_eq!(r.rc, rc_oracle(&g).unwrap());
        }
    }

    #[test]
    fn rc_is_label_invariant((g, p) in arb_connected(2, 8).prop_flat_map(with_perm)) {
        prop_assert_eq!(rc_exact(&g).unwrap().rc, rc_exact(&g.relabel(&p).unwrap()).unwrap().rc);
    }
}
