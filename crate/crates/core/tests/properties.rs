//! Randomised comparisons of the fast routines against brute-force oracles.

use flipsparse::games::{play_game, replay, EvasiveRobber, MonotoneCops, Winner};
use flipsparse::graph::io::{parse_graph, write_graph, Format};
use flipsparse::graph::{apply_pflip, find_biclique, generate};
use flipsparse::mergewidth::{mw_from_order, rfs_width, validate_rfs, RestrainedFlipSequence};
use flipsparse::sparsify::sparsify_set;
use flipsparse::sweep::oracle::{flip_naive, has_biclique_naive, sep_by_paths};
use flipsparse::widths::{scol_exact, scol_of_order, sep_set, sw_exact, sw_of_order, wcol_exact, wcol_of_order, Ordering};
use flipsparse::{FlipSpec, Graph, Partition, Radius, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn with_labels(max_n: usize, max_blocks: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(move |g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(0..max_blocks, n))
    })
}

fn radius() -> impl Strategy<Value = Radius> {
    prop_oneof![(0usize..=3).prop_map(Radius::Finite), Just(Radius::Infinite)]
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

fn flips_for(p: &Partition, bits: &[bool]) -> FlipSpec {
    let mut f = FlipSpec::new();
    let mut k = 0;
    for i in 0..p.len() {
        for j in i..p.len() {
            if bits[k % bits.len()] {
                f.insert(i, j);
            }
            k += 1;
        }
    }
    f
}

proptest! {
    #[test]
    fn sep_matches_path_enumeration(g in graph(7), v_seed in any::<usize>(), s_bits in any::<u8>(), r in 0usize..=3) {
        let v = v_seed % g.n();
        let s: VertexSet = g.vertices().filter(|&u| u != v && s_bits >> (u % 8) & 1 == 1).collect();
        prop_assert_eq!(sep_set(&g, v, &s, Radius::Finite(r)).unwrap(), sep_by_paths(&g, v, &s, r));
    }

    #[test]
    fn biclique_search_matches_naive(g in graph(9), t in 1usize..=3) {
        let found = find_biclique(&g, t).unwrap();
        prop_assert_eq!(found.is_some(), has_biclique_naive(&g, t));
        if let Some(w) = found {
            for &a in &w.left {
                prop_assert!(!w.right.contains(&a));
                for &b in &w.right {
                    prop_assert!(g.has_edge(a, b));
                }
            }
        }
    }

    #[test]
    fn flips_match_pairwise_definition((g, labels) in with_labels(8, 3), bits in proptest::collection::vec(any::<bool>(), 6)) {
        let p = Partition::from_labels(&labels);
        let f = flips_for(&p, &bits);
        let h = apply_pflip(&g, &p, &f).unwrap();
        prop_assert_eq!(&h, &flip_naive(&g, &p, &|a, b| f.contains(a.min(b), a.max(b))));
        prop_assert_eq!(apply_pflip(&h, &p, &f).unwrap(), g);
    }

    #[test]
    fn text_formats_round_trip(g in graph(12)) {
        for format in [Format::EdgeList, Format::Graph6] {
            let text = write_graph(&g, format).unwrap();
            prop_assert_eq!(parse_graph(&text, format).unwrap(), g.clone());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn exact_widths_match_all_orderings(g in graph(6), r in radius()) {
        let perms = permutations(g.n());
        let best = |f: &dyn Fn(&Ordering) -> usize| perms.iter().map(|p| f(&Ordering::new(p.clone()).unwrap())).min().unwrap();
        let sw = sw_exact(&g, r).unwrap();
        prop_assert_eq!(sw.value, best(&|o| sw_of_order(&g, o, r).unwrap().value));
        prop_assert_eq!(sw.value, sw_of_order(&g, &sw.order, r).unwrap().value);
        prop_assert_eq!(scol_exact(&g, r).unwrap().value, best(&|o| scol_of_order(&g, o, r).unwrap().value));
        prop_assert_eq!(wcol_exact(&g, r).unwrap().value, best(&|o| wcol_of_order(&g, o, r).unwrap().value));
    }

    #[test]
    fn sparsify_is_small_on_biclique_free_graphs(n in 1usize..=14, p in 0.1f64..0.6, seed in any::<u64>(), t in 2usize..=3, labels in proptest::collection::vec(0usize..4, 14)) {
        let g = generate::random_ktt_free(n, p, t, seed);
        let part = Partition::from_labels(&labels[..n]);
        let report = sparsify_set(&g, &part, t).unwrap();
        prop_assert!(report.deleted.len() < part.len() * t * t);
        prop_assert!(report.reasons_valid(&g, &part, t));
    }

    #[test]
    fn sequences_from_orders_validate_and_serialize(g in graph(8), perm_seed in any::<u64>(), r in 1usize..=2, compact in any::<bool>()) {
        let ord = Ordering::new(generate::random_permutation(g.n(), perm_seed)).unwrap();
        let r = Radius::Finite(r);
        let (seq, claim) = mw_from_order(&g, &ord, r).unwrap();
        prop_assert!(validate_rfs(&g, &seq).valid);
        let back = RestrainedFlipSequence::from_json(&seq.to_json(compact).unwrap()).unwrap();
        prop_assert_eq!(rfs_width(&g, &back, r).unwrap(), claim.width);
    }

    #[test]
    fn monotone_cops_catch_any_evasive_robber(g in graph(7), seed in any::<u64>(), r in 1usize..=2) {
        prop_assume!(g.is_connected());
        let r = Radius::Finite(r);
        let cops = MonotoneCops::new(&g, r, sw_exact(&g, r.scale(2)).unwrap().order).unwrap();
        let t = play_game(&g, r, cops.budget(), &cops, &mut EvasiveRobber::new(seed), g.n()).unwrap();
        prop_assert_eq!(t.winner, Winner::Cops);
        prop_assert!(t.rounds.len() <= g.n());
        replay(&g, &t).unwrap();
    }
}
