//! Small hand-checkable instances across the public API.

use flipsparse::games::{
    adversarial_robber_certify, copwidth_exact, copwidth_exact_with, flipper_game_solve, CopCaps, CopStrategy, MonotoneCops, Round,
};
use flipsparse::graph::{apply_pflip, find_biclique, generate};
use flipsparse::mergewidth::{
    mw_from_order, normalize_rfs, order_from_rfs, radius_width, rfs_width, shatter, validate_rfs,
    RestrainedFlipSequence,
};
use flipsparse::ranks::{check_lemma_frk, frk, srk, Rank};
use flipsparse::sparsify::{
    complete_vertices, deletion_witness_from_flip, engine_violation, sparsify_set, verify_engine,
};
use flipsparse::widths::{sep_set, sreach, sw_of_order, Ordering};
use flipsparse::{FlipSpec, Graph, Partition, Radius, Result, VertexSet};

const R1: Radius = Radius::Finite(1);

#[test]
fn bicliques() {
    assert!(find_biclique(&generate::complete(4), 2).unwrap().is_some());
    assert!(find_biclique(&generate::random_tree(12, 1), 2).unwrap().is_none());
}

#[test]
fn separators_and_reach() {
    let p5 = generate::path(5);
    let s = VertexSet::from([0, 2]);
    assert_eq!(sep_set(&p5, 4, &s, Radius::Finite(3)).unwrap(), VertexSet::from([2]));
    assert_eq!(sep_set(&p5, 2, &VertexSet::from([0]), Radius::Finite(2)).unwrap(), VertexSet::from([0]));
    let p3 = generate::path(3);
    assert_eq!(sreach(&p3, &Ordering::identity(3), 2, Radius::Finite(2)).unwrap(), VertexSet::from([1, 2]));
}

#[test]
fn sparsify_definition_cases() {
    let c5 = generate::cycle(5);
    assert!(sparsify_set(&c5, &Partition::whole(5), 2).unwrap().deleted.is_empty());
    let k5 = generate::complete(5);
    assert_eq!(complete_vertices(&k5, &[0, 1, 2, 3, 4], 2).len(), 5);
}

#[test]
fn wrong_deletion_set_is_caught() {
    // star with the center in a big part: dropping the center from S leaves
    // the flipped leaves far apart while they are adjacent through it in G \ S
    let g = generate::star(5);
    let p = Partition::new(5, vec![vec![0], vec![1, 2, 3, 4]]).unwrap();
    let mut f = FlipSpec::new();
    f.insert(0, 1);
    assert!(verify_engine(&g, &p, 2, &f).unwrap().passed());
    let h = apply_pflip(&g, &p, &f).unwrap();
    assert!(engine_violation(&g, &h, &VertexSet::new()).is_some());
}

#[test]
fn deletion_witness_at_radius_zero() {
    let g = generate::path(4);
    let p = Partition::whole(4);
    let w = deletion_witness_from_flip(&g, 2, &p, &FlipSpec::new(), &[(0, 2), (0, 3)], Radius::Finite(0)).unwrap();
    assert!(w.all_separated());
}

#[test]
fn radius_width_counts_blocks_in_a_ball() {
    let path = generate::path(5);
    let (w, _) = radius_width(&Partition::singletons(5), &path, R1).unwrap();
    assert_eq!(w, 3);
    assert_eq!(radius_width(&Partition::singletons(5), &Graph::empty(5), R1).unwrap().0, 1);
}

#[test]
fn shatter_function_edge_cases() {
    assert_eq!(shatter(&generate::path(4), 0).unwrap(), 1);
    for m in 1..5 {
        assert_eq!(shatter(&generate::complete(5), m).unwrap(), m + 1);
    }
}

#[test]
fn sequences_from_orders() {
    let star = generate::star(5);
    let center_last = Ordering::new(vec![1, 2, 3, 4, 0]).unwrap();
    let (seq, claim) = mw_from_order(&star, &center_last, Radius::Finite(2)).unwrap();
    assert!(validate_rfs(&star, &seq).valid);
    assert_eq!(claim.k, sw_of_order(&star, &center_last, Radius::Finite(3)).unwrap().value);
    assert!(claim.width <= (1 << (claim.k + 1)) + 1);

    let k1 = Graph::empty(1);
    let trivial = RestrainedFlipSequence::trivial(1);
    assert!(validate_rfs(&k1, &trivial).valid);
    assert_eq!(rfs_width(&k1, &trivial, R1).unwrap(), 1);
}

#[test]
fn normalizing_the_two_step_sequence_on_p3() {
    let p3 = generate::path(3);
    let two = RestrainedFlipSequence::from_json(
        r#"{"schema":1,"n":3,"steps":[
            {"blocks":[[0,1,2]],"restraint":[[0,1],[0,2],[1,2]],"flips":[]},
            {"blocks":[[0],[1],[2]],"restraint":[],"flips":[[0,1],[1,2]]}]}"#,
    )
    .unwrap();
    assert!(validate_rfs(&p3, &two).valid);
    let normal = normalize_rfs(&p3, &two).unwrap();
    assert_eq!(normal.len(), 3);
    for r in [R1, Radius::Finite(2), Radius::Infinite] {
        assert_eq!(rfs_width(&p3, &normal, r).unwrap(), rfs_width(&p3, &two, r).unwrap());
    }
}

#[test]
fn pipeline_on_p8() {
    let g = generate::path(8);
    let (seq, _) = mw_from_order(&g, &Ordering::identity(8), Radius::Finite(4)).unwrap();
    let seq = normalize_rfs(&g, &seq).unwrap();
    let (ord, cert) = order_from_rfs(&g, 2, &seq, R1).unwrap();
    assert_eq!(cert.measured, sw_of_order(&g, &ord, R1).unwrap().value);
    assert!(cert.holds());
}

fn certify(g: &Graph, r: Radius, order: Ordering) -> bool {
    let cops = MonotoneCops::new(g, r, order).unwrap();
    adversarial_robber_certify(g, r, &cops, cops.budget()).unwrap().certified
}

#[test]
fn monotone_cops_on_small_graphs() {
    let p4 = generate::path(4);
    let cops = MonotoneCops::new(&p4, R1, Ordering::identity(4)).unwrap();
    assert_eq!(cops.budget(), 2);
    assert!(certify(&p4, R1, Ordering::identity(4)));
    assert!(certify(&Graph::empty(4), R1, Ordering::identity(4)));
    assert_eq!(MonotoneCops::new(&generate::complete(4), R1, Ordering::identity(4)).unwrap().budget(), 4);
}

#[test]
fn crippled_cops_lose_on_c4() {
    struct WithoutNewest(MonotoneCops);
    impl CopStrategy for WithoutNewest {
        fn cops(&self, g: &Graph, start: usize, rounds: &[Round]) -> Result<VertexSet> {
            let mut c = self.0.cops(g, start, rounds)?;
            c.remove(self.0.order().vertex_at(rounds.len().min(g.n() - 1)));
            Ok(c)
        }
    }
    let c4 = generate::cycle(4);
    let inner = MonotoneCops::new(&c4, R1, Ordering::identity(4)).unwrap();
    let k = inner.budget();
    let cert = adversarial_robber_certify(&c4, R1, &WithoutNewest(inner), k).unwrap();
    assert!(!cert.certified);
    assert!(cert.counter.is_some());
}

#[test]
fn game_solvers() {
    assert!(copwidth_exact(&Graph::empty(1), R1, 1).unwrap());
    assert!(!copwidth_exact(&generate::cycle(4), R1, 1).unwrap());
    assert!(copwidth_exact_with(&generate::cycle(5), R1, 5, CopCaps { max_n: 8, max_k: 5 }).unwrap());
    assert!(flipper_game_solve(&Graph::empty(1), R1, 1).unwrap());
    assert!(flipper_game_solve(&Graph::empty(4), R1, 1).unwrap());
    assert!(flipper_game_solve(&generate::path(3), R1, 2).unwrap());
}

#[test]
fn ranks() {
    assert_eq!(frk(&Graph::empty(3), R1, 1).unwrap(), Rank::Finite(2));
    assert_eq!(frk(&generate::complete(2), R1, 2).unwrap(), Rank::Finite(2));
    assert_eq!(srk(&Graph::empty(1), R1, 1).unwrap(), Rank::Finite(1));
    assert_eq!(srk(&generate::path(3), R1, 1).unwrap(), Rank::Finite(2));
    assert_eq!(srk(&generate::star(4), R1, 1).unwrap(), Rank::Finite(2));
    let k1 = check_lemma_frk(&Graph::empty(1), 2, R1, 1).unwrap();
    assert_eq!(k1.ell, Rank::Finite(1));
    assert!(k1.holds);
    assert!(check_lemma_frk(&generate::path(3), 2, R1, 2).unwrap().holds);
}
