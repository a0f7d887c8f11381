//! The deletion set of a partition and the distance guarantees it gives for
//! every flip of that partition.

use flipsparse::graph::{apply_pflip, enumerate_pflips, generate};
use flipsparse::sparsify::{deletion_witness_from_flip, sparsify_set, verify_engine};
use flipsparse::{FlipSpec, Partition, Radius, Result};

fn run() -> Result<()> {
    // K_{1,5}: the center sits alone in a small part
    let star = generate::star(6);
    let p = Partition::new(6, vec![vec![0], vec![1, 2, 3, 4, 5]])?;
    let report = sparsify_set(&star, &p, 2)?;
    println!("star: deleted {:?}, bound {}, reasons {:?}", report.deleted, report.bound, report.reasons);

    let g = generate::random_ktt_free(12, 0.4, 2, 3);
    let p = Partition::new(12, vec![(0..4).collect(), (4..8).collect(), (8..12).collect()])?;
    let report = sparsify_set(&g, &p, 2)?;
    println!("random K_2,2-free graph: |S| = {} < {}", report.deleted.len(), report.bound);
    let mut checked = 0;
    for f in enumerate_pflips(&p)? {
        let engine = verify_engine(&g, &p, 2, &f)?;
        assert!(engine.passed(), "{:?}", engine.violation);
        checked += 1;
    }
    println!("distance guarantees hold for all {checked} flips");

    // two far-apart vertices after a flip stay apart once S is removed
    let path = generate::path(8);
    let p = Partition::new(8, vec![(0..4).collect(), (4..8).collect()])?;
    let mut f = FlipSpec::new();
    f.insert(0, 0);
    let h = apply_pflip(&path, &p, &f)?;
    println!("flipped distance between 0 and 7: {}", h.distance(0, 7)?);
    let pairs: Vec<(usize, usize)> = (0..8).flat_map(|u| (u + 1..8).map(move |v| (u, v))).collect();
    let far: Vec<(usize, usize)> =
        pairs.into_iter().filter(|&(u, v)| h.distance(u, v).map(|d| d > Radius::Finite(3)).unwrap_or(false)).collect();
    let witness = deletion_witness_from_flip(&path, 2, &p, &f, &far, Radius::Finite(1))?;
    println!("{} far pairs, deleted {:?}, all separated: {}", far.len(), witness.deleted, witness.all_separated());
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
