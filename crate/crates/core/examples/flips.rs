//! Partitions and flips: complementing adjacency between chosen pairs of parts.

use flipsparse::graph::{apply_pflip, enumerate_pflips, generate};
use flipsparse::{FlipSpec, Partition, Result};

fn run() -> Result<()> {
    let g = generate::path(5);
    let p = Partition::new(5, vec![vec![0, 1], vec![2], vec![3, 4]])?;

    // flip between parts 0 and 2, and inside part 1 (a no-op on a singleton)
    let mut f = FlipSpec::new();
    f.insert(0, 2);
    f.insert(1, 1);
    let h = apply_pflip(&g, &p, &f)?;
    println!("P5 flipped: {:?}", h.edges().collect::<Vec<_>>());
    assert!(h.has_edge(0, 3) && h.has_edge(1, 4) && h.has_edge(3, 4));

    // flipping twice gives back the graph
    assert_eq!(apply_pflip(&h, &p, &f)?, g);

    // two successive flips are one flip of the common refinement
    let q = Partition::new(5, vec![vec![0, 2, 4], vec![1, 3]])?;
    let mut f2 = FlipSpec::new();
    f2.insert(0, 1);
    let twice = apply_pflip(&h, &q, &f2)?;
    let common = p.common_refinement(&q);
    let combined = f.lift(&p, &common).xor(&f2.lift(&q, &common));
    assert_eq!(apply_pflip(&g, &common, &combined)?, twice);
    println!("common refinement has {} parts", common.len());

    println!("{} flips of a 3-part partition", enumerate_pflips(&p)?.len());
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
