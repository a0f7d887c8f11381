//! Generators, the two text formats, and biclique detection.

use flipsparse::graph::io::{parse_graph, write_graph, Format};
use flipsparse::graph::{find_biclique, generate};
use flipsparse::Result;

fn run() -> Result<()> {
    let grid = generate::grid(3, 3);
    println!("3x3 grid: n={} m={}", grid.n(), grid.m());

    let g6 = write_graph(&grid, Format::Graph6)?;
    let back = parse_graph(&g6, Format::Graph6)?;
    assert_eq!(back, grid);
    println!("graph6: {g6}");

    let text = "4 3\n0 1\n1 2\n2 3\n";
    let path = parse_graph(text, Format::EdgeList)?;
    assert_eq!(path, generate::path(4));
    print!("edge list:\n{}", write_graph(&path, Format::EdgeList)?);

    // the grid is bipartite with 4-cycles, so it contains K_{2,2} but not K_{3,3}
    let witness = find_biclique(&grid, 2)?.expect("a 4-cycle");
    println!("K_2,2 in the grid: {:?} x {:?}", witness.left, witness.right);
    assert!(find_biclique(&grid, 3)?.is_none());

    let sparse = generate::random_ktt_free(12, 0.6, 2, 7);
    assert!(find_biclique(&sparse, 2)?.is_none());
    println!("seeded K_2,2-free graph on 12 vertices with {} edges", sparse.m());
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
