//! Separation-width against the strong and weak colouring numbers.

use flipsparse::graph::generate;
use flipsparse::widths::{
    check_sandwich, degeneracy, scol_exact, sep_set, sw_exact, sw_greedy, sw_of_order, treewidth_oracle, wcol_exact,
    Ordering,
};
use flipsparse::{Radius, Result, VertexSet};

fn run() -> Result<()> {
    let g = generate::grid(3, 3);
    let center = 4;
    let corners = VertexSet::from([0, 2, 6, 8]);
    println!("sep_2(center / corners) = {:?}", sep_set(&g, center, &corners, Radius::Finite(2))?);

    for r in [Radius::Finite(1), Radius::Finite(2), Radius::Infinite] {
        let sw = sw_exact(&g, r)?;
        let scol = scol_exact(&g, r)?;
        let wcol = wcol_exact(&g, r)?;
        println!("r={r}: scol={} sw={} wcol={} (order {:?})", scol.value, sw.value, wcol.value, sw.order.as_slice());
        let report = check_sandwich(&g, &sw.order, r)?;
        assert!(report.holds());
    }

    let (d, _) = degeneracy(&g);
    let tw = treewidth_oracle(&g)?;
    println!("degeneracy {d} = sw_1, treewidth {tw} = sw_inf");

    let identity = sw_of_order(&g, &Ordering::identity(9), Radius::Finite(2))?;
    let greedy = sw_greedy(&g, Radius::Finite(2))?;
    println!("sw_2 of the identity order {}, greedy {}", identity.value, greedy.value);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
