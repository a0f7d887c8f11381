//! Exact solvers for the cop game and the flipper game.

use flipsparse::games::{check_fw_cw, copwidth, copwidth_exact, flipper_game_solve, kflip_graphs};
use flipsparse::graph::generate;
use flipsparse::{Radius, Result};

fn run() -> Result<()> {
    let r = Radius::Finite(1);
    let c4 = generate::cycle(4);
    println!("C4: 2 cops win: {}, copwidth {}", copwidth_exact(&c4, r, 2)?, copwidth(&c4, r)?);

    let p5 = generate::path(5);
    println!("P5 has {} distinct 1-flips", kflip_graphs(&p5, 1)?.len());
    for k in 1..=2 {
        println!("P5 flipper with {k}-flips at radius 3 wins: {}", flipper_game_solve(&p5, r.scale(3), k)?);
    }

    let tree = generate::random_tree(5, 2);
    let report = check_fw_cw(&tree, 2, r)?;
    println!("{report:?}");
    assert!(report.holds);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
