//! Flipper-rank and splitter-rank, and the transfer from one to the other.

use flipsparse::graph::generate;
use flipsparse::ranks::{check_lemma_frk, frk, srk};
use flipsparse::{Radius, Result};

fn run() -> Result<()> {
    let r = Radius::Finite(1);
    for (name, g) in [("K1", generate::path(1)), ("P3", generate::path(3)), ("star", generate::star(5)), ("C5", generate::cycle(5))] {
        println!("{name}: frk_1,1 = {}, srk_1,1 = {}, srk_1,2 = {}", frk(&g, r, 1)?, srk(&g, r, 1)?, srk(&g, r, 2)?);
    }
    let report = check_lemma_frk(&generate::star(5), 2, r, 2)?;
    println!(
        "star: frk_3,2 = {}, k' = {:?} (used {}), srk = {:?}, holds {}",
        report.frk, report.kprime, report.kprime_used, report.srk, report.holds
    );
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
