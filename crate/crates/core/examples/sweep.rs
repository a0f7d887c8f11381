//! Runs the nine corpus sweeps and prints one line per criterion.
//!
//! `cargo run --release --example sweep -- [seed] [criterion...]`

use flipsparse::sweep::{run, SweepConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().map(|s| s.parse()).transpose()?.unwrap_or(SweepConfig::default().seed);
    let mut ids: Vec<u8> = args.map(|s| s.parse()).collect::<Result<_, _>>()?;
    if ids.is_empty() {
        ids = (1..=9).collect();
    }
    let cfg = SweepConfig { seed, jobs: 0 };
    for id in ids {
        println!("{}", run(id, cfg)?);
    }
    Ok(())
}
