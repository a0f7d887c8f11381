//! The monotone cop strategy read off an ordering, played and certified.

use flipsparse::games::{adversarial_robber_certify, play_game, replay, EvasiveRobber, GameTranscript, MonotoneCops};
use flipsparse::graph::generate;
use flipsparse::widths::sw_exact;
use flipsparse::{Radius, Result};

fn run() -> Result<()> {
    let g = generate::grid(3, 3);
    let r = Radius::Finite(1);
    let order = sw_exact(&g, r.scale(2))?.order;
    let cops = MonotoneCops::new(&g, r, order)?;
    println!("order {:?}, budget {}", cops.order().as_slice(), cops.budget());

    let mut robber = EvasiveRobber::new(5);
    let t = play_game(&g, r, cops.budget(), &cops, &mut robber, g.n())?;
    print!("{}", t.to_json_lines()?);
    replay(&g, &t)?;
    let back = GameTranscript::from_json_lines(t.to_json_lines()?.as_bytes())?;
    assert_eq!(back, t);

    let cert = adversarial_robber_certify(&g, r, &cops, cops.budget())?;
    println!("certified against every robber: {} ({} games)", cert.certified, cert.leaves);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
