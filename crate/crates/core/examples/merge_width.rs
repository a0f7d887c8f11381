//! Restrained flip sequences built from an ordering, and an ordering
//! recovered from a sequence with its bound certificate.

use flipsparse::graph::generate;
use flipsparse::mergewidth::{
    mw_from_order, normalize_rfs, order_from_rfs, rfs_width, validate_rfs, RestrainedFlipSequence,
};
use flipsparse::widths::{sw_exact, sw_of_order};
use flipsparse::{Radius, Result};

fn run() -> Result<()> {
    let g = generate::random_ktt_free(9, 0.4, 2, 11);
    let r = Radius::Finite(1);
    let r_mw = Radius::Finite(4);

    let order = sw_exact(&g, Radius::Finite(5))?.order;
    let (seq, claim) = mw_from_order(&g, &order, r_mw)?;
    println!("{} steps, radius-4 width {} (bounds {} and {:?})", seq.len(), claim.width, claim.exp_bound, claim.shatter_bound);
    validate_rfs(&g, &seq).into_result()?;

    let json = seq.to_json(true)?;
    let back = RestrainedFlipSequence::from_json(&json)?;
    assert_eq!(rfs_width(&g, &back, r_mw)?, claim.width);
    println!("compact JSON: {} bytes", json.len());

    let normal = normalize_rfs(&g, &seq)?;
    let (recovered, cert) = order_from_rfs(&g, 2, &normal, r)?;
    println!("recovered order {:?}", recovered.as_slice());
    println!("sw_1 = {} <= {} (d = {})", cert.measured, cert.total, cert.d);
    assert_eq!(cert.measured, sw_of_order(&g, &recovered, r)?.value);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
