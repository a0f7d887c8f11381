use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::radius::Radius;
use crate::widths::{scol_exact_with, scol_of_order, sw_exact_with, sw_of_order, wcol_exact_with, wcol_of_order, ExactCaps, Ordering};

/// `scol_r`, `sw_r`, `wcol_r` and `scol_{2r-1}`, either for one order or optimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SandwichValues {
    pub scol: usize,
    pub sw: usize,
    pub wcol: usize,
    pub scol_double: usize,
}

impl SandwichValues {
    /// `scol <= sw + 1 <= wcol` and `sw + 1 <= scol_{2r-1}`.
    pub fn holds(&self) -> bool {
        self.scol <= self.sw + 1 && self.sw < self.wcol && self.sw < self.scol_double
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SandwichReport {
    pub r: Radius,
    pub per_order: SandwichValues,
    /// `None` when the graph is above the exact cap.
    pub exact: Option<SandwichValues>,
}

impl SandwichReport {
    pub fn holds(&self) -> bool {
        self.per_order.holds() && self.exact.is_none_or(|e| e.holds())
    }
}

pub fn check_sandwich(g: &Graph, ord: &Ordering, r: Radius) -> Result<SandwichReport> {
    check_sandwich_with(g, ord, r, ExactCaps::default())
}

pub fn check_sandwich_with(g: &Graph, ord: &Ordering, r: Radius, caps: ExactCaps) -> Result<SandwichReport> {
    if r == Radius::Finite(0) {
        return Err(Error::Precondition("the sandwich chain needs r >= 1".into()));
    }
    let r2 = r.double_minus_one();
    let per_order = SandwichValues {
        scol: scol_of_order(g, ord, r)?.value,
        sw: sw_of_order(g, ord, r)?.value,
        wcol: wcol_of_order(g, ord, r)?.value,
        scol_double: scol_of_order(g, ord, r2)?.value,
    };
    let exact = if g.n() <= caps.max_n {
        Some(SandwichValues {
            scol: scol_exact_with(g, r, caps)?.value,
            sw: sw_exact_with(g, r, caps)?.value,
            wcol: wcol_exact_with(g, r, caps)?.value,
            scol_double: scol_exact_with(g, r2, caps)?.value,
        })
    } else {
        None
    };
    Ok(SandwichReport { r, per_order, exact })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;
    use crate::widths::degeneracy;

    #[test]
    fn radius_one_collapses_to_degeneracy() {
        for seed in 0..15 {
            let g = generate::gnp(7, 0.4, seed);
            let (d, ord) = degeneracy(&g);
            let rep = check_sandwich(&g, &ord, Radius::Finite(1)).unwrap();
            assert!(rep.holds());
            let exact = rep.exact.unwrap();
            assert_eq!(exact.sw + 1, d + 1);
            assert_eq!(exact.scol, d + 1);
            assert_eq!(exact.scol_double, d + 1);
        }
    }

    #[test]
    fn single_vertex() {
        let rep = check_sandwich(&Graph::empty(1), &Ordering::identity(1), Radius::Finite(2)).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.per_order, SandwichValues { scol: 1, sw: 0, wcol: 1, scol_double: 1 });
    }

    #[test]
    fn zero_radius_rejected() {
        assert!(check_sandwich(&generate::path(3), &Ordering::identity(3), Radius::Finite(0)).is_err());
    }
}
