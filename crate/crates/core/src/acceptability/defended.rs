use std::collections::BTreeSet;

use crate::error::Result;
use crate::graph::{Arg, AttackGraph};
use crate::local::LocalValuation;
use crate::tuples::{compare, TupleValuation, Verdict};

/// Arguments none of whose direct attackers is strictly preferred to them.
/// `strictly_better(b, a)` decides `b ≻ a`; incomparable pairs count in the
/// attacked argument's favour.
pub fn well_defended(
    g: &AttackGraph,
    mut strictly_better: impl FnMut(Arg, Arg) -> bool,
) -> BTreeSet<Arg> {
    g.arguments()
        .filter(|&a| g.attackers(a).iter().all(|&b| !strictly_better(b, a)))
        .collect()
}

/// [`well_defended`] under the complete preorder of a local valuation.
///
/// ```
/// use graduality::acceptability::well_defended_local;
/// use graduality::graph::AttackGraph;
/// use graduality::local::{evaluate_local, FixpointConfig, LocalInstance};
///
/// let g = AttackGraph::new(["B1", "C1", "D1"], [("D1", "C1"), ("C1", "B1")]).unwrap();
/// let v = evaluate_local(&g, &LocalInstance::categoriser(), &FixpointConfig::default()).unwrap();
/// let wd: Vec<&str> = well_defended_local(&g, &v).unwrap().iter().map(|&a| g.name(a).as_str()).collect();
/// assert_eq!(wd, ["B1", "D1"]);
/// ```
pub fn well_defended_local(g: &AttackGraph, v: &LocalValuation) -> Result<BTreeSet<Arg>> {
    let order = v.preorder()?;
    Ok(well_defended(g, |b, a| !order.at_least(a, b)))
}

/// [`well_defended`] under the tupled-value comparison.
pub fn well_defended_tuples(g: &AttackGraph, v: &TupleValuation) -> BTreeSet<Arg> {
    well_defended(g, |b, a| compare(v.get(b), v.get(a)).verdict == Verdict::FirstBetter)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tuples::evaluate_acyclic;

    #[test]
    fn leaves_are_well_defended() {
        let g = AttackGraph::new(["a", "b"], [("b", "a")]).unwrap();
        let v = evaluate_acyclic(&g).unwrap();
        let wd = well_defended_tuples(&g, &v);
        assert!(wd.contains(&g.arg("b").unwrap()));
        assert!(!wd.contains(&g.arg("a").unwrap()));
    }
}
