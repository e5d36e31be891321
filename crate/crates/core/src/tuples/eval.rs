use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use super::tuple::{GradTuple, Tail};
use super::value::TupledValue;
use crate::error::{Error, Result};
use crate::graph::{Arg, AttackGraph, Component};

/// Maximum number of runs through a cycle when unrolling mcycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PropagationDepth(u32);

impl PropagationDepth {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            Err(Error::InvalidDepth)
        } else {
            Ok(PropagationDepth(n))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl Default for PropagationDepth {
    fn default() -> Self {
        PropagationDepth(10)
    }
}

/// Tupled values of every argument of a graph, indexed by [`Arg`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleValuation {
    values: Vec<TupledValue>,
    horizon: Option<u64>,
}

impl TupleValuation {
    pub fn get(&self, a: Arg) -> &TupledValue {
        &self.values[a.index()]
    }

    pub fn values(&self) -> &[TupledValue] {
        &self.values
    }

    /// Largest branch length up to which truncated values are complete;
    /// `None` when every value is exact.
    pub fn horizon(&self) -> Option<u64> {
        self.horizon
    }
}

/// Tupled values of an acyclic graph: a leaf gets `[0^∞, ()]`, any other
/// argument collects the shifted odd components of its attackers as its
/// even component and their shifted even components as its odd one.
///
/// ```
/// use graduality::graph::AttackGraph;
/// use graduality::tuples::evaluate_acyclic;
///
/// let g = AttackGraph::new(["a", "b", "c"], [("c", "b"), ("b", "a"), ("c", "a")]).unwrap();
/// let v = evaluate_acyclic(&g).unwrap();
/// assert_eq!(v.get(g.arg("a").unwrap()).to_string(), "[(2),(1)]");
/// ```
pub fn evaluate_acyclic(g: &AttackGraph) -> Result<TupleValuation> {
    if !g.is_well_founded() {
        return Err(Error::CyclicGraph);
    }
    let mut values: Vec<Option<TupledValue>> = vec![None; g.len()];
    for component in g.condensation().components() {
        let a = component.members()[0];
        let value = if g.is_leaf(a) {
            TupledValue::leaf()
        } else {
            let known = |b: &Arg| values[b.index()].as_ref().expect("attackers come first");
            let even = fold(g.attackers(a).iter().map(|b| known(b).odd().shift(1)));
            let odd = fold(g.attackers(a).iter().map(|b| known(b).even().shift(1)));
            TupledValue::new(even, odd).expect("attacked arguments have a branch")
        };
        values[a.index()] = Some(value);
    }
    Ok(TupleValuation {
        values: values.into_iter().map(Option::unwrap).collect(),
        horizon: None,
    })
}

fn fold(tuples: impl Iterator<Item = GradTuple>) -> GradTuple {
    tuples
        .reduce(|acc, t| acc.concat(&t))
        .unwrap_or_else(GradTuple::empty)
}

/// Tupled values of an arbitrary graph.
///
/// Acyclic graphs are evaluated exactly. Otherwise every branch is a walk
/// ending at the argument and starting either at a leaf or anywhere inside
/// an unattacked mcycle; lengths are counted per argument up to the horizon
/// `2·|A| + n·c`, where `c` is the size of the largest mcycle. Components
/// with finitely many branches are exact; infinite ones list every length
/// up to the horizon, with multiplicities, and end in `...`.
///
/// ```
/// use graduality::graph::AttackGraph;
/// use graduality::tuples::{evaluate_cyclic, PropagationDepth};
///
/// let g = AttackGraph::new(["a", "b"], [("a", "b"), ("b", "a")]).unwrap();
/// let v = evaluate_cyclic(&g, PropagationDepth::new(2).unwrap());
/// assert_eq!(v.horizon(), Some(8));
/// assert_eq!(v.get(g.arg("a").unwrap()).to_string(), "[(2,4,6,8,...),(1,3,5,7,...)]");
/// ```
pub fn evaluate_cyclic(g: &AttackGraph, depth: PropagationDepth) -> TupleValuation {
    if g.is_well_founded() {
        return evaluate_acyclic(g).expect("acyclic");
    }
    let largest = g
        .mcycles()
        .iter()
        .map(|m| m.members().len())
        .max()
        .unwrap_or(0);
    let horizon = 2 * g.len() as u64 + u64::from(depth.get()) * largest as u64;
    walk_valuation(g, horizon, true)
}

/// Counts, for every argument and every length `L ≤ horizon`, the branches
/// of length `L` ending there.
pub(crate) fn walk_valuation(g: &AttackGraph, horizon: u64, shortcut: bool) -> TupleValuation {
    let h = horizon as usize;
    let mut counts: Vec<Vec<BigUint>> = vec![Vec::new(); g.len()];
    for component in g.condensation().components() {
        match component {
            Component::Single(a) => {
                let mut c = vec![BigUint::zero(); h + 1];
                if g.is_leaf(*a) {
                    c[0] = BigUint::one();
                } else {
                    for &b in g.attackers(*a) {
                        for l in 1..=h {
                            c[l] += &counts[b.index()][l - 1];
                        }
                    }
                }
                counts[a.index()] = c;
            }
            Component::Cycle(m) if shortcut && m.is_isolated() && m.is_simple_cycle(g) => {
                // exactly one walk of each positive length ends at a member
                for &x in m.members() {
                    let mut c = vec![BigUint::one(); h + 1];
                    c[0] = BigUint::zero();
                    counts[x.index()] = c;
                }
            }
            Component::Cycle(m) => {
                // unattacked mcycles also count walks starting at any member
                let start = if m.is_isolated() { BigUint::one() } else { BigUint::zero() };
                let mut layer: Vec<BigUint> = vec![start; m.members().len()];
                for &x in m.members() {
                    counts[x.index()] = vec![BigUint::zero(); h + 1];
                }
                for l in 1..=h {
                    let next: Vec<BigUint> = m
                        .members()
                        .iter()
                        .map(|&x| {
                            g.attackers(x)
                                .iter()
                                .map(|&b| match m.members().binary_search(&b) {
                                    Ok(pos) => layer[pos].clone(),
                                    Err(_) => counts[b.index()][l - 1].clone(),
                                })
                                .sum()
                        })
                        .collect();
                    for (&x, c) in m.members().iter().zip(&next) {
                        counts[x.index()][l] = c.clone();
                    }
                    layer = next;
                }
            }
        }
    }

    let infinite = infinite_parities(g);
    let values = g
        .arguments()
        .map(|a| {
            if g.is_leaf(a) {
                return TupledValue::leaf();
            }
            let c = &counts[a.index()];
            let part = |parity: usize| {
                let runs = (1..=h)
                    .filter(|l| l % 2 == parity)
                    .map(|l| (l as u64, c[l].clone()));
                let tail = if infinite[a.index()][parity] {
                    Tail::Open { known_below: horizon + 1 }
                } else {
                    Tail::Closed
                };
                GradTuple::from_runs(runs, tail)
            };
            TupledValue::new(part(0), part(1)).expect("attacked arguments have a branch")
        })
        .collect();
    TupleValuation {
        values,
        horizon: Some(horizon),
    }
}

/// For every argument and parity, whether infinitely many branches of that
/// parity end there. Works on the doubled graph whose nodes are
/// (argument, parity of the walk so far).
fn infinite_parities(g: &AttackGraph) -> Vec<[bool; 2]> {
    let node = |a: Arg, p: usize| 2 * a.index() + p;
    let mut doubled = DiGraph::<(), ()>::new();
    for _ in 0..2 * g.len() {
        doubled.add_node(());
    }
    for &(b, a) in g.attacks() {
        for p in 0..2 {
            doubled.add_edge(
                (node(b, p) as u32).into(),
                (node(a, 1 - p) as u32).into(),
                (),
            );
        }
    }
    let mut sources: Vec<usize> = g.leaves().into_iter().map(|a| node(a, 0)).collect();
    for m in g.mcycles() {
        if m.is_isolated() {
            sources.extend(m.members().iter().map(|&x| node(x, 0)));
        }
    }
    let fed = reach(&doubled, sources);
    let mut cyclic = Vec::new();
    for scc in tarjan_scc(&doubled) {
        let looped = scc.len() > 1 || doubled.contains_edge(scc[0], scc[0]);
        if looped && fed[scc[0].index()] {
            cyclic.extend(scc.iter().map(|n| n.index()));
        }
    }
    let inf = reach(&doubled, cyclic);
    g.arguments()
        .map(|a| [inf[node(a, 0)], inf[node(a, 1)]])
        .collect()
}

fn reach(graph: &DiGraph<(), ()>, from: Vec<usize>) -> Vec<bool> {
    let mut seen = vec![false; graph.node_count()];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for s in from {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        for y in graph.neighbors((x as u32).into()) {
            if !seen[y.index()] {
                seen[y.index()] = true;
                queue.push_back(y.index());
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn value(g: &AttackGraph, v: &TupleValuation, name: &str) -> String {
        v.get(g.arg(name).unwrap()).to_string()
    }

    #[test]
    fn leaf_and_chain() {
        let g = Family::Chain(3).generate().unwrap();
        let v = evaluate_acyclic(&g).unwrap();
        assert_eq!(value(&g, &v, "A3"), "[(0^inf),()]");
        assert_eq!(value(&g, &v, "A2"), "[(),(1)]");
        assert_eq!(value(&g, &v, "A1"), "[(2),()]");
    }

    #[test]
    fn acyclic_rejects_cycles() {
        let g = AttackGraph::new(["a"], [("a", "a")]).unwrap();
        assert_eq!(evaluate_acyclic(&g), Err(Error::CyclicGraph));
    }

    #[test]
    fn walk_counts_agree_with_definition_on_acyclic_graphs() {
        for seed in 0..40 {
            let g = Family::RandomAcyclic { seed, size: 7, density: 0.4 }
                .generate()
                .unwrap();
            let exact = evaluate_acyclic(&g).unwrap();
            let walks = walk_valuation(&g, 2 * g.len() as u64, false);
            assert_eq!(exact.values(), walks.values(), "seed {seed}");
        }
    }

    #[test]
    fn unattacked_cycle_closed_form_matches_walks() {
        let g = Family::UnattackedCycle { k: 3, sink: true }.generate().unwrap();
        let fast = evaluate_cyclic(&g, PropagationDepth::new(3).unwrap());
        let slow = walk_valuation(&g, fast.horizon().unwrap(), false);
        assert_eq!(fast, slow);
        assert_eq!(fast.horizon(), Some(17));
        assert_eq!(value(&g, &fast, "c0"), "[(2,4,6,8,10,12,14,16,...),(1,3,5,7,9,11,13,15,17,...)]");
        assert_eq!(value(&g, &fast, "s"), "[(2,4,6,8,10,12,14,16,...),(3,5,7,9,11,13,15,17,...)]");
    }

    #[test]
    fn attacked_two_cycle() {
        // D→A, A↔B, A→C, B→E
        let g = AttackGraph::new(
            ["D", "A", "B", "C", "E"],
            [("D", "A"), ("A", "B"), ("B", "A"), ("A", "C"), ("B", "E")],
        )
        .unwrap();
        let v = evaluate_cyclic(&g, PropagationDepth::default());
        let a = v.get(g.arg("A").unwrap());
        assert!(a.even().is_empty());
        assert!(a.odd().is_truncated());
        assert_eq!(a.odd().listed(), (1..=v.horizon().unwrap()).step_by(2).collect::<Vec<_>>());
        let e = v.get(g.arg("E").unwrap());
        assert!(e.even().is_empty());
        assert_eq!(e.odd().listed()[..3], [3, 5, 7]);
    }

    #[test]
    fn interconnected_cycles_multiply() {
        // a↔b plus a self-attack on a: odd and even walks everywhere
        let g = AttackGraph::new(["a", "b"], [("a", "b"), ("b", "a"), ("a", "a")]).unwrap();
        let v = evaluate_cyclic(&g, PropagationDepth::new(1).unwrap());
        let a = v.get(g.arg("a").unwrap());
        assert!(a.even().is_truncated() && a.odd().is_truncated());
        // walks of length 1 ending at a: from a and from b
        assert_eq!(a.odd().count(1), BigUint::from(2u32));
        // length 2: a→a→a, b→a→a, a→b→a
        assert_eq!(a.even().count(2), BigUint::from(3u32));
    }

    #[test]
    fn depth_must_be_positive() {
        assert_eq!(PropagationDepth::new(0), Err(Error::InvalidDepth));
        assert_eq!(PropagationDepth::default().get(), 10);
    }
}
