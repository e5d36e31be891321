#![allow(dead_code)]

use std::path::PathBuf;

use graduality::graph::{Arg, AttackGraph};
use graduality::tuples::{GradTuple, Tail, TupledValue};
use num_bigint::BigUint;
use proptest::prelude::*;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.apx"))
}

pub fn fixture(name: &str) -> AttackGraph {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    AttackGraph::parse(&text).expect("fixture parses")
}

pub fn arg(g: &AttackGraph, name: &str) -> Arg {
    g.arg(name).unwrap()
}

/// Lengths of every leaf-to-`a` path of an acyclic graph, by exhaustive
/// enumeration, split into (even, odd), each sorted.
pub fn branch_lengths(g: &AttackGraph, a: Arg) -> (Vec<u64>, Vec<u64>) {
    fn walk(g: &AttackGraph, x: Arg, len: u64, out: &mut Vec<u64>) {
        if g.is_leaf(x) {
            out.push(len);
        }
        for &b in g.attackers(x) {
            walk(g, b, len + 1, out);
        }
    }
    let mut all = Vec::new();
    walk(g, a, 0, &mut all);
    all.sort_unstable();
    let even = all.iter().copied().filter(|l| l % 2 == 0).collect();
    let odd = all.iter().copied().filter(|l| l % 2 == 1).collect();
    (even, odd)
}

/// Tupled value predicted by path enumeration.
pub fn oracle_value(g: &AttackGraph, a: Arg) -> TupledValue {
    if g.is_leaf(a) {
        return TupledValue::leaf();
    }
    let (even, odd) = branch_lengths(g, a);
    TupledValue::new(GradTuple::finite(even), GradTuple::finite(odd)).unwrap()
}

fn subsets(g: &AttackGraph) -> impl Iterator<Item = Vec<Arg>> {
    let all: Vec<Arg> = g.arguments().collect();
    (0u32..1 << all.len()).map(move |mask| {
        all.iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &a)| a)
            .collect()
    })
}

fn conflict_free(g: &AttackGraph, s: &[Arg]) -> bool {
    s.iter().all(|&x| s.iter().all(|&y| !g.attackers(y).contains(&x)))
}

fn admissible(g: &AttackGraph, s: &[Arg]) -> bool {
    conflict_free(g, s)
        && s.iter().all(|&x| {
            g.attackers(x)
                .iter()
                .all(|b| g.attackers(*b).iter().any(|c| s.contains(c)))
        })
}

fn sorted(mut sets: Vec<Vec<Arg>>) -> Vec<Vec<Arg>> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets
}

/// Preferred extensions by brute force over all subsets.
pub fn preferred_oracle(g: &AttackGraph) -> Vec<Vec<Arg>> {
    let adm: Vec<Vec<Arg>> = subsets(g).filter(|s| admissible(g, s)).collect();
    let maximal = adm
        .iter()
        .filter(|s| !adm.iter().any(|t| t.len() > s.len() && s.iter().all(|x| t.contains(x))))
        .cloned()
        .collect();
    sorted(maximal)
}

/// Stable extensions by brute force over all subsets.
pub fn stable_oracle(g: &AttackGraph) -> Vec<Vec<Arg>> {
    let stable = subsets(g)
        .filter(|s| conflict_free(g, s))
        .filter(|s| {
            g.arguments()
                .filter(|a| !s.contains(a))
                .all(|a| g.attackers(a).iter().any(|b| s.contains(b)))
        })
        .collect();
    sorted(stable)
}

/// Every tupled value whose components are multisets of at most two
/// elements drawn from {2,4} and {1,3}, plus the two extremes.
pub fn small_tupled_values() -> Vec<TupledValue> {
    let multisets = |a: u64, b: u64| -> Vec<GradTuple> {
        vec![
            GradTuple::empty(),
            GradTuple::finite([a]),
            GradTuple::finite([b]),
            GradTuple::finite([a, a]),
            GradTuple::finite([a, b]),
            GradTuple::finite([b, b]),
        ]
    };
    let mut out = vec![TupledValue::leaf(), TupledValue::minimum()];
    for even in multisets(2, 4) {
        for odd in multisets(1, 3) {
            if let Ok(v) = TupledValue::new(even.clone(), odd) {
                out.push(v);
            }
        }
    }
    out.push("[(2,4,6,...),(1,3,5,...)]".parse().unwrap());
    out.push("[(2,4,6,...),()]".parse().unwrap());
    out.push("[(),(1,3,5,...)]".parse().unwrap());
    out
}

/// Finite tuples, 0^∞, ω-tails and truncated tuples.
pub fn arb_tuple() -> impl Strategy<Value = GradTuple> {
    let elems = prop::collection::vec(0u64..12, 0..6);
    prop_oneof![
        4 => elems.clone().prop_map(GradTuple::finite),
        1 => Just(GradTuple::zero_inf()),
        1 => (elems.clone(), 0u64..12).prop_map(|(xs, w)| {
            GradTuple::from_runs(xs.into_iter().map(|x| (x, BigUint::from(1u32))), Tail::Omega(w))
        }),
        1 => (elems, 1u64..14).prop_map(|(xs, k)| GradTuple::open(xs, k)),
    ]
}
