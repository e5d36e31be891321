mod common;

use common::{arb_tuple, arg, fixture, small_tupled_values};
use graduality::acceptability::{Acceptance, RandomGraphs, Semantics};
use graduality::graph::{AttackGraph, Family};
use graduality::local::{evaluate_local, FixpointConfig, Label, LocalInstance, LocalValue};
use graduality::tuples::{compare, evaluate_acyclic, GradTuple, TupledValue};
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

fn acyclic(seed: u64, size: usize) -> AttackGraph {
    RandomGraphs::new(seed, size, true).next().unwrap()
}

fn names(g: &AttackGraph, set: impl IntoIterator<Item = graduality::Arg>) -> Vec<String> {
    let mut out: Vec<String> = set.into_iter().map(|a| g.name(a).to_string()).collect();
    out.sort();
    out
}

proptest! {
    #[test]
    fn concat_is_commutative_and_associative(t in arb_tuple(), u in arb_tuple(), w in arb_tuple()) {
        prop_assert_eq!(t.concat(&u), u.concat(&t));
        prop_assert_eq!(t.concat(&u).concat(&w), t.concat(&u.concat(&w)));
        prop_assert_eq!(t.concat(&GradTuple::empty()), t);
    }

    #[test]
    fn shifts_compose(t in arb_tuple(), k in 0u64..8, j in 0u64..8) {
        prop_assert_eq!(t.shift(k).shift(j), t.shift(k + j));
        prop_assert_eq!(t.shift(0), t);
    }

    #[test]
    fn shift_distributes_over_concat(t in arb_tuple(), u in arb_tuple(), k in 0u64..8) {
        prop_assume!(!t.is_zero_inf() && !u.is_zero_inf());
        prop_assert_eq!(t.concat(&u).shift(k), t.shift(k).concat(&u.shift(k)));
    }

    #[test]
    fn tuples_render_and_parse_back(t in arb_tuple()) {
        let text = t.to_string();
        let back = text.parse::<GradTuple>().unwrap();
        prop_assert_eq!(back.to_string(), text);
        if !t.is_truncated() {
            prop_assert_eq!(back, t);
        }
    }

    #[test]
    fn acyclic_values_are_exact_fixpoints(seed in any::<u64>(), size in 1usize..10) {
        let g = acyclic(seed, size);
        let cat = LocalInstance::categoriser();
        let v = evaluate_local(&g, &cat, &FixpointConfig::default()).unwrap();
        for a in g.arguments() {
            let xs: Vec<LocalValue> = g.attackers(a).iter().map(|&b| v.get(b).clone()).collect();
            let expected = if xs.is_empty() { cat.v_max().clone() } else { cat.g(&cat.h(&xs)) };
            prop_assert_eq!(v.get(a), &expected);
        }
    }

    #[test]
    fn rooted_labelling_is_consistent(seed in any::<u64>(), size in 1usize..10) {
        let g = acyclic(seed, size);
        let v = evaluate_local(&g, &LocalInstance::rooted_labelling(), &FixpointConfig::default()).unwrap();
        let label = |a| v.get(a).as_label().unwrap();
        for a in g.arguments() {
            match label(a) {
                Label::Minus => prop_assert!(g.attackers(a).iter().any(|&b| label(b) == Label::Plus)),
                Label::Plus => prop_assert!(g.attackers(a).iter().all(|&b| label(b) == Label::Minus)),
                Label::Unknown => prop_assert!(false, "acyclic graphs have no `?`"),
            }
        }
    }

    #[test]
    fn branches_are_independent(seed in any::<u64>(), size in 2usize..8) {
        let g = acyclic(seed, size);
        let v = evaluate_acyclic(&g).unwrap();
        for a in g.arguments().filter(|&a| !g.is_leaf(a)) {
            // one fresh attacker of `a2` per branch of every attacker of `a`
            let mut args = vec!["a2".to_string()];
            let mut attacks = Vec::new();
            let mut fresh = 0;
            for &b in g.attackers(a) {
                let x = v.get(b);
                let lengths = if x.is_leaf_value() {
                    vec![0]
                } else {
                    x.even().listed().into_iter().chain(x.odd().listed()).collect()
                };
                for len in lengths {
                    let chain: Vec<String> = (0..=len).map(|i| format!("n{fresh}_{i}")).collect();
                    fresh += 1;
                    for w in chain.windows(2) {
                        attacks.push((w[0].clone(), w[1].clone()));
                    }
                    attacks.push((chain.last().unwrap().clone(), "a2".to_string()));
                    args.extend(chain);
                }
            }
            let pairs: Vec<(&str, &str)> = attacks.iter().map(|(x, y)| (x.as_str(), y.as_str())).collect();
            let h = AttackGraph::new(args.iter().map(String::as_str), pairs).unwrap();
            let w = evaluate_acyclic(&h).unwrap();
            prop_assert_eq!(w.get(arg(&h, "a2")), v.get(a));
        }
    }

    #[test]
    fn single_attacker_ordering(seed in any::<u64>(), size in 2usize..10) {
        let g = acyclic(seed, size);
        let inst = LocalInstance::max_based("max-complement", |x| BigRational::one() - x);
        let v = evaluate_local(&g, &inst, &FixpointConfig::default()).unwrap();
        let ge = |x, y| v.get(x).compare(v.get(y)).unwrap().is_ge();
        for sem in [Semantics::Preferred, Semantics::Stable] {
            let acc = Acceptance::new(&g, sem).unwrap();
            for a in g.arguments() {
                if let [b] = g.attackers(a) {
                    if acc.is_exi(a) {
                        prop_assert!(ge(a, *b));
                    } else {
                        prop_assert!(ge(*b, a));
                    }
                }
            }
        }
    }

    #[test]
    fn leaves_and_attackers_agree(seed in any::<u64>(), size in 1usize..10) {
        let g = RandomGraphs::new(seed, size, false).next().unwrap();
        for a in g.arguments() {
            prop_assert_eq!(g.is_leaf(a), g.direct_attackers(a).is_empty());
        }
        prop_assert_eq!(g.is_well_founded(), g.mcycles().is_empty());
        prop_assert_eq!(AttackGraph::parse(&g.to_apx()).unwrap(), g);
    }
}

#[test]
fn isolated_cycle_values_are_fixpoints() {
    let cat = LocalInstance::categoriser();
    for k in 1..=6 {
        let g = Family::UnattackedCycle { k, sink: false }.generate().unwrap();
        let v = evaluate_local(&g, &cat, &FixpointConfig::default()).unwrap();
        for a in g.arguments() {
            let x = v.get(a).to_f64().unwrap();
            let mut y = v.get(a).clone();
            for _ in 0..k {
                y = cat.g(&y);
            }
            assert!((y.to_f64().unwrap() - x).abs() < 1e-9, "{k}-cycle");
            if k % 2 == 1 {
                assert_eq!(v.get(a), v.values().first().unwrap());
            }
        }
    }
}

#[test]
fn example_two_memberships() {
    let g = fixture("example2");
    let a = arg(&g, "A");
    assert_eq!(names(&g, g.direct_attackers(a)), ["B1", "B2", "C2"]);
    assert_eq!(names(&g, g.direct_defenders(a)), ["C1", "C2", "C3"]);
    assert_eq!(names(&g, g.indirect_attackers(a)), ["D1", "D2"]);
    assert_eq!(names(&g, g.indirect_defenders(a)), ["E1"]);
    assert_eq!(names(&g, g.leaves()), ["C2", "D1", "E1"]);
    let cycles = g.mcycles();
    assert_eq!(cycles.len(), 1);
    assert_eq!(names(&g, cycles[0].members().iter().copied()), ["A1", "A2", "A3", "A4"]);
}

#[test]
fn comparison_is_a_partial_preorder() {
    let values = small_tupled_values();
    for u in &values {
        assert!(compare(u, u).first_at_least());
        assert!(compare(&TupledValue::leaf(), u).first_at_least());
        assert!(compare(u, &TupledValue::minimum()).first_at_least());
    }
}
