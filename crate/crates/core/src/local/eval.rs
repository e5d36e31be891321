use super::instance::LocalInstance;
use super::preorder::{induced_preorder, Preorder};
use super::value::{Label, LocalValue, ValueKind};
use crate::error::{Error, Result};
use crate::graph::{Arg, AttackGraph, Component, Mcycle};

/// Stopping rule for fixpoint iteration on cyclic graphs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixpointConfig {
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for FixpointConfig {
    fn default() -> Self {
        FixpointConfig {
            tolerance: 1e-12,
            max_iterations: 1_000_000,
        }
    }
}

/// Local values of every argument of a graph, indexed by [`Arg`].
#[derive(Debug, Clone, PartialEq)]
pub struct LocalValuation {
    values: Vec<LocalValue>,
}

impl LocalValuation {
    pub fn get(&self, a: Arg) -> &LocalValue {
        &self.values[a.index()]
    }

    pub fn values(&self) -> &[LocalValue] {
        &self.values
    }

    pub fn preorder(&self) -> Result<Preorder> {
        induced_preorder(&self.values)
    }
}

/// Evaluates `inst` on `g`.
///
/// Acyclic graphs are evaluated attackers-first in the instance's own
/// arithmetic, so the categoriser gives exact rationals. On graphs with
/// cycles, numeric instances switch to floats: the condensation is walked
/// in order and each mcycle is iterated from `V_Max` until successive
/// iterates differ by less than the tolerance. Label instances resolve each
/// mcycle by propagation and label what stays open `?`.
///
/// ```
/// use graduality::graph::AttackGraph;
/// use graduality::local::{evaluate_local, FixpointConfig, LocalInstance, LocalValue};
///
/// let g = AttackGraph::new(["a", "b", "c"], [("c", "b"), ("b", "a")]).unwrap();
/// let v = evaluate_local(&g, &LocalInstance::categoriser(), &FixpointConfig::default()).unwrap();
/// assert_eq!(*v.get(g.arg("a").unwrap()), LocalValue::rational(2, 3));
/// ```
pub fn evaluate_local(
    g: &AttackGraph,
    inst: &LocalInstance,
    cfg: &FixpointConfig,
) -> Result<LocalValuation> {
    let cyclic = !g.is_well_founded();
    let float = cyclic && inst.kind() != ValueKind::Label;
    let v_max = if float {
        inst.v_max().to_float()
    } else {
        inst.v_max().clone()
    };
    let mut values: Vec<Option<LocalValue>> = vec![None; g.len()];
    for component in g.condensation().components() {
        match component {
            Component::Single(a) => {
                let v = if g.is_leaf(*a) {
                    v_max.clone()
                } else {
                    let xs: Vec<LocalValue> = g
                        .attackers(*a)
                        .iter()
                        .map(|b| values[b.index()].clone().expect("attackers come first"))
                        .collect();
                    inst.g(&inst.h(&xs))
                };
                values[a.index()] = Some(v);
            }
            Component::Cycle(m) if inst.kind() == ValueKind::Label => {
                label_mcycle(g, inst, m, &mut values)
            }
            Component::Cycle(m) => iterate_mcycle(g, inst, m, &v_max, cfg, &mut values)?,
        }
    }
    Ok(LocalValuation {
        values: values.into_iter().map(Option::unwrap).collect(),
    })
}

fn iterate_mcycle(
    g: &AttackGraph,
    inst: &LocalInstance,
    m: &Mcycle,
    start: &LocalValue,
    cfg: &FixpointConfig,
    values: &mut [Option<LocalValue>],
) -> Result<()> {
    for &x in m.members() {
        values[x.index()] = Some(start.clone());
    }
    let mut delta = f64::INFINITY;
    for _ in 0..cfg.max_iterations {
        // Jacobi step: every member reads the previous iterate
        let next: Vec<LocalValue> = m
            .members()
            .iter()
            .map(|&x| {
                let xs: Vec<LocalValue> = g
                    .attackers(x)
                    .iter()
                    .map(|b| values[b.index()].clone().unwrap())
                    .collect();
                inst.g(&inst.h(&xs))
            })
            .collect();
        delta = 0.0;
        for (&x, v) in m.members().iter().zip(next) {
            let old = values[x.index()].as_ref().unwrap().to_f64().unwrap();
            let new = v.to_f64().unwrap_or(f64::NAN);
            delta = delta.max((new - old).abs());
            if new.is_nan() {
                delta = f64::NAN;
            }
            values[x.index()] = Some(v);
        }
        if delta < cfg.tolerance {
            return Ok(());
        }
    }
    Err(Error::NonConvergence {
        iterations: cfg.max_iterations,
        delta,
    })
}

/// Members attacked by a `+` become `−`, members whose attackers are all
/// `−` become `+`, repeated until nothing changes; the rest get `?`.
fn label_mcycle(
    g: &AttackGraph,
    inst: &LocalInstance,
    m: &Mcycle,
    values: &mut [Option<LocalValue>],
) {
    let label = |v: &Option<LocalValue>| v.as_ref().and_then(LocalValue::as_label);
    let mut changed = true;
    while changed {
        changed = false;
        for &x in m.members() {
            if values[x.index()].is_some() {
                continue;
            }
            let attackers: Vec<Option<Label>> =
                g.attackers(x).iter().map(|b| label(&values[b.index()])).collect();
            let resolved = if attackers.iter().all(Option::is_some) {
                let xs: Vec<LocalValue> =
                    attackers.into_iter().map(|l| LocalValue::Label(l.unwrap())).collect();
                Some(inst.g(&inst.h(&xs)))
            } else if attackers.contains(&Some(Label::Plus)) {
                Some(inst.g(inst.v_max()))
            } else {
                None
            };
            if let Some(v) = resolved {
                values[x.index()] = Some(v);
                changed = true;
            }
        }
    }
    for &x in m.members() {
        if values[x.index()].is_none() {
            values[x.index()] = Some(LocalValue::Label(Label::Unknown));
        }
    }
}
