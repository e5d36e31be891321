use std::collections::BTreeSet;
use std::fmt::Write;

use super::defended::{well_defended_local, well_defended_tuples};
use super::extensions::{Extension, Semantics};
use super::levels::{Acceptance, AcceptabilityLevel};
use crate::error::Result;
use crate::graph::{Arg, AttackGraph};
use crate::local::{evaluate_local, FixpointConfig, LocalInstance};
use crate::tuples::{evaluate_cyclic, PropagationDepth};

/// A valuation whose preorder decides well-defendedness.
#[derive(Debug, Clone)]
pub enum Model {
    Local(LocalInstance),
    Tuples(PropagationDepth),
}

impl Model {
    pub fn name(&self) -> &str {
        match self {
            Model::Local(inst) => inst.name(),
            Model::Tuples(_) => "tuples",
        }
    }

    pub fn well_defended(&self, g: &AttackGraph, cfg: &FixpointConfig) -> Result<BTreeSet<Arg>> {
        match self {
            Model::Local(inst) => well_defended_local(g, &evaluate_local(g, inst, cfg)?),
            Model::Tuples(depth) => Ok(well_defended_tuples(g, &evaluate_cyclic(g, *depth))),
        }
    }
}

/// Levels under one semantics plus the well-defended sets of any number of
/// valuations.
#[derive(Debug, Clone, PartialEq)]
pub struct AcceptabilityReport {
    pub semantics: Semantics,
    pub extensions: Vec<Extension>,
    pub levels: Vec<AcceptabilityLevel>,
    pub well_defended: Vec<(String, BTreeSet<Arg>)>,
}

impl AcceptabilityReport {
    pub fn build(
        g: &AttackGraph,
        semantics: Semantics,
        models: &[Model],
        cfg: &FixpointConfig,
    ) -> Result<Self> {
        let acc = Acceptance::new(g, semantics)?;
        let well_defended = models
            .iter()
            .map(|m| Ok((m.name().to_string(), m.well_defended(g, cfg)?)))
            .collect::<Result<_>>()?;
        Ok(AcceptabilityReport {
            semantics,
            levels: acc.levels(),
            extensions: acc.extensions().to_vec(),
            well_defended,
        })
    }

    /// One line per argument in declaration order:
    /// `name level [well-defended:<valuations>]`.
    ///
    /// ```
    /// use graduality::acceptability::{AcceptabilityReport, Model, Semantics};
    /// use graduality::graph::AttackGraph;
    /// use graduality::local::{FixpointConfig, LocalInstance};
    ///
    /// let g = AttackGraph::new(["a", "b"], [("b", "a")]).unwrap();
    /// let models = [Model::Local(LocalInstance::categoriser())];
    /// let r = AcceptabilityReport::build(&g, Semantics::Preferred, &models, &FixpointConfig::default()).unwrap();
    /// assert_eq!(r.render(&g), "a not-accepted\nb uni well-defended:categoriser\n");
    /// ```
    pub fn render(&self, g: &AttackGraph) -> String {
        let mut out = String::new();
        for a in g.arguments() {
            write!(out, "{} {}", g.name(a), self.levels[a.index()]).unwrap();
            let names: Vec<&str> = self
                .well_defended
                .iter()
                .filter(|(_, set)| set.contains(&a))
                .map(|(n, _)| n.as_str())
                .collect();
            if !names.is_empty() {
                write!(out, " well-defended:{}", names.join(",")).unwrap();
            }
            out.push('\n');
        }
        out
    }
}
