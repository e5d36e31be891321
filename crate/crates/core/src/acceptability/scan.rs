use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::extensions::Semantics;
use super::levels::Acceptance;
use super::report::Model;
use crate::graph::{Arg, AttackGraph, Family};
use crate::local::FixpointConfig;

/// Seeded stream of random graphs with 1 to `max_size` arguments.
#[derive(Debug, Clone)]
pub struct RandomGraphs {
    rng: ChaCha8Rng,
    max_size: usize,
    acyclic: bool,
}

impl RandomGraphs {
    pub fn new(seed: u64, max_size: usize, acyclic: bool) -> Self {
        RandomGraphs {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_size: max_size.max(1),
            acyclic,
        }
    }
}

impl Iterator for RandomGraphs {
    type Item = AttackGraph;

    fn next(&mut self) -> Option<AttackGraph> {
        let size = self.rng.gen_range(1..=self.max_size);
        let density = self.rng.gen_range(0.1..0.6);
        let seed = self.rng.gen();
        let family = if self.acyclic {
            Family::RandomAcyclic { seed, size, density }
        } else {
            Family::Random { seed, size, density }
        };
        Some(family.generate().expect("size ≥ 1"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_size: usize,
    pub acyclic_only: bool,
    pub semantics: Semantics,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            seed: 1,
            trials: 5000,
            max_size: 8,
            acyclic_only: false,
            semantics: Semantics::Preferred,
        }
    }
}

/// A graph and an argument exhibiting one kind of non-compatibility.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub trial: usize,
    pub graph: AttackGraph,
    pub argument: Arg,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ScanReport {
    /// Trials run before both witnesses were found or the budget ran out.
    pub trials: usize,
    /// Trials whose valuation failed (for instance a fixpoint that does not
    /// converge).
    pub skipped: usize,
    pub cleanly_not_well_defended: Option<Witness>,
    pub well_defended_not_cleanly: Option<Witness>,
}

/// Searches random graphs for an argument that is cleanly accepted but not
/// well-defended, and for one that is well-defended but not cleanly
/// accepted.
pub fn compatibility_scan(cfg: &ScanConfig, model: &Model) -> ScanReport {
    let fix = FixpointConfig::default();
    let mut report = ScanReport::default();
    let graphs = RandomGraphs::new(cfg.seed, cfg.max_size, cfg.acyclic_only);
    for (trial, g) in graphs.take(cfg.trials).enumerate() {
        report.trials = trial + 1;
        let Ok(acc) = Acceptance::new(&g, cfg.semantics) else {
            report.skipped += 1;
            continue;
        };
        let Ok(wd) = model.well_defended(&g, &fix) else {
            report.skipped += 1;
            continue;
        };
        for a in g.arguments() {
            let (clean, defended) = (acc.is_cleanly(a), wd.contains(&a));
            let slot = match (clean, defended) {
                (true, false) => &mut report.cleanly_not_well_defended,
                (false, true) => &mut report.well_defended_not_cleanly,
                _ => continue,
            };
            if slot.is_none() {
                *slot = Some(Witness {
                    trial,
                    graph: g.clone(),
                    argument: a,
                });
            }
        }
        if report.cleanly_not_well_defended.is_some() && report.well_defended_not_cleanly.is_some() {
            break;
        }
    }
    report
}
