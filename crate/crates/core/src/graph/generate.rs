use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Arg, ArgumentId, AttackGraph};
use crate::error::{Error, Result};

/// Deterministic graph families used as fixtures and test generators.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `A{n} → A{n-1} → … → A1`; `A{n}` is the only leaf.
    Chain(usize),
    /// `c0 → c1 → … → c{k-1} → c0`, optionally attacking a sink `s` from `c0`.
    UnattackedCycle { k: usize, sink: bool },
    /// Leaf `d` attacks `c0` of the cycle `c0 → … → c{k-1} → c0`; every
    /// member `ci` attacks its own sink `si`.
    AttackedCycle { k: usize },
    /// Root `r` with one disjoint leg per entry; leg `i` of length `l` is
    /// `x{i}_{l} → … → x{i}_1 → r`. Every leaf has a unique path to `r` and
    /// legs share only `r`.
    Spider(Vec<usize>),
    /// Each ordered pair (self-attacks included) is an attack with
    /// probability `density`.
    Random { seed: u64, size: usize, density: f64 },
    /// Like `Random` but only `a{i} → a{j}` with `i > j`, hence acyclic.
    RandomAcyclic { seed: u64, size: usize, density: f64 },
}

impl Family {
    pub fn generate(&self) -> Result<AttackGraph> {
        match self {
            Family::Chain(n) => {
                positive(*n)?;
                let names = (1..=*n).map(|i| format!("A{i}")).collect::<Vec<_>>();
                let attacks = (1..*n).map(|i| (Arg(i), Arg(i - 1))).collect();
                Ok(build(names, attacks))
            }
            Family::UnattackedCycle { k, sink } => {
                positive(*k)?;
                let mut names: Vec<String> = (0..*k).map(|i| format!("c{i}")).collect();
                let mut attacks: Vec<_> = (0..*k).map(|i| (Arg(i), Arg((i + 1) % k))).collect();
                if *sink {
                    names.push("s".into());
                    attacks.push((Arg(0), Arg(*k)));
                }
                Ok(build(names, attacks))
            }
            Family::AttackedCycle { k } => {
                positive(*k)?;
                let mut names = vec!["d".to_string()];
                names.extend((0..*k).map(|i| format!("c{i}")));
                names.extend((0..*k).map(|i| format!("s{i}")));
                let member = |i: usize| Arg(1 + i);
                let sink = |i: usize| Arg(1 + k + i);
                let mut attacks = vec![(Arg(0), member(0))];
                for i in 0..*k {
                    attacks.push((member(i), member((i + 1) % k)));
                    attacks.push((member(i), sink(i)));
                }
                Ok(build(names, attacks))
            }
            Family::Spider(legs) => {
                if legs.contains(&0) {
                    return Err(Error::InvalidSize("spider legs need length ≥ 1".into()));
                }
                let mut names = vec!["r".to_string()];
                let mut attacks = Vec::new();
                for (i, &len) in legs.iter().enumerate() {
                    let mut target = Arg(0);
                    for j in 1..=len {
                        let node = Arg(names.len());
                        names.push(format!("x{i}_{j}"));
                        attacks.push((node, target));
                        target = node;
                    }
                }
                Ok(build(names, attacks))
            }
            Family::Random { seed, size, density } => {
                positive(*size)?;
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut attacks = Vec::new();
                for i in 0..*size {
                    for j in 0..*size {
                        if rng.gen_bool(density.clamp(0.0, 1.0)) {
                            attacks.push((Arg(i), Arg(j)));
                        }
                    }
                }
                Ok(build(letters(*size), attacks))
            }
            Family::RandomAcyclic { seed, size, density } => {
                positive(*size)?;
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut attacks = Vec::new();
                for i in 0..*size {
                    for j in 0..i {
                        if rng.gen_bool(density.clamp(0.0, 1.0)) {
                            attacks.push((Arg(i), Arg(j)));
                        }
                    }
                }
                Ok(build(letters(*size), attacks))
            }
        }
    }
}

fn positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidSize("size must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn letters(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("a{i}")).collect()
}

fn build(names: Vec<String>, attacks: Vec<(Arg, Arg)>) -> AttackGraph {
    AttackGraph::from_indexed(names.into_iter().map(ArgumentId).collect(), attacks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_of_four() {
        let g = Family::Chain(4).generate().unwrap();
        assert_eq!(
            g.to_apx(),
            "arg(A1).\narg(A2).\narg(A3).\narg(A4).\natt(A2,A1).\natt(A3,A2).\natt(A4,A3).\n"
        );
    }

    #[test]
    fn unattacked_cycle_with_sink() {
        let g = Family::UnattackedCycle { k: 2, sink: true }.generate().unwrap();
        let ms = g.mcycles();
        assert_eq!(ms.len(), 1);
        assert!(ms[0].is_isolated());
        assert_eq!(g.attackers(g.arg("s").unwrap()).len(), 1);
    }

    #[test]
    fn random_is_deterministic() {
        let f = Family::Random { seed: 1, size: 6, density: 0.3 };
        assert_eq!(f.generate().unwrap(), f.generate().unwrap());
        let acyclic = Family::RandomAcyclic { seed: 9, size: 10, density: 0.5 };
        assert!(acyclic.generate().unwrap().is_well_founded());
    }

    #[test]
    fn spider_paths_are_unique() {
        let g = Family::Spider(vec![1, 2, 3]).generate().unwrap();
        assert_eq!(g.len(), 7);
        assert_eq!(g.leaves().len(), 3);
        assert!(g.arguments().all(|a| g.attacked_by(a).len() <= 1));
    }

    #[test]
    fn invalid_sizes() {
        assert!(Family::Chain(0).generate().is_err());
        assert!(Family::Spider(vec![2, 0]).generate().is_err());
    }
}
