use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use super::{Arg, AttackGraph};

/// A maximal union of interconnected elementary cycles.
///
/// Computed as a strongly connected component that has more than one member
/// or a self-attack. `inputs` lists the members with a direct attacker
/// outside the mcycle; it is empty iff the mcycle is isolated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mcycle {
    members: Vec<Arg>,
    inputs: Vec<Arg>,
    // Parity of every member relative to members[0] when all closed walks
    // are even; `None` when an odd cycle exists.
    sides: Option<Vec<u8>>,
}

impl Mcycle {
    pub fn members(&self) -> &[Arg] {
        &self.members
    }

    pub fn inputs(&self) -> &[Arg] {
        &self.inputs
    }

    pub fn contains(&self, a: Arg) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn is_isolated(&self) -> bool {
        self.inputs.is_empty()
    }

    /// True when every cycle of the mcycle has even length.
    pub fn is_bipartite(&self) -> bool {
        self.sides.is_some()
    }

    /// Parity class of a member in a bipartite mcycle: walks from `a` to `b`
    /// inside the mcycle all have length ≡ side(b) − side(a) (mod 2).
    pub fn side(&self, a: Arg) -> Option<u8> {
        let pos = self.members.binary_search(&a).ok()?;
        self.sides.as_ref().map(|s| s[pos])
    }

    /// True when the mcycle is one elementary cycle (each member has exactly
    /// one attacker and one target inside it).
    pub fn is_simple_cycle(&self, g: &AttackGraph) -> bool {
        self.members.iter().all(|&m| {
            g.attackers(m).iter().filter(|&&b| self.contains(b)).count() == 1
                && g.attacked_by(m).iter().filter(|&&b| self.contains(b)).count() == 1
        })
    }
}

/// A node of the condensation: either a single acyclic argument or an mcycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Component {
    Single(Arg),
    Cycle(Mcycle),
}

impl Component {
    pub fn members(&self) -> &[Arg] {
        match self {
            Component::Single(a) => std::slice::from_ref(a),
            Component::Cycle(m) => m.members(),
        }
    }

    pub fn mcycle(&self) -> Option<&Mcycle> {
        match self {
            Component::Single(_) => None,
            Component::Cycle(m) => Some(m),
        }
    }
}

/// Strongly connected components ordered so that every attacker's component
/// comes before the components it attacks.
#[derive(Debug, Clone)]
pub struct Condensation {
    components: Vec<Component>,
    component_of: Vec<usize>,
}

impl Condensation {
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_of(&self, a: Arg) -> usize {
        self.component_of[a.0]
    }
}

impl AttackGraph {
    pub fn condensation(&self) -> Condensation {
        let n = self.len();
        let pg: DiGraph<(), ()> = DiGraph::from_edges(
            self.attacks()
                .iter()
                .map(|&(a, b)| (a.0 as u32, b.0 as u32)),
        );
        // from_edges only creates nodes up to the largest endpoint
        let mut sccs: Vec<Vec<Arg>> = if pg.node_count() == 0 {
            Vec::new()
        } else {
            tarjan_scc(&pg)
                .into_iter()
                .map(|c| c.into_iter().map(|ix| Arg(ix.index())).collect())
                .collect()
        };
        // tarjan_scc yields reverse topological order
        sccs.reverse();
        let mut covered = vec![false; n];
        for c in &sccs {
            for a in c {
                covered[a.0] = true;
            }
        }
        // isolated trailing arguments have no edges; any position is topological
        for (i, &c) in covered.iter().enumerate() {
            if !c {
                sccs.push(vec![Arg(i)]);
            }
        }

        let mut component_of = vec![0; n];
        let mut components = Vec::with_capacity(sccs.len());
        for (ci, mut members) in sccs.into_iter().enumerate() {
            members.sort();
            for a in &members {
                component_of[a.0] = ci;
            }
            let cyclic = members.len() > 1 || self.attacks_arg(members[0], members[0]);
            if cyclic {
                components.push(Component::Cycle(self.build_mcycle(members)));
            } else {
                components.push(Component::Single(members[0]));
            }
        }
        Condensation {
            components,
            component_of,
        }
    }

    /// The mcycles of the graph, in topological order of the condensation.
    pub fn mcycles(&self) -> Vec<Mcycle> {
        self.condensation()
            .components
            .into_iter()
            .filter_map(|c| match c {
                Component::Cycle(m) => Some(m),
                Component::Single(_) => None,
            })
            .collect()
    }

    fn build_mcycle(&self, members: Vec<Arg>) -> Mcycle {
        let inside = |a: Arg| members.binary_search(&a).is_ok();
        let inputs = members
            .iter()
            .copied()
            .filter(|&m| self.attackers(m).iter().any(|&b| !inside(b)))
            .collect();

        let mut side: Vec<Option<u8>> = vec![None; members.len()];
        let pos = |a: Arg| members.binary_search(&a).unwrap();
        side[0] = Some(0);
        let mut stack = vec![members[0]];
        let mut bipartite = true;
        while let Some(x) = stack.pop() {
            let sx = side[pos(x)].unwrap();
            for &y in self.attacked_by(x) {
                if !inside(y) {
                    continue;
                }
                match side[pos(y)] {
                    None => {
                        side[pos(y)] = Some(1 - sx);
                        stack.push(y);
                    }
                    Some(sy) if sy == sx => bipartite = false,
                    Some(_) => {}
                }
            }
        }
        let sides = bipartite.then(|| side.into_iter().map(|s| s.unwrap()).collect());
        Mcycle {
            members,
            inputs,
            sides,
        }
    }
}
