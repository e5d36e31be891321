use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Arg, AttackGraph};

/// Largest graph the enumerators accept unless told otherwise.
pub const DEFAULT_BOUND: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics {
    Preferred,
    Stable,
}

impl Semantics {
    pub fn as_str(self) -> &'static str {
        match self {
            Semantics::Preferred => "preferred",
            Semantics::Stable => "stable",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A conflict-free set of arguments, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Extension {
    members: Vec<Arg>,
}

impl Extension {
    pub(crate) fn new(mut members: Vec<Arg>) -> Self {
        members.sort();
        members.dedup();
        Extension { members }
    }

    pub fn members(&self) -> &[Arg] {
        &self.members
    }

    pub fn contains(&self, a: Arg) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &Extension) -> bool {
        self.members.iter().all(|&a| other.contains(a))
    }

    /// `{a,b}` with names in index order.
    pub fn render(&self, g: &AttackGraph) -> String {
        let names: Vec<&str> = self.members.iter().map(|&a| g.name(a).as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// No member attacks a member.
pub fn is_conflict_free(g: &AttackGraph, s: &[Arg]) -> bool {
    s.iter().all(|&a| s.iter().all(|&b| !g.attacks_arg(a, b)))
}

/// Every direct attacker of `a` is attacked by some member of `s`.
pub fn defends(g: &AttackGraph, s: &[Arg], a: Arg) -> bool {
    g.attackers(a)
        .iter()
        .all(|&b| g.attackers(b).iter().any(|c| s.contains(c)))
}

pub fn is_admissible(g: &AttackGraph, s: &[Arg]) -> bool {
    is_conflict_free(g, s) && s.iter().all(|&a| defends(g, s, a))
}

/// Preferred extensions, ordered by size then members.
///
/// ```
/// use graduality::acceptability::preferred_extensions;
/// use graduality::graph::AttackGraph;
///
/// let g = AttackGraph::new(["a", "b"], [("a", "b"), ("b", "a")]).unwrap();
/// let exts: Vec<String> = preferred_extensions(&g).unwrap().iter().map(|e| e.render(&g)).collect();
/// assert_eq!(exts, ["{a}", "{b}"]);
/// ```
pub fn preferred_extensions(g: &AttackGraph) -> Result<Vec<Extension>> {
    extensions(g, Semantics::Preferred, DEFAULT_BOUND)
}

/// Stable extensions, ordered by size then members. May be empty.
pub fn stable_extensions(g: &AttackGraph) -> Result<Vec<Extension>> {
    extensions(g, Semantics::Stable, DEFAULT_BOUND)
}

/// Enumerates the extensions of `semantics`, refusing graphs with more
/// than `bound` arguments.
pub fn extensions(g: &AttackGraph, semantics: Semantics, bound: usize) -> Result<Vec<Extension>> {
    if g.len() > bound {
        return Err(Error::EnumerationBound { size: g.len(), bound });
    }
    let complete = complete_labellings(g);
    let mut out: Vec<Extension> = match semantics {
        Semantics::Stable => complete
            .into_iter()
            .filter(|l| !l.contains(&Lab::Undec))
            .map(|l| in_set(&l))
            .collect(),
        Semantics::Preferred => {
            let sets: Vec<Extension> = complete.iter().map(|l| in_set(l)).collect();
            sets.iter()
                .filter(|e| !sets.iter().any(|f| f != *e && e.is_subset(f)))
                .cloned()
                .collect()
        }
    };
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Lab {
    In,
    Out,
    Undec,
}

fn in_set(l: &[Lab]) -> Extension {
    Extension::new(
        l.iter()
            .enumerate()
            .filter(|(_, &x)| x == Lab::In)
            .map(|(i, _)| Arg(i))
            .collect(),
    )
}

/// All complete labellings: `in` iff every attacker is `out`, `out` iff
/// some attacker is `in`. Depth-first over arguments with the grounded
/// part fixed up front and partial-consistency pruning.
fn complete_labellings(g: &AttackGraph) -> Vec<Vec<Lab>> {
    let fixed = grounded(g);
    let mut labels: Vec<Option<Lab>> = fixed.clone();
    let mut out = Vec::new();
    search(g, 0, &mut labels, &mut out);
    out
}

fn search(g: &AttackGraph, i: usize, labels: &mut Vec<Option<Lab>>, out: &mut Vec<Vec<Lab>>) {
    if i == g.len() {
        out.push(labels.iter().map(|l| l.unwrap()).collect());
        return;
    }
    if labels[i].is_some() {
        // fixed by the grounded labelling; consistent by construction
        search(g, i + 1, labels, out);
        return;
    }
    for lab in [Lab::In, Lab::Out, Lab::Undec] {
        labels[i] = Some(lab);
        let a = Arg(i);
        if consistent(g, labels, a) && g.attacked_by(a).iter().all(|&y| consistent(g, labels, y)) {
            search(g, i + 1, labels, out);
        }
    }
    labels[i] = None;
}

/// Whether the label of `x`, if any, can still be justified.
fn consistent(g: &AttackGraph, labels: &[Option<Lab>], x: Arg) -> bool {
    let Some(lab) = labels[x.index()] else { return true };
    let attackers = g.attackers(x).iter().map(|b| labels[b.index()]);
    let (mut any_in, mut any_open, mut any_undec) = (false, false, false);
    for l in attackers {
        match l {
            Some(Lab::In) => any_in = true,
            Some(Lab::Undec) => any_undec = true,
            Some(Lab::Out) => {}
            None => any_open = true,
        }
    }
    match lab {
        Lab::In => !any_in && !any_undec,
        Lab::Out => any_in || any_open,
        Lab::Undec => !any_in && (any_undec || any_open),
    }
}

/// The grounded labelling's `in` and `out` arguments, which every complete
/// labelling shares.
fn grounded(g: &AttackGraph) -> Vec<Option<Lab>> {
    let mut labels: Vec<Option<Lab>> = vec![None; g.len()];
    let mut changed = true;
    while changed {
        changed = false;
        for a in g.arguments() {
            if labels[a.index()].is_some() {
                continue;
            }
            let att = g.attackers(a);
            if att.iter().all(|b| labels[b.index()] == Some(Lab::Out)) {
                labels[a.index()] = Some(Lab::In);
                changed = true;
            } else if att.iter().any(|b| labels[b.index()] == Some(Lab::In)) {
                labels[a.index()] = Some(Lab::Out);
                changed = true;
            }
        }
    }
    labels
}
