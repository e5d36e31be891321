use std::cmp::Ordering;
use std::collections::HashSet;

use super::{Arg, ArgumentId, AttackGraph};
use crate::error::{Error, Result};

/// A single branch edit rooted at an argument.
///
/// Branches are realised as private chains: a leaf-to-root path whose inner
/// arguments attack nothing else and are attacked only along the chain.
/// Adding such a chain adds exactly one branch to the root; removing,
/// lengthening or shortening one changes exactly one branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Edit {
    /// Attach a fresh chain of `length` arguments ending in `root`.
    AddBranch { root: Arg, length: usize },
    /// Delete a private chain of `length` arguments ending in `root`.
    RemoveBranch { root: Arg, length: usize },
    /// Grow or shrink a private chain. Only parity-preserving changes are
    /// single edits; a change of parity turns an attack branch into a
    /// defence branch and must be written as remove + add.
    ChangeLength { root: Arg, from: usize, to: usize },
}

impl AttackGraph {
    /// Applies `edit` and returns the new graph; `self` is unchanged.
    /// Arguments keep their indices except when a chain is removed, in which
    /// case the surviving arguments keep their relative order.
    pub fn edit(&self, edit: &Edit) -> Result<AttackGraph> {
        match *edit {
            Edit::AddBranch { root, length } => {
                self.check(root)?;
                if length == 0 {
                    return Err(Error::InvalidEdit("a branch has at least one edge".into()));
                }
                let mut names = self.names.clone();
                let mut pairs = self.attacks.clone();
                let mut fresh = FreshNames::new(self);
                let mut target = root;
                for _ in 0..length {
                    let node = Arg(names.len());
                    names.push(fresh.next());
                    pairs.push((node, target));
                    target = node;
                }
                Ok(AttackGraph::from_indexed(names, pairs))
            }
            Edit::RemoveBranch { root, length } => {
                self.check(root)?;
                let chain = self.private_chain(root, length)?;
                Ok(self.without(&chain))
            }
            Edit::ChangeLength { root, from, to } => {
                self.check(root)?;
                if from % 2 != to % 2 {
                    return Err(Error::ParityChange { from, to });
                }
                if to == 0 {
                    return Err(Error::InvalidEdit("a branch has at least one edge".into()));
                }
                let chain = self.private_chain(root, from)?;
                match to.cmp(&from) {
                    Ordering::Equal => Ok(self.clone()),
                    // extend at the leaf end
                    Ordering::Greater => self.edit(&Edit::AddBranch {
                        root: *chain.last().unwrap(),
                        length: to - from,
                    }),
                    Ordering::Less => Ok(self.without(&chain[to..])),
                }
            }
        }
    }

    fn check(&self, a: Arg) -> Result<()> {
        if a.0 < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownArgument(format!("#{}", a.0)))
        }
    }

    /// Chain [x1, x2, .., xL] with x1 attacking `root` and xL a leaf.
    fn private_chain(&self, root: Arg, length: usize) -> Result<Vec<Arg>> {
        let missing = || Error::MissingBranch {
            root: self.name(root).to_string(),
            length,
        };
        if length == 0 {
            return Err(missing());
        }
        'start: for &first in self.attackers(root) {
            let mut chain = vec![first];
            let mut cur = first;
            loop {
                if cur == root || self.attacked_by(cur).len() != 1 {
                    continue 'start;
                }
                if chain.len() == length {
                    if self.is_leaf(cur) {
                        return Ok(chain);
                    }
                    continue 'start;
                }
                match self.attackers(cur) {
                    [next] if !chain.contains(next) => {
                        cur = *next;
                        chain.push(cur);
                    }
                    _ => continue 'start,
                }
            }
        }
        Err(missing())
    }

    fn without(&self, removed: &[Arg]) -> AttackGraph {
        let gone: HashSet<Arg> = removed.iter().copied().collect();
        let mut remap = vec![None; self.len()];
        let mut names = Vec::new();
        for a in self.arguments() {
            if !gone.contains(&a) {
                remap[a.0] = Some(Arg(names.len()));
                names.push(self.name(a).clone());
            }
        }
        let pairs = self
            .attacks
            .iter()
            .filter_map(|&(x, y)| Some((remap[x.0]?, remap[y.0]?)))
            .collect();
        AttackGraph::from_indexed(names, pairs)
    }
}

struct FreshNames<'a> {
    graph: &'a AttackGraph,
    counter: usize,
}

impl<'a> FreshNames<'a> {
    fn new(graph: &'a AttackGraph) -> Self {
        FreshNames { graph, counter: 0 }
    }

    fn next(&mut self) -> ArgumentId {
        loop {
            let name = format!("_n{}", self.counter);
            self.counter += 1;
            if self.graph.arg(&name).is_err() {
                return ArgumentId(name);
            }
        }
    }
}
