//! Argumentation systems as attack graphs.
//!
//! An [`AttackGraph`] is a finite set of arguments together with a binary
//! attack relation. Arguments carry string identifiers but are addressed
//! internally through a dense [`Arg`] index assigned in declaration order,
//! so every per-argument map downstream is a plain vector.

mod cycles;
mod dot;
mod edit;
mod generate;
mod parse;

use std::borrow::Borrow;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

pub use cycles::{Component, Condensation, Mcycle};
pub use edit::Edit;
pub use generate::Family;

/// Identifier of an argument: a non-empty string of ASCII letters, digits
/// and underscores. Case-sensitive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentId(String);

impl ArgumentId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if is_identifier(&name) {
            Ok(ArgumentId(name))
        } else {
            Err(Error::InvalidIdentifier(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Borrow<str> for ArgumentId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for ArgumentId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// Dense index of an argument inside one [`AttackGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arg(pub(crate) usize);

impl Arg {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A path length query: a walk of `length` edges from `from` to `to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathQuery {
    pub from: Arg,
    pub to: Arg,
    pub length: usize,
}

/// An argumentation system ⟨𝒜, ℛ⟩. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttackGraph {
    names: Vec<ArgumentId>,
    index: HashMap<ArgumentId, Arg>,
    attackers: Vec<Vec<Arg>>,
    attacked: Vec<Vec<Arg>>,
    attacks: Vec<(Arg, Arg)>,
}

impl AttackGraph {
    /// Builds a graph from argument names and (attacker, attacked) pairs.
    /// Repeated arguments and repeated attacks are merged.
    pub fn new<'a, A, R>(arguments: A, attacks: R) -> Result<Self>
    where
        A: IntoIterator<Item = &'a str>,
        R: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut names = Vec::new();
        let mut index = HashMap::new();
        for name in arguments {
            let id = ArgumentId::new(name)?;
            if !index.contains_key(&id) {
                index.insert(id.clone(), Arg(names.len()));
                names.push(id);
            }
        }
        let mut pairs = Vec::new();
        for (from, to) in attacks {
            let from = lookup(&index, from)?;
            let to = lookup(&index, to)?;
            pairs.push((from, to));
        }
        Ok(Self::from_indexed(names, pairs))
    }

    pub(crate) fn from_indexed(names: Vec<ArgumentId>, mut pairs: Vec<(Arg, Arg)>) -> Self {
        pairs.sort();
        pairs.dedup();
        let n = names.len();
        let mut attackers = vec![Vec::new(); n];
        let mut attacked = vec![Vec::new(); n];
        for &(from, to) in &pairs {
            attackers[to.0].push(from);
            attacked[from.0].push(to);
        }
        for list in attackers.iter_mut() {
            list.sort();
        }
        let index = names
            .iter()
            .enumerate()
            .map(|(i, id)| (id.clone(), Arg(i)))
            .collect();
        AttackGraph {
            names,
            index,
            attackers,
            attacked,
            attacks: pairs,
        }
    }

    /// Parses the `arg(..).` / `att(..,..).` text format.
    pub fn parse(text: &str) -> Result<Self> {
        parse::parse_framework(text)
    }

    /// Canonical text form: arguments in declaration order, then attacks
    /// sorted lexicographically by (attacker, attacked) name.
    pub fn to_apx(&self) -> String {
        let mut out = String::new();
        for id in &self.names {
            out.push_str(&format!("arg({id}).\n"));
        }
        let mut attacks: Vec<(&str, &str)> = self
            .attacks
            .iter()
            .map(|&(a, b)| (self.names[a.0].as_str(), self.names[b.0].as_str()))
            .collect();
        attacks.sort();
        for (a, b) in attacks {
            out.push_str(&format!("att({a},{b}).\n"));
        }
        out
    }

    pub fn to_dot(&self) -> String {
        dot::to_dot(self)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn arguments(&self) -> impl ExactSizeIterator<Item = Arg> + Clone {
        (0..self.names.len()).map(Arg)
    }

    pub fn name(&self, a: Arg) -> &ArgumentId {
        &self.names[a.0]
    }

    pub fn names(&self) -> &[ArgumentId] {
        &self.names
    }

    /// Resolves an argument name.
    pub fn arg(&self, name: &str) -> Result<Arg> {
        lookup(&self.index, name)
    }

    /// Attack pairs sorted by index.
    pub fn attacks(&self) -> &[(Arg, Arg)] {
        &self.attacks
    }

    pub fn attacks_arg(&self, from: Arg, to: Arg) -> bool {
        self.attackers[to.0].binary_search(&from).is_ok()
    }

    /// ℛ⁻(a), sorted.
    pub fn attackers(&self, a: Arg) -> &[Arg] {
        &self.attackers[a.0]
    }

    /// ℛ⁺(a), sorted.
    pub fn attacked_by(&self, a: Arg) -> &[Arg] {
        &self.attacked[a.0]
    }

    pub fn is_leaf(&self, a: Arg) -> bool {
        self.attackers[a.0].is_empty()
    }

    pub fn leaves(&self) -> BTreeSet<Arg> {
        self.arguments().filter(|&a| self.is_leaf(a)).collect()
    }

    pub fn direct_attackers(&self, a: Arg) -> BTreeSet<Arg> {
        self.attackers(a).iter().copied().collect()
    }

    /// Attackers of the direct attackers of `a`.
    pub fn direct_defenders(&self, a: Arg) -> BTreeSet<Arg> {
        self.walk_classes(a)
            .into_iter()
            .filter(|(_, c)| c.contains(LengthClass::Two))
            .map(|(b, _)| b)
            .collect()
    }

    /// Arguments with a path of odd length 2k+1, k ≥ 1, to `a`.
    pub fn indirect_attackers(&self, a: Arg) -> BTreeSet<Arg> {
        self.walk_classes(a)
            .into_iter()
            .filter(|(_, c)| c.contains(LengthClass::Three) || c.contains(LengthClass::OddFiveUp))
            .map(|(b, _)| b)
            .collect()
    }

    /// Arguments with a path of even length 2k, k ≥ 2, to `a`.
    pub fn indirect_defenders(&self, a: Arg) -> BTreeSet<Arg> {
        self.walk_classes(a)
            .into_iter()
            .filter(|(_, c)| c.contains(LengthClass::EvenFourUp))
            .map(|(b, _)| b)
            .collect()
    }

    /// Whether some path (in the sense of consecutive attacks, vertices may
    /// repeat) of exactly `q.length` edges leads from `q.from` to `q.to`.
    pub fn has_path(&self, q: &PathQuery) -> bool {
        let mut frontier = vec![false; self.len()];
        frontier[q.from.0] = true;
        for _ in 0..q.length {
            let mut next = vec![false; self.len()];
            for (i, &on) in frontier.iter().enumerate() {
                if on {
                    for &b in &self.attacked[i] {
                        next[b.0] = true;
                    }
                }
            }
            frontier = next;
        }
        frontier[q.to.0]
    }

    /// Backward search from `a` over (argument, path-length class) states.
    fn walk_classes(&self, a: Arg) -> Vec<(Arg, ClassSet)> {
        let mut seen = vec![ClassSet::default(); self.len()];
        let mut stack = vec![(a, LengthClass::Zero)];
        seen[a.0].insert(LengthClass::Zero);
        while let Some((x, class)) = stack.pop() {
            let next = class.step();
            for &b in self.attackers(x) {
                if seen[b.0].insert(next) {
                    stack.push((b, next));
                }
            }
        }
        seen.into_iter()
            .enumerate()
            .map(|(i, c)| (Arg(i), c))
            .collect()
    }

    /// A finite system is well-founded iff its attack graph is acyclic.
    pub fn is_well_founded(&self) -> bool {
        self.mcycles().is_empty()
    }

    /// Whether some elementary cycle has odd length.
    pub fn has_odd_cycle(&self) -> bool {
        self.condensation()
            .components()
            .iter()
            .filter_map(|c| c.mcycle())
            .any(|m| !m.is_bipartite())
    }
}

fn lookup(index: &HashMap<ArgumentId, Arg>, name: &str) -> Result<Arg> {
    index
        .get(name)
        .copied()
        .ok_or_else(|| Error::UnknownArgument(name.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LengthClass {
    Zero,
    One,
    Two,
    Three,
    EvenFourUp,
    OddFiveUp,
}

impl LengthClass {
    fn step(self) -> Self {
        match self {
            LengthClass::Zero => LengthClass::One,
            LengthClass::One => LengthClass::Two,
            LengthClass::Two => LengthClass::Three,
            LengthClass::Three | LengthClass::OddFiveUp => LengthClass::EvenFourUp,
            LengthClass::EvenFourUp => LengthClass::OddFiveUp,
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ClassSet(u8);

impl ClassSet {
    fn insert(&mut self, c: LengthClass) -> bool {
        let fresh = self.0 & c.bit() == 0;
        self.0 |= c.bit();
        fresh
    }

    fn contains(self, c: LengthClass) -> bool {
        self.0 & c.bit() != 0
    }
}
