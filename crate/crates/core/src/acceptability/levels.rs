use std::fmt;

use super::extensions::{extensions, Extension, Semantics, DEFAULT_BOUND};
use crate::error::Result;
use crate::graph::{Arg, AttackGraph};

/// Graded membership of an argument across the extensions of a semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AcceptabilityLevel {
    /// In no extension.
    NotAccepted,
    /// In some extension, and some direct attacker is in some extension.
    OnlyExi,
    /// In some but not all extensions, and no direct attacker is in any.
    Cleanly,
    /// In every extension (of which there is at least one).
    Uni,
}

impl AcceptabilityLevel {
    pub fn as_str(self) -> &'static str {
        match self {
            AcceptabilityLevel::Uni => "uni",
            AcceptabilityLevel::Cleanly => "cleanly",
            AcceptabilityLevel::OnlyExi => "only-exi",
            AcceptabilityLevel::NotAccepted => "not-accepted",
        }
    }
}

impl fmt::Display for AcceptabilityLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The extensions of one semantics on one graph, with membership queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Acceptance {
    semantics: Semantics,
    extensions: Vec<Extension>,
    attackers: Vec<Vec<Arg>>,
}

impl Acceptance {
    pub fn new(g: &AttackGraph, semantics: Semantics) -> Result<Self> {
        Ok(Acceptance::from_extensions(g, semantics, extensions(g, semantics, DEFAULT_BOUND)?))
    }

    pub fn from_extensions(g: &AttackGraph, semantics: Semantics, extensions: Vec<Extension>) -> Self {
        Acceptance {
            semantics,
            extensions,
            attackers: g.arguments().map(|a| g.attackers(a).to_vec()).collect(),
        }
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn extensions(&self) -> &[Extension] {
        &self.extensions
    }

    /// In at least one extension.
    pub fn is_exi(&self, a: Arg) -> bool {
        self.extensions.iter().any(|e| e.contains(a))
    }

    /// In every extension; false when there are none.
    pub fn is_uni(&self, a: Arg) -> bool {
        !self.extensions.is_empty() && self.extensions.iter().all(|e| e.contains(a))
    }

    /// In some extension while no direct attacker is in any.
    pub fn is_cleanly(&self, a: Arg) -> bool {
        self.is_exi(a) && self.attackers[a.index()].iter().all(|&b| !self.is_exi(b))
    }

    pub fn level(&self, a: Arg) -> AcceptabilityLevel {
        if self.is_uni(a) {
            AcceptabilityLevel::Uni
        } else if self.is_cleanly(a) {
            AcceptabilityLevel::Cleanly
        } else if self.is_exi(a) {
            AcceptabilityLevel::OnlyExi
        } else {
            AcceptabilityLevel::NotAccepted
        }
    }

    pub fn levels(&self) -> Vec<AcceptabilityLevel> {
        (0..self.attackers.len()).map(|i| self.level(Arg(i))).collect()
    }
}

/// Level of every argument, indexed by [`Arg`].
///
/// ```
/// use graduality::acceptability::{classify, AcceptabilityLevel, Semantics};
/// use graduality::graph::AttackGraph;
///
/// let g = AttackGraph::new(["a", "b"], [("b", "a")]).unwrap();
/// let levels = classify(&g, Semantics::Preferred).unwrap();
/// assert_eq!(levels, [AcceptabilityLevel::NotAccepted, AcceptabilityLevel::Uni]);
/// ```
pub fn classify(g: &AttackGraph, semantics: Semantics) -> Result<Vec<AcceptabilityLevel>> {
    Ok(Acceptance::new(g, semantics)?.levels())
}
