use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// How a tuple continues after its listed runs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Tail {
    /// Nothing follows: the tuple is finite.
    Closed,
    /// The value repeats forever, as in 0^∞ or 1^∞.
    Omega(u64),
    /// Infinitely many further elements, all `>= known_below`. Every element
    /// smaller than `known_below` is listed.
    Open { known_below: u64 },
}

/// Number of elements of a tuple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cardinality {
    Finite(BigUint),
    Infinite,
}

/// Outcome of the lexicographic comparison on possibly infinite tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LexOrdering {
    Less,
    Equal,
    Greater,
    /// The certified prefixes agree as far as they go.
    UnknownAtHorizon,
}

impl LexOrdering {
    pub fn reverse(self) -> Self {
        match self {
            LexOrdering::Less => LexOrdering::Greater,
            LexOrdering::Greater => LexOrdering::Less,
            other => other,
        }
    }

    fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => LexOrdering::Less,
            Ordering::Equal => LexOrdering::Equal,
            Ordering::Greater => LexOrdering::Greater,
        }
    }
}

/// A sorted multiset of non-negative integers, finite or infinite.
///
/// Stored as runs of `(value, multiplicity)` with strictly increasing values,
/// followed by a [`Tail`]. Multiplicities are arbitrary precision since walk
/// counts through interconnected cycles grow exponentially with length.
///
/// Derived equality is structural. Two open tuples that are structurally
/// equal agree only up to their horizon.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradTuple {
    runs: Vec<(u64, BigUint)>,
    tail: Tail,
}

impl GradTuple {
    /// The empty tuple `()`.
    pub fn empty() -> Self {
        GradTuple {
            runs: Vec::new(),
            tail: Tail::Closed,
        }
    }

    /// 0^∞, the even component of every leaf.
    pub fn zero_inf() -> Self {
        GradTuple {
            runs: Vec::new(),
            tail: Tail::Omega(0),
        }
    }

    /// 1^∞, the odd component of the minimum tupled value.
    pub fn one_inf() -> Self {
        GradTuple {
            runs: Vec::new(),
            tail: Tail::Omega(1),
        }
    }

    /// A finite tuple; elements are sorted.
    pub fn finite<I: IntoIterator<Item = u64>>(elements: I) -> Self {
        GradTuple {
            runs: runs_of(elements),
            tail: Tail::Closed,
        }
    }

    /// An infinite tuple known exactly below `known_below`. Elements at or
    /// above the bound are discarded.
    pub fn open<I: IntoIterator<Item = u64>>(elements: I, known_below: u64) -> Self {
        let mut runs = runs_of(elements);
        runs.retain(|(v, _)| *v < known_below);
        GradTuple {
            runs,
            tail: Tail::Open { known_below },
        }
    }

    /// Builds a tuple from runs; zero multiplicities are dropped, runs are
    /// merged and sorted, and runs the tail makes unreachable are cut.
    pub fn from_runs(runs: impl IntoIterator<Item = (u64, BigUint)>, tail: Tail) -> Self {
        let mut runs: Vec<(u64, BigUint)> = runs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        runs.sort_by_key(|(v, _)| *v);
        let mut merged: Vec<(u64, BigUint)> = Vec::with_capacity(runs.len());
        for (v, c) in runs {
            match merged.last_mut() {
                Some((last, count)) if *last == v => *count += c,
                _ => merged.push((v, c)),
            }
        }
        match tail {
            Tail::Closed => {}
            Tail::Omega(w) => merged.retain(|(v, _)| *v < w),
            Tail::Open { known_below } => merged.retain(|(v, _)| *v < known_below),
        }
        GradTuple { runs: merged, tail }
    }

    pub fn runs(&self) -> &[(u64, BigUint)] {
        &self.runs
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty() && self.tail == Tail::Closed
    }

    pub fn is_zero_inf(&self) -> bool {
        self.runs.is_empty() && self.tail == Tail::Omega(0)
    }

    pub fn is_finite(&self) -> bool {
        self.tail == Tail::Closed
    }

    /// True when the tuple is infinite and only a prefix is known.
    pub fn is_truncated(&self) -> bool {
        matches!(self.tail, Tail::Open { .. })
    }

    /// The largest value below which the listing is complete, if truncated.
    pub fn horizon(&self) -> Option<u64> {
        match self.tail {
            Tail::Open { known_below } => known_below.checked_sub(1),
            _ => None,
        }
    }

    pub fn cardinality(&self) -> Cardinality {
        match self.tail {
            Tail::Closed => Cardinality::Finite(self.runs.iter().map(|(_, c)| c).sum()),
            _ => Cardinality::Infinite,
        }
    }

    /// Multiplicity of `value` among the listed elements.
    pub fn count(&self, value: u64) -> BigUint {
        self.runs
            .iter()
            .find(|(v, _)| *v == value)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// Listed elements, expanded. Panics on multiplicities beyond `usize`.
    pub fn listed(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (v, c) in &self.runs {
            let n: usize = c.try_into().expect("multiplicity too large to expand");
            out.extend(std::iter::repeat_n(*v, n));
        }
        out
    }

    /// Concatenation ⋆: sorted multiset union, with 0^∞ ⋆ t = t for t ≠ ().
    pub fn concat(&self, other: &GradTuple) -> GradTuple {
        if self.is_zero_inf() && !other.is_empty() {
            return other.clone();
        }
        if other.is_zero_inf() && !self.is_empty() {
            return self.clone();
        }
        let omega = [&self.tail, &other.tail]
            .into_iter()
            .filter_map(|t| match t {
                Tail::Omega(v) => Some(*v),
                _ => None,
            })
            .min();
        let known = [&self.tail, &other.tail]
            .into_iter()
            .filter_map(|t| match t {
                Tail::Open { known_below } => Some(*known_below),
                _ => None,
            })
            .min();
        let tail = match (omega, known) {
            (Some(w), Some(k)) if w < k => Tail::Omega(w),
            (Some(w), None) => Tail::Omega(w),
            (_, Some(k)) => Tail::Open { known_below: k },
            (None, None) => Tail::Closed,
        };
        GradTuple::from_runs(self.runs.iter().chain(&other.runs).cloned(), tail)
    }

    /// Addition ⊕ of an integer to every element; 0^∞ ⊕ k = (k) for k ≥ 1.
    pub fn shift(&self, k: u64) -> GradTuple {
        if k == 0 {
            return self.clone();
        }
        if self.is_zero_inf() {
            return GradTuple::finite([k]);
        }
        let tail = match self.tail {
            Tail::Closed => Tail::Closed,
            Tail::Omega(v) => Tail::Omega(v + k),
            Tail::Open { known_below } => Tail::Open {
                known_below: known_below + k,
            },
        };
        GradTuple {
            runs: self.runs.iter().map(|(v, c)| (v + k, c.clone())).collect(),
            tail,
        }
    }

    /// Lexicographic comparison extended to infinite tuples: a tuple that is
    /// exhausted while the other continues is the smaller one.
    pub fn lex_cmp(&self, other: &GradTuple) -> LexOrdering {
        let mut a = Cursor::new(self);
        let mut b = Cursor::new(other);
        loop {
            match (a.head(), b.head()) {
                (Head::End, Head::End) => return LexOrdering::Equal,
                (Head::End, _) => return LexOrdering::Less,
                (_, Head::End) => return LexOrdering::Greater,
                (Head::Unknown(_), Head::Unknown(_)) => return LexOrdering::UnknownAtHorizon,
                (Head::Unknown(k), Head::Value(v, _)) => {
                    return if v < k {
                        LexOrdering::Greater
                    } else {
                        LexOrdering::UnknownAtHorizon
                    };
                }
                (Head::Value(v, _), Head::Unknown(k)) => {
                    return if v < k {
                        LexOrdering::Less
                    } else {
                        LexOrdering::UnknownAtHorizon
                    };
                }
                (Head::Value(va, ca), Head::Value(vb, cb)) => {
                    if va != vb {
                        return LexOrdering::from_ordering(va.cmp(&vb));
                    }
                    match (ca, cb) {
                        (None, None) => return LexOrdering::Equal,
                        (Some(c), None) => a.advance(&c),
                        (None, Some(c)) => b.advance(&c),
                        (Some(x), Some(y)) => {
                            let m = x.min(y);
                            a.advance(&m);
                            b.advance(&m);
                        }
                    }
                }
            }
        }
    }
}

fn runs_of<I: IntoIterator<Item = u64>>(elements: I) -> Vec<(u64, BigUint)> {
    let mut v: Vec<u64> = elements.into_iter().collect();
    v.sort_unstable();
    let mut runs: Vec<(u64, BigUint)> = Vec::new();
    for x in v {
        match runs.last_mut() {
            Some((last, c)) if *last == x => *c += 1u32,
            _ => runs.push((x, BigUint::one())),
        }
    }
    runs
}

enum Head {
    End,
    Unknown(u64),
    /// A value and how many times it still repeats (`None` = forever).
    Value(u64, Option<BigUint>),
}

struct Cursor<'a> {
    t: &'a GradTuple,
    run: usize,
    used: BigUint,
}

impl<'a> Cursor<'a> {
    fn new(t: &'a GradTuple) -> Self {
        Cursor {
            t,
            run: 0,
            used: BigUint::zero(),
        }
    }

    fn head(&self) -> Head {
        if let Some((v, c)) = self.t.runs.get(self.run) {
            return Head::Value(*v, Some(c - &self.used));
        }
        match self.t.tail {
            Tail::Closed => Head::End,
            Tail::Omega(v) => Head::Value(v, None),
            Tail::Open { known_below } => Head::Unknown(known_below),
        }
    }

    fn advance(&mut self, n: &BigUint) {
        if let Some((_, c)) = self.t.runs.get(self.run) {
            self.used += n;
            if &self.used >= c {
                self.run += 1;
                self.used = BigUint::zero();
            }
        }
    }
}

/// Runs longer than this are written `value*count`.
const EXPAND_LIMIT: u32 = 16;

impl fmt::Display for GradTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<String> = Vec::new();
        for (v, c) in &self.runs {
            if *c <= BigUint::from(EXPAND_LIMIT) {
                let n: u32 = c.try_into().unwrap();
                items.extend((0..n).map(|_| v.to_string()));
            } else {
                items.push(format!("{v}*{c}"));
            }
        }
        match self.tail {
            Tail::Closed => {}
            Tail::Omega(v) => items.push(format!("{v}^inf")),
            Tail::Open { .. } => items.push("...".into()),
        }
        write!(f, "({})", items.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(xs: &[u64]) -> GradTuple {
        GradTuple::finite(xs.iter().copied())
    }

    #[test]
    fn concat_examples() {
        assert_eq!(GradTuple::zero_inf().concat(&t(&[1, 3])), t(&[1, 3]));
        assert_eq!(t(&[1, 3]).concat(&GradTuple::zero_inf()), t(&[1, 3]));
        assert_eq!(t(&[3]).concat(&t(&[3])), t(&[3, 3]));
        assert_eq!(t(&[1, 3]).concat(&t(&[2])), t(&[1, 2, 3]));
        assert_eq!(t(&[]).concat(&t(&[5])), t(&[5]));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(GradTuple::zero_inf().shift(1), t(&[1]));
        assert_eq!(GradTuple::empty().shift(5), GradTuple::empty());
        assert_eq!(t(&[1, 3]).shift(1), t(&[2, 4]));
        assert_eq!(GradTuple::one_inf().shift(1).to_string(), "(2^inf)");
        let open = GradTuple::open([2, 4, 6], 7);
        assert_eq!(open.shift(1), GradTuple::open([3, 5, 7], 8));
    }

    #[test]
    fn lex_examples() {
        assert_eq!(t(&[0]).lex_cmp(&t(&[0, 0])), LexOrdering::Less);
        assert_eq!(t(&[]).lex_cmp(&t(&[1])), LexOrdering::Less);
        assert_eq!(t(&[2, 4]).lex_cmp(&t(&[2, 4])), LexOrdering::Equal);
        assert_eq!(t(&[0, 0, 0]).lex_cmp(&GradTuple::zero_inf()), LexOrdering::Less);
        assert_eq!(GradTuple::zero_inf().lex_cmp(&t(&[0, 1])), LexOrdering::Less);
        assert_eq!(GradTuple::zero_inf().lex_cmp(&GradTuple::zero_inf()), LexOrdering::Equal);
        assert_eq!(GradTuple::one_inf().lex_cmp(&t(&[1, 1, 3])), LexOrdering::Less);
    }

    #[test]
    fn lex_with_horizon() {
        let a = GradTuple::open([2, 4, 6], 7);
        let b = GradTuple::open([2, 4, 6], 7);
        assert_eq!(a.lex_cmp(&b), LexOrdering::UnknownAtHorizon);
        // b's next element is ≥ 7, a's is 6
        assert_eq!(GradTuple::open([2, 4, 6], 7).lex_cmp(&GradTuple::open([2, 4], 5)), LexOrdering::UnknownAtHorizon);
        assert_eq!(GradTuple::open([2, 4], 7).lex_cmp(&t(&[2, 4, 6])), LexOrdering::Greater);
        assert_eq!(GradTuple::open([2, 4], 5).lex_cmp(&t(&[2, 4, 6])), LexOrdering::UnknownAtHorizon);
        assert_eq!(GradTuple::open([2, 3], 5).lex_cmp(&t(&[2, 4, 6])), LexOrdering::Less);
        assert_eq!(t(&[2]).lex_cmp(&GradTuple::open([2], 3)), LexOrdering::Less);
    }

    #[test]
    fn concat_with_tails() {
        let open = GradTuple::open([1, 3, 5], 6);
        let c = open.concat(&t(&[3, 9]));
        assert_eq!(c, GradTuple::open([1, 3, 3, 5], 6));
        assert_eq!(c.horizon(), Some(5));
        assert_eq!(GradTuple::one_inf().concat(&t(&[0, 2])).to_string(), "(0,1^inf)");
        assert_eq!(GradTuple::zero_inf().concat(&GradTuple::empty()), GradTuple::zero_inf());
    }

    #[test]
    fn cardinality() {
        assert_eq!(t(&[1, 1, 3]).cardinality(), Cardinality::Finite(3u32.into()));
        assert_eq!(GradTuple::zero_inf().cardinality(), Cardinality::Infinite);
        assert!(Cardinality::Finite(1000u32.into()) < Cardinality::Infinite);
    }

    #[test]
    fn display() {
        assert_eq!(t(&[1, 3, 3]).to_string(), "(1,3,3)");
        assert_eq!(GradTuple::empty().to_string(), "()");
        assert_eq!(GradTuple::open([2, 4, 6], 7).to_string(), "(2,4,6,...)");
        assert_eq!(GradTuple::zero_inf().to_string(), "(0^inf)");
        let big = GradTuple::from_runs([(3, BigUint::from(40u32))], Tail::Closed);
        assert_eq!(big.to_string(), "(3*40)");
    }
}
