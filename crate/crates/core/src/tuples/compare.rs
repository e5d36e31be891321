use std::fmt;

use super::tuple::{Cardinality, LexOrdering};
use super::value::TupledValue;

/// Which of two tupled values is preferred.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    FirstBetter,
    SecondBetter,
    Equivalent,
    Incomparable,
}

impl Verdict {
    pub fn mirror(self) -> Self {
        match self {
            Verdict::FirstBetter => Verdict::SecondBetter,
            Verdict::SecondBetter => Verdict::FirstBetter,
            other => other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::FirstBetter => "first-better",
            Verdict::SecondBetter => "second-better",
            Verdict::Equivalent => "equivalent",
            Verdict::Incomparable => "incomparable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of [`compare`]. `exact` is false when a truncated tuple had to be
/// compared past what is known of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ComparisonOutcome {
    pub verdict: Verdict,
    pub exact: bool,
}

impl ComparisonOutcome {
    fn exact(verdict: Verdict) -> Self {
        ComparisonOutcome { verdict, exact: true }
    }

    /// `first ⪰ second`.
    pub fn first_at_least(&self) -> bool {
        matches!(self.verdict, Verdict::FirstBetter | Verdict::Equivalent)
    }

    /// `second ⪰ first`.
    pub fn second_at_least(&self) -> bool {
        matches!(self.verdict, Verdict::SecondBetter | Verdict::Equivalent)
    }

    pub fn mirror(self) -> Self {
        ComparisonOutcome {
            verdict: self.verdict.mirror(),
            exact: self.exact,
        }
    }
}

impl fmt::Display for ComparisonOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.exact { "exact" } else { "at horizon" };
        write!(f, "{} ({tag})", self.verdict)
    }
}

/// Two-stage cautious comparison of tupled values.
///
/// Stage one compares how many attack and defence branches each value has;
/// stage two, reached only when both counts tie, compares the branch
/// lengths lexicographically. Fewer or longer attack branches and more or
/// shorter defence branches are better; when the two criteria disagree the
/// values are incomparable.
///
/// ```
/// use graduality::tuples::{compare, TupledValue, Verdict};
///
/// let v: TupledValue = "[(2),(3)]".parse().unwrap();
/// let w: TupledValue = "[(2),(1)]".parse().unwrap();
/// assert_eq!(compare(&v, &w).verdict, Verdict::FirstBetter);
/// ```
pub fn compare(v: &TupledValue, w: &TupledValue) -> ComparisonOutcome {
    if v == w {
        return ComparisonOutcome {
            verdict: Verdict::Equivalent,
            exact: !v.is_truncated(),
        };
    }
    let (vi, wi) = (v.odd().cardinality(), w.odd().cardinality());
    let (vp, wp) = (v.even().cardinality(), w.even().cardinality());
    if vi == wi && vp == wp {
        return lexicographic(v, w);
    }
    counting(&vi, &wi, &vp, &wp)
}

fn counting(
    vi: &Cardinality,
    wi: &Cardinality,
    vp: &Cardinality,
    wp: &Cardinality,
) -> ComparisonOutcome {
    if vi >= wi && vp <= wp {
        ComparisonOutcome::exact(Verdict::SecondBetter)
    } else if vi <= wi && vp >= wp {
        ComparisonOutcome::exact(Verdict::FirstBetter)
    } else {
        ComparisonOutcome::exact(Verdict::Incomparable)
    }
}

fn lexicographic(v: &TupledValue, w: &TupledValue) -> ComparisonOutcome {
    let (even, even_exact) = settle(v.even().lex_cmp(w.even()), v.even() == w.even());
    let (odd, odd_exact) = settle(v.odd().lex_cmp(w.odd()), v.odd() == w.odd());
    let exact = even_exact && odd_exact;
    let verdict = match (even, odd) {
        (Some(e), Some(o)) => {
            // shorter defences and longer attacks are better
            let first = matches!(e, LexOrdering::Less | LexOrdering::Equal)
                && matches!(o, LexOrdering::Greater | LexOrdering::Equal);
            let second = matches!(e, LexOrdering::Greater | LexOrdering::Equal)
                && matches!(o, LexOrdering::Less | LexOrdering::Equal);
            match (first, second) {
                (true, true) => Verdict::Equivalent,
                (true, false) => Verdict::FirstBetter,
                (false, true) => Verdict::SecondBetter,
                (false, false) => Verdict::Incomparable,
            }
        }
        _ => Verdict::Incomparable,
    };
    ComparisonOutcome { verdict, exact }
}

/// An undecided lexicographic comparison counts as a tie when both known
/// prefixes coincide, and as undecidable otherwise.
fn settle(o: LexOrdering, same_prefix: bool) -> (Option<LexOrdering>, bool) {
    match o {
        LexOrdering::UnknownAtHorizon if same_prefix => (Some(LexOrdering::Equal), false),
        LexOrdering::UnknownAtHorizon => (None, false),
        other => (Some(other), true),
    }
}
