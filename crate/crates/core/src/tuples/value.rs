use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use super::tuple::{GradTuple, Tail};
use crate::error::{Error, Result};

/// A pair `[even, odd]`: the lengths of the defence branches and of the
/// attack branches leading to an argument.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TupledValue {
    even: GradTuple,
    odd: GradTuple,
}

impl TupledValue {
    /// Checks that every element has the right parity and that the two
    /// components are not both empty.
    pub fn new(even: GradTuple, odd: GradTuple) -> Result<Self> {
        if even.is_empty() && odd.is_empty() {
            return Err(Error::InvalidTupledValue(
                "both components are empty".into(),
            ));
        }
        if !has_parity(&even, 0) {
            return Err(Error::InvalidTupledValue(format!(
                "even component {even} holds an odd value"
            )));
        }
        if !has_parity(&odd, 1) {
            return Err(Error::InvalidTupledValue(format!(
                "odd component {odd} holds an even value"
            )));
        }
        Ok(TupledValue { even, odd })
    }

    /// `[0^∞, ()]`, the value of every unattacked argument.
    pub fn leaf() -> Self {
        TupledValue {
            even: GradTuple::zero_inf(),
            odd: GradTuple::empty(),
        }
    }

    /// `[(), 1^∞]`, the minimum of the comparison preorder.
    pub fn minimum() -> Self {
        TupledValue {
            even: GradTuple::empty(),
            odd: GradTuple::one_inf(),
        }
    }

    /// Shorthand for finite values; panics on invalid input.
    pub fn finite(even: &[u64], odd: &[u64]) -> Self {
        TupledValue::new(
            GradTuple::finite(even.iter().copied()),
            GradTuple::finite(odd.iter().copied()),
        )
        .expect("invalid tupled value")
    }

    pub fn even(&self) -> &GradTuple {
        &self.even
    }

    pub fn odd(&self) -> &GradTuple {
        &self.odd
    }

    pub fn is_leaf_value(&self) -> bool {
        self.even.is_zero_inf() && self.odd.is_empty()
    }

    pub fn is_truncated(&self) -> bool {
        self.even.is_truncated() || self.odd.is_truncated()
    }
}

fn has_parity(t: &GradTuple, parity: u64) -> bool {
    let tail_ok = match t.tail() {
        Tail::Omega(v) => v % 2 == parity,
        _ => true,
    };
    tail_ok && t.runs().iter().all(|(v, _)| v % 2 == parity)
}

impl fmt::Display for TupledValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.even, self.odd)
    }
}

impl FromStr for TupledValue {
    type Err = Error;

    /// Accepts the rendering syntax: `[(2,4),(1,3,3)]`, `[(2,4,...),()]`,
    /// `[(0^inf),()]`, plus `v*k` for a run of `k` copies of `v`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::InvalidTupledValue(format!("{m} in `{s}`"));
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad("expected `[...]`"))?;
        let split = body.find(')').ok_or_else(|| bad("expected two tuples"))?;
        let (first, rest) = body.split_at(split + 1);
        let second = rest
            .trim_start()
            .strip_prefix(',')
            .ok_or_else(|| bad("expected `,` between tuples"))?;
        TupledValue::new(parse_tuple(first, s)?, parse_tuple(second, s)?)
    }
}

impl FromStr for GradTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tuple(s, s)
    }
}

fn parse_tuple(text: &str, whole: &str) -> Result<GradTuple> {
    let bad = |m: String| Error::InvalidTupledValue(format!("{m} in `{whole}`"));
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| bad(format!("expected `(...)`, found `{}`", text.trim())))?;
    let items: Vec<&str> = inner
        .split(',')
        .map(str::trim)
        .filter(|i| !i.is_empty())
        .collect();
    let mut runs: Vec<(u64, BigUint)> = Vec::new();
    let mut tail = Tail::Closed;
    for (pos, item) in items.iter().enumerate() {
        let last = pos + 1 == items.len();
        let number = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| bad(format!("`{t}` is not a non-negative integer")))
        };
        if *item == "..." {
            if !last {
                return Err(bad("`...` must come last".into()));
            }
            let known_below = runs.last().map(|(v, _)| v + 1).unwrap_or(0);
            tail = Tail::Open { known_below };
        } else if let Some(v) = item
            .strip_suffix("^inf")
            .or_else(|| item.strip_suffix("^∞"))
        {
            if !last {
                return Err(bad("an infinite repetition must come last".into()));
            }
            tail = Tail::Omega(number(v)?);
        } else if let Some((v, k)) = item.split_once('*') {
            let count = k
                .trim()
                .parse::<BigUint>()
                .map_err(|_| bad(format!("`{k}` is not a count")))?;
            runs.push((number(v)?, count));
        } else {
            runs.push((number(item)?, BigUint::from(1u32)));
        }
    }
    if runs.windows(2).any(|w| w[0].0 > w[1].0) {
        return Err(bad("tuple elements must be sorted".into()));
    }
    if let Tail::Omega(w) = tail {
        if runs.iter().any(|(v, _)| *v > w) {
            return Err(bad("elements after an infinite repetition".into()));
        }
    }
    Ok(GradTuple::from_runs(runs, tail))
}
