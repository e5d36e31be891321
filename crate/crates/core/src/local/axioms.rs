use std::fmt;

use super::instance::LocalInstance;
use super::value::LocalValue;

/// An axiom an instance must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `h(x) = x`
    HIdentity,
    /// `h() = V_Min`
    HEmpty,
    /// `h` ignores the order of its arguments
    HSymmetric,
    /// `h` is non-decreasing in each argument
    HMonotone,
    /// appending an argument never lowers `h`
    HAppend,
    /// `h(x1..xn) ≥ max(x1..xn)`
    HAboveMax,
    /// `g(V_Min) = V_Max`
    GMinToMax,
    /// `g(V_Max) < V_Max`
    GMaxBelowMax,
    /// `g` is non-increasing
    GNonIncreasing,
    /// `g(V_Max) ≤ g³(V_Max) ≤ … ≤ g²(V_Max) ≤ V_Max`
    IterateChain,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub axiom: Axiom,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.axiom, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct InstanceReport {
    pub violations: Vec<Violation>,
}

impl InstanceReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

/// Depth of the iterate chain checked by [`validate_instance`].
pub const CHAIN_DEPTH: usize = 8;

/// Checks the instance axioms on the given sample tuples. Every sample
/// element, `V_Min` and `V_Max` also serve as single values.
///
/// ```
/// use graduality::local::{validate_instance, LocalInstance, LocalValue};
///
/// let half = LocalValue::rational(1, 2);
/// let report = validate_instance(&LocalInstance::categoriser(), &[vec![half.clone(), half]]);
/// assert!(report.is_valid());
/// ```
pub fn validate_instance(inst: &LocalInstance, samples: &[Vec<LocalValue>]) -> InstanceReport {
    let mut report = InstanceReport::default();
    let mut fail = |axiom: Axiom, detail: String| report.violations.push(Violation { axiom, detail });
    let fmt = |xs: &[LocalValue]| {
        xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    };

    let mut pool: Vec<LocalValue> = vec![inst.v_min().clone(), inst.v_max().clone()];
    for s in samples {
        for x in s {
            if !pool.contains(x) {
                pool.push(x.clone());
            }
        }
    }

    if inst.h(&[]) != *inst.v_min() {
        fail(Axiom::HEmpty, format!("h() = {}", inst.h(&[])));
    }
    for x in &pool {
        let hx = inst.h(std::slice::from_ref(x));
        if hx != *x {
            fail(Axiom::HIdentity, format!("h({x}) = {hx}"));
        }
    }
    for s in samples {
        let hs = inst.h(s);
        let mut reversed = s.clone();
        reversed.reverse();
        let mut rotated = s.clone();
        rotated.rotate_left(1.min(s.len()));
        for p in [reversed, rotated] {
            if inst.h(&p) != hs {
                fail(Axiom::HSymmetric, format!("h({}) ≠ h({})", fmt(s), fmt(&p)));
            }
        }
        for (i, x) in s.iter().enumerate() {
            for y in &pool {
                if y.ge(x) {
                    let mut raised = s.clone();
                    raised[i] = y.clone();
                    if !inst.h(&raised).ge(&hs) {
                        fail(Axiom::HMonotone, format!("h({}) < h({})", fmt(&raised), fmt(s)));
                    }
                }
            }
            if !hs.ge(x) {
                fail(Axiom::HAboveMax, format!("h({}) = {hs} < {x}", fmt(s)));
            }
        }
        for y in &pool {
            let mut longer = s.clone();
            longer.push(y.clone());
            if !inst.h(&longer).ge(&hs) {
                fail(Axiom::HAppend, format!("h({}) < h({})", fmt(&longer), fmt(s)));
            }
        }
    }

    let g_min = inst.g(inst.v_min());
    if g_min != *inst.v_max() {
        fail(Axiom::GMinToMax, format!("g({}) = {g_min}", inst.v_min()));
    }
    let g_max = inst.g(inst.v_max());
    if g_max.ge(inst.v_max()) {
        fail(Axiom::GMaxBelowMax, format!("g({}) = {g_max}", inst.v_max()));
    }
    let mut domain = pool.clone();
    domain.extend(samples.iter().map(|s| inst.h(s)));
    for a in &domain {
        for b in &domain {
            if b.ge(a) && !inst.g(a).ge(&inst.g(b)) {
                fail(Axiom::GNonIncreasing, format!("g({a}) < g({b})"));
            }
        }
    }

    let mut iterates = vec![inst.v_max().clone()];
    for k in 0..CHAIN_DEPTH {
        let next = inst.g(&iterates[k]);
        iterates.push(next);
    }
    let odd: Vec<usize> = (1..=CHAIN_DEPTH).filter(|k| k % 2 == 1).collect();
    let mut even: Vec<usize> = (0..=CHAIN_DEPTH).filter(|k| k % 2 == 0).collect();
    even.reverse();
    let chain: Vec<usize> = odd.into_iter().chain(even).collect();
    for w in chain.windows(2) {
        let (lo, hi) = (&iterates[w[0]], &iterates[w[1]]);
        if !hi.ge(lo) {
            fail(
                Axiom::IterateChain,
                format!("g^{}(V_Max) = {lo} > g^{}(V_Max) = {hi}", w[0], w[1]),
            );
        }
    }
    report
}

/// Outcome of the implication `(∀i g(xi) ≥ xi) ⇒ g(h(x1..xn)) ≥ h(x1..xn)`
/// on one sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StarOutcome {
    Pass,
    Fail,
    PremiseNotMet,
}

/// Evaluates condition (*) on every sample.
///
/// ```
/// use graduality::local::{check_condition_star, LocalInstance, LocalValue, StarOutcome};
///
/// let half = LocalValue::rational(1, 2);
/// let sample = vec![half.clone(), half.clone(), half];
/// let out = check_condition_star(&LocalInstance::categoriser(), &[sample]);
/// assert_eq!(out, vec![StarOutcome::Fail]);
/// ```
pub fn check_condition_star(inst: &LocalInstance, samples: &[Vec<LocalValue>]) -> Vec<StarOutcome> {
    samples
        .iter()
        .map(|s| {
            if !s.iter().all(|x| inst.g(x).ge(x)) {
                return StarOutcome::PremiseNotMet;
            }
            let h = inst.h(s);
            if inst.g(&h).ge(&h) {
                StarOutcome::Pass
            } else {
                StarOutcome::Fail
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::{builtin_instances, Label, ValueKind};
    use num_rational::BigRational;
    use num_traits::One;

    fn r(n: i64, d: i64) -> LocalValue {
        LocalValue::rational(n, d)
    }

    fn samples() -> Vec<Vec<LocalValue>> {
        vec![
            vec![r(1, 2), r(1, 2)],
            vec![r(1, 3), r(2, 3), r(1, 1)],
            vec![r(0, 1)],
            vec![r(3, 5), r(1, 4)],
        ]
    }

    #[test]
    fn builtins_are_valid() {
        let labels = vec![
            vec![LocalValue::Label(Label::Unknown), LocalValue::Label(Label::Minus)],
            vec![LocalValue::Label(Label::Plus)],
        ];
        for inst in builtin_instances() {
            let s = if inst.kind() == ValueKind::Label { labels.clone() } else { samples() };
            let report = validate_instance(&inst, &s);
            assert!(report.is_valid(), "{}: {:?}", inst.name(), report.violations);
        }
    }

    #[test]
    fn broken_g_is_reported() {
        let broken = LocalInstance::max_based("broken", |x| (BigRational::one() - x) / BigRational::from_integer(2.into()));
        let report = validate_instance(&broken, &samples());
        assert!(report.violates(Axiom::GMinToMax));
    }

    #[test]
    fn sum_is_not_bounded_by_v_max_but_stays_above_max() {
        let report = validate_instance(&LocalInstance::categoriser(), &[vec![r(1, 2), r(1, 2)]]);
        assert!(!report.violates(Axiom::HAboveMax));
    }

    #[test]
    fn condition_star() {
        let cat = LocalInstance::categoriser();
        let out = check_condition_star(&cat, &[vec![r(1, 2); 3], vec![r(1, 1)]]);
        assert_eq!(out, [StarOutcome::Fail, StarOutcome::PremiseNotMet]);
        let max = builtin_instances().remove(2);
        assert!(check_condition_star(&max, &samples())
            .iter()
            .all(|o| *o != StarOutcome::Fail));
    }
}
