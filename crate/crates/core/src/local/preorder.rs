use std::cmp::Ordering;

use super::value::LocalValue;
use crate::error::{Error, Result};
use crate::graph::Arg;

/// The complete preordering `A ⪰ B ⟺ v(A) ≥ v(B)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    // rank[i]: number of distinct values strictly below v(i)
    rank: Vec<usize>,
}

impl Preorder {
    pub fn cmp(&self, a: Arg, b: Arg) -> Ordering {
        self.rank[a.index()].cmp(&self.rank[b.index()])
    }

    pub fn at_least(&self, a: Arg, b: Arg) -> bool {
        self.cmp(a, b) != Ordering::Less
    }

    /// Equivalence classes, best first, members in index order.
    pub fn classes(&self) -> Vec<Vec<Arg>> {
        let top = self.rank.iter().copied().max().map_or(0, |m| m + 1);
        let mut classes = vec![Vec::new(); top];
        for (i, &r) in self.rank.iter().enumerate() {
            classes[top - 1 - r].push(Arg(i));
        }
        classes
    }
}

/// Builds the preorder induced by `values`, which must all be labels or all
/// be numbers.
pub fn induced_preorder(values: &[LocalValue]) -> Result<Preorder> {
    if let Some(first) = values.first() {
        let labels = first.as_label().is_some();
        if values.iter().any(|v| v.as_label().is_some() != labels) {
            return Err(Error::MixedValueKinds);
        }
    }
    let mut order: Vec<usize> = (0..values.len()).collect();
    let mut failure = None;
    order.sort_by(|&i, &j| {
        values[i].compare(&values[j]).unwrap_or_else(|e| {
            failure = Some(e);
            Ordering::Equal
        })
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let mut rank = vec![0; values.len()];
    let mut current = 0;
    for w in 0..order.len() {
        if w > 0 && values[order[w]].compare(&values[order[w - 1]])? == Ordering::Greater {
            current += 1;
        }
        rank[order[w]] = current;
    }
    Ok(Preorder { rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::Label;

    #[test]
    fn chain_of_three() {
        let values = [
            LocalValue::rational(1, 2),
            LocalValue::rational(2, 3),
            LocalValue::rational(1, 1),
        ];
        let p = induced_preorder(&values).unwrap();
        assert_eq!(p.classes(), vec![vec![Arg(2)], vec![Arg(1)], vec![Arg(0)]]);
        assert!(p.at_least(Arg(1), Arg(0)));
    }

    #[test]
    fn ties_and_mixtures() {
        let same = vec![LocalValue::Float(0.5); 3];
        assert_eq!(induced_preorder(&same).unwrap().classes().len(), 1);
        let mixed = [LocalValue::Float(0.5), LocalValue::Label(Label::Plus)];
        assert_eq!(induced_preorder(&mixed), Err(Error::MixedValueKinds));
    }
}
