//! The global valuation: tuples of branch lengths.
//!
//! A [`GradTuple`] is a sorted multiset of integers, possibly infinite. A
//! [`TupledValue`] pairs the lengths of the defence branches (even) and the
//! attack branches (odd) leading to an argument; [`compare`] orders such
//! values partially.

mod compare;
mod eval;
mod tuple;
mod value;

pub use compare::{compare, ComparisonOutcome, Verdict};
pub use eval::{evaluate_acyclic, evaluate_cyclic, PropagationDepth, TupleValuation};
pub use tuple::{Cardinality, GradTuple, LexOrdering, Tail};
pub use value::TupledValue;
