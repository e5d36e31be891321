//! Local valuations: an argument's value is computed from the values of its
//! direct attackers only, `v(A) = g(h(v(A1), …, v(An)))`.
//!
//! [`LocalInstance`] fixes the value set and the functions `g` and `h`;
//! [`evaluate_local`] applies one to a graph.

mod axioms;
mod eval;
mod instance;
mod preorder;
mod value;

pub use axioms::{check_condition_star, validate_instance, Axiom, InstanceReport, StarOutcome, Violation, CHAIN_DEPTH};
pub use eval::{evaluate_local, FixpointConfig, LocalValuation};
pub use instance::{builtin_instances, LocalInstance};
pub use preorder::{induced_preorder, Preorder};
pub use value::{Label, LocalValue, ValueKind};
