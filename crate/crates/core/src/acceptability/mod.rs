//! Extension semantics and the graded acceptability built on them.
//!
//! [`extensions`] enumerates preferred or stable extensions exactly;
//! [`Acceptance`] answers uni/exi/cleanly queries over them, and
//! [`well_defended`] compares an argument with its direct attackers under a
//! valuation.

mod defended;
mod extensions;
mod levels;
mod report;
mod scan;

pub use defended::{well_defended, well_defended_local, well_defended_tuples};
pub use extensions::{
    defends, extensions, is_admissible, is_conflict_free, preferred_extensions, stable_extensions,
    Extension, Semantics, DEFAULT_BOUND,
};
pub use levels::{classify, AcceptabilityLevel, Acceptance};
pub use report::{AcceptabilityReport, Model};
pub use scan::{compatibility_scan, RandomGraphs, ScanConfig, ScanReport, Witness};
