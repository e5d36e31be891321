pub mod acceptability;
pub mod error;
pub mod graph;
pub mod local;
pub mod tuples;

pub use error::{Error, Result};
pub use graph::{Arg, ArgumentId, AttackGraph};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/local.md")]
    mod local {}
    #[doc = include_str!("../../../book/src/tuples.md")]
    mod tuples {}
    #[doc = include_str!("../../../book/src/cycles.md")]
    mod cycles {}
    #[doc = include_str!("../../../book/src/acceptability.md")]
    mod acceptability {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
