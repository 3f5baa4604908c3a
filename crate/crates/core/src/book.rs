//! Runs every code block in the guide (`book/`) as a doctest, so the book
//! and the library cannot drift apart. Only compiled by rustdoc's doctest
//! collection.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}

#[doc = include_str!("../../../book/src/flooding.md")]
pub mod flooding {}

#[doc = include_str!("../../../book/src/auxiliary-graphs.md")]
pub mod auxiliary_graphs {}

#[doc = include_str!("../../../book/src/source-selection.md")]
pub mod source_selection {}

#[doc = include_str!("../../../book/src/hardness.md")]
pub mod hardness {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
