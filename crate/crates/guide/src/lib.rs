//! The guide under `book/` as doc-tests.
//!
//! mdbook renders the chapters but cannot execute their code blocks
//! against the workspace crates, so this crate includes each chapter as
//! the documentation of an empty module and lets `cargo test --doc` do
//! the work. One module per chapter keeps test failures attributable to
//! their chapter.

#[doc = include_str!("../../../README.md")]
pub mod readme {}

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod chapter1_introduction {}

#[doc = include_str!("../../../book/src/automata.md")]
pub mod chapter2_automata {}

#[doc = include_str!("../../../book/src/synchronization.md")]
pub mod chapter3_synchronization {}

#[doc = include_str!("../../../book/src/reachability.md")]
pub mod chapter4_reachability {}

#[doc = include_str!("../../../book/src/criteria.md")]
pub mod chapter5_criteria {}

#[doc = include_str!("../../../book/src/families.md")]
pub mod chapter6_families {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod chapter7_cli {}

#[doc = include_str!("../../../book/src/formats.md")]
pub mod chapter8_formats {}
