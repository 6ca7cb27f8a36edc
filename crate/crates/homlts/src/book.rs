//! The guide chapters under `book/src/` are included here as module docs so
//! that `cargo test --doc` compiles and runs every code snippet in the book;
//! the book cannot drift from the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/getting-started.md")]
pub mod getting_started {}

#[doc = include_str!("../../../book/src/triple-systems.md")]
pub mod triple_systems {}

#[doc = include_str!("../../../book/src/representations.md")]
pub mod representations_chapter {}

#[doc = include_str!("../../../book/src/graded-bracket.md")]
pub mod graded_bracket_chapter {}

#[doc = include_str!("../../../book/src/cohomology.md")]
pub mod cohomology_chapter {}

#[doc = include_str!("../../../book/src/deformations.md")]
pub mod deformations_chapter {}

#[doc = include_str!("../../../book/src/extensions.md")]
pub mod extensions_chapter {}

#[doc = include_str!("../../../book/src/file-format.md")]
pub mod file_format {}
