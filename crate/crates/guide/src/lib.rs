//! The chapters of the book in `book/src`, one module each, so that
//! `cargo test --doc -p altind-guide` runs every listing against the
//! current library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}
#[doc = include_str!("../../../book/src/independence-polynomial.md")]
pub mod independence_polynomial {}
#[doc = include_str!("../../../book/src/cycles.md")]
pub mod cycles {}
#[doc = include_str!("../../../book/src/decycling.md")]
pub mod decycling {}
#[doc = include_str!("../../../book/src/bounds.md")]
pub mod bounds {}
#[doc = include_str!("../../../book/src/constructions.md")]
pub mod constructions {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
