//! The book under `book/` is the guided tour of the `wstrass` library.
//! mdbook does not run snippets as tests, so this crate includes every
//! chapter as module documentation and lets `cargo test --doc` execute the
//! code blocks. One module per chapter keeps a failing snippet traceable to
//! its source file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/curves-and-divisors.md")]
pub mod curves_and_divisors {}

#[doc = include_str!("../../../book/src/gap-sequences.md")]
pub mod gap_sequences {}

#[doc = include_str!("../../../book/src/wronskians.md")]
pub mod wronskians {}

#[doc = include_str!("../../../book/src/plane-quartics.md")]
pub mod plane_quartics {}

#[doc = include_str!("../../../book/src/bounds.md")]
pub mod bounds {}
