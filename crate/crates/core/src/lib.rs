// NaN must fail range checks, so negated comparisons are deliberate
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod elliptic;
pub mod error;
pub mod helicoid;
pub mod invariants;
pub mod mesh;
pub mod sine_gordon;
#[doc(hidden)]
pub mod oracle;
pub mod solver;

pub use error::{Error, ExcludedCase, Result};
