//! Exact arithmetic in cyclotomic fields: Zumbroich-basis representation,
//! Galois action, traces, and the `E(n)^k` text format.

pub mod cyclotomic;
pub mod nt;
pub mod parse;

pub use cyclotomic::{rat, ratio, root_trace, Cyclotomic, Rational};
pub use parse::{parse, print, ParseError};
