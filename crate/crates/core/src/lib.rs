//! Exact decision procedures for Diophantine quantifier prefixes over plane
//! curves, with the computer-algebra substrate they run on.
//!
//! Quantifiers range over the positive integers `{1, 2, 3, ...}` throughout.

pub mod classify;
pub mod error;
pub mod jst;
pub mod newton;
pub mod parse;
pub mod poly;
pub mod prefix;
pub mod qx_roots;
pub mod search;
pub mod verdict;

pub use error::{Error, Result};
pub use parse::{parse, parse_in, print, ParseError, PolySource};
pub use poly::{Monomial, Poly, UniPoly, UnivariateView, Var};
