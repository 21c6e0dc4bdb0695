//! Exact truncated power series in `q`, an expression language for
//! eta-quotients built from `f_r = (1 - q^r)(1 - q^{2r})...`, partition
//! counting oracles, and a harness that checks q-series identities and
//! congruences coefficient by coefficient.
//!
//! ```
//! use qseries::expr::{evaluate, parse};
//! use qseries::oracles::p_oracle;
//!
//! let s = evaluate(&parse("1/f1").unwrap(), 10).unwrap();
//! let p = p_oracle(10);
//! for n in 0..=10 {
//!     assert_eq!(s.coeff(n).unwrap(), &p.values()[n].clone().into());
//! }
//! ```
//!
//! All checks are finite: a passing report means the identity holds
//! through the reported order.

pub mod cli;
pub mod corpus;
pub mod eta;
pub mod expr;
pub mod oracles;
pub mod series;
pub mod verify;

pub use expr::{evaluate, parse, Expr};
pub use series::{Series, SeriesError};

/// The identity corpus shipped with the crate.
pub const SHIPPED_CORPUS: &str = include_str!("../corpus/identities.corpus");
