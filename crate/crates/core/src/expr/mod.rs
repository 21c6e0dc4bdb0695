//! The eta-quotient expression language: `f_r` atoms, `q`-powers, integer
//! scalars, arithmetic, and the `extract`, `inflate` and `mod` functions.
//!
//! ```
//! use qseries::expr::{evaluate, parse};
//!
//! let a = parse("f3/(f1*f6)").unwrap();
//! let s = evaluate(&a, 4).unwrap();
//! assert_eq!(s.to_string(), "1 + q + 2q^2 + 2q^3 + 4q^4 + O(q^5)");
//! ```

mod ast;
mod eval;
mod lexer;
mod parser;

pub use ast::{EtaAtom, Expr, MAX_EXPONENT};
pub use eval::evaluate;
pub use parser::parse;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {expected}, found {found}")]
    Syntax { offset: usize, expected: String, found: String },
    #[error("invalid argument at byte {offset}: {message}")]
    Domain { offset: usize, message: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::Domain { offset, .. } => *offset,
        }
    }
}
