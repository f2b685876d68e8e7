use alloc::string::String;

use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("size must be at least 1")]
    EmptySize,
    #[error("not a permutation of 1..{n}: {reason}")]
    InvalidWord { n: usize, reason: String },
    #[error("value {value} is outside 1..={n}")]
    OutOfRange { value: i64, n: usize },
    #[error("refusing to materialize n = {n}: limit is {limit}")]
    SizeGuard { n: usize, limit: usize },
    #[error("cannot parse {token:?}")]
    Parse { token: String },
    #[error("triple ({0}, {1}, {2}) has repeated entries")]
    RepeatedTriple(i64, i64, i64),
    #[error("sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("exponent k_{index} = {value} exceeds bound {bound}")]
    ExponentBound { index: usize, value: u32, bound: u32 },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: Poly },
    #[error("{formula} is not defined for n = {n}")]
    FormulaRange { formula: String, n: usize },
}
