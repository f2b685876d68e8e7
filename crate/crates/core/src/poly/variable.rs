use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use crate::Error;

/// Polynomial variables. The derived order `t < q < u < y < z < x_0 < x_1 <
/// … < y_1 < y_2 < …` is the canonical order for storage and printing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    T,
    Q,
    U,
    Y,
    Z,
    /// `x_i`, `i ≥ 0`.
    X(u32),
    /// `y_i`, `i ≥ 1`.
    Yi(u32),
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::T => f.write_str("t"),
            Variable::Q => f.write_str("q"),
            Variable::U => f.write_str("u"),
            Variable::Y => f.write_str("y"),
            Variable::Z => f.write_str("z"),
            Variable::X(i) => write!(f, "x_{i}"),
            Variable::Yi(i) => write!(f, "y_{i}"),
        }
    }
}

impl FromStr for Variable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse { token: s.to_string() };
        Ok(match s {
            "t" => Variable::T,
            "q" => Variable::Q,
            "u" => Variable::U,
            "y" => Variable::Y,
            "z" => Variable::Z,
            _ => {
                let (head, idx) = s.split_once('_').ok_or_else(bad)?;
                let i: u32 = idx.parse().map_err(|_| bad())?;
                match head {
                    "x" => Variable::X(i),
                    "y" if i >= 1 => Variable::Yi(i),
                    _ => return Err(bad()),
                }
            }
        })
    }
}
