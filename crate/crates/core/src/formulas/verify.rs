use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use super::FormulaId;
use crate::poly::Poly;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Equal,
    Mismatch,
    OutOfStatedRange,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Equal => "EQUAL",
            Status::Mismatch => "MISMATCH",
            Status::OutOfStatedRange => "OUT_OF_STATED_RANGE",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One comparison: `lhs` is the brute-force enumerator, `rhs` the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRow {
    pub formula: String,
    pub n: usize,
    pub status: Status,
    pub lhs: Poly,
    pub rhs: Option<Poly>,
    /// `lhs - rhs`, when `rhs` could be computed.
    pub diff: Option<Poly>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub rows: Vec<VerificationRow>,
}

impl VerificationReport {
    pub fn has_mismatch(&self) -> bool {
        self.rows.iter().any(|r| r.status == Status::Mismatch)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.rows.extend(other.rows);
    }
}

/// Compares a closed form against an enumerator for every `n` in `range`.
///
/// A failing closed-form computation (e.g. an inexact division) becomes a
/// `MISMATCH` row carrying the error text; nothing panics.
pub fn verify_custom(
    formula: &str,
    range: RangeInclusive<usize>,
    stated_min: usize,
    closed: impl Fn(usize) -> Result<Poly>,
    brute: impl Fn(usize) -> Result<Poly>,
) -> Result<VerificationReport> {
    let mut rows = Vec::new();
    for n in range {
        let lhs = brute(n)?;
        let row = match closed(n) {
            Ok(rhs) => {
                let diff = &lhs - &rhs;
                let (status, note) = if n < stated_min {
                    (
                        Status::OutOfStatedRange,
                        Some(format!(
                            "formula range starts at {stated_min}; right side evaluated with prod_(i=a)^b = 1/prod_(i=b+1)^(a-1) for b < a-1"
                        )),
                    )
                } else if diff.is_zero() {
                    (Status::Equal, None)
                } else {
                    (Status::Mismatch, None)
                };
                VerificationRow {
                    formula: formula.to_string(),
                    n,
                    status,
                    lhs,
                    rhs: Some(rhs),
                    diff: Some(diff),
                    note,
                }
            }
            Err(e) => VerificationRow {
                formula: formula.to_string(),
                n,
                status: if n < stated_min { Status::OutOfStatedRange } else { Status::Mismatch },
                lhs,
                rhs: None,
                diff: None,
                note: Some(e.to_string()),
            },
        };
        rows.push(row);
    }
    Ok(VerificationReport { rows })
}

/// Verifies `id` for each `n` in `range` at or above its domain minimum.
pub fn verify(id: FormulaId, range: RangeInclusive<usize>) -> Result<VerificationReport> {
    let lo = (*range.start()).max(id.domain_min());
    let name = id.to_string();
    let mut report = verify_custom(&name, lo..=*range.end(), id.stated_min(), |n| id.closed_form(n), |n| id.brute_force(n))?;
    for row in &mut report.rows {
        if let Some(literal) = id.literal_reading(row.n) {
            let verdict = if literal == row.lhs { "agrees" } else { "disagrees" };
            let text = format!("reading empty products as 1 gives {literal}, which {verdict} with the enumerator");
            row.note = Some(match row.note.take() {
                Some(prev) => format!("{prev}; {text}"),
                None => text,
            });
        }
        let (Some(rhs), Some(alt)) = (&row.rhs, id.alternate_form(row.n)) else {
            continue;
        };
        if alt != *rhs {
            row.status = Status::Mismatch;
            row.note = Some(format!("even-n form disagrees: {alt}"));
        } else {
            row.note = Some("even-n form agrees".into());
        }
    }
    Ok(report)
}
