use arcperm_core::formulas::{VerificationReport, VerificationRow};
use arcperm_core::{Poly, StatProfile};
use serde::Serialize;
use serde_json::{Map, Value};

/// One polynomial term: decimal coefficient and `{variable: exponent}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermJson {
    pub coeff: String,
    pub monomial: Map<String, Value>,
}

/// Terms in printing order (ascending degree, then the monomial order).
pub fn poly_json(p: &Poly) -> Vec<TermJson> {
    p.terms_graded()
        .into_iter()
        .map(|(m, c)| TermJson {
            coeff: c.to_string(),
            monomial: m
                .factors()
                .iter()
                .map(|&(v, e)| (v.to_string(), Value::from(e)))
                .collect(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatProfileJson {
    pub des_set: Vec<usize>,
    pub des: usize,
    pub maj: usize,
    pub inv: usize,
    pub neg_set: Vec<usize>,
    pub neg: usize,
    pub fmaj: usize,
    pub fdes: usize,
    pub sign: i8,
    pub sign_abs: i8,
    pub neg_parity: i8,
}

impl From<&StatProfile> for StatProfileJson {
    fn from(s: &StatProfile) -> Self {
        StatProfileJson {
            des_set: s.des_set.clone(),
            des: s.des,
            maj: s.maj,
            inv: s.inv,
            neg_set: s.neg_set.clone(),
            neg: s.neg,
            fmaj: s.fmaj,
            fdes: s.fdes,
            sign: s.sign,
            sign_abs: s.sign_abs,
            neg_parity: s.neg_parity,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowJson {
    pub formula: String,
    pub n: usize,
    pub status: &'static str,
    pub lhs: Vec<TermJson>,
    pub rhs: Option<Vec<TermJson>>,
    pub diff: Option<Vec<TermJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&VerificationRow> for RowJson {
    fn from(r: &VerificationRow) -> Self {
        RowJson {
            formula: r.formula.clone(),
            n: r.n,
            status: r.status.as_str(),
            lhs: poly_json(&r.lhs),
            rhs: r.rhs.as_ref().map(poly_json),
            diff: r.diff.as_ref().map(poly_json),
            note: r.note.clone(),
        }
    }
}

pub fn report_json(report: &VerificationReport) -> Vec<RowJson> {
    report.rows.iter().map(RowJson::from).collect()
}
