//! Exact closed forms and truncated power-series solutions of the
//! functional equations counting 12312-avoiders by crossings and
//! {12312, 121323}-avoiders.

pub mod formulas;
pub mod power;
pub mod solve;

use serde::Serialize;

pub use formulas::{
    binom, catalan_k, closed_f, closed_g_coeff, closed_g_polynomial, corollary_identity_check,
    crossing_refined_12312, narayana, refined_double, refined_double_by_narayana,
};
pub use power::{BivariateSeries, UnivariateSeries};
pub use solve::{solve_b, solve_f, solve_f_sqrt, solve_g, Residuals};

/// One emitted count; `value` is a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaValue {
    pub formula: String,
    pub n: u64,
    pub m: Option<u64>,
    pub value: String,
}

impl FormulaValue {
    pub fn new(formula: &str, n: u64, m: Option<u64>, value: impl ToString) -> Self {
        FormulaValue { formula: formula.to_string(), n, m, value: value.to_string() }
    }
}
