//! Serializable reports and their table renderings.
//!
//! Struct field order fixes the JSON key order, and polynomials are rendered
//! through their `Display` normal form, so equal inputs give equal bytes.

use std::fmt::Write as _;

use serde::Serialize;

use semitight_core::qlaurent::RatFunc;
use semitight_core::rootdata::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatFuncJson {
    pub num: String,
    pub den: String,
}

impl From<&RatFunc> for RatFuncJson {
    fn from(f: &RatFunc) -> Self {
        Self { num: f.numerator().to_string(), den: f.denominator().to_string() }
    }
}

/// `[[i, a], ...]`.
pub fn monomial_json(m: &Monomial) -> Vec<[u64; 2]> {
    m.factors().iter().map(|&(i, a)| [i as u64, u64::from(a)]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalyzeClosedForm {
    pub command: &'static str,
    #[serde(rename = "type")]
    pub kind: String,
    pub lambda: Vec<i64>,
    pub source: String,
    pub verdict: String,
    pub constant_term: String,
    pub zero_count: u64,
    pub domain_size: u64,
    pub conditions_tight: bool,
    pub conditions_met: Vec<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero_set: Option<Vec<[i64; 10]>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalyzeOracle {
    pub command: &'static str,
    #[serde(rename = "type")]
    pub kind: String,
    pub lambda: Vec<i64>,
    pub word: Vec<usize>,
    pub exponents: Vec<u32>,
    pub monomial: Vec<[u64; 2]>,
    pub degree: u64,
    pub source: String,
    pub verdict: String,
    pub regular: bool,
    pub constant_term: Option<String>,
    pub form: RatFuncJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRowJson {
    pub lambda: [i64; 5],
    pub zero_count: u64,
    pub tight: bool,
    pub conditions_tight: bool,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub command: &'static str,
    pub bounds: [i64; 5],
    pub rows: Vec<SweepRowJson>,
    pub all_agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckRow {
    pub lambda: Vec<i64>,
    pub degree: u64,
    /// `"ok"`, `"capped"`, or `"irregular"`.
    pub oracle_status: String,
    pub oracle_constant_term: Option<String>,
    pub closed_form_count: u64,
    pub equal: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub command: &'static str,
    pub max_degree: u64,
    pub rows: Vec<CrosscheckRow>,
    pub all_equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VermaReport {
    pub command: &'static str,
    #[serde(rename = "type")]
    pub kind: String,
    pub lambda: Vec<i64>,
    pub word1: Vec<usize>,
    pub word2: Vec<usize>,
    pub monomial1: Vec<[u64; 2]>,
    pub monomial2: Vec<[u64; 2]>,
    pub weight: Vec<i64>,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Report {
    ClosedForm(AnalyzeClosedForm),
    Oracle(AnalyzeOracle),
    Sweep(SweepReport),
    Crosscheck(CrosscheckReport),
    Verma(VermaReport),
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn pairs(m: &[[u64; 2]]) -> String {
    if m.is_empty() {
        return "1".into();
    }
    m.iter().map(|[i, a]| format!("E{i}^({a})")).collect::<Vec<_>>().join(" ")
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        match self {
            Report::ClosedForm(r) => {
                let _ = writeln!(out, "type           {}", r.kind);
                let _ = writeln!(out, "lambda         ({})", join(&r.lambda));
                let _ = writeln!(out, "source         {}", r.source);
                let _ = writeln!(out, "verdict        {}", r.verdict);
                let _ = writeln!(out, "constant term  {}", r.constant_term);
                let _ = writeln!(out, "zero count     {}", r.zero_count);
                let _ = writeln!(out, "domain size    {}", r.domain_size);
                let _ = writeln!(out, "conditions     {} {:?}", r.conditions_tight, r.conditions_met);
                if let Some(zs) = &r.zero_set {
                    let _ = writeln!(out, "zero set       z21 z22 z23 z31 z32 z33 z34 z41 z42 z43");
                    for z in zs {
                        let _ = writeln!(out, "               {}", z.map(|x| format!("{x:>3}")).join(" "));
                    }
                }
            }
            Report::Oracle(r) => {
                let _ = writeln!(out, "type           {}", r.kind);
                let _ = writeln!(out, "lambda         ({})", join(&r.lambda));
                let _ = writeln!(out, "word           ({})", join(&r.word));
                let _ = writeln!(out, "monomial       {}", pairs(&r.monomial));
                let _ = writeln!(out, "degree         {}", r.degree);
                let _ = writeln!(out, "source         {}", r.source);
                let _ = writeln!(out, "verdict        {}", r.verdict);
                let _ = writeln!(out, "constant term  {}", r.constant_term.as_deref().unwrap_or("-"));
                let _ = writeln!(out, "(X, X)         ({}) / ({})", r.form.num, r.form.den);
            }
            Report::Sweep(r) => {
                let _ = writeln!(out, "{:<13} {:>6} {:>6} {:>6} {:>6}", "lambda", "count", "tight", "cond", "agree");
                for row in &r.rows {
                    let _ = writeln!(
                        out,
                        "{:<13} {:>6} {:>6} {:>6} {:>6}",
                        format!("({})", join(&row.lambda)),
                        row.zero_count,
                        row.tight,
                        row.conditions_tight,
                        row.agree
                    );
                }
                let _ = writeln!(out, "rows {}  all agree {}", r.rows.len(), r.all_agree);
            }
            Report::Crosscheck(r) => {
                let _ = writeln!(
                    out,
                    "{:<13} {:>6} {:>9} {:>8} {:>8} {:>6}",
                    "lambda", "degree", "status", "oracle", "closed", "equal"
                );
                for row in &r.rows {
                    let _ = writeln!(
                        out,
                        "{:<13} {:>6} {:>9} {:>8} {:>8} {:>6}",
                        format!("({})", join(&row.lambda)),
                        row.degree,
                        row.oracle_status,
                        row.oracle_constant_term.as_deref().unwrap_or("-"),
                        row.closed_form_count,
                        row.equal.map_or("-".to_string(), |e| e.to_string())
                    );
                }
                let _ = writeln!(out, "all equal {}", r.all_equal);
            }
            Report::Verma(r) => {
                let _ = writeln!(out, "type       {}", r.kind);
                let _ = writeln!(out, "lambda     ({})", join(&r.lambda));
                let _ = writeln!(out, "word 1     ({})", join(&r.word1));
                let _ = writeln!(out, "word 2     ({})", join(&r.word2));
                let _ = writeln!(out, "X_lambda   {}", pairs(&r.monomial1));
                let _ = writeln!(out, "X'_lambda  {}", pairs(&r.monomial2));
                let _ = writeln!(out, "weight     ({})", join(&r.weight));
                let _ = writeln!(out, "equal      {}", r.equal);
            }
        }
        out
    }
}
