use rayon::prelude::*;

use semitight_core::a5closed::{tightness_conditions, A5Error, A5Report};
use semitight_core::formoracle::{analyze_oracle, equal_by_pairing, OracleError, VerdictKind};
use semitight_core::rootdata::{CartanKind, CartanSpec, ReducedWord, Weight};

use crate::config::{Command, OutputFormat, RunConfig};
use crate::exit;
use crate::parallel;
use crate::report::{
    monomial_json, AnalyzeClosedForm, AnalyzeOracle, CrosscheckReport, CrosscheckRow, RatFuncJson, Report, SweepReport,
    SweepRowJson, VermaReport,
};

/// What a command produced: an optional report for stdout, diagnostics for
/// stderr, and the exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub report: Option<Report>,
    pub diagnostics: Vec<String>,
    pub status: i32,
}

impl CommandOutput {
    fn ok(report: Report) -> Self {
        Self { report: Some(report), diagnostics: Vec::new(), status: exit::OK }
    }

    fn failed(status: i32, message: impl Into<String>) -> Self {
        Self { report: None, diagnostics: vec![message.into()], status }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match (&self.report, format) {
            (Some(r), OutputFormat::Json) => r.to_json(),
            (Some(r), OutputFormat::Table) => r.to_table(),
            (None, _) => String::new(),
        }
    }
}

pub fn execute(cfg: &RunConfig) -> CommandOutput {
    if let Err(e) = cfg.validate() {
        return CommandOutput::failed(exit::USAGE, e.to_string());
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build() {
        Ok(p) => p,
        Err(e) => return CommandOutput::failed(exit::USAGE, format!("cannot start worker pool: {e}")),
    };
    pool.install(|| match &cfg.command {
        Command::Analyze { kind: CartanKind::TypeA(5), lambda } => analyze_a5(lambda),
        Command::Analyze { kind, lambda } => analyze_oracle_cmd(*kind, lambda, cfg.max_degree),
        Command::Sweep { bounds } => sweep(*bounds),
        Command::Crosscheck { lambdas } => crosscheck(lambdas, cfg.max_degree),
        Command::Verma { kind, lambda, word1, word2 } => verma(*kind, lambda, word1, word2, cfg.max_words),
    })
}

fn oracle_status(e: &OracleError) -> i32 {
    match e {
        OracleError::ConstantTermNotPositiveInteger(_) => exit::DISAGREEMENT,
        _ => exit::USAGE,
    }
}

fn closed_form_report(r: &A5Report) -> AnalyzeClosedForm {
    let lam: [i64; 5] = r.lambda.coords().try_into().expect("rank 5");
    AnalyzeClosedForm {
        command: "analyze",
        kind: "A5".into(),
        lambda: r.lambda.coords().to_vec(),
        source: r.verdict.source.to_string(),
        verdict: r.verdict.kind.to_string(),
        constant_term: r.zero_count.to_string(),
        zero_count: r.zero_count,
        domain_size: r.domain_size,
        conditions_tight: r.conditions_tight,
        conditions_met: tightness_conditions(lam),
        zero_set: r.zero_set.as_ref().map(|zs| zs.iter().map(|z| z.to_array()).collect()),
    }
}

fn analyze_a5(lambda: &Weight) -> CommandOutput {
    match parallel::classify_a5(lambda) {
        Ok(r) => CommandOutput::ok(Report::ClosedForm(closed_form_report(&r))),
        Err(e @ A5Error::ConditionMismatch { .. }) => CommandOutput::failed(exit::DISAGREEMENT, e.to_string()),
        Err(e) => CommandOutput::failed(exit::USAGE, e.to_string()),
    }
}

fn analyze_oracle_cmd(kind: CartanKind, lambda: &Weight, max_degree: u64) -> CommandOutput {
    let cartan = CartanSpec::new(kind);
    let word = cartan.default_w0_word();
    let run = || -> Result<AnalyzeOracle, OracleError> {
        let exponents = word.exponent_sequence(lambda, &cartan)?;
        let m = word.xlambda(lambda, &cartan)?;
        let r = analyze_oracle(&cartan, &m, max_degree)?;
        Ok(AnalyzeOracle {
            command: "analyze",
            kind: kind.to_string(),
            lambda: lambda.coords().to_vec(),
            word: word.letters().to_vec(),
            exponents,
            monomial: monomial_json(&m),
            degree: m.degree(),
            source: r.verdict.source.to_string(),
            verdict: r.verdict.kind.to_string(),
            regular: r.verdict.constant_term.is_some(),
            constant_term: r.verdict.constant_term.as_ref().map(ToString::to_string),
            form: RatFuncJson::from(&r.form),
        })
    };
    match run() {
        Ok(r) => CommandOutput::ok(Report::Oracle(r)),
        Err(e) => CommandOutput::failed(oracle_status(&e), e.to_string()),
    }
}

fn sweep(bounds: [i64; 5]) -> CommandOutput {
    let rows = parallel::sweep(&parallel::lambda_box(bounds));
    let mut diagnostics = Vec::new();
    let rows: Vec<SweepRowJson> = rows
        .iter()
        .map(|r| {
            if !r.agrees() {
                diagnostics.push(format!(
                    "lambda {:?}: zero count {}, min xi {}, conditions {}",
                    r.lambda, r.zero_count, r.min_xi, r.conditions_tight
                ));
            }
            SweepRowJson {
                lambda: r.lambda,
                zero_count: r.zero_count,
                tight: r.tight(),
                conditions_tight: r.conditions_tight,
                agree: r.agrees(),
            }
        })
        .collect();
    let all_agree = diagnostics.is_empty();
    let status = if all_agree { exit::OK } else { exit::DISAGREEMENT };
    CommandOutput {
        report: Some(Report::Sweep(SweepReport { command: "sweep", bounds, rows, all_agree })),
        diagnostics,
        status,
    }
}

fn crosscheck_row(lambda: &Weight, max_degree: u64) -> Result<CrosscheckRow, String> {
    let a5 = CartanSpec::type_a(5);
    let lam: [i64; 5] = lambda.coords().try_into().map_err(|_| format!("({lambda}) is not a rank-5 weight"))?;
    let m = ReducedWord::a5_first().xlambda(lambda, &a5).map_err(|e| e.to_string())?;
    let closed = parallel::count_xi_zero(lam);
    let mut row = CrosscheckRow {
        lambda: lam.to_vec(),
        degree: m.degree(),
        oracle_status: "ok".into(),
        oracle_constant_term: None,
        closed_form_count: closed,
        equal: None,
    };
    match analyze_oracle(&a5, &m, max_degree) {
        Ok(r) => {
            if r.verdict.kind == VerdictKind::NotSemitight {
                row.oracle_status = "irregular".into();
                row.equal = Some(false);
            } else {
                row.oracle_constant_term = r.verdict.constant_term.as_ref().map(ToString::to_string);
                row.equal = Some(r.verdict.constant_integer() == Some(closed));
            }
        }
        Err(OracleError::DegreeCapExceeded { .. }) => row.oracle_status = "capped".into(),
        Err(e @ OracleError::ConstantTermNotPositiveInteger(_)) => {
            row.oracle_status = "irregular".into();
            row.oracle_constant_term = Some(e.to_string());
            row.equal = Some(false);
        }
        Err(e) => return Err(e.to_string()),
    }
    Ok(row)
}

fn crosscheck(lambdas: &[Weight], max_degree: u64) -> CommandOutput {
    let rows: Result<Vec<_>, String> = lambdas.par_iter().map(|l| crosscheck_row(l, max_degree)).collect();
    let rows = match rows {
        Ok(r) => r,
        Err(e) => return CommandOutput::failed(exit::USAGE, e),
    };
    let diagnostics: Vec<String> = rows
        .iter()
        .filter(|r| r.equal == Some(false))
        .map(|r| {
            format!(
                "lambda {:?}: oracle {} vs closed form {}",
                r.lambda,
                r.oracle_constant_term.as_deref().unwrap_or(&r.oracle_status),
                r.closed_form_count
            )
        })
        .collect();
    let all_equal = diagnostics.is_empty();
    let status = if all_equal { exit::OK } else { exit::DISAGREEMENT };
    let report = CrosscheckReport { command: "crosscheck", max_degree, rows, all_equal };
    CommandOutput { report: Some(Report::Crosscheck(report)), diagnostics, status }
}

fn verma(kind: CartanKind, lambda: &Weight, w1: &ReducedWord, w2: &ReducedWord, max_words: u64) -> CommandOutput {
    let cartan = CartanSpec::new(kind);
    for w in [w1, w2] {
        if !cartan.validate_w0_word(w) {
            return CommandOutput::failed(
                exit::USAGE,
                format!("({w}) is not a reduced word for the longest element of {kind}"),
            );
        }
    }
    let run = || -> Result<VermaReport, OracleError> {
        let m1 = w1.xlambda(lambda, &cartan)?;
        let m2 = w2.xlambda(lambda, &cartan)?;
        let equal = equal_by_pairing(&cartan, &m1, &m2, max_words)?;
        Ok(VermaReport {
            command: "verma",
            kind: kind.to_string(),
            lambda: lambda.coords().to_vec(),
            word1: w1.letters().to_vec(),
            word2: w2.letters().to_vec(),
            monomial1: monomial_json(&m1),
            monomial2: monomial_json(&m2),
            weight: m1.weight(&cartan)?.coords().to_vec(),
            equal,
        })
    };
    match run() {
        Ok(r) if r.equal => CommandOutput::ok(Report::Verma(r)),
        Ok(r) => CommandOutput {
            diagnostics: vec![format!("X_lambda differ for words ({w1}) and ({w2})")],
            report: Some(Report::Verma(r)),
            status: exit::DISAGREEMENT,
        },
        Err(e) => CommandOutput::failed(oracle_status(&e), e.to_string()),
    }
}
