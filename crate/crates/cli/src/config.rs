use std::fmt;

use semitight_core::formoracle::{DEFAULT_DEGREE_CAP, DEFAULT_WORD_CAP};
use semitight_core::rootdata::{CartanKind, CartanSpec, ReducedWord, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Table,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze { kind: CartanKind, lambda: Weight },
    Sweep { bounds: [i64; 5] },
    Crosscheck { lambdas: Vec<Weight> },
    Verma { kind: CartanKind, lambda: Weight, word1: ReducedWord, word2: ReducedWord },
}

/// A validated invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub max_degree: u64,
    pub max_words: u64,
    pub format: OutputFormat,
    pub jobs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            max_degree: DEFAULT_DEGREE_CAP,
            max_words: DEFAULT_WORD_CAP,
            format: OutputFormat::Json,
            jobs: default_jobs(),
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.max_degree == 0 || self.max_words == 0 || self.jobs == 0 {
            return Err(ConfigError("caps and job count must be positive".into()));
        }
        match &self.command {
            Command::Analyze { kind, lambda } => check_weight(*kind, lambda),
            Command::Sweep { bounds } => {
                if bounds.iter().any(|&b| b < 0) {
                    return Err(ConfigError("sweep bounds must be nonnegative".into()));
                }
                Ok(())
            }
            Command::Crosscheck { lambdas } => lambdas.iter().try_for_each(|l| check_weight(CartanKind::TypeA(5), l)),
            Command::Verma { kind, lambda, .. } => check_weight(*kind, lambda),
        }
    }
}

pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map(usize::from).unwrap_or(1)
}

fn check_weight(kind: CartanKind, lambda: &Weight) -> Result<(), ConfigError> {
    let rank = CartanSpec::new(kind).rank();
    if lambda.rank() != rank {
        return Err(ConfigError(format!("type {kind} needs {rank} lambda coordinates, got {}", lambda.rank())));
    }
    if !lambda.is_dominant() {
        return Err(ConfigError("lambda coordinates must be nonnegative".into()));
    }
    Ok(())
}

/// The types accepted on the command line.
pub fn parse_kind(s: &str) -> Result<CartanKind, ConfigError> {
    let kind: CartanKind = s.parse().map_err(|e| ConfigError(format!("{e}")))?;
    match kind {
        CartanKind::TypeA(2..=5) | CartanKind::TypeD4 => Ok(kind),
        _ => Err(ConfigError(format!("unsupported type `{s}`; expected one of A2, A3, A4, A5, D4"))),
    }
}

/// The pair of words used by `verma` when none is given: the fixed reduced
/// word of the type and its image under the diagram automorphism (type A)
/// or a second Coxeter-power word (type D4).
pub fn default_verma_words(kind: CartanKind) -> (ReducedWord, ReducedWord) {
    let cartan = CartanSpec::new(kind);
    let first = cartan.default_w0_word();
    let second = match kind {
        CartanKind::TypeA(n) => ReducedWord::new(first.letters().iter().map(|&i| n + 1 - i).collect()),
        CartanKind::TypeD4 => ReducedWord::new([1, 3, 4, 2].repeat(3)),
    };
    (first, second)
}

/// The small weights where the oracle and the closed form are compared by
/// default.
pub fn default_crosscheck_lambdas() -> Vec<Weight> {
    let mut out = vec![Weight::zero(5)];
    for k in 0..5 {
        let mut c = vec![0; 5];
        c[k] = 1;
        out.push(Weight::new(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_words_are_w0_words() {
        for kind in
            [CartanKind::TypeA(2), CartanKind::TypeA(3), CartanKind::TypeA(4), CartanKind::TypeA(5), CartanKind::TypeD4]
        {
            let cartan = CartanSpec::new(kind);
            let (w1, w2) = default_verma_words(kind);
            assert!(cartan.validate_w0_word(&w1), "{kind}");
            assert!(cartan.validate_w0_word(&w2), "{kind}");
            assert_ne!(w1, w2);
        }
        let (w1, w2) = default_verma_words(CartanKind::TypeA(5));
        assert_eq!(w1, ReducedWord::a5_first());
        assert_eq!(w2, ReducedWord::a5_second());
        let (w1, w2) = default_verma_words(CartanKind::TypeA(2));
        assert_eq!((w1.letters(), w2.letters()), (&[1, 2, 1][..], &[2, 1, 2][..]));
    }

    #[test]
    fn validation() {
        let ok = RunConfig::new(Command::Analyze { kind: CartanKind::TypeA(5), lambda: Weight::zero(5) });
        assert!(ok.validate().is_ok());
        let short = RunConfig::new(Command::Analyze { kind: CartanKind::TypeA(5), lambda: Weight::zero(4) });
        assert!(short.validate().is_err());
        let neg = RunConfig::new(Command::Analyze { kind: CartanKind::TypeD4, lambda: Weight::new(vec![0, -1, 0, 0]) });
        assert!(neg.validate().is_err());
        let mut zero_cap = ok.clone();
        zero_cap.max_degree = 0;
        assert!(zero_cap.validate().is_err());
    }

    #[test]
    fn kinds() {
        assert_eq!(parse_kind("A5"), Ok(CartanKind::TypeA(5)));
        assert_eq!(parse_kind("D4"), Ok(CartanKind::TypeD4));
        assert!(parse_kind("A6").is_err());
        assert!(parse_kind("A1").is_err());
    }
}
