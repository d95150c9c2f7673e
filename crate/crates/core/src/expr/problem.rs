//! Problem files: `key: value` lines, `#` comments.

use std::path::Path;

use thiserror::Error;

use super::parse::{parse_expr_at, EvalError, ParseError};
use crate::algebra::{MultiPoly, RatFunc, Var};

pub const DEFAULT_SAMPLES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    /// Polynomial in (z, w, wp) with positive degree in wp.
    pub equation: MultiPoly,
    pub parametrization: Option<(RatFunc, RatFunc)>,
    pub samples: usize,
    pub seed: u64,
}

#[derive(Debug, Error)]
pub enum ProblemError {
    #[error("cannot read problem file: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: expected 'key: value'")]
    Malformed { line: usize },
    #[error("line {line}: unknown key '{key}'")]
    UnknownKey { key: String, line: usize },
    #[error("line {line}: duplicate key '{key}'")]
    DuplicateKey { key: String, line: usize },
    #[error("missing required key 'equation'")]
    MissingEquation,
    #[error("parametrization needs both param_w and param_wp")]
    IncompleteParametrization,
    #[error("{key}: {source}")]
    Parse { key: String, source: ParseError },
    #[error("line {line}: {key}: {source}")]
    Eval { key: String, line: usize, source: EvalError },
    #[error("{key} may only use the variables {allowed}")]
    Variables { key: String, allowed: String },
    #[error("equation has degree 0 in wp")]
    NoDerivative,
    #[error("{key} does not depend on t")]
    ConstantInT { key: String },
    #[error("line {line}: {key} must be {what}")]
    BadValue { key: String, line: usize, what: &'static str },
}

const KEYS: [&str; 5] = ["equation", "param_w", "param_wp", "samples", "seed"];

fn check_vars(r: &RatFunc, key: &str, allowed: &[Var]) -> Result<(), ProblemError> {
    if r.vars().iter().all(|v| allowed.contains(v)) {
        Ok(())
    } else {
        let names: Vec<&str> = allowed.iter().map(|v| v.name()).collect();
        Err(ProblemError::Variables { key: key.to_string(), allowed: names.join(", ") })
    }
}

impl Problem {
    pub fn new(equation: MultiPoly) -> Result<Self, ProblemError> {
        if equation.degree(Var::Wp) == 0 {
            return Err(ProblemError::NoDerivative);
        }
        Ok(Problem { equation, parametrization: None, samples: DEFAULT_SAMPLES, seed: 0 })
    }

    pub fn with_parametrization(mut self, r1: RatFunc, r2: RatFunc) -> Result<Self, ProblemError> {
        for (k, r) in [("param_w", &r1), ("param_wp", &r2)] {
            check_vars(r, k, &[Var::T, Var::Z])?;
            if !r.involves(Var::T) {
                return Err(ProblemError::ConstantInT { key: k.to_string() });
            }
        }
        self.parametrization = Some((r1, r2));
        Ok(self)
    }

    pub fn parse(text: &str) -> Result<Self, ProblemError> {
        let mut values: Vec<(&str, usize, usize, &str)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let Some(colon) = raw.find(':') else {
                return Err(ProblemError::Malformed { line });
            };
            let key = raw[..colon].trim();
            if !KEYS.contains(&key) {
                return Err(ProblemError::UnknownKey { key: key.to_string(), line });
            }
            if values.iter().any(|(k, ..)| *k == key) {
                return Err(ProblemError::DuplicateKey { key: key.to_string(), line });
            }
            values.push((key, line, colon + 2, &raw[colon + 1..]));
        }
        let get = |k: &str| values.iter().find(|(key, ..)| *key == k);
        let expr = |k: &str| -> Result<Option<RatFunc>, ProblemError> {
            let Some(&(key, line, col, v)) = get(k) else {
                return Ok(None);
            };
            let e = parse_expr_at(v, line, col)
                .map_err(|source| ProblemError::Parse { key: key.to_string(), source })?;
            let r = e
                .to_ratfunc()
                .map_err(|source| ProblemError::Eval { key: key.to_string(), line, source })?;
            Ok(Some(r))
        };
        let eq = expr("equation")?.ok_or(ProblemError::MissingEquation)?;
        check_vars(&eq, "equation", &[Var::Z, Var::W, Var::Wp])?;
        let mut p = Problem::new(eq.num().clone())?;
        match (expr("param_w")?, expr("param_wp")?) {
            (Some(r1), Some(r2)) => p = p.with_parametrization(r1, r2)?,
            (None, None) => {}
            _ => return Err(ProblemError::IncompleteParametrization),
        }
        if let Some(&(key, line, _, v)) = get("samples") {
            p.samples = v
                .trim()
                .parse()
                .ok()
                .filter(|&n: &usize| n > 0)
                .ok_or(ProblemError::BadValue { key: key.to_string(), line, what: "a positive integer" })?;
        }
        if let Some(&(key, line, _, v)) = get("seed") {
            p.seed = v
                .trim()
                .parse()
                .map_err(|_| ProblemError::BadValue { key: key.to_string(), line, what: "an unsigned integer" })?;
        }
        Ok(p)
    }
}

pub fn load_problem(path: impl AsRef<Path>) -> Result<Problem, ProblemError> {
    let text = std::fs::read_to_string(path)?;
    Problem::parse(&text)
}
