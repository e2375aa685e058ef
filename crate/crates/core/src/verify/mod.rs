//! Exact verification suites over a constructed representation.
//!
//! Every check computes a residual (a matrix, a two-variable operator
//! polynomial, or a vector) that must vanish identically. A failing check
//! records the first nonzero residual entry as a witness. Errors raised while
//! assembling a residual are recorded as failures, not propagated.
//!
//! Results carry an `asserted` flag: checks of identities that are computed
//! for information only do not affect [`VerificationReport::passed`].

mod checks;
mod defining;
mod identities;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{BiPoly, OperatorPolynomial, SparseMatrix, SparseVector, Witness};
use crate::repbuild::Representation;

pub use checks::{check_branching, check_dimension, check_gln_specialization, check_highest_vector};
pub use defining::check_defining_relations;
pub use identities::verify_polynomial_identities;

/// A named group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Abc,
    Lemma22,
    Center,
    Defining,
    Highest,
    Dimension,
    Branching,
    Gln,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Abc,
        Suite::Lemma22,
        Suite::Center,
        Suite::Defining,
        Suite::Highest,
        Suite::Dimension,
        Suite::Branching,
        Suite::Gln,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Abc => "abc",
            Suite::Lemma22 => "lemma22",
            Suite::Center => "center",
            Suite::Defining => "defining",
            Suite::Highest => "highest",
            Suite::Dimension => "dimension",
            Suite::Branching => "branching",
            Suite::Gln => "gln",
        }
    }

    /// Parses a comma-separated suite list; `all` selects every suite.
    pub fn parse_list(list: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if name == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(name.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::Input("no suites selected".into()));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown suite '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one identity instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub params: BTreeMap<String, i64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub asserted: bool,
}

impl CheckResult {
    fn new(id: &str, params: &[(&str, usize)], failure: Option<Witness>) -> Self {
        let status = if failure.is_some() { Status::Fail } else { Status::Pass };
        Self {
            id: id.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v as i64)).collect(),
            status,
            witness: failure,
            detail: None,
            asserted: true,
        }
    }

    /// A check whose residual is a matrix.
    pub(crate) fn matrix(id: &str, params: &[(&str, usize)], residual: &SparseMatrix) -> Self {
        Self::new(id, params, matrix_witness(residual, 0))
    }

    /// A check whose residual is a one-variable operator polynomial.
    pub(crate) fn poly(id: &str, params: &[(&str, usize)], residual: &OperatorPolynomial) -> Self {
        Self::new(id, params, crate::exactalg::uni_witness(residual))
    }

    /// A check whose residual is a two-variable operator polynomial.
    pub(crate) fn bipoly(id: &str, params: &[(&str, usize)], residual: &BiPoly) -> Self {
        Self::new(id, params, residual.witness())
    }

    /// A check whose residual is a vector; the witness column is `column`.
    pub(crate) fn vector(id: &str, params: &[(&str, usize)], residual: &SparseVector, column: usize) -> Self {
        let w = residual.iter().next().map(|(row, v)| Witness {
            u_power: 0,
            v_power: 0,
            row,
            col: column,
            value: v.to_string(),
        });
        Self::new(id, params, w)
    }

    /// A boolean check with a textual explanation on failure.
    pub(crate) fn condition(id: &str, params: &[(&str, usize)], ok: bool, detail: impl FnOnce() -> String) -> Self {
        let mut out = Self::new(id, params, None);
        if !ok {
            out.status = Status::Fail;
            out.detail = Some(detail());
        }
        out
    }

    /// A check that could not be assembled.
    pub(crate) fn error(id: &str, params: &[(&str, usize)], err: &Error) -> Self {
        Self::condition(id, params, false, || err.to_string())
    }

    /// Marks the check as informational.
    pub(crate) fn observed(mut self) -> Self {
        self.asserted = false;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn matrix_witness(m: &SparseMatrix, u_power: usize) -> Option<Witness> {
    m.first_nonzero().map(|(row, col, value)| Witness { u_power, v_power: 0, row, col, value: value.to_string() })
}

/// Configuration echoed into a report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportConfig {
    pub pyramid: Vec<usize>,
    pub weights: BTreeMap<String, Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
}

impl ReportConfig {
    pub fn of(rep: &Representation, truncation: Option<usize>) -> Self {
        Self {
            pyramid: rep.pyramid().rows().to_vec(),
            weights: rep
                .spec()
                .grid()
                .iter()
                .enumerate()
                .map(|(i, row)| ((i + 1).to_string(), row.iter().map(|x| x.to_string()).collect()))
                .collect(),
            truncation,
        }
    }
}

/// Results of one suite on one representation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub config: ReportConfig,
    pub results: Vec<CheckResult>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub(crate) fn finish(
        suite: Suite,
        rep: &Representation,
        truncation: Option<usize>,
        results: Vec<CheckResult>,
        start: Instant,
    ) -> Self {
        Self {
            suite: suite.name().to_string(),
            config: ReportConfig::of(rep, truncation),
            results,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }

    /// Whether every asserted check passed.
    pub fn passed(&self) -> bool {
        self.results.iter().filter(|r| r.asserted).all(CheckResult::passed)
    }

    /// Asserted checks that failed.
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.asserted && !r.passed())
    }

    /// Informational checks.
    pub fn observations(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.asserted)
    }

    /// Number of asserted checks.
    pub fn asserted_count(&self) -> usize {
        self.results.iter().filter(|r| r.asserted).count()
    }
}

/// Runs one suite; `truncation` defaults to `2 N + 2`.
///
/// Fails only for `gln` on a pyramid that is not one column.
pub fn run_suite(rep: &Representation, suite: Suite, truncation: Option<usize>) -> Result<VerificationReport> {
    let order = truncation.unwrap_or_else(|| rep.default_truncation());
    Ok(match suite {
        Suite::Abc | Suite::Lemma22 | Suite::Center => verify_polynomial_identities(rep, suite, order),
        Suite::Defining => check_defining_relations(rep, order),
        Suite::Highest => check_highest_vector(rep, order),
        Suite::Dimension => check_dimension(rep),
        Suite::Branching => check_branching(rep),
        Suite::Gln => check_gln_specialization(rep)?,
    })
}

/// Runs several suites in order.
pub fn run_suites(
    rep: &Representation,
    suites: &[Suite],
    truncation: Option<usize>,
) -> Result<Vec<VerificationReport>> {
    suites.iter().map(|&s| run_suite(rep, s, truncation)).collect()
}

/// A deferred check, run on the representation's execution mode.
pub(crate) type Job<'a> = Box<dyn Fn() -> CheckResult + Send + Sync + 'a>;

pub(crate) fn run_jobs(rep: &Representation, jobs: Vec<Job<'_>>) -> Vec<CheckResult> {
    rep.execution().map(&jobs, |job| job())
}

/// Builds every operator, or reports why that failed.
pub(crate) fn construction(rep: &Representation) -> std::result::Result<(), Box<CheckResult>> {
    rep.build_all().map_err(|e| Box::new(CheckResult::error("construction", &[], &e)))
}
