//! Verification suites and their JSON reports.
//!
//! Every check carries a unique id, a short anchor naming the relation it
//! covers, a pass/fail status and a rendered witness. Reports contain no
//! timestamps or timings, so the same flags always produce the same bytes.

mod suites;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Mode;

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SEED: u64 = 20_250_101;
pub const SEED_ENV: &str = "CONTEXTUALITY_LAB_SEED";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Environment {
    pub version: String,
    pub mode: Mode,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub summary: Summary,
    pub checks: Vec<Check>,
    pub environment: Environment,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Pm,
    Ghz,
    BellGhz,
    Operators,
    States,
    A3,
    Algebra,
    MultiSystem,
    Chsh,
    All,
}

impl Target {
    pub const ALL: [Target; 10] = [
        Target::Pm,
        Target::Ghz,
        Target::BellGhz,
        Target::Operators,
        Target::States,
        Target::A3,
        Target::Algebra,
        Target::MultiSystem,
        Target::Chsh,
        Target::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Pm => "pm",
            Target::Ghz => "ghz",
            Target::BellGhz => "bell-ghz",
            Target::Operators => "operators",
            Target::States => "states",
            Target::A3 => "a3",
            Target::Algebra => "algebra",
            Target::MultiSystem => "multi-system",
            Target::Chsh => "chsh",
            Target::All => "all",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = if s == "bell_ghz" { "bell-ghz" } else { s };
        Target::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| Error::UnknownTarget(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub mode: Mode,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { mode: Mode::Exact, seed: DEFAULT_SEED }
    }
}

/// Collects checks for one report.
#[derive(Debug, Default)]
pub(crate) struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    pub(crate) fn record(&mut self, id: impl Into<String>, anchor: &str, ok: bool, witness: impl Into<String>) {
        self.checks.push(Check {
            id: id.into(),
            anchor: anchor.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: witness.into(),
        });
    }

    /// Records a failed check when a suite step itself errors.
    pub(crate) fn record_result(&mut self, id: impl Into<String>, anchor: &str, result: Result<(bool, String)>) {
        match result {
            Ok((ok, witness)) => self.record(id, anchor, ok, witness),
            Err(e) => self.record(id, anchor, false, format!("error: {e}")),
        }
    }
}

pub fn run(target: Target, options: VerifyOptions) -> VerificationReport {
    let mut rec = Recorder::default();
    let parts: &[Target] = match target {
        Target::All => &[
            Target::Algebra,
            Target::MultiSystem,
            Target::Pm,
            Target::Ghz,
            Target::BellGhz,
            Target::Operators,
            Target::States,
            Target::A3,
            Target::Chsh,
        ],
        Target::Pm => &[Target::Pm],
        Target::Ghz => &[Target::Ghz],
        Target::BellGhz => &[Target::BellGhz],
        Target::Operators => &[Target::Operators],
        Target::States => &[Target::States],
        Target::A3 => &[Target::A3],
        Target::Algebra => &[Target::Algebra],
        Target::MultiSystem => &[Target::MultiSystem],
        Target::Chsh => &[Target::Chsh],
    };
    for part in parts {
        match part {
            Target::Algebra => suites::algebra(&mut rec, options),
            Target::MultiSystem => suites::multi_system(&mut rec, options),
            Target::Pm => suites::constraint_system(&mut rec, "pm", options),
            Target::Ghz => suites::constraint_system(&mut rec, "ghz", options),
            Target::BellGhz => suites::bell_ghz(&mut rec),
            Target::Operators => suites::operators(&mut rec),
            Target::States => suites::states(&mut rec, options),
            Target::A3 => suites::a3(&mut rec),
            Target::Chsh => suites::chsh(&mut rec),
            Target::All => unreachable!("expanded above"),
        }
    }
    let checks = rec.checks;
    let passed = checks.iter().filter(|c| c.status == Status::Pass).count();
    VerificationReport {
        schema: SCHEMA_VERSION,
        suite: target.name().to_string(),
        summary: Summary { total: checks.len(), passed, failed: checks.len() - passed },
        checks,
        environment: Environment {
            version: env!("CARGO_PKG_VERSION").to_string(),
            mode: options.mode,
            seed: options.seed,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn targets_parse() {
        assert_eq!("bell-ghz".parse::<Target>().unwrap(), Target::BellGhz);
        assert_eq!("bell_ghz".parse::<Target>().unwrap(), Target::BellGhz);
        assert_eq!("bogus".parse::<Target>(), Err(Error::UnknownTarget("bogus".into())));
    }

    #[test]
    fn pm_report_shape() {
        let r = run(Target::Pm, VerifyOptions::default());
        assert!(r.all_passed(), "{}", r.to_json());
        let count = |prefix: &str| r.checks.iter().filter(|c| c.id.starts_with(prefix)).count();
        assert_eq!(count("pm.operator."), 6);
        assert_eq!(count("pm.enumeration"), 1);
        assert_eq!(count("pm.vector.line."), 6);
        assert!(r.check("pm.enumeration").unwrap().witness.contains("0/512"));
    }

    #[test]
    fn all_suite_passes_in_both_modes_with_unique_ids() {
        for mode in [Mode::Exact, Mode::Approx] {
            let r = run(Target::All, VerifyOptions { mode, seed: 7 });
            let failed: Vec<_> = r.checks.iter().filter(|c| c.status == Status::Fail).collect();
            assert!(failed.is_empty(), "{failed:#?}");
            let ids: HashSet<_> = r.checks.iter().map(|c| &c.id).collect();
            assert_eq!(ids.len(), r.checks.len());
        }
    }
}
