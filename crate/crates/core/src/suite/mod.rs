//! Registered checks, grouped into suites, and the runner that turns them
//! into a report.

mod registry;
mod workbench;

use std::collections::BTreeMap;
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::algebra::{MultiPoly, RatFunc, Rational};
use crate::chow::{bundle_w_context, bundle_x_context, q6_context, q6_primitive_context, CycleClass};
use crate::report::{Check, Status, VerificationReport};

pub use registry::{registry, TOTAL_CHECKS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuiteName {
    All,
    Q6,
    Sec3,
    Sec4,
    Bundle,
}

impl SuiteName {
    pub const ALL: [SuiteName; 5] = [SuiteName::All, SuiteName::Q6, SuiteName::Sec3, SuiteName::Sec4, SuiteName::Bundle];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::All => "all",
            SuiteName::Q6 => "q6",
            SuiteName::Sec3 => "sec3",
            SuiteName::Sec4 => "sec4",
            SuiteName::Bundle => "bundle",
        }
    }

    fn contains(self, other: SuiteName) -> bool {
        self == SuiteName::All || self == other
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteName::ALL.into_iter().find(|n| n.as_str() == s).ok_or_else(|| format!("unknown suite {s}"))
    }
}

/// Result of one check before timing is attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub residual: Option<String>,
    pub witness: Option<BTreeMap<String, String>>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome { status: Status::Pass, residual: None, witness: None }
    }

    pub fn fail(residual: impl fmt::Display) -> Self {
        Outcome { status: Status::Fail, residual: Some(residual.to_string()), witness: None }
    }

    pub fn ledger(residual: impl fmt::Display) -> Self {
        Outcome { status: Status::Ledger, residual: Some(residual.to_string()), witness: None }
    }

    /// Pass if `ok`, otherwise fail; the witness is attached either way.
    pub fn expect(ok: bool, witness: &[(&str, String)]) -> Self {
        let o = Outcome { status: if ok { Status::Pass } else { Status::Fail }, residual: None, witness: None };
        witness.iter().fold(o, |o, (k, v)| o.with(k, v.clone()))
    }

    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.witness.get_or_insert_with(BTreeMap::new).insert(key.to_string(), value.to_string());
        self
    }

    /// Downgrades a pass to a failure.
    pub fn and(self, ok: bool, why: &str) -> Self {
        if ok || self.status == Status::Fail {
            self
        } else {
            Outcome { status: Status::Fail, residual: self.residual.or_else(|| Some(why.to_string())), ..self }
        }
    }
}

/// Values whose vanishing is a check.
pub trait Residual: fmt::Display + PartialEq {
    fn vanishes(&self) -> bool;
}

impl Residual for MultiPoly {
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

impl Residual for RatFunc {
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

impl Residual for Rational {
    fn vanishes(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

impl Residual for CycleClass {
    fn vanishes(&self) -> bool {
        self.is_formally_zero()
    }
}

/// Zero residual passes. A nonzero residual equal to the recorded one is a
/// ledger entry; anything else fails.
pub fn audit<T: Residual>(actual: &T, recorded: Option<&T>) -> Outcome {
    match recorded {
        None if actual.vanishes() => Outcome::pass(),
        Some(r) if actual == r && !r.vanishes() => Outcome::ledger(actual),
        _ => Outcome::fail(actual),
    }
}

pub type CheckFn = Box<dyn Fn() -> Outcome + Send + Sync>;

pub struct CheckDef {
    pub id: &'static str,
    pub paper_ref: &'static str,
    pub suite: SuiteName,
    pub run: CheckFn,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    /// run in order and stop after the first failure
    pub fail_fast: bool,
}

fn run_one(def: &CheckDef) -> Check {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(|| (def.run)())).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Outcome::fail(format!("panicked: {msg}"))
    });
    Check {
        id: def.id.to_string(),
        paper_ref: def.paper_ref.to_string(),
        status: outcome.status,
        residual: outcome.residual,
        witness: outcome.witness,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Fingerprints of the relation sets every check depends on.
pub fn context_hashes() -> BTreeMap<String, String> {
    [
        q6_context(),
        q6_primitive_context(),
        bundle_x_context(),
        bundle_w_context(),
    ]
    .iter()
    .map(|c| (c.name().to_string(), c.fingerprint()))
    .collect()
}

/// Runs every check of `name`; checks run concurrently unless failing fast,
/// and the report lists them sorted by id.
pub fn run_suite(name: SuiteName, opts: &SuiteOptions) -> VerificationReport {
    let mut defs: Vec<CheckDef> = registry().into_iter().filter(|d| name.contains(d.suite)).collect();
    defs.sort_by_key(|d| d.id);
    let checks: Vec<Check> = if opts.fail_fast {
        let mut out = Vec::new();
        for d in &defs {
            let c = run_one(d);
            let failed = c.status == Status::Fail;
            out.push(c);
            if failed {
                break;
            }
        }
        out
    } else {
        defs.par_iter().map(run_one).collect()
    };
    VerificationReport::new(name.as_str(), checks, context_hashes())
}
