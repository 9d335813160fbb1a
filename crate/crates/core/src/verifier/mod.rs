//! Exhaustive sweeps over bounded parameter ranges that re-check the
//! inequalities and equality classifications the engine relies on.

mod bounds;
mod matrix;
mod params;
mod signed;
mod young;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use bounds::SpaceFamily;
pub use matrix::exact_rank;
pub use params::SweepParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("{0}")]
    BadRange(String),
    #[error("thread pool: {0}")]
    Pool(String),
}

/// The statement a sweep checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// l + q >= |lambda|(a+b)/(ab) on Gr(a, a+b).
    GrassmannianLower,
    /// l + q <= |lambda| for l, q > 0 on Gr(a, a+b), equality only on hooks.
    GrassmannianUpper,
    LagrangianLower,
    LagrangianUpper,
    SpinorLower,
    SpinorUpper,
    /// l + q >= p · index / dim for every nonzero group with q < dim.
    SlopeBound,
    /// Oracle agreement across isomorphic catalog members.
    Isomorphisms,
    SerreDuality,
    /// Rank-one skew-plus-diagonal integer matrices.
    RankOneMatrices,
}

impl Claim {
    pub const ALL: [Claim; 10] = [
        Claim::GrassmannianLower,
        Claim::GrassmannianUpper,
        Claim::LagrangianLower,
        Claim::LagrangianUpper,
        Claim::SpinorLower,
        Claim::SpinorUpper,
        Claim::SlopeBound,
        Claim::Isomorphisms,
        Claim::SerreDuality,
        Claim::RankOneMatrices,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::GrassmannianLower => "grassmannian-lower",
            Claim::GrassmannianUpper => "grassmannian-upper",
            Claim::LagrangianLower => "lagrangian-lower",
            Claim::LagrangianUpper => "lagrangian-upper",
            Claim::SpinorLower => "spinor-lower",
            Claim::SpinorUpper => "spinor-upper",
            Claim::SlopeBound => "slope-bound",
            Claim::Isomorphisms => "isomorphisms",
            Claim::SerreDuality => "serre-duality",
            Claim::RankOneMatrices => "rank-one-matrices",
        }
    }

    /// Short numeric tag accepted on the command line.
    pub fn tag(self) -> &'static str {
        match self {
            Claim::GrassmannianLower => "3.2",
            Claim::GrassmannianUpper => "3.3",
            Claim::LagrangianLower => "3.5",
            Claim::LagrangianUpper => "3.6",
            Claim::SpinorLower => "3.8",
            Claim::SpinorUpper => "3.9",
            Claim::SlopeBound => "2.2",
            Claim::Isomorphisms => "xcheck",
            Claim::SerreDuality => "serre",
            Claim::RankOneMatrices => "4.10",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s || c.tag() == s)
            .ok_or_else(|| VerifyError::UnknownClaim(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: Claim,
    pub parameter_range: String,
    pub instances_checked: u64,
    pub violations: Vec<String>,
    /// Instances attaining the bound, sorted.
    pub equality_cases_found: Vec<String>,
    /// The predicted equality set when the claim pins one down.
    pub expected_equalities: Option<Vec<String>>,
    /// Equalities outside the claim's main range (e.g. twist 0), sorted.
    pub boundary_found: Vec<String>,
    pub boundary_expected: Option<Vec<String>>,
    /// Observations that are not violations, with occurrence counts.
    pub findings: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn success(&self) -> bool {
        self.violations.is_empty()
            && self
                .expected_equalities
                .as_ref()
                .is_none_or(|e| *e == self.equality_cases_found)
            && self.boundary_expected.as_ref().is_none_or(|e| *e == self.boundary_found)
    }

    pub fn to_json(&self, with_timing: bool) -> serde_json::Value {
        let mut v = serde_json::json!({
            "proposition": self.claim.name(),
            "range": self.parameter_range,
            "instances_checked": self.instances_checked,
            "violations": self.violations,
            "equalities": self.equality_cases_found,
            "expected_equalities": self.expected_equalities,
            "boundary_equalities": self.boundary_found,
            "expected_boundary_equalities": self.boundary_expected,
            "findings": self.findings,
            "success": self.success(),
        });
        if with_timing {
            v["elapsed_ms"] = serde_json::json!(self.elapsed.as_millis() as u64);
        }
        v
    }
}

/// Partial result of one chunk; merged associatively.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub instances: u64,
    pub violations: Vec<String>,
    pub equalities: BTreeSet<String>,
    pub boundary: BTreeSet<String>,
    pub findings: BTreeMap<String, u64>,
}

impl Tally {
    pub fn note(&mut self, finding: impl Into<String>) {
        *self.findings.entry(finding.into()).or_insert(0) += 1;
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.violations.extend(other.violations);
        self.equalities.extend(other.equalities);
        self.boundary.extend(other.boundary);
        for (k, n) in other.findings {
            *self.findings.entry(k).or_insert(0) += n;
        }
        self
    }
}

pub(crate) struct Expected {
    pub equalities: Option<BTreeSet<String>>,
    pub boundary: Option<BTreeSet<String>>,
}

impl Expected {
    pub const NONE: Expected = Expected {
        equalities: None,
        boundary: None,
    };
}

/// Runs sweeps, optionally on a dedicated thread pool. Reports do not
/// depend on the worker count.
#[derive(Clone, Copy, Debug)]
pub struct Verifier {
    workers: usize,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier {
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

impl Verifier {
    pub fn with_workers(workers: usize) -> Verifier {
        Verifier {
            workers: workers.max(1),
        }
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    /// Chunk count to aim for; a few per worker for load balance.
    pub(crate) fn pieces(&self) -> u64 {
        (self.workers as u64) * 4
    }

    pub(crate) fn sweep<C, F>(&self, chunks: Vec<C>, f: F) -> Result<Tally, VerifyError>
    where
        C: Send,
        F: Fn(C) -> Tally + Sync + Send,
    {
        if self.workers <= 1 {
            return Ok(chunks.into_iter().map(f).fold(Tally::default(), Tally::merge));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| VerifyError::Pool(e.to_string()))?;
        Ok(pool.install(|| chunks.into_par_iter().map(f).reduce(Tally::default, Tally::merge)))
    }

    pub(crate) fn finish(
        &self,
        claim: Claim,
        parameter_range: String,
        tally: Tally,
        expected: Expected,
        started: Instant,
    ) -> VerificationReport {
        let mut violations = tally.violations;
        violations.sort();
        let sorted = |s: BTreeSet<String>| s.into_iter().collect::<Vec<_>>();
        VerificationReport {
            claim,
            parameter_range,
            instances_checked: tally.instances,
            violations,
            equality_cases_found: sorted(tally.equalities),
            expected_equalities: expected.equalities.map(sorted),
            boundary_found: sorted(tally.boundary),
            boundary_expected: expected.boundary.map(sorted),
            findings: tally
                .findings
                .into_iter()
                .map(|(k, n)| format!("{k} [{n} instances]"))
                .collect(),
            elapsed: started.elapsed(),
        }
    }
}
