//! Stability of the restricted cotangent bundle Omega_Y|X.

mod engine;
mod small;

use serde::Serialize;
use thiserror::Error;

use crate::cohomology::{EqualityCase, Status};
use crate::resolutions::Resolution;
use crate::spaces::HssSpace;

pub use engine::{certify_restriction, certify_restriction_with, degree_window, EngineOptions};
pub use small::{langer_bound, q3_surface_invariants, small_dimension_verdict, ChernData, SurfaceInvariants};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StabilityError {
    #[error("resolution of length {length} is not short on a {dimension}-dimensional space")]
    NotShort { length: usize, dimension: u32 },
    #[error("Q^2 has Picard rank 2; use the small-dimension table instead")]
    ReducibleQuadric,
    #[error("no tabulated verdict for {0}")]
    NotTabulated(String),
    #[error("degree {0} out of range (1..=100000)")]
    BadSurfaceDegree(u32),
    #[error("thread pool: {0}")]
    Pool(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Outcome {
    CertifiedStable,
    CertifiedSemistable,
    NotCertified,
    Refused,
}

/// Which argument produced the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    /// Vanishing window for spaces other than P^n and Q^n.
    VanishingWindow,
    /// Vanishing window on a quadric with a strict resolution.
    QuadricWindow,
    /// Bott vanishing on P^n.
    ProjectiveWindow,
    /// Hand-checked divisors in P^2, P^3, Q^2, Q^3.
    SmallDimensionTable,
    /// Langer's effective restriction bound.
    LangerBound,
}

/// One cohomology group H^term(Omega^p_Y(l)), l = d - twist, examined for a
/// putative destabilizing O(-d) in Omega^p|X.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupCheck {
    pub p: u32,
    pub d: i64,
    pub term: usize,
    pub twist: u32,
    pub l: i64,
    pub status: Status,
    pub witness_count: u64,
    pub witnesses: Vec<String>,
    pub equality: Option<EqualityCase>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityVerdict {
    pub space: HssSpace,
    pub resolution: Option<Resolution>,
    pub divisor_degree: Option<u32>,
    pub outcome: Outcome,
    pub basis: Basis,
    /// Every group consulted, zero or not.
    pub evidence: Vec<GroupCheck>,
    /// The nonzero ones.
    pub obstructions: Vec<GroupCheck>,
    pub caveats: Vec<String>,
}
