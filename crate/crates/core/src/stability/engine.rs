use rayon::prelude::*;

use super::{Basis, GroupCheck, Outcome, StabilityError, StabilityVerdict};
use crate::cohomology::{CohomologyQuery, EqualityCase, Oracle, Status};
use crate::resolutions::Resolution;
use crate::spaces::{HssSpace, Series};

pub(crate) const PICARD_CAVEAT: &str = "assumes Pic(X) is generated by the restriction of O_Y(1)";
const ASSERTED_CAVEAT: &str = "exceptional-space vanishing at nonzero twist is taken as asserted, not re-derived";
const LINEAR_CAVEAT: &str =
    "resolution has a linear equation; on P^n and Q^n a linear section can fail to restrict stably";

#[derive(Clone, Copy, Debug, Default)]
pub struct EngineOptions {
    /// Treat unsupported exceptional-space groups in the window as zero.
    pub accept_asserted_exceptional: bool,
    /// Thread count for the per-rank loop; None uses the global pool.
    pub workers: Option<usize>,
}

/// Subsheaf degrees d for which O(-d) in Omega^p|X would violate stability
/// and is not excluded by slope alone.
pub fn degree_window(space: &HssSpace, p: u32) -> (i64, i64) {
    let t = space.slope_threshold(p);
    let hi = t.floor().to_integer();
    let lo = if space.is_projective() {
        i64::from(p)
    } else {
        t.ceil().to_integer()
    };
    (lo, hi)
}

fn basis_for(space: &HssSpace) -> Basis {
    match space.series() {
        Series::Projective { .. } => Basis::ProjectiveWindow,
        Series::Quadric { .. } => Basis::QuadricWindow,
        _ => Basis::VanishingWindow,
    }
}

fn check_rank(space: &HssSpace, resolution: &Resolution, p: u32) -> Vec<GroupCheck> {
    let oracle = Oracle::with_witness_cap(4);
    let (lo, hi) = degree_window(space, p);
    let mut out = Vec::new();
    for d in lo..=hi {
        for i in 0..=resolution.length() {
            let mut twists = resolution.term(i).to_vec();
            twists.dedup();
            for t in twists {
                let l = d - i64::from(t);
                let q = i as u32;
                let query = CohomologyQuery::new(space.clone(), p, q, l).expect("p, i below dimension");
                let ans = oracle.nonvanishing(&query);
                let equality = match ans.status {
                    Status::Nonzero => EqualityCase::classify(space, p, q, l),
                    _ => None,
                };
                out.push(GroupCheck {
                    p,
                    d,
                    term: i,
                    twist: t,
                    l,
                    status: ans.status,
                    witness_count: ans.witness_count,
                    witnesses: ans.witnesses.iter().map(ToString::to_string).collect(),
                    equality,
                });
            }
        }
    }
    out
}

/// Decides stability of Omega_Y restricted to X from a short resolution of
/// O_X, by checking that every group H^i(Omega^p_Y(d - d_ij)) that could
/// carry a destabilizing O(-d) vanishes.
pub fn certify_restriction(space: &HssSpace, resolution: &Resolution) -> Result<StabilityVerdict, StabilityError> {
    certify_restriction_with(space, resolution, &EngineOptions::default())
}

pub fn certify_restriction_with(
    space: &HssSpace,
    resolution: &Resolution,
    options: &EngineOptions,
) -> Result<StabilityVerdict, StabilityError> {
    if space.has_reducible_picard() {
        return Err(StabilityError::ReducibleQuadric);
    }
    let report = resolution.validate_short(space);
    if !report.is_short {
        return Err(StabilityError::NotShort {
            length: report.length,
            dimension: report.dimension,
        });
    }
    let mut verdict = StabilityVerdict {
        space: space.clone(),
        resolution: Some(resolution.clone()),
        divisor_degree: None,
        outcome: Outcome::CertifiedStable,
        basis: basis_for(space),
        evidence: Vec::new(),
        obstructions: Vec::new(),
        caveats: vec![PICARD_CAVEAT.to_string()],
    };
    if space.is_exceptional() && !options.accept_asserted_exceptional {
        verdict.outcome = Outcome::Refused;
        verdict
            .caveats
            .push("exceptional spaces need asserted vanishing; rerun accepting asserted facts".to_string());
        return Ok(verdict);
    }

    let dim = space.dimension();
    let run = || -> Vec<Vec<GroupCheck>> {
        (1..dim)
            .into_par_iter()
            .map(|p| check_rank(space, resolution, p))
            .collect()
    };
    let per_rank = match options.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| StabilityError::Pool(e.to_string()))?
            .install(run),
        None => run(),
    };

    let mut used_assertion = false;
    for check in per_rank.into_iter().flatten() {
        match check.status {
            Status::Nonzero => verdict.obstructions.push(check.clone()),
            Status::Unsupported => used_assertion = true,
            Status::Zero => {}
        }
        verdict.evidence.push(check);
    }
    if used_assertion {
        verdict.caveats.push(ASSERTED_CAVEAT.to_string());
    }
    if resolution.has_linear_term() && matches!(verdict.basis, Basis::ProjectiveWindow | Basis::QuadricWindow) {
        verdict.caveats.push(LINEAR_CAVEAT.to_string());
    }
    if !verdict.obstructions.is_empty() {
        verdict.outcome = Outcome::NotCertified;
    }
    Ok(verdict)
}
