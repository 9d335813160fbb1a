use serde::Serialize;

use super::engine::PICARD_CAVEAT;
use super::{Basis, Outcome, StabilityError, StabilityVerdict};
use crate::spaces::{HssSpace, Rational, Series};

pub const MAX_SURFACE_DEGREE: u32 = 100_000;

/// Chern numbers of Omega_Y against powers of the hyperplane class:
/// c1^2 · H^{dim-2}, c2 · H^{dim-2}, and deg H^dim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChernData {
    pub rank: i64,
    pub c1_squared: i64,
    pub c2: i64,
    pub degree: i64,
}

impl ChernData {
    pub fn of(space: &HssSpace) -> Option<ChernData> {
        let (rank, c1_squared, c2, degree) = match space.series() {
            // c(T P^2) = 1 + 3H + 3H^2
            Series::Projective { n: 2 } => (2, 9, 3, 1),
            // c(T P^3) = 1 + 4H + 6H^2 + ...
            Series::Projective { n: 3 } => (3, 16, 6, 1),
            // c(T Q^3) = (1+H)^5 / (1+2H) = 1 + 3H + 4H^2 + ..., H^3 = 2
            Series::Quadric { n: 3 } => (3, 18, 8, 2),
            _ => return None,
        };
        Some(ChernData {
            rank,
            c1_squared,
            c2,
            degree,
        })
    }
}

/// Langer's bound on h: restrictions to smooth divisors in |O(h)| are
/// stable once h exceeds it. The 1/(r(r-1)deg) correction is only needed
/// in rank 2.
pub fn langer_bound(space: &HssSpace) -> Result<Rational, StabilityError> {
    let c = ChernData::of(space).ok_or_else(|| StabilityError::NotTabulated(space.key()))?;
    let r = c.rank;
    let main = Rational::new(r - 1, r) * Rational::from_integer(2 * r * c.c2 - (r - 1) * c.c1_squared);
    if r == 2 {
        Ok(main + Rational::new(1, r * (r - 1) * c.degree))
    } else {
        Ok(main)
    }
}

/// Invariants of a smooth surface S of degree d in Q^3 (a complete
/// intersection of type (2, d) in P^4).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    pub d: u32,
    pub h2_structure: i64,
    pub chi_top: i64,
    pub b2: i64,
    pub h11: i64,
    /// c2(TS) = c2_coefficient · H^2.
    pub c2_coefficient: i64,
}

pub fn q3_surface_invariants(d: u32) -> Result<SurfaceInvariants, StabilityError> {
    if d == 0 || d > MAX_SURFACE_DEGREE {
        return Err(StabilityError::BadSurfaceDegree(d));
    }
    let d64 = i64::from(d);
    let c2_coefficient = d64 * d64 - 3 * d64 + 4;
    let chi_top = 2 * d64 * c2_coefficient;
    Ok(SurfaceInvariants {
        d,
        h2_structure: (d64 - 1) * (d64 - 2) * (2 * d64 - 3) / 6,
        chi_top,
        b2: chi_top - 2,
        h11: d64 * (4 * d64 * d64 - 9 * d64 + 11) / 3,
        c2_coefficient,
    })
}

fn tabulated(space: &HssSpace, d: u32, outcome: Outcome, basis: Basis, caveats: &[&str]) -> StabilityVerdict {
    StabilityVerdict {
        space: space.clone(),
        resolution: None,
        divisor_degree: Some(d),
        outcome,
        basis,
        evidence: Vec::new(),
        obstructions: Vec::new(),
        caveats: caveats.iter().map(|c| c.to_string()).collect(),
    }
}

/// Verdicts for smooth divisors of degree d in P^2, P^3, Q^2 and Q^3.
pub fn small_dimension_verdict(space: &HssSpace, d: u32) -> Result<StabilityVerdict, StabilityError> {
    use Basis::{LangerBound, SmallDimensionTable as Table};
    use Outcome::*;
    if d == 0 {
        return Err(StabilityError::BadSurfaceDegree(0));
    }
    let above_langer = |s: &HssSpace| langer_bound(s).map(|b| Rational::from_integer(d.into()) > b);
    let v = match (space.series(), d) {
        (Series::Projective { n: 2 }, 1) => tabulated(space, d, NotCertified, Table, &["a line is not covered"]),
        (Series::Projective { n: 2 }, 2) => tabulated(space, d, CertifiedSemistable, Table, &["not stable"]),
        (Series::Projective { n: 2 }, _) => tabulated(space, d, CertifiedStable, Table, &[]),
        (Series::Projective { n: 3 }, 1) => tabulated(space, d, NotCertified, Table, &["a plane is not covered"]),
        (Series::Projective { n: 3 }, 2) => tabulated(space, d, CertifiedStable, Table, &[]),
        (Series::Projective { n: 3 }, _) => {
            debug_assert!(above_langer(space)?);
            tabulated(space, d, CertifiedStable, LangerBound, &[])
        }
        (Series::Quadric { n: 2 }, _) => tabulated(space, d, CertifiedSemistable, Table, &["not stable"]),
        (Series::Quadric { n: 3 }, 1) => tabulated(space, d, CertifiedSemistable, Table, &["not stable"]),
        (Series::Quadric { n: 3 }, 2) => tabulated(space, d, CertifiedStable, Table, &[PICARD_CAVEAT]),
        (Series::Quadric { n: 3 }, 3..=8) => tabulated(
            space,
            d,
            NotCertified,
            Table,
            &["open: degree lies between the hand-checked cases and the Langer bound (d >= 9)"],
        ),
        (Series::Quadric { n: 3 }, _) => {
            debug_assert!(above_langer(space)?);
            tabulated(space, d, CertifiedStable, LangerBound, &[])
        }
        _ => return Err(StabilityError::NotTabulated(format!("{space} degree {d}"))),
    };
    Ok(v)
}
