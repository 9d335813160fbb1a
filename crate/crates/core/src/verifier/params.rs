use serde::Serialize;

use super::{Claim, SpaceFamily, VerificationReport, Verifier, VerifyError};

/// Ranges for [`Verifier::run`]. Unset fields take per-claim defaults.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepParams {
    pub a_max: u32,
    pub b_max: u32,
    /// Type A sweeps reach l = a + b + margin; slope sweeps |l| <= index + margin.
    pub l_margin: u32,
    /// Defaults to 10 for type C and 11 for type D.
    pub n_max: Option<u32>,
    /// Defaults to n_max + 3 (C), 2 n_max (D), 10 for the cross-checks.
    pub l_max: Option<u32>,
    /// Slope-bound family; all four when unset.
    pub family: Option<SpaceFamily>,
    pub family_max: Option<u32>,
    pub order_min: u32,
    pub order_max: u32,
    pub bound: u32,
    pub samples: u64,
    pub seed: u64,
}

impl Default for SweepParams {
    fn default() -> Self {
        SweepParams {
            a_max: 6,
            b_max: 6,
            l_margin: 2,
            n_max: None,
            l_max: None,
            family: None,
            family_max: None,
            order_min: 1,
            order_max: 4,
            bound: 2,
            samples: 10_000,
            seed: 0,
        }
    }
}

fn family_default_max(f: SpaceFamily) -> u32 {
    match f {
        SpaceFamily::Grassmannian => 4,
        SpaceFamily::Quadric => 8,
        SpaceFamily::Lagrangian => 6,
        SpaceFamily::Spinor => 7,
    }
}

impl Verifier {
    /// Runs one claim. The slope bound yields one report per family.
    pub fn run(&self, claim: Claim, p: &SweepParams) -> Result<Vec<VerificationReport>, VerifyError> {
        let c_n = p.n_max.unwrap_or(10);
        let d_n = p.n_max.unwrap_or(11);
        let one = |r: Result<VerificationReport, VerifyError>| r.map(|r| vec![r]);
        match claim {
            Claim::GrassmannianLower => one(self.grassmannian_lower(p.a_max, p.b_max, p.l_margin)),
            Claim::GrassmannianUpper => one(self.grassmannian_upper(p.a_max, p.b_max, p.l_margin)),
            Claim::LagrangianLower => one(self.lagrangian_lower(c_n, p.l_max.unwrap_or(c_n + 3))),
            Claim::LagrangianUpper => one(self.lagrangian_upper(c_n, p.l_max.unwrap_or(c_n + 3))),
            Claim::SpinorLower => one(self.spinor_lower(d_n, p.l_max.unwrap_or(2 * d_n))),
            Claim::SpinorUpper => one(self.spinor_upper(d_n, p.l_max.unwrap_or(2 * d_n))),
            Claim::SlopeBound => {
                let families = match p.family {
                    Some(f) => vec![f],
                    None => vec![
                        SpaceFamily::Grassmannian,
                        SpaceFamily::Quadric,
                        SpaceFamily::Lagrangian,
                        SpaceFamily::Spinor,
                    ],
                };
                families
                    .into_iter()
                    .map(|f| self.slope_bound(f, p.family_max.unwrap_or_else(|| family_default_max(f)), p.l_margin))
                    .collect()
            }
            Claim::Isomorphisms => one(self.isomorphisms(p.l_max.unwrap_or(10))),
            Claim::SerreDuality => one(self.serre_duality(p.l_max.unwrap_or(10))),
            Claim::RankOneMatrices => one(self.rank_one_matrices(p.order_min..=p.order_max, p.bound, p.samples, p.seed)),
        }
    }
}
