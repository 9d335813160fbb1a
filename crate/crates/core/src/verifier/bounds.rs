use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use super::{Claim, Expected, Tally, VerificationReport, Verifier, VerifyError};
use crate::cohomology::{serre_dual, CohomologyQuery, EqualityCase, Oracle};
use crate::spaces::{HssSpace, Series};

/// A one-parameter slice of the catalog for slope-bound sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "String")]
pub enum SpaceFamily {
    /// Gr(a, a+b) with 2 <= a, b <= max.
    Grassmannian,
    /// Q^n with 3 <= n <= max.
    Quadric,
    /// LG(n, 2n) with 3 <= n <= max.
    Lagrangian,
    /// Spinor(n) with 5 <= n <= max.
    Spinor,
}

impl SpaceFamily {
    pub fn members(self, max: u32) -> Vec<HssSpace> {
        let build = |s| HssSpace::unchecked(s);
        match self {
            SpaceFamily::Grassmannian => (2..=max)
                .flat_map(|a| (2..=max).map(move |b| Series::Grassmannian { a, b }))
                .map(build)
                .collect(),
            SpaceFamily::Quadric => (3..=max).map(|n| build(Series::Quadric { n })).collect(),
            SpaceFamily::Lagrangian => (3..=max).map(|n| build(Series::Lagrangian { n })).collect(),
            SpaceFamily::Spinor => (5..=max).map(|n| build(Series::Spinor { n })).collect(),
        }
    }
}

impl fmt::Display for SpaceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceFamily::Grassmannian => "A",
            SpaceFamily::Quadric => "B",
            SpaceFamily::Lagrangian => "C",
            SpaceFamily::Spinor => "D",
        })
    }
}

impl From<SpaceFamily> for String {
    fn from(f: SpaceFamily) -> String {
        f.to_string()
    }
}

impl FromStr for SpaceFamily {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "A" | "GRASSMANNIAN" => Ok(SpaceFamily::Grassmannian),
            "B" | "Q" | "QUADRIC" => Ok(SpaceFamily::Quadric),
            "C" | "LAGRANGIAN" => Ok(SpaceFamily::Lagrangian),
            "D" | "SPINOR" => Ok(SpaceFamily::Spinor),
            _ => Err(VerifyError::BadRange(format!("unknown family `{s}`"))),
        }
    }
}

/// Pairs of catalog members that are isomorphic, some below the floors.
fn isomorphic_pairs() -> Vec<(HssSpace, HssSpace)> {
    let u = HssSpace::unchecked;
    let mut v = vec![
        (u(Series::Grassmannian { a: 2, b: 2 }), u(Series::Quadric { n: 4 })),
        (u(Series::Spinor { n: 3 }), u(Series::Projective { n: 3 })),
        (u(Series::Spinor { n: 4 }), u(Series::Quadric { n: 6 })),
        (u(Series::Lagrangian { n: 2 }), u(Series::Quadric { n: 3 })),
        (u(Series::Lagrangian { n: 1 }), u(Series::Projective { n: 1 })),
    ];
    for b in 1..=4 {
        v.push((u(Series::Grassmannian { a: 1, b }), u(Series::Projective { n: b })));
    }
    for a in 2..=4 {
        for b in a + 1..=4 {
            v.push((u(Series::Grassmannian { a, b }), u(Series::Grassmannian { a: b, b: a })));
        }
    }
    v
}

impl Verifier {
    /// Every nonzero H^q(Omega^p(l)) with q < dim and |l| <= index + margin
    /// satisfies (l + q) · dim >= p · index, with equality only in a known
    /// case; for l, q > 0 also l + q <= p.
    pub fn slope_bound(&self, family: SpaceFamily, max: u32, l_margin: u32) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let members = family.members(max);
        if members.is_empty() {
            return Err(VerifyError::BadRange(format!("no {family} members up to {max}")));
        }
        let chunks: Vec<(HssSpace, i64)> = members
            .iter()
            .flat_map(|s| {
                let r = i64::from(s.index() + l_margin);
                (-r..=r).map(move |l| (s.clone(), l))
            })
            .collect();
        let tally = self.sweep(chunks, |(space, l)| {
            let mut t = Tally::default();
            let n = space.dimension();
            let table = Oracle::default().table(&space, l).expect("classical spaces are supported");
            for &(p, q) in table.keys() {
                if q >= n {
                    continue;
                }
                t.instances += 1;
                let tag = format!("{space} p={p} q={q} l={l}");
                let lhs = (l + i64::from(q)) * i64::from(n);
                let rhs = i64::from(p) * i64::from(space.index());
                if lhs < rhs {
                    t.violations.push(format!("{tag}: below bound"));
                } else if lhs == rhs {
                    match EqualityCase::classify(&space, p, q, l) {
                        Some(case) => {
                            t.equalities.insert(format!("{tag} {}", case.label()));
                        }
                        None => {
                            t.violations.push(format!("{tag}: equality outside the known cases"));
                            let (pi, qi) = (i64::from(p), i64::from(q));
                            if space.is_quadric_like() && qi == i64::from(n) - pi && l == 2 * pi - i64::from(n) {
                                t.note("unlisted quadric equality on the line q = n - p, l = 2p - n");
                            }
                        }
                    }
                }
                if l > 0 && q > 0 && l + i64::from(q) > i64::from(p) {
                    t.violations.push(format!("{tag}: l + q exceeds p"));
                }
            }
            t
        })?;
        Ok(self.finish(
            Claim::SlopeBound,
            format!("family {family} up to {max}, |l| <= index + {l_margin}"),
            tally,
            Expected::NONE,
            started,
        ))
    }

    /// Isomorphic pairs (Gr(2,4) = Q^4, Spinor(3) = P^3, Spinor(4) = Q^6,
    /// LG(2,4) = Q^3, Gr(1,b+1) = P^b, Gr(a,a+b) = Gr(b,a+b)) must have
    /// identical nonvanishing tables for |l| <= l_max.
    pub fn isomorphisms(&self, l_max: u32) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let r = i64::from(l_max);
        let chunks: Vec<_> = isomorphic_pairs()
            .into_iter()
            .flat_map(|(x, y)| (-r..=r).map(move |l| (x.clone(), y.clone(), l)))
            .collect();
        let tally = self.sweep(chunks, |(x, y, l)| {
            let mut t = Tally::default();
            let oracle = Oracle::default();
            let (tx, ty) = (oracle.table(&x, l), oracle.table(&y, l));
            let n = x.dimension();
            if n != y.dimension() {
                t.violations.push(format!("{x} and {y} differ in dimension"));
                return t;
            }
            let (Some(tx), Some(ty)) = (tx, ty) else {
                t.violations.push(format!("{x} / {y}: unsupported at l={l}"));
                return t;
            };
            t.instances += u64::from(n + 1).pow(2);
            let kx: BTreeSet<_> = tx.keys().collect();
            let ky: BTreeSet<_> = ty.keys().collect();
            for (p, q) in kx.symmetric_difference(&ky) {
                t.violations.push(format!("{x} vs {y}: disagree at p={p} q={q} l={l}"));
            }
            t
        })?;
        Ok(self.finish(
            Claim::Isomorphisms,
            format!("{} isomorphic pairs, |l| <= {l_max}", isomorphic_pairs().len()),
            tally,
            Expected::NONE,
            started,
        ))
    }

    /// nonvanishing(Q) == nonvanishing(serre_dual(Q)) on every space used
    /// by the isomorphism check, plus the exceptional spaces.
    pub fn serre_duality(&self, l_max: u32) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let mut spaces: Vec<HssSpace> = isomorphic_pairs().into_iter().flat_map(|(x, y)| [x, y]).collect();
        spaces.push(HssSpace::e3());
        spaces.push(HssSpace::e7());
        spaces.sort_by_key(|s| s.key());
        spaces.dedup();
        let r = i64::from(l_max);
        let chunks: Vec<_> = spaces
            .into_iter()
            .flat_map(|s| (-r..=r).map(move |l| (s.clone(), l)))
            .collect();
        let tally = self.sweep(chunks, |(space, l)| {
            let mut t = Tally::default();
            let oracle = Oracle::with_witness_cap(0);
            let n = space.dimension();
            for p in 0..=n {
                for q in 0..=n {
                    t.instances += 1;
                    let query = CohomologyQuery::new(space.clone(), p, q, l).expect("in range");
                    let a = oracle.nonvanishing(&query).status;
                    let b = oracle.nonvanishing(&serre_dual(&query)).status;
                    if a != b {
                        t.violations.push(format!("{query}: {a:?} but dual is {b:?}"));
                    }
                }
            }
            t
        })?;
        Ok(self.finish(
            Claim::SerreDuality,
            format!("isomorphism-check spaces and E3, E7, |l| <= {l_max}"),
            tally,
            Expected::NONE,
            started,
        ))
    }
}
