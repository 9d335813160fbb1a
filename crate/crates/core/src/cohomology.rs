//! Decides whether H^q(Y, Omega^p(l)) vanishes.
//!
//! Projective spaces and quadrics use closed-form lists. Types A, C, D use
//! the combinatorial rules in [`crate::combinatorics`] for l > 0, Hodge
//! theory at l = 0, and Serre duality for l < 0. The exceptional spaces are
//! only answered at l = 0.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::{enumerate_partitions, enumerate_signed, Partition, SignedSequence, SignedSeries};
use crate::spaces::{HssSpace, Series, SpaceError};

pub const DEFAULT_WITNESS_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("p = {p} and q = {q} must lie in [0, {dim}]")]
    OutOfRange { p: u32, q: u32, dim: u32 },
    #[error("cannot parse query `{0}`; expected e.g. `A:2,3 p=4 q=1 l=3`")]
    BadQuery(String),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("{0} is not a nonzero group")]
    NotNonzero(CohomologyQuery),
    #[error("{0} is in top degree q = dim")]
    TopDegree(CohomologyQuery),
    #[error("{0} attains equality in the slope bound but matches no known equality case")]
    UnclassifiedEquality(CohomologyQuery),
}

/// H^q(Y, Omega^p_Y(l)).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohomologyQuery {
    space: HssSpace,
    p: u32,
    q: u32,
    l: i64,
}

impl CohomologyQuery {
    pub fn new(space: HssSpace, p: u32, q: u32, l: i64) -> Result<CohomologyQuery, CohomologyError> {
        let dim = space.dimension();
        if p > dim || q > dim {
            return Err(CohomologyError::OutOfRange { p, q, dim });
        }
        Ok(CohomologyQuery { space, p, q, l })
    }

    pub fn space(&self) -> &HssSpace {
        &self.space
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn l(&self) -> i64 {
        self.l
    }
}

impl fmt::Display for CohomologyQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} p={} q={} l={}", self.space, self.p, self.q, self.l)
    }
}

impl FromStr for CohomologyQuery {
    type Err = CohomologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CohomologyError::BadQuery(s.to_string());
        let mut tokens = s.split_whitespace();
        let space: HssSpace = tokens.next().ok_or_else(bad)?.parse()?;
        let (mut p, mut q, mut l) = (None, None, None);
        for tok in tokens {
            let (k, v) = tok.split_once('=').ok_or_else(bad)?;
            match k {
                "p" => p = Some(v.parse::<u32>().map_err(|_| bad())?),
                "q" => q = Some(v.parse::<u32>().map_err(|_| bad())?),
                "l" => l = Some(v.parse::<i64>().map_err(|_| bad())?),
                _ => return Err(bad()),
            }
        }
        match (p, q, l) {
            (Some(p), Some(q), Some(l)) => CohomologyQuery::new(space, p, q, l),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Nonzero,
    Zero,
    Unsupported,
}

/// An irreducible summand whose cohomology is nonzero in the queried degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Witness {
    Partition(Partition),
    Signed(SignedSequence),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Partition(p) => p.fmt(f),
            Witness::Signed(s) => s.fmt(f),
        }
    }
}

impl Serialize for Witness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Oracle output. For l < 0 on types A/C/D the witnesses are those of the
/// Serre-dual query and `via_duality` is set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyAnswer {
    pub status: Status,
    pub witness_count: u64,
    pub witnesses: Vec<Witness>,
    pub via_duality: bool,
}

impl CohomologyAnswer {
    fn closed_form(nonzero: bool) -> CohomologyAnswer {
        CohomologyAnswer {
            status: if nonzero { Status::Nonzero } else { Status::Zero },
            witness_count: 0,
            witnesses: Vec::new(),
            via_duality: false,
        }
    }

    pub fn is_nonzero(&self) -> bool {
        self.status == Status::Nonzero
    }
}

/// Serre duality: H^q(Omega^p(l)) is dual to H^{n-q}(Omega^{n-p}(-l)).
pub fn serre_dual(query: &CohomologyQuery) -> CohomologyQuery {
    let n = query.space.dimension();
    CohomologyQuery {
        space: query.space.clone(),
        p: n - query.p,
        q: n - query.q,
        l: -query.l,
    }
}

fn bott(n: i64, p: i64, q: i64, l: i64) -> bool {
    (l > 0 && p < l && q == 0) || (l == 0 && p == q) || (l < 0 && n - p < -l && q == n)
}

fn quadric_rule(n: i64, p: i64, q: i64, l: i64) -> bool {
    (p == q && l == 0) || (q == n - p && l == 2 * p - n) || (q == 0 && l > p) || (q == n && l < p - n)
}

enum Model {
    Closed(fn(i64, i64, i64, i64) -> bool),
    Young { rows: u32, cols: u32 },
    Signed { series: SignedSeries, n: u32 },
    HodgeOnly,
}

fn model(space: &HssSpace) -> Model {
    match space.series() {
        Series::Projective { .. } => Model::Closed(bott),
        Series::Quadric { .. } => Model::Closed(quadric_rule),
        Series::Grassmannian { a, b } => Model::Young { rows: a, cols: b },
        Series::Lagrangian { n } => Model::Signed {
            series: SignedSeries::C,
            n,
        },
        Series::Spinor { n } => Model::Signed {
            series: SignedSeries::D,
            n,
        },
        Series::ExceptionalEIII | Series::ExceptionalEVII => Model::HodgeOnly,
    }
}

/// Collects every summand with its (p, q) at a twist l >= 0, or at l = 0
/// the Hodge-diagonal assignment q = p.
fn for_each_summand(m: &Model, l: i64, mut f: impl FnMut(u32, u32, Witness)) {
    match *m {
        Model::Young { rows, cols } => {
            for lam in enumerate_partitions(rows, cols) {
                let w = lam.weight();
                if l == 0 {
                    f(w, w, Witness::Partition(lam));
                } else if lam.is_admissible(l as u32) {
                    let q = lam.degree(l as u32);
                    f(w, q, Witness::Partition(lam));
                }
            }
        }
        Model::Signed { series, n } => {
            for x in enumerate_signed(series, n) {
                if let Some(q) = x.degree_at(l) {
                    f(x.weight(), q, Witness::Signed(x));
                }
            }
        }
        _ => unreachable!("closed-form models have no summands"),
    }
}

/// Configurable oracle; the default keeps at most 16 witnesses per answer
/// while still counting all of them.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    witness_cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            witness_cap: DEFAULT_WITNESS_CAP,
        }
    }
}

/// Nonzero (p, q) pairs at a fixed twist, with witness counts (0 for
/// closed-form families).
pub type NonzeroTable = BTreeMap<(u32, u32), u64>;

impl Oracle {
    pub fn with_witness_cap(witness_cap: usize) -> Oracle {
        Oracle { witness_cap }
    }

    pub fn nonvanishing(&self, query: &CohomologyQuery) -> CohomologyAnswer {
        let (p, q, l) = (query.p, query.q, query.l);
        let n = query.space.dimension();
        match model(&query.space) {
            Model::Closed(rule) => CohomologyAnswer::closed_form(rule(n.into(), p.into(), q.into(), l)),
            Model::HodgeOnly => {
                if l == 0 {
                    CohomologyAnswer::closed_form(p == q)
                } else {
                    CohomologyAnswer {
                        status: Status::Unsupported,
                        witness_count: 0,
                        witnesses: Vec::new(),
                        via_duality: false,
                    }
                }
            }
            m if l < 0 => {
                let mut ans = self.enumerate(&m, n - p, n - q, -l);
                ans.via_duality = true;
                ans
            }
            m => {
                let mut ans = self.enumerate(&m, p, q, l);
                if l == 0 {
                    // Hodge theory decides the status; the witnesses are the
                    // weight-p summands, all of which sit in degree p.
                    ans.status = if p == q { Status::Nonzero } else { Status::Zero };
                }
                ans
            }
        }
    }

    fn enumerate(&self, m: &Model, p: u32, q: u32, l: i64) -> CohomologyAnswer {
        let mut witnesses = Vec::new();
        let mut count = 0u64;
        for_each_summand(m, l, |wp, wq, w| {
            if wp == p && wq == q {
                count += 1;
                if witnesses.len() < self.witness_cap {
                    witnesses.push(w);
                }
            }
        });
        CohomologyAnswer {
            status: if count > 0 { Status::Nonzero } else { Status::Zero },
            witness_count: count,
            witnesses,
            via_duality: false,
        }
    }

    /// All nonzero (p, q) at twist `l` in one pass, or None where the
    /// oracle is unsupported.
    pub fn table(&self, space: &HssSpace, l: i64) -> Option<NonzeroTable> {
        let n = space.dimension();
        let mut t = NonzeroTable::new();
        match model(space) {
            Model::Closed(rule) => {
                for p in 0..=n {
                    for q in 0..=n {
                        if rule(n.into(), p.into(), q.into(), l) {
                            t.insert((p, q), 0);
                        }
                    }
                }
            }
            Model::HodgeOnly => {
                if l != 0 {
                    return None;
                }
                t.extend((0..=n).map(|p| ((p, p), 0)));
            }
            m if l < 0 => {
                for_each_summand(&m, -l, |p, q, _| *t.entry((n - p, n - q)).or_insert(0) += 1);
            }
            m => {
                for_each_summand(&m, l, |p, q, _| *t.entry((p, q)).or_insert(0) += 1);
            }
        }
        Some(t)
    }
}

/// Nonvanishing with the default oracle.
pub fn nonvanishing(query: &CohomologyQuery) -> CohomologyAnswer {
    Oracle::default().nonvanishing(query)
}

/// The known ways a nonzero group can sit exactly on the slope bound
/// l + q >= p · index / dim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EqualityCase {
    /// H^0(K_Y^*-twisted top forms): p = dim, q = 0, l = index.
    TopForm,
    /// H^0(O_Y).
    Trivial,
    /// Hodge classes on a quadric (index = dim) at l = 0.
    QuadricHodge,
    /// The 4-dimensional quadric, (l, p, q) = (2, 3, 1).
    FourDimQuadric,
}

impl EqualityCase {
    pub fn classify(space: &HssSpace, p: u32, q: u32, l: i64) -> Option<EqualityCase> {
        let n = space.dimension();
        if p == n && q == 0 && l == i64::from(space.index()) {
            Some(EqualityCase::TopForm)
        } else if p == 0 && q == 0 && l == 0 {
            Some(EqualityCase::Trivial)
        } else if space.is_quadric_like() && l == 0 {
            Some(EqualityCase::QuadricHodge)
        } else if space.is_quadric_like() && n == 4 && (l, p, q) == (2, 3, 1) {
            Some(EqualityCase::FourDimQuadric)
        } else {
            None
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            EqualityCase::TopForm => "top-form",
            EqualityCase::Trivial => "trivial",
            EqualityCase::QuadricHodge => "quadric-hodge",
            EqualityCase::FourDimQuadric => "four-dim-quadric",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBoundCheck {
    pub holds: bool,
    pub is_equality: bool,
    pub case: Option<EqualityCase>,
}

/// Evaluates l + q >= p · index / dim on a nonzero group with q < dim, and
/// classifies equality. Equality outside the known cases is an error.
pub fn check_lower_bound(query: &CohomologyQuery) -> Result<LowerBoundCheck, CohomologyError> {
    let n = query.space.dimension();
    if query.q >= n {
        return Err(CohomologyError::TopDegree(query.clone()));
    }
    if nonvanishing(query).status != Status::Nonzero {
        return Err(CohomologyError::NotNonzero(query.clone()));
    }
    let lhs = (query.l + i64::from(query.q)) * i64::from(n);
    let rhs = i64::from(query.p) * i64::from(query.space.index());
    if lhs != rhs {
        return Ok(LowerBoundCheck {
            holds: lhs > rhs,
            is_equality: false,
            case: None,
        });
    }
    match EqualityCase::classify(&query.space, query.p, query.q, query.l) {
        Some(case) => Ok(LowerBoundCheck {
            holds: true,
            is_equality: true,
            case: Some(case),
        }),
        None => Err(CohomologyError::UnclassifiedEquality(query.clone())),
    }
}
