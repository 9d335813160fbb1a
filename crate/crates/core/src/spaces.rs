//! Catalog of compact irreducible Hermitian symmetric spaces.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

pub type Rational = Ratio<i64>;

/// The seven series, with their defining parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    /// P^n.
    Projective { n: u32 },
    /// Smooth quadric hypersurface Q^n in P^{n+1}.
    Quadric { n: u32 },
    /// Gr(a, a+b): a-planes in C^{a+b}.
    Grassmannian { a: u32, b: u32 },
    /// Lagrangian Grassmannian LG(n, 2n).
    Lagrangian { n: u32 },
    /// Spinor variety of maximal isotropic subspaces of C^{2n}, one component.
    Spinor { n: u32 },
    ExceptionalEIII,
    ExceptionalEVII,
}

impl Series {
    pub fn name(&self) -> &'static str {
        match self {
            Series::Projective { .. } => "Projective",
            Series::Quadric { .. } => "Quadric",
            Series::Grassmannian { .. } => "Grassmannian",
            Series::Lagrangian { .. } => "Lagrangian",
            Series::Spinor { .. } => "Spinor",
            Series::ExceptionalEIII => "EIII",
            Series::ExceptionalEVII => "EVII",
        }
    }

    fn dimension_index(&self) -> (u32, u32) {
        match *self {
            Series::Projective { n } => (n, n + 1),
            Series::Quadric { n } => (n, n),
            Series::Grassmannian { a, b } => (a * b, a + b),
            Series::Lagrangian { n } => (n * (n + 1) / 2, n + 1),
            Series::Spinor { n } => (n * n.saturating_sub(1) / 2, 2 * n.saturating_sub(1)),
            Series::ExceptionalEIII => (16, 12),
            Series::ExceptionalEVII => (27, 18),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("{series} requires {bound}, got {got}")]
    BelowFloor {
        series: &'static str,
        bound: &'static str,
        got: String,
    },
    #[error("unrecognized space key `{0}`")]
    BadKey(String),
}

/// A catalog entry. Immutable once built; dimension and index are derived
/// from the series parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HssSpace {
    series: Series,
    dimension: u32,
    index: u32,
    embedding_degree: Option<u32>,
}

fn floor_err(series: &'static str, bound: &'static str, got: String) -> SpaceError {
    SpaceError::BelowFloor { series, bound, got }
}

/// Validates catalog floors and builds the entry.
pub fn describe(series: Series) -> Result<HssSpace, SpaceError> {
    match series {
        Series::Projective { n } if n < 1 => return Err(floor_err("Projective", "n >= 1", n.to_string())),
        Series::Quadric { n } if n < 2 => return Err(floor_err("Quadric", "n >= 2", n.to_string())),
        Series::Grassmannian { a, b } if a < 2 || b < 2 => {
            return Err(floor_err("Grassmannian", "a, b >= 2", format!("({a}, {b})")))
        }
        Series::Lagrangian { n } if n < 3 => return Err(floor_err("Lagrangian", "n >= 3", n.to_string())),
        Series::Spinor { n } if n < 5 => return Err(floor_err("Spinor", "n >= 5", n.to_string())),
        _ => {}
    }
    Ok(HssSpace::build(series))
}

impl HssSpace {
    fn build(series: Series) -> HssSpace {
        let (dimension, index) = series.dimension_index();
        let embedding_degree = match series {
            Series::Projective { .. } => Some(1),
            Series::Quadric { .. } => Some(2),
            _ => None,
        };
        HssSpace {
            series,
            dimension,
            index,
            embedding_degree,
        }
    }

    /// Builds an entry below the catalog floors (e.g. Gr(1, b), Spinor(3)),
    /// using the same closed forms. Only meant for isomorphism cross-checks;
    /// the combinatorial oracle still applies to such members.
    pub fn unchecked(series: Series) -> HssSpace {
        HssSpace::build(series)
    }

    pub fn projective(n: u32) -> Result<HssSpace, SpaceError> {
        describe(Series::Projective { n })
    }

    pub fn quadric(n: u32) -> Result<HssSpace, SpaceError> {
        describe(Series::Quadric { n })
    }

    pub fn grassmannian(a: u32, b: u32) -> Result<HssSpace, SpaceError> {
        describe(Series::Grassmannian { a, b })
    }

    pub fn lagrangian(n: u32) -> Result<HssSpace, SpaceError> {
        describe(Series::Lagrangian { n })
    }

    pub fn spinor(n: u32) -> Result<HssSpace, SpaceError> {
        describe(Series::Spinor { n })
    }

    pub fn e3() -> HssSpace {
        HssSpace::build(Series::ExceptionalEIII)
    }

    pub fn e7() -> HssSpace {
        HssSpace::build(Series::ExceptionalEVII)
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    /// c_1(Y) = index · H.
    pub fn index(&self) -> u32 {
        self.index
    }

    /// H^dim for the minimal embedding; only tabulated for P^n and Q^n.
    pub fn embedding_degree(&self) -> Option<u32> {
        self.embedding_degree
    }

    /// Q^2 = P^1 x P^1 has Picard rank 2.
    pub fn has_reducible_picard(&self) -> bool {
        matches!(self.series, Series::Quadric { n: 2 })
    }

    pub fn is_projective(&self) -> bool {
        matches!(self.series, Series::Projective { .. })
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self.series, Series::ExceptionalEIII | Series::ExceptionalEVII)
    }

    /// index == dimension: the quadrics, and Gr(2,4) which is Q^4.
    pub fn is_quadric_like(&self) -> bool {
        self.index == self.dimension
    }

    /// p · index / dim, the slope of Omega^p divided by deg H^dim.
    ///
    /// Panics if `p > dimension`.
    pub fn slope_threshold(&self, p: u32) -> Rational {
        assert!(p <= self.dimension, "rank {p} exceeds dimension {}", self.dimension);
        Rational::new(i64::from(p) * i64::from(self.index), i64::from(self.dimension))
    }

    /// The textual key, e.g. `A:2,3` or `B:5`.
    pub fn key(&self) -> String {
        match self.series {
            Series::Projective { n } => format!("P:{n}"),
            Series::Quadric { n } => format!("B:{n}"),
            Series::Grassmannian { a, b } => format!("A:{a},{b}"),
            Series::Lagrangian { n } => format!("C:{n}"),
            Series::Spinor { n } => format!("D:{n}"),
            Series::ExceptionalEIII => "E3".to_string(),
            Series::ExceptionalEVII => "E7".to_string(),
        }
    }
}

impl fmt::Display for HssSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

impl FromStr for HssSpace {
    type Err = SpaceError;

    /// Accepts `P:n`, `B:n` (or `Q:n`), `A:a,b`, `C:n`, `D:n`, `E3`, `E7`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SpaceError::BadKey(s.to_string());
        let t = s.trim();
        match t.to_ascii_uppercase().as_str() {
            "E3" | "EIII" => return Ok(HssSpace::e3()),
            "E7" | "EVII" => return Ok(HssSpace::e7()),
            _ => {}
        }
        let (tag, rest) = t.split_once(':').ok_or_else(bad)?;
        let nums: Vec<u32> = rest
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let series = match (tag.trim().to_ascii_uppercase().as_str(), nums.as_slice()) {
            ("P", [n]) => Series::Projective { n: *n },
            ("B" | "Q", [n]) => Series::Quadric { n: *n },
            ("A", [a, b]) => Series::Grassmannian { a: *a, b: *b },
            ("C", [n]) => Series::Lagrangian { n: *n },
            ("D", [n]) => Series::Spinor { n: *n },
            _ => return Err(bad()),
        };
        describe(series)
    }
}

impl Serialize for HssSpace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.key())
    }
}

/// One catalog row per series, with closed forms.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogRow {
    pub series: &'static str,
    pub key: &'static str,
    pub parameters: &'static str,
    pub dimension: &'static str,
    pub index: &'static str,
}

pub fn catalog() -> Vec<CatalogRow> {
    let row = |series, key, parameters, dimension, index| CatalogRow {
        series,
        key,
        parameters,
        dimension,
        index,
    };
    vec![
        row("Projective", "P:n", "n >= 1", "n", "n+1"),
        row("Quadric", "B:n", "n >= 2", "n", "n"),
        row("Grassmannian", "A:a,b", "a, b >= 2", "ab", "a+b"),
        row("Lagrangian", "C:n", "n >= 3", "n(n+1)/2", "n+1"),
        row("Spinor", "D:n", "n >= 5", "n(n-1)/2", "2(n-1)"),
        row("EIII", "E3", "-", "16", "12"),
        row("EVII", "E7", "-", "27", "18"),
    ]
}
