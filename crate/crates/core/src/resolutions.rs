//! Twist data of a locally free resolution
//! 0 -> F_k -> ... -> F_1 -> O_Y -> O_X -> 0 with F_i = sum_j O_Y(-d_ij).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::spaces::HssSpace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("term {i} contains twist {d} < {i}")]
    Malformed { i: usize, d: u32 },
    #[error("term {0} is empty")]
    EmptyTerm(usize),
    #[error("a complete intersection needs at least one degree, all >= 1")]
    BadDegrees,
    #[error("cannot parse resolution `{0}`; expected `ci:2,3` or `raw:[{{2,3}},{{5}}]`")]
    Parse(String),
}

/// Terms F_1..F_k as sorted multisets of twists. F_0 = O_Y is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Resolution {
    terms: Vec<Vec<u32>>,
    koszul_degrees: Option<Vec<u32>>,
}

impl Resolution {
    /// Validates d_ij >= i for every twist.
    pub fn from_terms(terms: Vec<Vec<u32>>) -> Result<Resolution, ResolutionError> {
        let mut terms = terms;
        for (idx, t) in terms.iter_mut().enumerate() {
            let i = idx + 1;
            if t.is_empty() {
                return Err(ResolutionError::EmptyTerm(i));
            }
            if let Some(&d) = t.iter().find(|&&d| (d as usize) < i) {
                return Err(ResolutionError::Malformed { i, d });
            }
            t.sort_unstable();
        }
        Ok(Resolution {
            terms,
            koszul_degrees: None,
        })
    }

    /// The Koszul complex of a complete intersection of the given degrees:
    /// F_i has one twist per i-element subset, equal to the subset sum.
    pub fn koszul(degrees: &[u32]) -> Result<Resolution, ResolutionError> {
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(ResolutionError::BadDegrees);
        }
        let c = degrees.len();
        // sums[i] holds the multiset of i-subset sums of the degrees seen so far
        let mut sums: Vec<Vec<u32>> = vec![Vec::new(); c + 1];
        sums[0].push(0);
        for &d in degrees {
            for i in (1..=c).rev() {
                let shifted: Vec<u32> = sums[i - 1].iter().map(|s| s + d).collect();
                sums[i].extend(shifted);
            }
        }
        let mut r = Resolution::from_terms(sums.split_off(1))?;
        let mut sorted = degrees.to_vec();
        sorted.sort_unstable();
        r.koszul_degrees = Some(sorted);
        Ok(r)
    }

    /// k, the number of nonzero terms after O_Y.
    pub fn length(&self) -> usize {
        self.terms.len()
    }

    /// F_i for i in 1..=k; F_0 is [0].
    pub fn term(&self, i: usize) -> &[u32] {
        const ZERO: &[u32] = &[0];
        if i == 0 {
            ZERO
        } else {
            &self.terms[i - 1]
        }
    }

    pub fn terms(&self) -> &[Vec<u32>] {
        &self.terms
    }

    pub fn koszul_degrees(&self) -> Option<&[u32]> {
        self.koszul_degrees.as_deref()
    }

    /// Some d_1j = 1, i.e. X lies in a hyperplane.
    pub fn has_linear_term(&self) -> bool {
        self.terms.first().is_some_and(|t| t.contains(&1))
    }

    /// d_ij >= i + 1 everywhere. For a Koszul complex this is the same as
    /// having no linear equation.
    pub fn is_strict(&self) -> bool {
        self.terms
            .iter()
            .enumerate()
            .all(|(idx, t)| t.iter().all(|&d| d as usize >= idx + 2))
    }

    /// Alternating rank sum 1 - r_1 + r_2 - ...; zero for any resolution of
    /// a proper subvariety.
    pub fn euler_rank(&self) -> i64 {
        1 + self
            .terms
            .iter()
            .enumerate()
            .map(|(idx, t)| if idx % 2 == 0 { -(t.len() as i64) } else { t.len() as i64 })
            .sum::<i64>()
    }

    pub fn validate_short(&self, space: &HssSpace) -> ShortnessReport {
        ShortnessReport {
            length: self.length(),
            dimension: space.dimension(),
            is_short: self.length() < space.dimension() as usize,
            has_linear_term: self.has_linear_term(),
            is_strict: self.is_strict(),
        }
    }
}

impl fmt::Display for Resolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(d) = &self.koszul_degrees {
            let body: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            return write!(f, "ci:{}", body.join(","));
        }
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let body: Vec<String> = t.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", body.join(","))
            })
            .collect();
        write!(f, "raw:[{}]", terms.join(","))
    }
}

impl Serialize for Resolution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_list(s: &str) -> Option<Vec<u32>> {
    s.split(',').map(|x| x.trim().parse().ok()).collect()
}

impl FromStr for Resolution {
    type Err = ResolutionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ResolutionError::Parse(s.to_string());
        let t = s.trim();
        if let Some(rest) = t.strip_prefix("ci:") {
            return Resolution::koszul(&parse_list(rest).ok_or_else(bad)?);
        }
        let body = t
            .strip_prefix("raw:")
            .and_then(|r| r.trim().strip_prefix('['))
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let mut terms = Vec::new();
        let mut rest = body.trim();
        while !rest.is_empty() {
            let open = rest.strip_prefix('{').ok_or_else(bad)?;
            let (inner, after) = open.split_once('}').ok_or_else(bad)?;
            terms.push(parse_list(inner).ok_or_else(bad)?);
            rest = after.trim_start();
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        }
        if terms.is_empty() {
            return Err(bad());
        }
        Resolution::from_terms(terms)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ShortnessReport {
    pub length: usize,
    pub dimension: u32,
    pub is_short: bool,
    pub has_linear_term: bool,
    pub is_strict: bool,
}
