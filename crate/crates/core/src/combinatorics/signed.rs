use std::fmt;
use std::num::NonZeroU32;

use super::CombinatoricsError;

/// Which pair rule a signed sequence obeys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignedSeries {
    /// Lagrangian type: x_1..x_n with |x_i| = i, pairs i <= j against 2l.
    C,
    /// Spinor type: x_0 = 0 and |x_i| = i for 1 <= i <= n-1, pairs i < j against l.
    D,
}

impl SignedSeries {
    fn tag(self) -> char {
        match self {
            SignedSeries::C => 'C',
            SignedSeries::D => 'D',
        }
    }

    /// Number of free signs for parameter n.
    pub fn free_signs(self, n: u32) -> u32 {
        match self {
            SignedSeries::C => n,
            SignedSeries::D => n.saturating_sub(1),
        }
    }
}

/// A sign pattern describing one summand of Omega^p on LG(n,2n) or the
/// spinor variety. Entries are stored in index order; for type D the first
/// entry is the fixed x_0 = 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedSequence {
    series: SignedSeries,
    entries: Vec<i32>,
}

impl SignedSequence {
    /// Validates |x_i| = i (and x_0 = 0 for type D).
    pub fn new(series: SignedSeries, entries: &[i32]) -> Result<SignedSequence, CombinatoricsError> {
        let offset = match series {
            SignedSeries::C => 1,
            SignedSeries::D => 0,
        };
        let ok = !entries.is_empty()
            && entries
                .iter()
                .enumerate()
                .all(|(k, &x)| x.unsigned_abs() == (k + offset) as u32);
        if !ok {
            return Err(CombinatoricsError::BadSignedSequence {
                series: series.tag(),
                entries: entries.to_vec(),
            });
        }
        Ok(SignedSequence {
            series,
            entries: entries.to_vec(),
        })
    }

    /// Bit k of `mask` set means the (k+1)-th signed entry is positive.
    pub fn from_mask(series: SignedSeries, n: u32, mask: u64) -> SignedSequence {
        let signs = series.free_signs(n);
        let mut entries = Vec::with_capacity(n as usize);
        if series == SignedSeries::D {
            entries.push(0);
        }
        for k in 0..signs {
            let v = (k + 1) as i32;
            entries.push(if mask >> k & 1 == 1 { v } else { -v });
        }
        SignedSequence { series, entries }
    }

    pub fn series(&self) -> SignedSeries {
        self.series
    }

    /// The n of C_n or D_n.
    pub fn n(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    /// Sum of the positive entries: the exterior power p.
    pub fn weight(&self) -> u32 {
        self.entries.iter().filter(|&&x| x > 0).map(|&x| x as u32).sum()
    }

    fn target(&self, l: i64) -> i64 {
        match self.series {
            SignedSeries::C => 2 * l,
            SignedSeries::D => l,
        }
    }

    fn pairs(&self) -> impl Iterator<Item = i64> + '_ {
        let strict = usize::from(self.series == SignedSeries::D);
        let e = &self.entries;
        (0..e.len()).flat_map(move |i| (i + strict..e.len()).map(move |j| i64::from(e[i]) + i64::from(e[j])))
    }

    /// Degree for an arbitrary twist, or None when some pair hits the
    /// target. At l = 0 every pattern passes and the degree is the weight.
    pub fn degree_at(&self, l: i64) -> Option<u32> {
        let t = self.target(l);
        let mut q = 0;
        for s in self.pairs() {
            if s == t {
                return None;
            }
            if s > t {
                q += 1;
            }
        }
        Some(q)
    }

    pub fn is_admissible(&self, l: NonZeroU32) -> bool {
        self.degree_at(i64::from(l.get())).is_some()
    }

    /// Pairs whose sum exceeds the target. Meaningful for admissible input.
    pub fn degree(&self, l: NonZeroU32) -> u32 {
        let t = self.target(i64::from(l.get()));
        self.pairs().filter(|&s| s > t).count() as u32
    }
}

impl fmt::Display for SignedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "{}:[{}]", self.series.tag(), body.join(","))
    }
}

/// Sign patterns in binary-counter order (mask 0 = all negative).
#[derive(Clone, Debug)]
pub struct SignedSequences {
    series: SignedSeries,
    n: u32,
    next: u64,
    end: u64,
}

impl SignedSequences {
    pub fn count(series: SignedSeries, n: u32) -> u64 {
        1u64 << series.free_signs(n)
    }

    pub fn range(series: SignedSeries, n: u32, start: u64, end: u64) -> SignedSequences {
        let end = end.min(SignedSequences::count(series, n));
        SignedSequences {
            series,
            n,
            next: start.min(end),
            end,
        }
    }

    pub fn chunks(series: SignedSeries, n: u32, pieces: u64) -> Vec<SignedSequences> {
        let total = SignedSequences::count(series, n);
        let pieces = pieces.clamp(1, total);
        let step = total.div_ceil(pieces);
        (0..pieces)
            .map(|i| SignedSequences::range(series, n, i * step, (i + 1) * step))
            .filter(|s| s.next < s.end)
            .collect()
    }
}

/// All 2^n (type C) or 2^(n-1) (type D) patterns.
pub fn enumerate_signed(series: SignedSeries, n: u32) -> SignedSequences {
    SignedSequences::range(series, n, 0, u64::MAX)
}

impl Iterator for SignedSequences {
    type Item = SignedSequence;

    fn next(&mut self) -> Option<SignedSequence> {
        if self.next >= self.end {
            return None;
        }
        let s = SignedSequence::from_mask(self.series, self.n, self.next);
        self.next += 1;
        Some(s)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for SignedSequences {}
