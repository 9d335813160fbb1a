use std::fmt;

use super::{binomial, CombinatoricsError};

/// A Young diagram fitting in an a x b box (at most `rows` parts, each at
/// most `cols`). Parts are stored non-increasing with trailing zeros dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    rows: u32,
    cols: u32,
    parts: Vec<u32>,
}

impl Partition {
    /// Parts may be given in any order; zeros are dropped.
    pub fn new(parts: &[u32], rows: u32, cols: u32) -> Result<Partition, CombinatoricsError> {
        let mut p: Vec<u32> = parts.iter().copied().filter(|&x| x > 0).collect();
        p.sort_unstable_by(|x, y| y.cmp(x));
        if p.len() > rows as usize || p.first().is_some_and(|&x| x > cols) {
            return Err(CombinatoricsError::OutOfBox {
                parts: parts.to_vec(),
                rows,
                cols,
            });
        }
        Ok(Partition { rows, cols, parts: p })
    }

    pub fn empty(rows: u32, cols: u32) -> Partition {
        Partition {
            rows,
            cols,
            parts: Vec::new(),
        }
    }

    /// The full box (b^a).
    pub fn rectangle(rows: u32, cols: u32) -> Partition {
        let parts = if cols == 0 { Vec::new() } else { vec![cols; rows as usize] };
        Partition { rows, cols, parts }
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    /// Nonzero parts, non-increasing.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |lambda|, which is the exterior power p of the corresponding summand.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Vec<u32> {
        let first = self.parts.first().copied().unwrap_or(0);
        (0..first)
            .map(|j| self.parts.iter().take_while(|&&x| x > j).count() as u32)
            .collect()
    }

    /// Transpose, living in the b x a box.
    pub fn transpose(&self) -> Partition {
        Partition {
            rows: self.cols,
            cols: self.rows,
            parts: self.conjugate(),
        }
    }

    /// Hook lengths of every cell, sorted ascending.
    pub fn hooks(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut h = Vec::with_capacity(self.weight() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for (j, &col) in conj.iter().enumerate().take(row as usize) {
                let arm = row - j as u32 - 1;
                let leg = col - i as u32 - 1;
                h.push(arm + leg + 1);
            }
        }
        h.sort_unstable();
        h
    }

    /// No hook equals `l`.
    pub fn is_admissible(&self, l: u32) -> bool {
        !self.hooks().contains(&l)
    }

    /// Number of hooks exceeding `l`: the cohomological degree q.
    pub fn degree(&self, l: u32) -> u32 {
        self.hooks().iter().filter(|&&h| h > l).count() as u32
    }

    /// A diagram is a hook if it has at most one row longer than 1.
    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&x| x <= 1)
    }

    /// Padded part vector (lambda_1, ..., lambda_a) including zeros.
    pub fn padded(&self) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(self.rows as usize, 0);
        v
    }

    /// Position in [`Partitions`] order.
    pub fn rank(&self) -> u64 {
        let combo = combo_of(&self.padded());
        rank_combination(&combo, self.rows + self.cols)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({}) in {}x{}", body.join(","), self.rows, self.cols)
    }
}

// Partitions in an a x b box correspond to a-subsets of {0..a+b-1} via
// c_i = lambda_{a+1-i} + i - 1 (1-based). We enumerate subsets in lex order.

fn combo_of(padded: &[u32]) -> Vec<u32> {
    let a = padded.len();
    (0..a).map(|i| padded[a - 1 - i] + i as u32).collect()
}

fn partition_of(combo: &[u32], rows: u32, cols: u32) -> Partition {
    let a = combo.len();
    let mut parts: Vec<u32> = (0..a).map(|i| combo[a - 1 - i] - (a - 1 - i) as u32).collect();
    parts.retain(|&x| x > 0);
    Partition { rows, cols, parts }
}

fn rank_combination(combo: &[u32], n: u32) -> u64 {
    let k = combo.len() as u32;
    let mut r = 0u64;
    let mut start = 0u32;
    for (i, &c) in combo.iter().enumerate() {
        for v in start..c {
            r += binomial(n - 1 - v, k - 1 - i as u32);
        }
        start = c + 1;
    }
    r
}

fn unrank_combination(mut r: u64, n: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    let mut v = 0u32;
    for i in 0..k {
        loop {
            let c = binomial(n - 1 - v, k - 1 - i);
            if r < c {
                break;
            }
            r -= c;
            v += 1;
        }
        out.push(v);
        v += 1;
    }
    out
}

/// Iterator over all partitions in an a x b box, in a fixed total order
/// (lex order on the associated subsets). Supports resuming from a rank so
/// that sweeps can be split into chunks.
#[derive(Clone, Debug)]
pub struct Partitions {
    rows: u32,
    cols: u32,
    combo: Vec<u32>,
    remaining: u64,
}

impl Partitions {
    /// C(a+b, a).
    pub fn count(rows: u32, cols: u32) -> u64 {
        binomial(rows + cols, rows)
    }

    /// Ranks `start..end` (clamped to the total count).
    pub fn range(rows: u32, cols: u32, start: u64, end: u64) -> Partitions {
        let total = Partitions::count(rows, cols);
        let end = end.min(total);
        let start = start.min(end);
        let combo = if start < total {
            unrank_combination(start, rows + cols, rows)
        } else {
            Vec::new()
        };
        Partitions {
            rows,
            cols,
            combo,
            remaining: end - start,
        }
    }

    /// Splits the full enumeration into at most `n` contiguous pieces.
    pub fn chunks(rows: u32, cols: u32, n: u64) -> Vec<Partitions> {
        let total = Partitions::count(rows, cols);
        let n = n.clamp(1, total.max(1));
        let step = total.div_ceil(n);
        (0..n)
            .map(|i| Partitions::range(rows, cols, i * step, (i + 1) * step))
            .filter(|p| p.remaining > 0)
            .collect()
    }

    fn advance(&mut self) {
        let n = self.rows + self.cols;
        let k = self.combo.len();
        for i in (0..k).rev() {
            if self.combo[i] < n - (k - i) as u32 {
                self.combo[i] += 1;
                for j in i + 1..k {
                    self.combo[j] = self.combo[j - 1] + 1;
                }
                return;
            }
        }
    }
}

/// Every partition in the a x b box; there are C(a+b, a) of them.
pub fn enumerate_partitions(rows: u32, cols: u32) -> Partitions {
    Partitions::range(rows, cols, 0, u64::MAX)
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.remaining == 0 {
            return None;
        }
        let p = partition_of(&self.combo, self.rows, self.cols);
        self.remaining -= 1;
        if self.remaining > 0 {
            self.advance();
        }
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.remaining as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Partitions {}
