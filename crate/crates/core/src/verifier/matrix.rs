use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Claim, Expected, Tally, VerificationReport, Verifier, VerifyError};

const MAX_ORDER: usize = 8;
/// Orders whose box has at most this many matrices are enumerated fully.
const EXHAUSTIVE_LIMIT: u64 = 20_000_000;

type Mat = [[i64; MAX_ORDER]; MAX_ORDER];

/// Rank over Q by fraction-free (Bareiss) elimination.
pub fn exact_rank(rows: &[Vec<i64>]) -> usize {
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for c in 0..m {
        let Some(piv) = (rank..n).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        for i in rank + 1..n {
            for j in c + 1..m {
                a[i][j] = (a[i][j] * a[rank][c] - a[i][c] * a[rank][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

fn params(order: usize) -> usize {
    order * (order + 1) / 2
}

/// Fills the diagonal and the strict upper triangle from `vals`; the lower
/// triangle is the negated transpose.
#[allow(clippy::needless_range_loop)]
fn build(order: usize, vals: &[i64]) -> Mat {
    let mut b = [[0i64; MAX_ORDER]; MAX_ORDER];
    let mut k = 0;
    for i in 0..order {
        b[i][i] = vals[k];
        k += 1;
    }
    for i in 0..order {
        for j in i + 1..order {
            b[i][j] = vals[k];
            b[j][i] = -vals[k];
            k += 1;
        }
    }
    b
}

/// Rank exactly one over Q.
fn rank_is_one(order: usize, b: &Mat) -> bool {
    let rows: Vec<Vec<i64>> = (0..order).map(|i| b[i][..order].to_vec()).collect();
    exact_rank(&rows) == 1
}

/// Indices touched by a nonzero entry. The claim is that there are at most
/// two, so the support is a single diagonal cell or a principal 2x2 block.
fn support_indices(order: usize, b: &Mat) -> Vec<usize> {
    (0..order)
        .filter(|&i| (0..order).any(|j| b[i][j] != 0 || b[j][i] != 0))
        .collect()
}

fn classify(order: usize, b: &Mat, t: &mut Tally) {
    if !rank_is_one(order, b) {
        return;
    }
    t.note(format!("order {order}: rank-one instances"));
    let idx = support_indices(order, b);
    match idx.len() {
        1 => {
            t.equalities.insert("single-diagonal-cell".to_string());
        }
        2 => {
            t.equalities.insert("principal-2x2-block".to_string());
        }
        _ => {
            let rows: Vec<String> = (0..order).map(|i| format!("{:?}", &b[i][..order])).collect();
            t.violations.push(format!("order {order}: support spans {idx:?} in [{}]", rows.join(", ")));
        }
    }
}

fn decode(mut code: u64, base: u64, bound: i64, out: &mut [i64]) {
    for v in out.iter_mut() {
        *v = (code % base) as i64 - bound;
        code /= base;
    }
}

impl Verifier {
    /// Integer matrices B = S + D (S skew-symmetric, D diagonal) with
    /// entries in [-bound, bound] and rank 1 are supported on {i,j} x {i,j}
    /// for some i, j. Orders with at most 20M matrices are enumerated;
    /// larger ones draw `sample_budget` seeded samples.
    pub fn rank_one_matrices(
        &self,
        orders: std::ops::RangeInclusive<u32>,
        bound: u32,
        sample_budget: u64,
        seed: u64,
    ) -> Result<VerificationReport, VerifyError> {
        if *orders.start() < 1 || *orders.end() as usize > MAX_ORDER || bound == 0 {
            return Err(VerifyError::BadRange(format!(
                "orders must lie in 1..={MAX_ORDER} and bound must be positive"
            )));
        }
        let started = Instant::now();
        let base = 2 * u64::from(bound) + 1;
        let b = i64::from(bound);
        let mut chunks: Vec<(usize, u64, u64, bool)> = Vec::new();
        let mut sampled = Vec::new();
        let mut exhaustive_from_two = false;
        for order in orders.clone() {
            let order = order as usize;
            let total = u32::try_from(params(order)).ok().and_then(|e| base.checked_pow(e));
            match total {
                Some(total) if total <= EXHAUSTIVE_LIMIT => {
                    exhaustive_from_two |= order >= 2;
                    let pieces = self.pieces().max(1);
                    let step = total.div_ceil(pieces);
                    for i in 0..pieces {
                        let (lo, hi) = (i * step, ((i + 1) * step).min(total));
                        if lo < hi {
                            chunks.push((order, lo, hi, true));
                        }
                    }
                }
                _ => {
                    sampled.push(order);
                    let pieces = self.pieces().min(sample_budget.max(1));
                    let step = sample_budget.div_ceil(pieces);
                    for i in 0..pieces {
                        let (lo, hi) = (i * step, ((i + 1) * step).min(sample_budget));
                        if lo < hi {
                            chunks.push((order, lo, hi, false));
                        }
                    }
                }
            }
        }
        let mut tally = self.sweep(chunks, |(order, lo, hi, exhaustive)| {
            let mut t = Tally::default();
            let mut vals = vec![0i64; params(order)];
            if exhaustive {
                for code in lo..hi {
                    decode(code, base, b, &mut vals);
                    t.instances += 1;
                    classify(order, &build(order, &vals), &mut t);
                }
            } else {
                // one stream per sample index keeps results independent of chunking
                for k in lo..hi {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(k);
                    for v in vals.iter_mut() {
                        *v = rng.random_range(-b..=b);
                    }
                    t.instances += 1;
                    classify(order, &build(order, &vals), &mut t);
                }
            }
            t
        })?;
        let expected: BTreeSet<String> = ["single-diagonal-cell", "principal-2x2-block"]
            .into_iter()
            .map(String::from)
            .collect();
        for order in sampled {
            tally.findings.insert(format!("order {order}: sampled, not exhaustive"), sample_budget);
        }
        Ok(self.finish(
            Claim::RankOneMatrices,
            format!("orders {}..={}, entries in [-{bound}, {bound}]", orders.start(), orders.end()),
            tally,
            Expected {
                equalities: exhaustive_from_two.then_some(expected),
                boundary: None,
            },
            started,
        ))
    }
}
