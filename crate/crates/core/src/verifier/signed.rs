use std::collections::BTreeSet;
use std::time::Instant;

use super::{Claim, Expected, Tally, VerificationReport, Verifier, VerifyError};
use crate::combinatorics::{SignedSequence, SignedSequences, SignedSeries};

fn label(x: &SignedSequence, l: u32, q: u32) -> String {
    format!("{x} l={l} q={q}")
}

fn seq(series: SignedSeries, entries: Vec<i32>) -> SignedSequence {
    SignedSequence::new(series, &entries).expect("valid by construction")
}

/// (-1, ..., -l, l+1, -(l+2), ..., -n).
fn lagrangian_upper_family(n: u32, l: u32) -> SignedSequence {
    let e = (1..=n as i32).map(|i| if i == l as i32 + 1 { i } else { -i }).collect();
    seq(SignedSeries::C, e)
}

/// Exactly two positive entries x_i, x_j with i + j = l + 1 and
/// min_i <= i < j <= n-1.
fn spinor_pair_family(n: u32, l: u32, min_i: u32) -> Vec<SignedSequence> {
    let mut out = Vec::new();
    for i in min_i..n {
        let j = l + 1 - i.min(l + 1);
        if j > i && j < n && i + j == l + 1 {
            let e = (0..n as i32)
                .map(|k| if k == i as i32 || k == j as i32 { k } else { -k })
                .collect();
            out.push(seq(SignedSeries::D, e));
        }
    }
    out
}

/// (0, 1, -2, ..., -l, l+1, -(l+2), ..., -(n-1)) for l >= 2.
fn spinor_second_family(n: u32, l: u32) -> Option<SignedSequence> {
    if l < 2 || l + 1 > n - 1 {
        return None;
    }
    let e = (0..n as i32)
        .map(|k| if k == 1 || k == l as i32 + 1 { k } else { -k })
        .collect();
    Some(seq(SignedSeries::D, e))
}

/// q for an admissible sequence, computed from the pair rule directly.
fn degree(x: &SignedSequence, l: u32) -> Option<u32> {
    x.degree_at(i64::from(l))
}

impl Verifier {
    fn signed_chunks(&self, series: SignedSeries, ns: std::ops::RangeInclusive<u32>) -> Vec<(u32, SignedSequences)> {
        ns.flat_map(|n| {
            SignedSequences::chunks(series, n, self.pieces())
                .into_iter()
                .map(move |c| (n, c))
        })
        .collect()
    }

    /// On LG(n, 2n), 3 <= n: (l + q) · n >= 2p for l-admissible sequences,
    /// equality only for x_i = i at l = n + 1. At l = 1, with t the number
    /// of entries above 1, q = t^2 and p = t(t+1).
    pub fn lagrangian_lower(&self, n_max: u32, l_max: u32) -> Result<VerificationReport, VerifyError> {
        if n_max < 3 || l_max < 1 {
            return Err(VerifyError::BadRange("need n_max >= 3 and l_max >= 1".into()));
        }
        let started = Instant::now();
        let chunks = self.signed_chunks(SignedSeries::C, 3..=n_max);
        let tally = self.sweep(chunks, |(n, xs)| {
            let mut t = Tally::default();
            for x in xs {
                let p = x.weight();
                for l in 1..=l_max {
                    t.instances += 1;
                    let Some(q) = degree(&x, l) else { continue };
                    let (lhs, rhs) = ((l + q) * n, 2 * p);
                    if lhs < rhs {
                        t.violations.push(format!("{} below bound", label(&x, l, q)));
                    } else if lhs == rhs {
                        t.equalities.insert(label(&x, l, q));
                    }
                    if l == 1 {
                        let big = x.entries().iter().filter(|&&e| e > 1).count() as u32;
                        if q != big * big || p != big * (big + 1) {
                            t.violations
                                .push(format!("{} breaks the twist-1 pattern (t={big})", label(&x, l, q)));
                        }
                        if 2 * p != big * (big + 1) {
                            t.note("twist 1: p = t(t+1)/2 does not hold; p = t(t+1) does");
                        }
                    }
                }
            }
            t
        })?;
        let eq = (3..=n_max)
            .filter(|&n| n < l_max)
            .map(|n| label(&seq(SignedSeries::C, (1..=n as i32).collect()), n + 1, 0))
            .collect();
        Ok(self.finish(
            Claim::LagrangianLower,
            format!("3<=n<={n_max}, 1<=l<={l_max}"),
            tally,
            Expected {
                equalities: Some(eq),
                boundary: None,
            },
            started,
        ))
    }

    /// On LG(n, 2n): l + q <= p when l, q > 0; equality exactly on
    /// (-1, ..., -l, l+1, -(l+2), ..., -n).
    pub fn lagrangian_upper(&self, n_max: u32, l_max: u32) -> Result<VerificationReport, VerifyError> {
        if n_max < 3 || l_max < 1 {
            return Err(VerifyError::BadRange("need n_max >= 3 and l_max >= 1".into()));
        }
        let started = Instant::now();
        let chunks = self.signed_chunks(SignedSeries::C, 3..=n_max);
        let tally = self.sweep(chunks, |(_, xs)| upper_tally(xs, l_max))?;
        let eq = (3..=n_max)
            .flat_map(|n| (1..n.min(l_max + 1)).map(move |l| label(&lagrangian_upper_family(n, l), l, 1)))
            .collect();
        Ok(self.finish(
            Claim::LagrangianUpper,
            format!("3<=n<={n_max}, 1<=l<={l_max}"),
            tally,
            Expected {
                equalities: Some(eq),
                boundary: None,
            },
            started,
        ))
    }

    /// On the spinor variety, 5 <= n: (l + q) · n >= 4p, equality only for
    /// x_i = i at l = 2(n-1). At l = 1 the only admissible sequence is the
    /// all-negative one.
    pub fn spinor_lower(&self, n_max: u32, l_max: u32) -> Result<VerificationReport, VerifyError> {
        if n_max < 5 || l_max < 1 {
            return Err(VerifyError::BadRange("need n_max >= 5 and l_max >= 1".into()));
        }
        let started = Instant::now();
        let chunks = self.signed_chunks(SignedSeries::D, 5..=n_max);
        let tally = self.sweep(chunks, |(n, xs)| {
            let mut t = Tally::default();
            for x in xs {
                let p = x.weight();
                let all_negative = p == 0;
                for l in 1..=l_max {
                    t.instances += 1;
                    let q = degree(&x, l);
                    if l == 1 && q.is_some() != all_negative {
                        t.violations.push(format!("{x}: twist-1 admissibility should hold only for the all-negative sequence"));
                    }
                    let Some(q) = q else { continue };
                    let (lhs, rhs) = ((l + q) * n, 4 * p);
                    if lhs < rhs {
                        t.violations.push(format!("{} below bound", label(&x, l, q)));
                    } else if lhs == rhs {
                        t.equalities.insert(label(&x, l, q));
                    }
                }
            }
            t
        })?;
        let eq = (5..=n_max)
            .filter(|&n| 2 * (n - 1) <= l_max)
            .map(|n| label(&seq(SignedSeries::D, (0..n as i32).collect()), 2 * (n - 1), 0))
            .collect();
        Ok(self.finish(
            Claim::SpinorLower,
            format!("5<=n<={n_max}, 1<=l<={l_max}"),
            tally,
            Expected {
                equalities: Some(eq),
                boundary: None,
            },
            started,
        ))
    }

    /// On the spinor variety: l + q <= p when l, q > 0. Equality holds on
    /// two families: two positive entries x_i, x_j with 2 <= i < j and
    /// i + j = l + 1 (q = 1), and (0, 1, -2, ..., -l, l+1, ...) for l >= 2
    /// (q = 2). Allowing i = 1 in the first family would add sequences
    /// containing x_0 + x_l = l, which are never admissible.
    pub fn spinor_upper(&self, n_max: u32, l_max: u32) -> Result<VerificationReport, VerifyError> {
        if n_max < 5 || l_max < 1 {
            return Err(VerifyError::BadRange("need n_max >= 5 and l_max >= 1".into()));
        }
        let started = Instant::now();
        let chunks = self.signed_chunks(SignedSeries::D, 5..=n_max);
        let mut tally = self.sweep(chunks, |(_, xs)| upper_tally(xs, l_max))?;
        let mut eq = BTreeSet::new();
        for n in 5..=n_max {
            for l in 1..=l_max {
                for x in spinor_pair_family(n, l, 2) {
                    eq.insert(label(&x, l, 1));
                }
                if let Some(x) = spinor_second_family(n, l) {
                    eq.insert(label(&x, l, 2));
                }
                for x in spinor_pair_family(n, l, 1) {
                    if x.entries()[1] > 0 {
                        debug_assert!(degree(&x, l).is_none());
                        tally.note("looser reading (x_1 > 0 allowed) predicts an inadmissible equality sequence");
                    }
                }
            }
        }
        Ok(self.finish(
            Claim::SpinorUpper,
            format!("5<=n<={n_max}, 1<=l<={l_max}"),
            tally,
            Expected {
                equalities: Some(eq),
                boundary: None,
            },
            started,
        ))
    }
}

fn upper_tally(xs: SignedSequences, l_max: u32) -> Tally {
    let mut t = Tally::default();
    for x in xs {
        let p = x.weight();
        for l in 1..=l_max {
            t.instances += 1;
            let Some(q) = degree(&x, l) else { continue };
            if q == 0 {
                continue;
            }
            if l + q > p {
                t.violations.push(format!("{} above p", label(&x, l, q)));
            } else if l + q == p {
                t.equalities.insert(label(&x, l, q));
            }
        }
    }
    t
}
