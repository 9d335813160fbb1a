use std::collections::BTreeSet;
use std::time::Instant;

use super::{Claim, Expected, Tally, VerificationReport, Verifier, VerifyError};
use crate::combinatorics::{enumerate_partitions, Partition, Partitions};

fn label(lam: &Partition, l: u32, q: u32) -> String {
    format!("{lam} l={l} q={q}")
}

fn boxes(a_max: u32, b_max: u32) -> Result<Vec<(u32, u32)>, VerifyError> {
    if a_max < 2 || b_max < 2 {
        return Err(VerifyError::BadRange("need a_max, b_max >= 2".into()));
    }
    Ok((2..=a_max).flat_map(|a| (2..=b_max).map(move |b| (a, b))).collect())
}

impl Verifier {
    fn young_chunks(&self, a_max: u32, b_max: u32) -> Result<Vec<Partitions>, VerifyError> {
        Ok(boxes(a_max, b_max)?
            .into_iter()
            .flat_map(|(a, b)| Partitions::chunks(a, b, self.pieces()))
            .collect())
    }

    /// For every partition in an a x b box (2 <= a, b) and 0 <= l <= a+b+margin
    /// with lambda l-admissible: (l + q) · ab >= |lambda| · (a+b).
    pub fn grassmannian_lower(&self, a_max: u32, b_max: u32, l_margin: u32) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let chunks = self.young_chunks(a_max, b_max)?;
        let tally = self.sweep(chunks, |parts| {
            let mut t = Tally::default();
            for lam in parts {
                let (a, b) = (lam.rows(), lam.cols());
                let (dim, index) = (u64::from(a * b), u64::from(a + b));
                let hooks = lam.hooks();
                let w = u64::from(lam.weight());
                for l in 0..=a + b + l_margin {
                    t.instances += 1;
                    if hooks.contains(&l) {
                        continue;
                    }
                    let q = hooks.iter().filter(|&&h| h > l).count() as u32;
                    let lhs = u64::from(l + q) * dim;
                    let rhs = w * index;
                    if lhs < rhs {
                        t.violations.push(format!("{} below bound", label(&lam, l, q)));
                    } else if lhs == rhs {
                        let target = if l == 0 { &mut t.boundary } else { &mut t.equalities };
                        target.insert(label(&lam, l, q));
                    }
                }
            }
            t
        })?;

        let mut eq = BTreeSet::new();
        let mut boundary = BTreeSet::new();
        for (a, b) in boxes(a_max, b_max)? {
            eq.insert(label(&Partition::rectangle(a, b), a + b, 0));
            boundary.insert(label(&Partition::empty(a, b), 0, 0));
            if (a, b) == (2, 2) {
                let hook = Partition::new(&[2, 1], 2, 2).expect("fits");
                eq.insert(label(&hook, 2, 1));
                for lam in enumerate_partitions(2, 2) {
                    let w = lam.weight();
                    boundary.insert(label(&lam, 0, w));
                }
            }
        }
        Ok(self.finish(
            Claim::GrassmannianLower,
            format!("2<=a<={a_max}, 2<=b<={b_max}, 0<=l<=a+b+{l_margin}"),
            tally,
            Expected {
                equalities: Some(eq),
                boundary: Some(boundary),
            },
            started,
        ))
    }

    /// For l, q > 0 with lambda l-admissible: l + q <= |lambda|, and equality
    /// forces lambda to be a hook.
    pub fn grassmannian_upper(&self, a_max: u32, b_max: u32, l_margin: u32) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let chunks = self.young_chunks(a_max, b_max)?;
        let tally = self.sweep(chunks, |parts| {
            let mut t = Tally::default();
            for lam in parts {
                let hooks = lam.hooks();
                let w = lam.weight();
                for l in 1..=lam.rows() + lam.cols() + l_margin {
                    t.instances += 1;
                    if hooks.contains(&l) {
                        continue;
                    }
                    let q = hooks.iter().filter(|&&h| h > l).count() as u32;
                    if q == 0 {
                        continue;
                    }
                    if l + q > w {
                        t.violations.push(format!("{} above |lambda|", label(&lam, l, q)));
                    } else if l + q == w {
                        if !lam.is_hook() {
                            t.violations.push(format!("{} attains equality but is not a hook", label(&lam, l, q)));
                        }
                        t.equalities.insert(label(&lam, l, q));
                    }
                }
            }
            t
        })?;
        Ok(self.finish(
            Claim::GrassmannianUpper,
            format!("2<=a<={a_max}, 2<=b<={b_max}, 1<=l<=a+b+{l_margin}"),
            tally,
            Expected::NONE,
            started,
        ))
    }
}
