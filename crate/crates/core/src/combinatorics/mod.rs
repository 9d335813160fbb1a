//! Young diagrams and signed sequences indexing the irreducible summands of
//! Omega^p on the classical series, with their admissibility and degree rules.

mod partition;
mod signed;

use thiserror::Error;

pub use partition::{enumerate_partitions, Partition, Partitions};
pub use signed::{enumerate_signed, SignedSequence, SignedSequences, SignedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    #[error("partition {parts:?} does not fit in a {rows}x{cols} box")]
    OutOfBox { parts: Vec<u32>, rows: u32, cols: u32 },
    #[error("{entries:?} is not a valid type {series} sequence")]
    BadSignedSequence { series: char, entries: Vec<i32> },
}

/// C(n, k), exact for every value that fits in a u64.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    u64::try_from(acc).expect("binomial overflows u64")
}
