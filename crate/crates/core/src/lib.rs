//! Cohomology of twisted exterior powers of the cotangent bundle on compact
//! irreducible Hermitian symmetric spaces, and stability certificates for
//! its restriction to complete intersections and other subvarieties with
//! short resolutions.

pub mod cli;
pub mod cohomology;
pub mod combinatorics;
pub mod resolutions;
pub mod spaces;
pub mod stability;
pub mod verifier;

pub use cohomology::{
    check_lower_bound, nonvanishing, serre_dual, CohomologyAnswer, CohomologyQuery, EqualityCase, Oracle, Status,
    Witness,
};
pub use combinatorics::{enumerate_partitions, enumerate_signed, Partition, SignedSequence, SignedSeries};
pub use resolutions::Resolution;
pub use spaces::{describe, HssSpace, Rational, Series};
pub use stability::{
    certify_restriction, langer_bound, q3_surface_invariants, small_dimension_verdict, Outcome, StabilityVerdict,
};
pub use verifier::{Claim, SpaceFamily, SweepParams, VerificationReport, Verifier};
