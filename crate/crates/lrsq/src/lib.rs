//! Exact arithmetic for sums of squares of Littlewood-Richardson
//! coefficients and the graded dimension identities they control:
//! invariants of simultaneous conjugation, harmonic polynomials on gl_n,
//! Hesselink multiplicities, necklace counts, and conjugacy classes of
//! GL_m(F_q). Everything is integer-exact; every identity is checked by
//! computing both sides independently.
//!
//! Start with the runnable programs in `examples/`; the `lrsq` binary
//! exposes the same operations as CLI verbs.

pub mod cli;
pub mod finite;
pub mod hesselink;
pub mod hilbert;
pub mod lr;
pub mod partition;
pub mod series;
pub mod symfunc;

pub use lr::{kostka, lr_coefficient, lr_multi, lr_multi_all, sum_lr_squared, LengthBounds};
pub use partition::{Partition, PartitionTuple};
pub use series::{IdentityReport, TruncatedSeries};
