//! Batch experiments: determinant sweeps, randomized product-rule checks,
//! counterexamples outside integral domains, and table reproduction.

pub mod counterexamples;
pub mod published;
pub mod report;
pub mod sweep;
pub mod tables;
pub mod theorem;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use counterexamples::{counterexample_suite, CounterexampleSummary};
pub use report::{render, write_output, Format, Render};
pub use sweep::{sweep, PairRecord, SweepConfig, SweepReport, DEFAULT_CAP};
pub use tables::{reproduce_tables, TableArtifact};
pub use theorem::{verify_theorem, TheoremSummary};

/// Generator for one independent unit of work. Each unit gets its own
/// stream so results do not depend on scheduling.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Stream id for the pair `(u, v)`.
pub fn pair_stream(u: u64, v: u64) -> u64 {
    (u << 32) | (v & 0xffff_ffff)
}
