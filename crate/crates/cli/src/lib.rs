//! Drivers behind the `spardiff` command-line tool: a two-variable
//! verification run, sparse Jacobians of a 1-D stencil and of a synthetic
//! block-coupled reaction network, and a sparse-versus-dense benchmark.

pub mod commands;
pub mod format;
pub mod problems;
pub mod record;
pub mod timing;
pub mod verify;

pub use commands::{
    install_capacity, run_bench, run_network, run_stencil, BenchComparison, NetworkOutcome,
    StencilOutcome, BENCH_CAPACITY,
};
pub use record::BenchRecord;
pub use verify::{run_verify, VerifyReport};
