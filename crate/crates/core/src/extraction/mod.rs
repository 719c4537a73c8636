//! Sieves, the extraction pipeline and the bound recurrences.

pub mod bounds;
pub mod monotone;
mod pipeline;
pub mod sieve;

pub use bounds::{bound_n0, bound_n1, bound_n2, BoundTable};
pub use monotone::{longest_monotone_subsequence, MonotoneSubsequence};
pub use pipeline::{
    find_unavoidable, largest_cell, run_sieves, verify_certificate, ExtractionCertificate,
    PipelineTrace, StageLog,
};
pub use sieve::{
    backward_sieve, backward_sieve_step, find_backward_monotone_subsystem,
    find_forward_monotone_subsystem, find_separated_subsystem, forward_sieve, forward_sieve_step,
    separated_sieve, separated_sieve_step, SieveKind, SieveRun, SieveStep,
};
