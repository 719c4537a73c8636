//! Exhaustive enumeration, brute-force containment oracles, threshold search
//! and random generation.

pub mod containment;
pub mod enumerate;
pub mod random;
pub mod threshold;

pub use containment::{contains_any, contains_canonical, verify_witness, ContainmentIndex, ContainmentWitness};
pub use enumerate::{cyclic_orders, enumerate_systems, Enumerator, DEFAULT_MAX_ENUMERATION_SIZE};
pub use random::{random_separated_system, random_system};
pub use threshold::{ramsey_threshold, scan_size, SearchConfig, SizeReport, ThresholdReport};
