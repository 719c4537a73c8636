//! Abstract rotation systems and their unavoidable subsystems.
//!
//! Every sufficiently large rotation system contains a subsystem equivalent to
//! the convex system `C_m`, the twisted system `T_m`, or one of their
//! inverses. This crate implements that extraction constructively:
//!
//! * [`system`]: rotation systems, induced subsystems, inverses, equivalence;
//! * [`canonical`]: the four families and the pigeonhole cell table;
//! * [`structure`]: separated splits and monotonicity classification;
//! * [`extraction`]: the arc and monotone sieves, the full pipeline with
//!   verifiable certificates, and exact worst-case bounds;
//! * [`search`]: exhaustive enumeration, brute-force containment, threshold
//!   search and seeded random systems;
//! * [`format`]: the plain-text file format.

pub mod canonical;
pub mod error;
pub mod extraction;
pub mod format;
pub mod search;
pub mod structure;
pub mod system;

pub use canonical::{canonical_c, canonical_of, canonical_t, family_of_class, FamilyTag, MonotoneClass};
pub use error::{Error, Result};
pub use structure::{Direction, DirectionSet, ElementClass};
pub use system::{equivalent, CyclicOrder, GroundSet, Label, Relabelling, RotationSystem};
