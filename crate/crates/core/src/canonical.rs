//! The four unavoidable families and the map from monotonicity cells to them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::structure::Direction;
use crate::system::{CyclicOrder, GroundSet, Label, RotationSystem};

/// Names one of the four unavoidable families. The declaration order is the
/// tie-break order used throughout: `C > T > CInv > TInv`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    C,
    T,
    CInv,
    TInv,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 4] = [FamilyTag::C, FamilyTag::T, FamilyTag::CInv, FamilyTag::TInv];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::C => "C",
            FamilyTag::T => "T",
            FamilyTag::CInv => "Cinv",
            FamilyTag::TInv => "Tinv",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "C" => Ok(FamilyTag::C),
            "T" => Ok(FamilyTag::T),
            "Cinv" | "C_INV" => Ok(FamilyTag::CInv),
            "Tinv" | "T_INV" => Ok(FamilyTag::TInv),
            other => Err(format!("unknown family `{other}` (expected C, T, Cinv or Tinv)")),
        }
    }
}

/// A pigeonhole cell: the direction of the forward block and of the backward
/// block shared by every element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonotoneClass {
    pub forward: Direction,
    pub backward: Direction,
}

impl MonotoneClass {
    pub fn new(forward: Direction, backward: Direction) -> Self {
        MonotoneClass { forward, backward }
    }
}

fn build(m: usize, rotation_of: impl Fn(Label) -> Vec<Label>) -> Result<RotationSystem> {
    if m == 0 {
        return Err(Error::SizeTooSmall { size: 0, min: 1 });
    }
    let ground = GroundSet::range(m)?;
    let rotations = (1..=m as Label)
        .map(|i| CyclicOrder::from_distinct(rotation_of(i)))
        .collect();
    Ok(RotationSystem::from_parts(ground, rotations))
}

/// The convex system: the rotation of `i` is `1 2 ... (i-1) (i+1) ... m`.
///
/// `m <= 2` yields a degenerate system (see [`RotationSystem::is_degenerate`]).
pub fn canonical_c(m: usize) -> Result<RotationSystem> {
    let m_label = m as Label;
    build(m, |i| (1..=m_label).filter(|&x| x != i).collect())
}

/// The twisted system: the rotation of `i` is `m (m-1) ... (i+1) 1 2 ... (i-1)`.
pub fn canonical_t(m: usize) -> Result<RotationSystem> {
    let m_label = m as Label;
    build(m, |i| ((i + 1)..=m_label).rev().chain(1..i).collect())
}

pub fn canonical_of(tag: FamilyTag, m: usize) -> Result<RotationSystem> {
    match tag {
        FamilyTag::C => canonical_c(m),
        FamilyTag::T => canonical_t(m),
        FamilyTag::CInv => canonical_c(m).map(|s| s.invert()),
        FamilyTag::TInv => canonical_t(m).map(|s| s.invert()),
    }
}

/// Maps a pigeonhole cell to the family whose canonical member has every
/// element in that cell. The table was fixed by classifying the four
/// canonical systems directly; `canonical_classes_match_table` keeps it honest.
pub fn family_of_class(class: MonotoneClass) -> FamilyTag {
    use Direction::{Decreasing as Dec, Increasing as Inc};
    match (class.forward, class.backward) {
        (Inc, Inc) => FamilyTag::C,
        (Dec, Inc) => FamilyTag::T,
        (Dec, Dec) => FamilyTag::CInv,
        (Inc, Dec) => FamilyTag::TInv,
    }
}

/// Inverse of [`family_of_class`].
pub fn class_of_family(tag: FamilyTag) -> MonotoneClass {
    use Direction::{Decreasing as Dec, Increasing as Inc};
    match tag {
        FamilyTag::C => MonotoneClass::new(Inc, Inc),
        FamilyTag::T => MonotoneClass::new(Dec, Inc),
        FamilyTag::CInv => MonotoneClass::new(Dec, Dec),
        FamilyTag::TInv => MonotoneClass::new(Inc, Dec),
    }
}
