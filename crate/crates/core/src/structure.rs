//! Separated splits and monotonicity classification of rotations.
//!
//! A rotation of `j` is separated when the labels smaller than `j` form one
//! contiguous arc `sigma` of the cycle, so that it reads `(sigma tau)` with
//! `tau` holding the larger labels. Blocks of length at most one count as both
//! increasing and decreasing.
//!
//! For the minimum (resp. maximum) element the whole rotation is `tau`
//! (resp. `sigma`) and there is no cut point, so its forward (resp. backward)
//! direction is decided by comparing the cycle with the ascending and
//! descending cycles.

use std::fmt;

use crate::error::Result;
use crate::system::{Label, RotationSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Increasing => "INC",
            Direction::Decreasing => "DEC",
        })
    }
}

/// A subset of `{INC, DEC}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct DirectionSet {
    pub increasing: bool,
    pub decreasing: bool,
}

impl DirectionSet {
    pub const NONE: DirectionSet = DirectionSet {
        increasing: false,
        decreasing: false,
    };
    pub const BOTH: DirectionSet = DirectionSet {
        increasing: true,
        decreasing: true,
    };

    pub fn contains(self, d: Direction) -> bool {
        match d {
            Direction::Increasing => self.increasing,
            Direction::Decreasing => self.decreasing,
        }
    }

    pub fn is_empty(self) -> bool {
        !self.increasing && !self.decreasing
    }

    pub fn is_wildcard(self) -> bool {
        self.increasing && self.decreasing
    }

    fn of_linear(seq: &[Label]) -> Self {
        DirectionSet {
            increasing: seq.windows(2).all(|w| w[0] < w[1]),
            decreasing: seq.windows(2).all(|w| w[0] > w[1]),
        }
    }

    /// `seq` is a canonical linearization (minimum first).
    fn of_cycle(seq: &[Label]) -> Self {
        let rest = seq.get(1..).unwrap_or(&[]);
        DirectionSet {
            increasing: rest.windows(2).all(|w| w[0] < w[1]),
            decreasing: rest.windows(2).all(|w| w[0] > w[1]),
        }
    }
}

impl fmt::Display for DirectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match (self.increasing, self.decreasing) {
            (true, true) => "*",
            (true, false) => "INC",
            (false, true) => "DEC",
            (false, false) => "-",
        })
    }
}

/// The `(sigma tau)` decomposition of one rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatedSplit {
    pub owner: Label,
    /// Labels smaller than `owner`, read in rotation direction.
    pub sigma: Vec<Label>,
    /// Labels larger than `owner`, read in rotation direction after `sigma`.
    pub tau: Vec<Label>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElementClass {
    pub separated: bool,
    pub backward: DirectionSet,
    pub forward: DirectionSet,
}

/// Splits the rotation of `j`, or returns `None` when the smaller labels are
/// not cyclically contiguous.
pub fn separated_split(pi: &RotationSystem, j: Label) -> Result<Option<SeparatedSplit>> {
    let entries = pi.rotation(j)?.entries();
    let k = entries.len();
    let smaller = entries.iter().filter(|&&l| l < j).count();

    if smaller == 0 {
        return Ok(Some(SeparatedSplit {
            owner: j,
            sigma: Vec::new(),
            tau: entries.to_vec(),
        }));
    }
    if smaller == k {
        return Ok(Some(SeparatedSplit {
            owner: j,
            sigma: entries.to_vec(),
            tau: Vec::new(),
        }));
    }

    // Positions where a run of smaller labels begins.
    let mut starts = (0..k).filter(|&p| entries[p] < j && entries[(p + k - 1) % k] > j);
    let start = starts.next().expect("a cycle with both kinds of labels has a run start");
    if starts.next().is_some() {
        return Ok(None);
    }
    let linear: Vec<Label> = (0..k).map(|i| entries[(start + i) % k]).collect();
    let (sigma, tau) = linear.split_at(smaller);
    debug_assert!(sigma.iter().all(|&l| l < j) && tau.iter().all(|&l| l > j));
    Ok(Some(SeparatedSplit {
        owner: j,
        sigma: sigma.to_vec(),
        tau: tau.to_vec(),
    }))
}

pub fn classify_element(pi: &RotationSystem, j: Label) -> Result<ElementClass> {
    let entries = pi.rotation(j)?.entries();
    let Some(split) = separated_split(pi, j)? else {
        return Ok(ElementClass {
            separated: false,
            backward: DirectionSet::NONE,
            forward: DirectionSet::NONE,
        });
    };
    let (backward, forward) = match (split.sigma.is_empty(), split.tau.is_empty()) {
        (true, true) => (DirectionSet::BOTH, DirectionSet::BOTH),
        (true, false) => (DirectionSet::BOTH, DirectionSet::of_cycle(entries)),
        (false, true) => (DirectionSet::of_cycle(entries), DirectionSet::BOTH),
        (false, false) => (
            DirectionSet::of_linear(&split.sigma),
            DirectionSet::of_linear(&split.tau),
        ),
    };
    Ok(ElementClass {
        separated: true,
        backward,
        forward,
    })
}

/// Classifies every element, in ground order.
pub fn classify(pi: &RotationSystem) -> Vec<(Label, ElementClass)> {
    pi.labels()
        .iter()
        .map(|&l| (l, classify_element(pi, l).expect("ground label")))
        .collect()
}

fn all_elements(pi: &RotationSystem, pred: impl Fn(&ElementClass) -> bool) -> bool {
    pi.labels()
        .iter()
        .all(|&l| pred(&classify_element(pi, l).expect("ground label")))
}

pub fn is_separated(pi: &RotationSystem) -> bool {
    pi.labels()
        .iter()
        .all(|&l| separated_split(pi, l).expect("ground label").is_some())
}

/// Every element is forward increasing or forward decreasing; directions may
/// differ between elements.
pub fn is_forward_monotone(pi: &RotationSystem) -> bool {
    all_elements(pi, |c| c.separated && !c.forward.is_empty())
}

pub fn is_backward_monotone(pi: &RotationSystem) -> bool {
    all_elements(pi, |c| c.separated && !c.backward.is_empty())
}

pub fn is_forward_increasing(pi: &RotationSystem) -> bool {
    all_elements(pi, |c| c.forward.increasing)
}

pub fn is_forward_decreasing(pi: &RotationSystem) -> bool {
    all_elements(pi, |c| c.forward.decreasing)
}

pub fn is_backward_increasing(pi: &RotationSystem) -> bool {
    all_elements(pi, |c| c.backward.increasing)
}

pub fn is_backward_decreasing(pi: &RotationSystem) -> bool {
    all_elements(pi, |c| c.backward.decreasing)
}
