//! The arc sieve that grows a separated prefix and the monotone sieves that
//! grow forward/backward monotone prefixes (suffixes).

use crate::error::{Error, Result};
use crate::extraction::bounds::ceil_sqrt;
use crate::extraction::monotone::longest_monotone_subsequence;
use crate::structure::{classify_element, is_separated, separated_split};
use crate::system::{Label, RotationSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SieveKind {
    Separated,
    Forward,
    Backward,
}

/// One invocation of a sieve step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SieveStep {
    pub kind: SieveKind,
    pub s: usize,
    pub before: usize,
    pub after: usize,
    /// Size promised by the worst-case argument.
    pub guaranteed: usize,
}

#[derive(Clone, Debug)]
pub struct SieveRun {
    pub system: RotationSystem,
    pub steps: Vec<SieveStep>,
}

pub fn separated_step_guarantee(n: usize, s: usize) -> usize {
    (s + 1) + (n - s - 1).div_ceil(s)
}

pub fn monotone_step_guarantee(n: usize, s: usize) -> usize {
    (s + 1) + ceil_sqrt(n - s - 1)
}

fn record(kind: SieveKind, s: usize, before: usize, after: &RotationSystem) -> SieveStep {
    let guaranteed = match kind {
        SieveKind::Separated => separated_step_guarantee(before, s),
        SieveKind::Forward | SieveKind::Backward => monotone_step_guarantee(before, s),
    };
    assert!(
        after.len() >= guaranteed,
        "{kind:?} sieve step at s={s} kept {} of {before}, below the guaranteed {guaranteed}",
        after.len()
    );
    SieveStep {
        kind,
        s,
        before,
        after: after.len(),
        guaranteed,
    }
}

/// Extends a separated prefix `i_1, ..., i_s` by `i_{s+1}`.
///
/// Deleting the `s` smallest labels from the rotation of `i_{s+1}` cuts it into
/// at most `s` arcs of larger labels; the longest arc (ties: smallest starting
/// label) is kept together with `i_1, ..., i_{s+1}`.
pub fn separated_sieve_step(pi: &RotationSystem, s: usize) -> Result<RotationSystem> {
    let n = pi.len();
    if s == 0 || n <= s + 1 {
        return Err(Error::PreconditionViolated(format!(
            "separated sieve needs 1 <= s < n - 1 (s = {s}, n = {n})"
        )));
    }
    let labels = pi.labels();
    for &l in &labels[..s] {
        if separated_split(pi, l)?.is_none() {
            return Err(Error::PreconditionViolated(format!(
                "rotation of {l} is not separated"
            )));
        }
    }

    let owner = labels[s];
    let entries = pi.rotation(owner)?.entries();
    let k = entries.len();
    let first_small = entries
        .iter()
        .position(|&l| l < owner)
        .expect("s >= 1 smaller labels occur in the rotation");

    let mut best: Option<&[Label]> = None;
    let linear: Vec<Label> = (0..k).map(|i| entries[(first_small + i) % k]).collect();
    for arc in linear.split(|&l| l < owner).filter(|a| !a.is_empty()) {
        let better = match best {
            None => true,
            Some(b) => arc.len() > b.len() || (arc.len() == b.len() && arc[0] < b[0]),
        };
        if better {
            best = Some(arc);
        }
    }

    let mut keep: Vec<Label> = labels[..=s].to_vec();
    keep.extend_from_slice(best.unwrap_or(&[]));
    let out = pi.induce(&keep)?;
    record(SieveKind::Separated, s, n, &out);
    Ok(out)
}

/// Longest monotone subsequence over every cut of a cyclic sequence. Ties keep
/// the smallest cut position.
fn best_cut_monotone(cycle: &[Label]) -> Vec<Label> {
    let mut best: Vec<Label> = Vec::new();
    for cut in 0..cycle.len().max(1) {
        let linear: Vec<Label> = (0..cycle.len())
            .map(|i| cycle[(cut + i) % cycle.len()])
            .collect();
        let run = longest_monotone_subsequence(&linear);
        if cut == 0 || run.len() > best.len() {
            best = run.values;
        }
    }
    best
}

fn require_separated(pi: &RotationSystem) -> Result<()> {
    if is_separated(pi) {
        Ok(())
    } else {
        Err(Error::PreconditionViolated("system is not separated".into()))
    }
}

/// Makes `i_{s+1}` forward monotone, given a separated system whose first `s`
/// elements already are.
pub fn forward_sieve_step(pi: &RotationSystem, s: usize) -> Result<RotationSystem> {
    let n = pi.len();
    if s >= n {
        return Err(Error::PreconditionViolated(format!(
            "forward sieve needs s < n (s = {s}, n = {n})"
        )));
    }
    require_separated(pi)?;
    let labels = pi.labels();
    for &l in &labels[..s] {
        if classify_element(pi, l)?.forward.is_empty() {
            return Err(Error::PreconditionViolated(format!(
                "rotation of {l} is not forward monotone"
            )));
        }
    }

    let owner = labels[s];
    let kept = if s == 0 {
        best_cut_monotone(pi.rotation(owner)?.entries())
    } else {
        let split = separated_split(pi, owner)?.expect("system is separated");
        longest_monotone_subsequence(&split.tau).values
    };

    let mut keep: Vec<Label> = labels[..=s].to_vec();
    keep.extend(kept);
    let out = pi.induce(&keep)?;
    record(SieveKind::Forward, s, n, &out);
    Ok(out)
}

/// Mirror of [`forward_sieve_step`]: makes the `(s+1)`-th largest element
/// backward monotone, given that the `s` largest already are.
pub fn backward_sieve_step(pi: &RotationSystem, s: usize) -> Result<RotationSystem> {
    let n = pi.len();
    if s >= n {
        return Err(Error::PreconditionViolated(format!(
            "backward sieve needs s < n (s = {s}, n = {n})"
        )));
    }
    require_separated(pi)?;
    let labels = pi.labels();
    for &l in &labels[n - s..] {
        if classify_element(pi, l)?.backward.is_empty() {
            return Err(Error::PreconditionViolated(format!(
                "rotation of {l} is not backward monotone"
            )));
        }
    }

    let owner = labels[n - 1 - s];
    let kept = if s == 0 {
        best_cut_monotone(pi.rotation(owner)?.entries())
    } else {
        let split = separated_split(pi, owner)?.expect("system is separated");
        longest_monotone_subsequence(&split.sigma).values
    };

    let mut keep: Vec<Label> = labels[n - 1 - s..].to_vec();
    keep.extend(kept);
    let out = pi.induce(&keep)?;
    record(SieveKind::Backward, s, n, &out);
    Ok(out)
}

/// Repeats the arc sieve from `s = 1` until every element is separated.
pub fn separated_sieve(pi: &RotationSystem) -> SieveRun {
    let mut system = pi.clone();
    let mut steps = Vec::new();
    let mut s = 1;
    while s + 1 < system.len() {
        let before = system.len();
        system = separated_sieve_step(&system, s).expect("prefix is separated by construction");
        steps.push(record(SieveKind::Separated, s, before, &system));
        s += 1;
    }
    debug_assert!(is_separated(&system));
    SieveRun { system, steps }
}

pub fn forward_sieve(pi: &RotationSystem) -> Result<SieveRun> {
    require_separated(pi)?;
    let mut system = pi.clone();
    let mut steps = Vec::new();
    let mut s = 0;
    while s + 1 < system.len() {
        let before = system.len();
        system = forward_sieve_step(&system, s)?;
        steps.push(record(SieveKind::Forward, s, before, &system));
        s += 1;
    }
    Ok(SieveRun { system, steps })
}

pub fn backward_sieve(pi: &RotationSystem) -> Result<SieveRun> {
    require_separated(pi)?;
    let mut system = pi.clone();
    let mut steps = Vec::new();
    let mut s = 0;
    while s + 1 < system.len() {
        let before = system.len();
        system = backward_sieve_step(&system, s)?;
        steps.push(record(SieveKind::Backward, s, before, &system));
        s += 1;
    }
    Ok(SieveRun { system, steps })
}

/// A separated subsystem; of size at least `t` whenever `|pi| >= n1(t)`.
pub fn find_separated_subsystem(pi: &RotationSystem) -> RotationSystem {
    separated_sieve(pi).system
}

/// A separated, forward monotone subsystem of a separated system; of size at
/// least `t` whenever `|pi| >= n2(t)`.
pub fn find_forward_monotone_subsystem(pi: &RotationSystem) -> Result<RotationSystem> {
    forward_sieve(pi).map(|r| r.system)
}

pub fn find_backward_monotone_subsystem(pi: &RotationSystem) -> Result<RotationSystem> {
    backward_sieve(pi).map(|r| r.system)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{canonical_c, canonical_t};
    use crate::structure::{is_backward_monotone, is_forward_monotone};

    /// Completes a partial specification with convex rotations elsewhere.
    fn with_rotation(n: u32, owner: Label, rotation: &[Label]) -> RotationSystem {
        RotationSystem::validate((1..=n).map(|i| {
            if i == owner {
                (i, rotation.to_vec())
            } else {
                (i, (1..=n).filter(|&x| x != i).collect::<Vec<_>>())
            }
        }))
        .unwrap()
    }

    #[test]
    fn arc_sieve_with_one_small_label_keeps_everything() {
        let pi = with_rotation(6, 2, &[1, 4, 6, 3, 5]);
        let out = separated_sieve_step(&pi, 1).unwrap();
        assert_eq!(out.labels(), &[1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn arc_sieve_keeps_longest_arc() {
        let pi = with_rotation(6, 3, &[1, 4, 5, 2, 6]);
        let out = separated_sieve_step(&pi, 2).unwrap();
        assert_eq!(out.labels(), &[1, 2, 3, 4, 5]);
        assert!(separated_split(&out, 3).unwrap().is_some());
    }

    #[test]
    fn arc_sieve_preconditions() {
        let pi = with_rotation(5, 3, &[1, 4, 2, 5]);
        assert!(matches!(
            separated_sieve_step(&pi, 3),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(separated_sieve_step(&pi, 0).is_err());
        assert!(separated_sieve_step(&pi, 4).is_err());
    }

    #[test]
    fn canonical_systems_pass_unchanged() {
        for m in 3..=9 {
            let c = canonical_c(m).unwrap();
            assert_eq!(find_separated_subsystem(&c), c);
            let t = canonical_t(m).unwrap();
            assert_eq!(find_forward_monotone_subsystem(&t).unwrap(), t);
            assert_eq!(find_backward_monotone_subsystem(&t).unwrap(), t);
        }
    }

    #[test]
    fn forward_sieve_rejects_non_separated() {
        let pi = with_rotation(5, 3, &[1, 4, 2, 5]);
        assert!(matches!(
            find_forward_monotone_subsystem(&pi),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn forward_step_on_monotone_element_keeps_all_larger_labels() {
        let c = canonical_c(7).unwrap();
        for s in 0..6 {
            assert_eq!(forward_sieve_step(&c, s).unwrap(), c);
            assert_eq!(backward_sieve_step(&c, s).unwrap(), c);
        }
    }

    #[test]
    fn forward_then_backward_is_fully_monotone() {
        // Separated system on 8 elements with scrambled tau blocks.
        let rot = |i: Label| -> Vec<Label> {
            let sigma: Vec<Label> = (1..i).collect();
            let mut tau: Vec<Label> = ((i + 1)..=8).collect();
            tau.reverse();
            let shift = (i as usize) % tau.len().max(1);
            tau.rotate_left(shift);
            sigma.into_iter().chain(tau).collect()
        };
        let pi = RotationSystem::validate((1..=8).map(|i| (i, rot(i)))).unwrap();
        assert!(is_separated(&pi));
        let fwd = find_forward_monotone_subsystem(&pi).unwrap();
        assert!(is_forward_monotone(&fwd));
        let both = find_backward_monotone_subsystem(&fwd).unwrap();
        assert!(is_forward_monotone(&both) && is_backward_monotone(&both));
    }
}
