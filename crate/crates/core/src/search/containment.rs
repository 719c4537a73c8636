//! Brute-force containment of canonical subsystems.
//!
//! [`contains_canonical`] works on any system: it walks the `m`-subsets in
//! lexicographic order and tests each induced subsystem for equivalence with
//! the target under an arbitrary bijection.
//!
//! [`ContainmentIndex`] is the fast path for exhaustive scans. An induced
//! subsystem on a sorted `m`-subset is determined by the restricted rotation of
//! each of its members, so after relabelling order-preservingly it is one of
//! the `((m-2)!)^m` systems on `{1, ..., m}`. The index decides containment
//! once for each of those and reduces every later subset test to a table
//! lookup keyed by per-element restricted rotations.

use std::collections::HashMap;

use crate::canonical::{canonical_of, FamilyTag};
use crate::error::{Error, Result};
use crate::search::enumerate::Enumerator;
use crate::system::{equivalent, Label, Relabelling, RotationSystem};

/// A subset together with a bijection onto `{1, ..., m}` that turns the
/// induced subsystem into `canonical_of(tag, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainmentWitness {
    pub subset: Vec<Label>,
    pub relabel: Relabelling,
    pub tag: FamilyTag,
}

pub fn verify_witness(pi: &RotationSystem, w: &ContainmentWitness) -> bool {
    let Ok(induced) = pi.induce(&w.subset) else {
        return false;
    };
    if induced.labels() != w.subset.as_slice() {
        return false;
    }
    let Ok(relabelled) = induced.relabel(&w.relabel) else {
        return false;
    };
    canonical_of(w.tag, w.subset.len()).is_ok_and(|c| c == relabelled)
}

/// Calls `visit` on every `m`-subset of `items` in lexicographic order until it
/// returns `true`.
pub(crate) fn find_subset<T: Copy>(
    items: &[T],
    m: usize,
    mut visit: impl FnMut(&[T]) -> bool,
) -> bool {
    let n = items.len();
    if m > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..m).collect();
    let mut chosen: Vec<T> = Vec::with_capacity(m);
    loop {
        chosen.clear();
        chosen.extend(idx.iter().map(|&i| items[i]));
        if visit(&chosen) {
            return true;
        }
        let Some(k) = (0..m).rev().find(|&k| idx[k] < n - m + k) else {
            return false;
        };
        idx[k] += 1;
        for j in k + 1..m {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// First subset (lexicographically) inducing a copy of `canonical_of(tag, m)`.
pub fn contains_canonical(
    pi: &RotationSystem,
    tag: FamilyTag,
    m: usize,
) -> Option<ContainmentWitness> {
    if m == 0 || m > pi.len() {
        return None;
    }
    let target = canonical_of(tag, m).ok()?;
    let mut found = None;
    find_subset(pi.labels(), m, |subset| {
        let induced = pi.induce(subset).expect("subset of the ground set");
        match equivalent(&target, &induced) {
            Some(relabel) => {
                found = Some(ContainmentWitness {
                    subset: subset.to_vec(),
                    relabel,
                    tag,
                });
                true
            }
            None => false,
        }
    });
    found
}

/// Tries the families in the order `C, T, CInv, TInv`.
pub fn contains_any(pi: &RotationSystem, m: usize) -> Option<ContainmentWitness> {
    FamilyTag::ALL
        .iter()
        .find_map(|&tag| contains_canonical(pi, tag, m))
}

pub const MAX_INDEXED_TARGET: usize = 5;

/// Lookup tables answering "does this `m`-subset induce a canonical system?"
/// for every system of one enumeration size `n`.
#[derive(Clone, Debug)]
pub struct ContainmentIndex {
    n: usize,
    m: usize,
    radix_n: usize,
    /// Members of each `m`-subset of `0..n`, flattened with stride `m`.
    subsets: Vec<u8>,
    subset_count: usize,
    /// `contrib[(element * radix_n + rank) * subset_count + subset]` is the
    /// element's share of the subset's code.
    contrib: Vec<u32>,
    /// `good[code]` for every system on `{1, ..., m}`.
    good: Vec<bool>,
}

impl ContainmentIndex {
    /// Index for size-`n` systems and targets of size `m` from `tags`.
    pub fn new(enumerator: &Enumerator, m: usize, tags: &[FamilyTag]) -> Result<Self> {
        let n = enumerator.size();
        if !(3..=MAX_INDEXED_TARGET).contains(&m) || m > n {
            return Err(Error::SizeOutOfRange {
                size: m,
                min: 3,
                max: MAX_INDEXED_TARGET.min(n),
            });
        }
        let small = Enumerator::with_max(m, m)?;
        let radix_m = small.radix();

        let targets: Vec<RotationSystem> = tags
            .iter()
            .map(|&t| canonical_of(t, m))
            .collect::<Result<_>>()?;
        let mut good = Vec::with_capacity(small.count() as usize);
        small.for_each(|ranks| {
            let sys = small.system(ranks);
            good.push(targets.iter().any(|t| equivalent(t, &sys).is_some()));
        });

        // Rank lookup for restricted rotations, per position inside the subset.
        let rank_maps: Vec<HashMap<Vec<Label>, usize>> = (0..m)
            .map(|p| {
                (0..radix_m)
                    .map(|r| (small.order(p, r).entries().to_vec(), r))
                    .collect()
            })
            .collect();

        let all: Vec<u8> = (0..n as u8).collect();
        let mut subsets = Vec::new();
        find_subset(&all, m, |s| {
            subsets.extend_from_slice(s);
            false
        });
        let subset_count = subsets.len() / m;

        let radix_n = enumerator.radix();
        let mut contrib = vec![0u32; n * radix_n * subset_count];
        for element in 0..n {
            for rank in 0..radix_n {
                let order = enumerator.order(element, rank);
                for sid in 0..subset_count {
                    let members = &subsets[sid * m..(sid + 1) * m];
                    let Some(pos) = members.iter().position(|&x| x as usize == element) else {
                        continue;
                    };
                    // Relative labels 1..=m by position in the subset.
                    let relative = |label: Label| -> Option<Label> {
                        members
                            .iter()
                            .position(|&x| x as Label + 1 == label)
                            .map(|p| p as Label + 1)
                    };
                    let restricted = order.retain(|l| relative(l).is_some());
                    let mapped = restricted.map(|l| relative(l).expect("retained"));
                    let r = rank_maps[pos][mapped.entries()];
                    let weight = (radix_m as u32).pow((m - 1 - pos) as u32);
                    contrib[(element * radix_n + rank) * subset_count + sid] = r as u32 * weight;
                }
            }
        }

        Ok(ContainmentIndex {
            n,
            m,
            radix_n,
            subsets,
            subset_count,
            contrib,
            good,
        })
    }

    pub fn target_size(&self) -> usize {
        self.m
    }

    /// Whether the system with rank vector `ranks` contains a target.
    #[inline]
    pub fn contains(&self, ranks: &[usize]) -> bool {
        debug_assert_eq!(ranks.len(), self.n);
        let m = self.m;
        let sc = self.subset_count;
        (0..sc).any(|sid| {
            let members = &self.subsets[sid * m..(sid + 1) * m];
            let code: u32 = members
                .iter()
                .map(|&e| {
                    let e = e as usize;
                    self.contrib[(e * self.radix_n + ranks[e]) * sc + sid]
                })
                .sum();
            self.good[code as usize]
        })
    }
}
