//! Exhaustive enumeration of rotation systems on `{1, ..., n}`.
//!
//! Each element's rotation ranges over the `(n-2)!` cyclic orders of the other
//! labels, listed with the smallest label fixed first and the rest in
//! lexicographic permutation order. A system is identified by its rank vector
//! (one rank per element, element 1 first) and systems are visited in
//! lexicographic order of rank vectors, which is also lexicographic order of
//! their canonical encodings.

use crate::error::{Error, Result};
use crate::system::{CyclicOrder, GroundSet, Label, RotationSystem};

pub const DEFAULT_MAX_ENUMERATION_SIZE: usize = 6;
pub const MIN_ENUMERATION_SIZE: usize = 3;

fn next_permutation(v: &mut [Label]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Every cyclic order on `others`, in enumeration order.
pub fn cyclic_orders(others: &[Label]) -> Vec<CyclicOrder> {
    let mut sorted = others.to_vec();
    sorted.sort_unstable();
    if sorted.is_empty() {
        return vec![CyclicOrder::default()];
    }
    let first = sorted[0];
    let mut rest = sorted[1..].to_vec();
    let mut out = Vec::new();
    loop {
        let mut entries = Vec::with_capacity(sorted.len());
        entries.push(first);
        entries.extend_from_slice(&rest);
        out.push(CyclicOrder::from_distinct(entries));
        if !next_permutation(&mut rest) {
            break;
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct Enumerator {
    n: usize,
    /// `orders[k]` lists the rotations available to label `k + 1`.
    orders: Vec<Vec<CyclicOrder>>,
}

impl Enumerator {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_max(n, DEFAULT_MAX_ENUMERATION_SIZE)
    }

    pub fn with_max(n: usize, max: usize) -> Result<Self> {
        if !(MIN_ENUMERATION_SIZE..=max).contains(&n) {
            return Err(Error::SizeOutOfRange {
                size: n,
                min: MIN_ENUMERATION_SIZE,
                max,
            });
        }
        let labels: Vec<Label> = (1..=n as Label).collect();
        let orders = labels
            .iter()
            .map(|&i| {
                let others: Vec<Label> = labels.iter().copied().filter(|&x| x != i).collect();
                cyclic_orders(&others)
            })
            .collect();
        Ok(Enumerator { n, orders })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of rotations per element, `(n-2)!`.
    pub fn radix(&self) -> usize {
        self.orders[0].len()
    }

    /// `((n-2)!)^n`.
    pub fn count(&self) -> u64 {
        (self.radix() as u64).pow(self.n as u32)
    }

    pub fn order(&self, element: usize, rank: usize) -> &CyclicOrder {
        &self.orders[element][rank]
    }

    pub fn rank_of_order(&self, element: usize, order: &CyclicOrder) -> Option<usize> {
        self.orders[element].binary_search(order).ok()
    }

    pub fn system(&self, ranks: &[usize]) -> RotationSystem {
        let rotations = ranks
            .iter()
            .enumerate()
            .map(|(k, &r)| self.orders[k][r].clone())
            .collect();
        RotationSystem::from_parts(GroundSet::range(self.n).expect("n >= 3"), rotations)
    }

    /// Rank vector of a system on `{1, ..., n}`.
    pub fn ranks(&self, pi: &RotationSystem) -> Option<Vec<usize>> {
        if pi.labels() != GroundSet::range(self.n).ok()?.labels() {
            return None;
        }
        (0..self.n)
            .map(|k| self.rank_of_order(k, pi.rotation_at(k)))
            .collect()
    }

    /// Visits, in order, every rank vector whose first entry is `first`.
    pub fn for_each_in_partition(&self, first: usize, mut visit: impl FnMut(&[usize])) {
        let radix = self.radix();
        let mut ranks = vec![0; self.n];
        ranks[0] = first;
        loop {
            visit(&ranks);
            let mut k = self.n - 1;
            loop {
                if k == 0 {
                    return;
                }
                ranks[k] += 1;
                if ranks[k] < radix {
                    break;
                }
                ranks[k] = 0;
                k -= 1;
            }
        }
    }

    pub fn for_each(&self, mut visit: impl FnMut(&[usize])) {
        for first in 0..self.radix() {
            self.for_each_in_partition(first, &mut visit);
        }
    }
}

/// Visits every rotation system on `{1, ..., n}` once and returns how many
/// there were.
pub fn enumerate_systems(n: usize, mut visitor: impl FnMut(&RotationSystem)) -> Result<u64> {
    let e = Enumerator::new(n)?;
    let mut count = 0;
    e.for_each(|ranks| {
        visitor(&e.system(ranks));
        count += 1;
    });
    Ok(count)
}
