//! Longest monotone subsequences via patience sorting.

use std::cmp::Reverse;

use crate::structure::Direction;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneSubsequence<T> {
    pub direction: Direction,
    /// Positions in the input, ascending.
    pub indices: Vec<usize>,
    pub values: Vec<T>,
}

impl<T> MonotoneSubsequence<T> {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// For each position `i`, the length of the longest strictly increasing
/// subsequence starting at `i`.
///
/// Scans right to left keeping, for every chain length, the largest value that
/// starts a chain of that length. Those values strictly decrease with length,
/// so each step is a binary search.
fn increasing_lengths_from<T: Ord>(seq: &[T]) -> Vec<usize> {
    let mut best_heads: Vec<&T> = Vec::new();
    let mut lengths = vec![0; seq.len()];
    for i in (0..seq.len()).rev() {
        let x = &seq[i];
        let longer = best_heads.partition_point(|&h| h > x);
        lengths[i] = longer + 1;
        if longer == best_heads.len() {
            best_heads.push(x);
        } else if best_heads[longer] < x {
            best_heads[longer] = x;
        }
    }
    lengths
}

/// Lexicographically smallest index set among the longest strictly increasing
/// subsequences.
fn longest_increasing<T: Ord>(seq: &[T]) -> Vec<usize> {
    let lengths = increasing_lengths_from(seq);
    let Some(&best) = lengths.iter().max() else {
        return Vec::new();
    };
    let mut picked = Vec::with_capacity(best);
    let mut need = best;
    for (i, x) in seq.iter().enumerate() {
        if need == 0 {
            break;
        }
        let fits = picked.last().is_none_or(|&p: &usize| seq[p] < *x);
        if fits && lengths[i] >= need {
            picked.push(i);
            need -= 1;
        }
    }
    picked
}

/// The longer of a longest increasing and a longest decreasing subsequence.
///
/// Ties prefer increasing, then the lexicographically smallest index set. For
/// `k` distinct entries the result has length at least `ceil(sqrt(k))`.
pub fn longest_monotone_subsequence<T: Ord + Clone>(seq: &[T]) -> MonotoneSubsequence<T> {
    let inc = longest_increasing(seq);
    let reversed: Vec<Reverse<&T>> = seq.iter().map(Reverse).collect();
    let dec = longest_increasing(&reversed);
    let (direction, indices) = if dec.len() > inc.len() {
        (Direction::Decreasing, dec)
    } else {
        (Direction::Increasing, inc)
    };
    let values = indices.iter().map(|&i| seq[i].clone()).collect();
    MonotoneSubsequence {
        direction,
        indices,
        values,
    }
}
