//! Exact small-size threshold search: the least `n` such that every rotation
//! system of size `n` contains a size-`m` member of one of the four families.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::FamilyTag;
use crate::error::{Error, Result};
use crate::search::containment::{contains_any, ContainmentIndex, MAX_INDEXED_TARGET};
use crate::search::enumerate::{Enumerator, DEFAULT_MAX_ENUMERATION_SIZE};
use crate::system::RotationSystem;

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    /// Worker threads for the scan.
    pub jobs: usize,
    /// Largest enumeration size accepted.
    pub max_size: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            jobs: 1,
            max_size: DEFAULT_MAX_ENUMERATION_SIZE,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeReport {
    pub n: usize,
    pub scanned: u64,
    /// Systems containing none of the four targets.
    pub failing: u64,
    pub all_pass: bool,
    /// The lexicographically least failing system.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<RotationSystem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub m: usize,
    pub threshold: Option<usize>,
    pub per_n: Vec<SizeReport>,
    pub wall_time_ms: u64,
}

impl ThresholdReport {
    /// Everything except the wall time.
    pub fn same_outcome(&self, other: &ThresholdReport) -> bool {
        self.m == other.m && self.threshold == other.threshold && self.per_n == other.per_n
    }
}

#[derive(Default)]
struct PartitionResult {
    scanned: u64,
    failing: u64,
    first_failure: Option<Vec<usize>>,
}

fn scan_partition(
    enumerator: &Enumerator,
    first: usize,
    contains: &(dyn Fn(&[usize]) -> bool + Sync),
) -> PartitionResult {
    let mut out = PartitionResult::default();
    enumerator.for_each_in_partition(first, |ranks| {
        out.scanned += 1;
        if !contains(ranks) {
            out.failing += 1;
            if out.first_failure.is_none() {
                out.first_failure = Some(ranks.to_vec());
            }
        }
    });
    out
}

/// Scans every system of size `n` for a size-`m` canonical subsystem.
pub fn scan_size(n: usize, m: usize, config: &SearchConfig) -> Result<SizeReport> {
    let enumerator = Enumerator::with_max(n, config.max_size)?;
    let index = if m <= MAX_INDEXED_TARGET {
        Some(ContainmentIndex::new(&enumerator, m, &FamilyTag::ALL)?)
    } else {
        None
    };
    let contains = |ranks: &[usize]| match &index {
        Some(ix) => ix.contains(ranks),
        None => contains_any(&enumerator.system(ranks), m).is_some(),
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| Error::PreconditionViolated(format!("thread pool: {e}")))?;
    let parts: Vec<PartitionResult> = pool.install(|| {
        (0..enumerator.radix())
            .into_par_iter()
            .map(|first| scan_partition(&enumerator, first, &contains))
            .collect()
    });

    let scanned = parts.iter().map(|p| p.scanned).sum();
    let failing = parts.iter().map(|p| p.failing).sum();
    let counterexample = parts
        .iter()
        .find_map(|p| p.first_failure.as_deref())
        .map(|ranks| enumerator.system(ranks));
    Ok(SizeReport {
        n,
        scanned,
        failing,
        all_pass: failing == 0,
        counterexample,
    })
}

/// Runs [`scan_size`] for `n = m, ..., n_max` and reports the least size at
/// which every system passes.
pub fn ramsey_threshold(m: usize, n_max: usize, config: &SearchConfig) -> Result<ThresholdReport> {
    if m < 3 {
        return Err(Error::SizeOutOfRange {
            size: m,
            min: 3,
            max: config.max_size,
        });
    }
    if n_max > config.max_size {
        return Err(Error::SizeOutOfRange {
            size: n_max,
            min: m,
            max: config.max_size,
        });
    }
    let start = Instant::now();
    let per_n = (m..=n_max)
        .map(|n| scan_size(n, m, config))
        .collect::<Result<Vec<_>>>()?;
    let threshold = per_n.iter().find(|r| r.all_pass).map(|r| r.n);
    Ok(ThresholdReport {
        m,
        threshold,
        per_n,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}
