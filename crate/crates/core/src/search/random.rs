//! Seeded random rotation systems.
//!
//! Element `k` (0-based, in label order) draws from its own ChaCha8 stream:
//! the generator is seeded with `seed` and switched to stream `k`. Outputs are
//! therefore fixed by `(n, seed)` alone.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::system::{CyclicOrder, GroundSet, Label, RotationSystem};

fn element_rng(seed: u64, element: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(element as u64);
    rng
}

fn check_size(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::SizeOutOfRange {
            size: n,
            min: 3,
            max: Label::MAX as usize,
        });
    }
    Ok(())
}

/// Uniform over all `((n-2)!)^n` systems on `{1, ..., n}`.
pub fn random_system(n: usize, seed: u64) -> Result<RotationSystem> {
    check_size(n)?;
    let rotations = (1..=n as Label)
        .map(|i| {
            let mut rng = element_rng(seed, i as usize - 1);
            let mut others: Vec<Label> = (1..=n as Label).filter(|&x| x != i).collect();
            // The smallest label stays put; every cyclic order has exactly one
            // such linearization.
            others[1..].shuffle(&mut rng);
            CyclicOrder::from_distinct(others)
        })
        .collect();
    Ok(RotationSystem::from_parts(GroundSet::range(n)?, rotations))
}

/// Uniform over separated systems: each rotation is an independent uniform
/// permutation of the smaller labels followed by one of the larger labels.
pub fn random_separated_system(n: usize, seed: u64) -> Result<RotationSystem> {
    check_size(n)?;
    let rotations = (1..=n as Label)
        .map(|i| {
            let mut rng = element_rng(seed, i as usize - 1);
            let mut sigma: Vec<Label> = (1..i).collect();
            let mut tau: Vec<Label> = (i + 1..=n as Label).collect();
            sigma.shuffle(&mut rng);
            tau.shuffle(&mut rng);
            sigma.extend(tau);
            CyclicOrder::from_distinct(sigma)
        })
        .collect();
    Ok(RotationSystem::from_parts(GroundSet::range(n)?, rotations))
}
