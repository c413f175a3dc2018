//! Seeded generator of paired datasets with a planted dependence structure.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::estimation::MassDataset;
use crate::frame::Frame;
use crate::mass::MassFunction;

/// Environment variable holding the generator seed.
pub const SEED_VAR: &str = "BFI_SEED";
pub const DEFAULT_SEED: u64 = 42;

/// Seed from `BFI_SEED`, or 42 when unset or unparsable.
pub fn seed_from_env() -> u64 {
    std::env::var(SEED_VAR).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

/// Relationship planted between the two generated sources.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// The second source repeats the first.
    Identical,
    /// Group labels drawn independently for each source.
    Independent,
    /// Two-atom frame; the second source swaps the atoms of the first.
    Swapped,
}

fn frame_of(atoms: usize) -> Frame {
    Frame::new((1..=atoms).map(|i| format!("w{i}"))).expect("generated labels are valid")
}

/// A mass leaning towards atom `group`: most mass on `{group}`, some on a
/// two-atom set containing it, the rest on Ω.
fn planted_mass(frame: &Frame, group: usize, rng: &mut impl Rng) -> MassFunction {
    let n = frame.len();
    let strength = rng.random_range(0.6..0.9);
    let atom = 1u64 << group;
    let mut entries = vec![(frame.focal(atom), strength)];
    let rest = 1.0 - strength;
    if n > 2 {
        let other = (group + rng.random_range(1..n)) % n;
        let share = rng.random_range(0.0..1.0) * rest;
        entries.push((frame.focal(atom | 1 << other), share));
        entries.push((frame.full_set(), rest - share));
    } else {
        entries.push((frame.full_set(), rest));
    }
    MassFunction::new(frame, entries).expect("planted mass is valid")
}

fn dataset(frame: &Frame, groups: &[usize], rng: &mut impl Rng) -> Result<MassDataset> {
    let items = groups.iter().map(|&g| planted_mass(frame, g, rng)).collect();
    MassDataset::new(frame, items)
}

fn swap_two_atoms(m: &MassFunction) -> MassFunction {
    let frame = m.frame();
    let swapped = m.raw().iter().map(|&(b, v)| {
        let bits = (b & 1) << 1 | (b >> 1 & 1);
        (frame.focal(bits), v)
    });
    MassFunction::new(frame, swapped).expect("permutation keeps a valid mass")
}

/// Two aligned datasets of `items` objects with the given relation.
///
/// `Swapped` always uses two atoms; the other relations use `atoms` (≥ 2).
pub fn generate_pair(relation: Relation, atoms: usize, items: usize, seed: u64) -> Result<(MassDataset, MassDataset)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let atoms = if relation == Relation::Swapped { 2 } else { atoms.max(2) };
    let frame = frame_of(atoms);
    let groups: Vec<usize> = (0..items).map(|_| rng.random_range(0..atoms)).collect();
    let first = dataset(&frame, &groups, &mut rng)?;
    let second = match relation {
        Relation::Identical => first.clone(),
        Relation::Independent => {
            let other: Vec<usize> = (0..items).map(|_| rng.random_range(0..atoms)).collect();
            dataset(&frame, &other, &mut rng)?
        }
        Relation::Swapped => MassDataset::new(&frame, first.items().iter().map(swap_two_atoms).collect())?,
    };
    Ok((first, second))
}
