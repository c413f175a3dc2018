use crate::error::{Error, Result};
use crate::mass::MassFunction;

/// Largest frame accepted by [`jousselme_distance`].
pub const MAX_DISTANCE_ATOMS: usize = 16;

/// `|A ∩ B| / |A ∪ B|`, with `D(∅, ∅) = 1`.
fn similarity(a: u64, b: u64) -> f64 {
    let union = (a | b).count_ones();
    if union == 0 {
        1.0
    } else {
        (a & b).count_ones() as f64 / union as f64
    }
}

/// Jousselme distance `sqrt(½ (m₁ - m₂)ᵀ D (m₁ - m₂))`.
///
/// The quadratic form only involves focal sets of either operand, so the
/// full `2^n × 2^n` matrix is never built.
pub fn jousselme_distance(m1: &MassFunction, m2: &MassFunction) -> Result<f64> {
    if m1.frame() != m2.frame() {
        return Err(Error::FrameMismatch);
    }
    m1.frame().ensure_at_most(MAX_DISTANCE_ATOMS)?;
    let mut diff: Vec<(u64, f64)> = m1.raw().to_vec();
    for &(b, v) in m2.raw() {
        match diff.binary_search_by_key(&b, |&(k, _)| k) {
            Ok(i) => diff[i].1 -= v,
            Err(i) => diff.insert(i, (b, -v)),
        }
    }
    let mut form = 0.0;
    for &(a, x) in &diff {
        for &(b, y) in &diff {
            form += x * y * similarity(a, b);
        }
    }
    Ok((0.5 * form).max(0.0).sqrt().min(1.0))
}
