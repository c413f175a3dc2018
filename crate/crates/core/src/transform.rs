//! In-place zeta and Möbius transforms over a dense powerset table.
//!
//! The table is indexed by subset bitmask and has length `2^n`. Each transform
//! runs in `n · 2^(n-1)` additions.

fn butterfly(table: &mut [f64], mut step: impl FnMut(&mut f64, &mut f64)) {
    debug_assert!(table.len().is_power_of_two());
    let mut half = 1;
    while half < table.len() {
        for block in table.chunks_exact_mut(2 * half) {
            let (without, with) = block.split_at_mut(half);
            for (lo, hi) in without.iter_mut().zip(with) {
                step(lo, hi);
            }
        }
        half *= 2;
    }
}

/// `f(A) ← Σ_{B ⊆ A} f(B)`
pub(crate) fn subset_sum(table: &mut [f64]) {
    butterfly(table, |lo, hi| *hi += *lo);
}

/// Inverse of [`subset_sum`]: `f(A) ← Σ_{B ⊆ A} (-1)^{|A∖B|} f(B)`
pub(crate) fn subset_mobius(table: &mut [f64]) {
    butterfly(table, |lo, hi| *hi -= *lo);
}

/// `f(A) ← Σ_{B ⊇ A} f(B)`
pub(crate) fn superset_sum(table: &mut [f64]) {
    butterfly(table, |lo, hi| *lo += *hi);
}

/// Inverse of [`superset_sum`]: `f(A) ← Σ_{B ⊇ A} (-1)^{|B∖A|} f(B)`
pub(crate) fn superset_mobius(table: &mut [f64]) {
    butterfly(table, |lo, hi| *lo -= *hi);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(table: &[f64], superset: bool, signed: bool) -> Vec<f64> {
        let size = table.len();
        (0..size)
            .map(|a| {
                (0..size)
                    .filter(|&b| if superset { b & a == a } else { a & b == b })
                    .map(|b| {
                        let diff = ((a ^ b) as u32).count_ones();
                        let sign = if signed && diff % 2 == 1 { -1.0 } else { 1.0 };
                        sign * table[b]
                    })
                    .sum()
            })
            .collect()
    }

    #[test]
    fn matches_direct_sums() {
        let table: Vec<f64> = (0..16).map(|i| (i as f64 * 0.37).sin()).collect();
        for (superset, signed, f) in [
            (false, false, subset_sum as fn(&mut [f64])),
            (false, true, subset_mobius),
            (true, false, superset_sum),
            (true, true, superset_mobius),
        ] {
            let mut t = table.clone();
            f(&mut t);
            let expected = brute(&table, superset, signed);
            for (x, y) in t.iter().zip(&expected) {
                assert!((x - y).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn round_trips() {
        let table: Vec<f64> = (0..32).map(|i| i as f64 / 7.0).collect();
        let mut t = table.clone();
        superset_sum(&mut t);
        superset_mobius(&mut t);
        subset_sum(&mut t);
        subset_mobius(&mut t);
        for (x, y) in t.iter().zip(&table) {
            assert!((x - y).abs() < 1e-12);
        }
    }
}
