//! Random inputs and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use bfi::{FocalSet, Frame, MassFunction};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn frame(n: usize) -> Frame {
    Frame::new((1..=n).map(|i| format!("w{i}"))).unwrap()
}

/// Subset of `f` from a bitmask over its atoms.
pub fn set(f: &Frame, bits: u64) -> FocalSet {
    let labels: Vec<&str> = (0..f.len()).filter(|i| bits >> i & 1 == 1).map(|i| f.labels()[i].as_str()).collect();
    f.set(&labels).unwrap()
}

#[derive(Debug, Clone, Copy)]
pub struct Shape {
    /// Always put some mass on Ω.
    pub non_dogmatic: bool,
    /// Always put some mass on ∅.
    pub subnormal: bool,
    /// Masses are multiples of 1/64, so sums and products by 0 or 1 are exact.
    pub dyadic: bool,
}

pub const ANY: Shape = Shape { non_dogmatic: false, subnormal: false, dyadic: false };
pub const NON_DOGMATIC: Shape = Shape { non_dogmatic: true, subnormal: false, dyadic: false };
pub const SUBNORMAL: Shape = Shape { non_dogmatic: false, subnormal: true, dyadic: false };
pub const DYADIC: Shape = Shape { non_dogmatic: false, subnormal: false, dyadic: true };

pub fn random_mass(rng: &mut impl Rng, f: &Frame, shape: Shape) -> MassFunction {
    let subsets = 1usize << f.len();
    let full = subsets - 1;
    let count = rng.random_range(1..=subsets.min(6));
    let mut chosen: Vec<usize> = sample(rng, subsets, count).into_vec();
    if shape.non_dogmatic && !chosen.contains(&full) {
        chosen.push(full);
    }
    if shape.subnormal && !chosen.contains(&0) {
        chosen.push(0);
    }
    let values: Vec<f64> = if shape.dyadic {
        let mut cuts: Vec<u32> = (0..chosen.len() - 1).map(|_| rng.random_range(1..64)).collect();
        cuts.push(0);
        cuts.push(64);
        cuts.sort();
        let mut parts: Vec<u32> = cuts.windows(2).map(|w| w[1] - w[0]).collect();
        // keep every chosen focal set strictly positive
        for i in 0..parts.len() {
            if parts[i] == 0 {
                let donor = (0..parts.len()).max_by_key(|&j| parts[j]).unwrap();
                parts[donor] -= 1;
                parts[i] += 1;
            }
        }
        parts.into_iter().map(|p| p as f64 / 64.0).collect()
    } else {
        let raw: Vec<f64> = chosen.iter().map(|_| rng.random_range(0.05..1.0)).collect();
        let total: f64 = raw.iter().sum();
        raw.into_iter().map(|v| v / total).collect()
    };
    MassFunction::new(f, chosen.iter().zip(values).map(|(&b, v)| (set(f, b as u64), v))).unwrap()
}

/// Dense `2^n` vector of a mass.
pub fn dense(m: &MassFunction) -> Vec<f64> {
    let mut v = vec![0.0; 1 << m.frame().len()];
    for (s, x) in m.focals() {
        v[s.bits() as usize] += x;
    }
    v
}

pub fn max_diff(a: &MassFunction, b: &MassFunction) -> f64 {
    dense(a).iter().zip(dense(b)).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn bits_subset(a: usize, b: usize) -> bool {
    a & !b == 0
}

/// Conjunctive or disjunctive combination of signed set functions.
fn combine_signed(a: &BTreeMap<usize, f64>, b: &BTreeMap<usize, f64>, union: bool) -> BTreeMap<usize, f64> {
    let mut out = BTreeMap::new();
    for (&x, &u) in a {
        for (&y, &v) in b {
            let z = if union { x | y } else { x & y };
            *out.entry(z).or_insert(0.0) += u * v;
        }
    }
    out
}

/// Canonical weights by the product formula over supersets.
pub fn oracle_weights(m: &MassFunction) -> Vec<f64> {
    let d = dense(m);
    let size = d.len();
    let q: Vec<f64> = (0..size).map(|a| (0..size).filter(|&b| bits_subset(a, b)).map(|b| d[b]).sum()).collect();
    (0..size)
        .map(|a| {
            let mut w = 1.0;
            for b in (0..size).filter(|&b| bits_subset(a, b)) {
                let sign = ((b.count_ones() - a.count_ones()) % 2 == 0) as i32 * 2 - 1;
                w *= q[b].powi(-sign);
            }
            w
        })
        .collect()
}

/// Disjunctive weights by the product formula over subsets.
pub fn oracle_disjunctive_weights(m: &MassFunction) -> Vec<f64> {
    let d = dense(m);
    let size = d.len();
    let b: Vec<f64> = (0..size).map(|a| (0..size).filter(|&x| bits_subset(x, a)).map(|x| d[x]).sum()).collect();
    (0..size)
        .map(|a| {
            let mut v = 1.0;
            for x in (0..size).filter(|&x| bits_subset(x, a)) {
                let sign = ((a.count_ones() - x.count_ones()) % 2 == 0) as i32 * 2 - 1;
                v *= b[x].powi(-sign);
            }
            v
        })
        .collect()
}

/// `∩ A^{w(A)}` over `A ≠ Ω`, combining the signed simple functions directly.
pub fn oracle_from_weights(f: &Frame, w: &[f64]) -> MassFunction {
    let full = w.len() - 1;
    let mut acc: BTreeMap<usize, f64> = BTreeMap::from([(full, 1.0)]);
    for (a, &wa) in w.iter().enumerate().take(full) {
        if wa != 1.0 {
            let simple = BTreeMap::from([(a, 1.0 - wa), (full, wa)]);
            acc = combine_signed(&acc, &simple, false);
        }
    }
    to_mass(f, acc)
}

/// `∪ A_{v(A)}` over `A ≠ ∅`, where `A_v(∅) = v` and `A_v(A) = 1 - v`.
pub fn oracle_from_disjunctive_weights(f: &Frame, v: &[f64]) -> MassFunction {
    let mut acc: BTreeMap<usize, f64> = BTreeMap::from([(0, 1.0)]);
    for (a, &va) in v.iter().enumerate().skip(1) {
        if va != 1.0 {
            let simple = BTreeMap::from([(0, va), (a, 1.0 - va)]);
            acc = combine_signed(&acc, &simple, true);
        }
    }
    to_mass(f, acc)
}

fn to_mass(f: &Frame, map: BTreeMap<usize, f64>) -> MassFunction {
    let entries = map.into_iter().filter(|&(_, v)| v.abs() > 1e-13).map(|(b, v)| (set(f, b as u64), v));
    MassFunction::new(f, entries).unwrap()
}

/// Classic discounting written out focal by focal.
pub fn oracle_discount(m: &MassFunction, alpha: f64) -> Vec<f64> {
    let mut d: Vec<f64> = dense(m).into_iter().map(|v| alpha * v).collect();
    let full = d.len() - 1;
    d[full] += 1.0 - alpha;
    d
}

/// Closed form of independence discounting with parameters `(α, β, γ)`.
pub fn oracle_independence(m: &MassFunction, alpha: f64, beta: f64, gamma: f64) -> Vec<f64> {
    let mut d: Vec<f64> = dense(m).into_iter().map(|v| alpha * beta * v).collect();
    let full = d.len() - 1;
    d[0] += alpha * (1.0 - beta) * (1.0 - gamma);
    d[full] += alpha * (1.0 - beta) * gamma + 1.0 - alpha;
    d
}

pub fn vec_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Jousselme distance from the full `2^n × 2^n` matrix.
pub fn oracle_jousselme(a: &MassFunction, b: &MassFunction) -> f64 {
    let (x, y) = (dense(a), dense(b));
    let diff: Vec<f64> = x.iter().zip(&y).map(|(p, q)| p - q).collect();
    let size = diff.len();
    let mut form = 0.0;
    for i in 0..size {
        for j in 0..size {
            let union = (i | j).count_ones();
            let d = if union == 0 { 1.0 } else { (i & j).count_ones() as f64 / union as f64 };
            form += diff[i] * d * diff[j];
        }
    }
    (0.5 * form).max(0.0).sqrt()
}
