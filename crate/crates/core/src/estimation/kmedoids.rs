//! Deterministic k-medoids over a precomputed distance matrix.

use crate::error::{Error, Result};

const MAX_ROUNDS: usize = 100;

/// Symmetric pairwise distances between `n` items, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    values: Vec<f64>,
}

impl DistanceMatrix {
    pub fn from_fn(n: usize, mut dist: impl FnMut(usize, usize) -> Result<f64>) -> Result<Self> {
        let mut values = vec![0.0; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let d = dist(i, j)?;
                values[i * n + j] = d;
                values[j * n + i] = d;
            }
        }
        Ok(Self { n, values })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }
}

/// Partition of a dataset into `k` clusters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterModel {
    assignment: Vec<usize>,
    medoids: Vec<usize>,
    rounds: usize,
}

impl ClusterModel {
    pub fn k(&self) -> usize {
        self.medoids.len()
    }

    /// Cluster id of every item.
    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Medoid item of every cluster. An empty cluster keeps its last medoid.
    pub fn medoids(&self) -> &[usize] {
        &self.medoids
    }

    pub fn rounds(&self) -> usize {
        self.rounds
    }

    pub fn item_count(&self) -> usize {
        self.assignment.len()
    }

    /// Item indices of cluster `c`, ascending.
    pub fn members(&self, c: usize) -> Vec<usize> {
        self.assignment.iter().enumerate().filter(|&(_, &a)| a == c).map(|(i, _)| i).collect()
    }

    pub fn size(&self, c: usize) -> usize {
        self.assignment.iter().filter(|&&a| a == c).count()
    }

    pub fn empty_clusters(&self) -> Vec<usize> {
        (0..self.k()).filter(|&c| self.size(c) == 0).collect()
    }
}

/// Farthest-first seeding from item 0, then alternating assignment and medoid
/// updates until the partition is stable or 100 rounds have run.
///
/// Ties go to the lowest cluster id on assignment and to the lowest item
/// index when choosing seeds and medoids.
pub fn k_medoids(d: &DistanceMatrix, k: usize) -> Result<ClusterModel> {
    let n = d.len();
    if k == 0 || k > n {
        return Err(Error::TooFewItems { clusters: k, items: n });
    }
    let mut medoids = vec![0usize];
    let mut nearest: Vec<f64> = (0..n).map(|i| d.get(i, 0)).collect();
    while medoids.len() < k {
        let mut best: Option<usize> = None;
        for i in (0..n).filter(|i| !medoids.contains(i)) {
            if best.is_none_or(|b| nearest[i] > nearest[b]) {
                best = Some(i);
            }
        }
        let next = best.expect("k <= n leaves a candidate");
        medoids.push(next);
        for (i, near) in nearest.iter_mut().enumerate() {
            *near = near.min(d.get(i, next));
        }
    }

    let assign = |medoids: &[usize]| -> Vec<usize> {
        (0..n)
            .map(|i| {
                let mut best = 0;
                for c in 1..medoids.len() {
                    if d.get(i, medoids[c]) < d.get(i, medoids[best]) {
                        best = c;
                    }
                }
                best
            })
            .collect()
    };

    let mut assignment = assign(&medoids);
    let mut rounds = 0;
    while rounds < MAX_ROUNDS {
        rounds += 1;
        let mut updated = medoids.clone();
        for (c, medoid) in updated.iter_mut().enumerate() {
            let members: Vec<usize> = (0..n).filter(|&i| assignment[i] == c).collect();
            let mut best: Option<(usize, f64)> = None;
            for &cand in &members {
                let cost: f64 = members.iter().map(|&j| d.get(cand, j)).sum();
                if best.is_none_or(|(_, b)| cost < b) {
                    best = Some((cand, cost));
                }
            }
            if let Some((cand, _)) = best {
                *medoid = cand;
            }
        }
        let reassigned = assign(&updated);
        let stable = updated == medoids && reassigned == assignment;
        medoids = updated;
        assignment = reassigned;
        if stable {
            break;
        }
    }
    Ok(ClusterModel { assignment, medoids, rounds })
}
