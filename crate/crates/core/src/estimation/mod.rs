//! Estimating a source's independence from paired datasets.
//!
//! Each source labels the same objects with mass functions. Both datasets are
//! clustered; every cluster of `S₁` is matched with the `S₂` cluster it
//! overlaps most. Overlap speaks for dependence, and the mean Jousselme
//! distance on shared objects separates positive from negative dependence.
//! Per-cluster masses on `𝓘` are averaged into the final estimate.

mod jousselme;
mod kmedoids;

pub use jousselme::{jousselme_distance, MAX_DISTANCE_ATOMS};
pub use kmedoids::{k_medoids, ClusterModel, DistanceMatrix};

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::independence::{IndependenceMass, IndependenceParams};
use crate::mass::MassFunction;

/// Mass functions given by one source, one per object.
#[derive(Debug, Clone, PartialEq)]
pub struct MassDataset {
    frame: Frame,
    items: Vec<MassFunction>,
}

impl MassDataset {
    pub fn new(frame: &Frame, items: Vec<MassFunction>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::EmptyDataset);
        }
        if items.iter().any(|m| m.frame() != frame) {
            return Err(Error::FrameMismatch);
        }
        Ok(Self { frame: frame.clone(), items })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn items(&self) -> &[MassFunction] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn distances(&self) -> Result<DistanceMatrix> {
        DistanceMatrix::from_fn(self.len(), |i, j| jousselme_distance(&self.items[i], &self.items[j]))
    }
}

/// k-medoids of a dataset under the Jousselme distance.
pub fn cluster_masses(ds: &MassDataset, k: usize) -> Result<ClusterModel> {
    if k == 0 || k > ds.len() {
        return Err(Error::TooFewItems { clusters: k, items: ds.len() });
    }
    k_medoids(&ds.distances()?, k)
}

/// Best `S₂` cluster for one `S₁` cluster.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterMatch {
    pub source_cluster: usize,
    pub matched_cluster: usize,
    /// `|Cl₁ ∩ Cl₂| / |Cl₁|`; 0 for an empty `Cl₁`.
    pub overlap: f64,
    /// Objects in both clusters.
    pub common: Vec<usize>,
    pub empty_source_cluster: bool,
}

/// Non-symmetric matching: each cluster of `c1` goes to the cluster of `c2`
/// maximizing the overlap relative to the `c1` cluster size.
pub fn match_clusters(c1: &ClusterModel, c2: &ClusterModel) -> Result<Vec<ClusterMatch>> {
    if c1.item_count() != c2.item_count() {
        return Err(Error::MisalignedDatasets { left: c1.item_count(), right: c2.item_count() });
    }
    let mut out = Vec::with_capacity(c1.k());
    for k1 in 0..c1.k() {
        let members = c1.members(k1);
        let mut counts = vec![0usize; c2.k()];
        for &i in &members {
            counts[c2.assignment()[i]] += 1;
        }
        let mut best = 0;
        for k2 in 1..c2.k() {
            if counts[k2] > counts[best] {
                best = k2;
            }
        }
        let overlap = if members.is_empty() { 0.0 } else { counts[best] as f64 / members.len() as f64 };
        let common = members.iter().copied().filter(|&i| c2.assignment()[i] == best).collect();
        out.push(ClusterMatch {
            source_cluster: k1,
            matched_cluster: best,
            overlap,
            common,
            empty_source_cluster: members.is_empty(),
        });
    }
    Ok(out)
}

/// Mean distance between the two sources on shared objects.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClusterDistance {
    pub mean: f64,
    pub common: usize,
}

impl ClusterDistance {
    /// No shared object: the distance is taken as maximal.
    pub fn no_common_items(&self) -> bool {
        self.common == 0
    }
}

/// Mean of `d(m₁ⱼ, m₂ⱼ)` over objects `j` in both clusters, or 1 if there are none.
pub fn cluster_pair_distance(
    ds1: &MassDataset,
    ds2: &MassDataset,
    cluster1: &[usize],
    cluster2: &[usize],
) -> Result<ClusterDistance> {
    if ds1.len() != ds2.len() {
        return Err(Error::MisalignedDatasets { left: ds1.len(), right: ds2.len() });
    }
    let common: Vec<usize> = cluster1.iter().copied().filter(|i| cluster2.contains(i)).collect();
    if common.is_empty() {
        return Ok(ClusterDistance { mean: 1.0, common: 0 });
    }
    let mut total = 0.0;
    for &j in &common {
        let (a, b) = (ds1.items.get(j), ds2.items.get(j));
        let (a, b) = a.zip(b).ok_or(Error::MisalignedDatasets { left: ds1.len(), right: j + 1 })?;
        total += jousselme_distance(a, b)?;
    }
    Ok(ClusterDistance { mean: total / common.len() as f64, common: common.len() })
}

/// How overlap between matched clusters is read.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Orientation {
    /// Overlap supports dependence: `m(I) = β(1 - α¹)`, `m(Ī) = β α¹`.
    #[default]
    OverlapIsDependence,
    /// Overlap supports independence: `m(I) = β α¹`, `m(Ī) = β(1 - α¹)`.
    OverlapIsIndependence,
}

/// Mass on `𝓘` for one matched cluster pair.
pub fn cluster_pair_mass(
    overlap: f64,
    distance: f64,
    confidence: f64,
    orientation: Orientation,
) -> Result<IndependenceMass> {
    for (name, v) in [("overlap", overlap), ("distance", distance), ("beta_conf", confidence)] {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::OutOfRange { name, value: v });
        }
    }
    let (independent, dependent) = match orientation {
        Orientation::OverlapIsDependence => (1.0 - overlap, overlap),
        Orientation::OverlapIsIndependence => (overlap, 1.0 - overlap),
    };
    IndependenceMass::from_components(
        confidence * independent,
        confidence * dependent * (1.0 - distance),
        confidence * dependent * distance,
        0.0,
        1.0 - confidence,
    )
}

/// Confidence placed in one cluster's evidence.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub enum ConfidencePolicy {
    /// `|Cl| / (|Cl| + 1)`: grows with the number of observations, 0 when empty.
    #[default]
    ClusterSize,
    Constant(f64),
}

impl ConfidencePolicy {
    pub fn confidence(&self, cluster_size: usize) -> f64 {
        match *self {
            ConfidencePolicy::ClusterSize => cluster_size as f64 / (cluster_size as f64 + 1.0),
            ConfidencePolicy::Constant(_) if cluster_size == 0 => 0.0,
            ConfidencePolicy::Constant(c) => c,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct EstimationConfig {
    /// Cluster count; defaults to the number of atoms of the frame.
    pub clusters: Option<usize>,
    pub confidence: ConfidencePolicy,
    pub orientation: Orientation,
}

/// Diagnostics for one `S₁` cluster.
#[derive(Debug, Clone, PartialEq)]
pub struct PairDiagnostics {
    pub matched: ClusterMatch,
    pub source_size: usize,
    pub distance: ClusterDistance,
    pub confidence: f64,
    pub mass: IndependenceMass,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndependenceEstimate {
    pub mass: IndependenceMass,
    pub source_clusters: ClusterModel,
    pub reference_clusters: ClusterModel,
    pub pairs: Vec<PairDiagnostics>,
}

impl IndependenceEstimate {
    /// `(α, β, γ)` reproducing the estimate, when it has that shape.
    pub fn params(&self) -> Option<IndependenceParams> {
        IndependenceParams::from_mass(&self.mass)
    }
}

/// Independence of the source behind `ds1` with respect to the one behind `ds2`:
/// the mean of the per-cluster masses over all `S₁` clusters, empty ones included.
pub fn source_independence_mass(
    ds1: &MassDataset,
    ds2: &MassDataset,
    config: &EstimationConfig,
) -> Result<IndependenceEstimate> {
    if ds1.len() != ds2.len() {
        return Err(Error::MisalignedDatasets { left: ds1.len(), right: ds2.len() });
    }
    if ds1.frame() != ds2.frame() {
        return Err(Error::FrameMismatch);
    }
    if let ConfidencePolicy::Constant(c) = config.confidence {
        if !(0.0..=1.0).contains(&c) {
            return Err(Error::OutOfRange { name: "beta_conf", value: c });
        }
    }
    let k = config.clusters.unwrap_or(ds1.frame().len());
    let c1 = cluster_masses(ds1, k)?;
    let c2 = cluster_masses(ds2, k)?;
    let matches = match_clusters(&c1, &c2)?;

    let mut sums = [0.0f64; 5];
    let mut pairs = Vec::with_capacity(matches.len());
    for matched in matches {
        let members1 = c1.members(matched.source_cluster);
        let members2 = c2.members(matched.matched_cluster);
        let distance = cluster_pair_distance(ds1, ds2, &members1, &members2)?;
        let confidence = config.confidence.confidence(members1.len());
        let mass = cluster_pair_mass(matched.overlap, distance.mean, confidence, config.orientation)?;
        for (s, v) in sums.iter_mut().zip(components(&mass)) {
            *s += v;
        }
        pairs.push(PairDiagnostics { matched, source_size: members1.len(), distance, confidence, mass });
    }
    let n = pairs.len() as f64;
    let [i, p, pbar, dep, all] = sums.map(|s| s / n);
    let mass = IndependenceMass::from_components(i, p, pbar, dep, all)?;
    Ok(IndependenceEstimate { mass, source_clusters: c1, reference_clusters: c2, pairs })
}

fn components(m: &IndependenceMass) -> [f64; 5] {
    [m.independence(), m.positive(), m.negative(), m.dependence(), m.ignorance()]
}
