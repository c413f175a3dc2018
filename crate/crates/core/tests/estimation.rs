mod common;

use bfi::estimation::{
    cluster_masses, match_clusters, source_independence_mass, ConfidencePolicy, EstimationConfig, MassDataset,
    Orientation,
};
use bfi::synthetic::{generate_pair, Relation};
use bfi::MassFunction;
use common::*;

#[test]
fn identical_sources_show_no_negative_dependence() {
    for seed in 0..10 {
        let (a, b) = generate_pair(Relation::Identical, 3, 40, seed).unwrap();
        let est = source_independence_mass(&a, &b, &EstimationConfig::default()).unwrap();
        assert!(est.mass.negative() <= 1e-9);
        assert!(est.mass.positive() >= est.mass.independence());
        let same = source_independence_mass(&a, &a, &EstimationConfig::default()).unwrap();
        assert_eq!(same.mass, est.mass);
    }
}

#[test]
fn outputs_are_valid_masses() {
    let mut r = rng(31);
    let f = frame(3);
    for k in 1..=4 {
        let items = |r: &mut rand_chacha::ChaCha8Rng| (0..12).map(|_| random_mass(r, &f, ANY)).collect::<Vec<_>>();
        let a = MassDataset::new(&f, items(&mut r)).unwrap();
        let b = MassDataset::new(&f, items(&mut r)).unwrap();
        for orientation in [Orientation::OverlapIsDependence, Orientation::OverlapIsIndependence] {
            for confidence in [ConfidencePolicy::ClusterSize, ConfidencePolicy::Constant(0.7)] {
                let config = EstimationConfig { clusters: Some(k), confidence, orientation };
                let est = source_independence_mass(&a, &b, &config).unwrap();
                let m = est.mass.as_mass();
                assert!((m.total() - 1.0).abs() <= 1e-9);
                assert!(m.focals().all(|(_, v)| v >= 0.0));
                assert_eq!(est.pairs.len(), k);
            }
        }
    }
}

#[test]
fn orientation_swaps_independence_and_dependence() {
    let (a, b) = generate_pair(Relation::Independent, 3, 60, 5).unwrap();
    let dep = source_independence_mass(&a, &b, &EstimationConfig::default()).unwrap();
    let config = EstimationConfig { orientation: Orientation::OverlapIsIndependence, ..Default::default() };
    let ind = source_independence_mass(&a, &b, &config).unwrap();
    let total = |m: &bfi::IndependenceMass| m.positive() + m.negative();
    assert!((dep.mass.independence() - total(&ind.mass)).abs() <= 1e-12);
    assert!((ind.mass.independence() - total(&dep.mass)).abs() <= 1e-12);
}

#[test]
fn clustering_is_deterministic_and_matching_is_total() {
    let (a, b) = generate_pair(Relation::Independent, 4, 50, 9).unwrap();
    let c1 = cluster_masses(&a, 4).unwrap();
    assert_eq!(c1, cluster_masses(&a, 4).unwrap());
    let c2 = cluster_masses(&b, 4).unwrap();
    let matches = match_clusters(&c1, &c2).unwrap();
    assert_eq!(matches.len(), 4);
    for m in matches {
        assert!((0.0..=1.0).contains(&m.overlap));
        assert_eq!(m.common.len() as f64, (m.overlap * c1.size(m.source_cluster) as f64).round());
    }
}

#[test]
fn misaligned_datasets_are_rejected() {
    let f = frame(2);
    let one = MassDataset::new(&f, vec![MassFunction::vacuous(&f)]).unwrap();
    let two = MassDataset::new(&f, vec![MassFunction::vacuous(&f); 2]).unwrap();
    assert!(source_independence_mass(&one, &two, &EstimationConfig::default()).is_err());
}
