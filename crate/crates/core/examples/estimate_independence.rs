//! Estimating independence between two sources from their past outputs.
//!
//! Each source labelled the same objects. Both datasets are clustered; when
//! the clusters of one source line up with those of the other, the sources
//! look dependent, positively if they agree on the shared objects.
//!
//! ```bash
//! BFI_SEED=7 cargo run --example estimate_independence
//! ```

use bfi::estimation::{source_independence_mass, EstimationConfig, Orientation};
use bfi::synthetic::{generate_pair, seed_from_env, Relation};

pub fn run() -> bfi::Result<()> {
    let seed = seed_from_env();
    for relation in [Relation::Identical, Relation::Independent, Relation::Swapped] {
        let (ds1, ds2) = generate_pair(relation, 3, 60, seed)?;
        let est = source_independence_mass(&ds1, &ds2, &EstimationConfig::default())?;
        let m = &est.mass;
        println!(
            "{relation:?}: I {:.3}  P {:.3}  Pbar {:.3}  Ω {:.3}",
            m.independence(),
            m.positive(),
            m.negative(),
            m.ignorance()
        );
        for p in &est.pairs {
            println!(
                "  cluster {} ({} objects) -> {}: overlap {:.2}, distance {:.3}",
                p.matched.source_cluster, p.source_size, p.matched.matched_cluster, p.matched.overlap, p.distance.mean
            );
        }
        if let Some(params) = est.params() {
            println!("  alpha {:.3}, beta {:.3}, gamma {:.3}", params.alpha, params.beta, params.gamma);
        }
    }

    let (ds1, ds2) = generate_pair(Relation::Identical, 3, 60, seed)?;
    let config = EstimationConfig { orientation: Orientation::OverlapIsIndependence, ..Default::default() };
    let flipped = source_independence_mass(&ds1, &ds2, &config)?;
    println!("identical, overlap read as independence: I {:.3}", flipped.mass.independence());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("estimate_independence");
}
