//! Fusing two sources after discounting one or both by independence.
//!
//! ```bash
//! cargo run --example fusion_scenarios
//! ```

use bfi::independence::{conflict_alert, fuse_with_independence};
use bfi::report::mass_table;
use bfi::scenario::Scenario;
use bfi::{Frame, IndependenceParams, MassFunction};

const SCENARIO: &str = r#"{
    "frame": ["w1", "w2", "w3"],
    "masses": {
        "m1": [{"set": ["w1"], "mass": 0.2}, {"set": ["w1", "w2"], "mass": 0.5}, {"set": ["w1", "w2", "w3"], "mass": 0.3}],
        "m2": [{"set": ["w2"], "mass": 0.1}, {"set": ["w1", "w2"], "mass": 0.6}, {"set": ["w1", "w2", "w3"], "mass": 0.3}]
    },
    "independence": [
        {"source": "m1", "reference": "m2", "alpha": 0.95, "beta": 0.05, "gamma": 0.05},
        {"source": "m2", "reference": "m1", "alpha": 0.9, "beta": 0.1, "gamma": 0.1}
    ],
    "operation": {"kind": "fuse", "sources": ["m1", "m2"]},
    "output": {"conflict_threshold": 0.5}
}"#;

pub fn run() -> bfi::Result<()> {
    let omega = Frame::new(["w1", "w2", "w3"])?;
    let m1 = MassFunction::from_labels(&omega, &[(&["w1"], 0.2), (&["w1", "w2"], 0.5), (&["w1", "w2", "w3"], 0.3)])?;
    let m2 = MassFunction::from_labels(&omega, &[(&["w2"], 0.1), (&["w1", "w2"], 0.6), (&["w1", "w2", "w3"], 0.3)])?;

    // only the first source is assessed; the second is taken at face value
    let p12 = IndependenceParams::new(0.95, 0.05, 0.95)?;
    let fused = fuse_with_independence(&m1, &m2, &p12, None)?;
    println!("one-sided\n{}", mass_table(&fused));

    let outcome = Scenario::from_json(SCENARIO)?.run()?;
    println!("both sources contradict each other\n{}", mass_table(&outcome.result));
    if let Some(alert) = outcome.alert {
        println!("{alert}");
    }
    assert!(conflict_alert(&outcome.result, 0.9).is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("fusion_scenarios");
}
