//! Combining two sources on a three-hypothesis frame with each rule.
//!
//! ```bash
//! cargo run --example combine_sources
//! ```

use bfi::combination::{combine_bold, combine_cautious, combine_conjunctive, combine_disjunctive, condition};
use bfi::report::mass_table;
use bfi::{Frame, MassFunction};

pub fn run() -> bfi::Result<()> {
    let omega = Frame::new(["w1", "w2", "w3"])?;
    let m1 = MassFunction::from_labels(&omega, &[(&["w1"], 0.2), (&["w1", "w2"], 0.5), (&["w1", "w2", "w3"], 0.3)])?;
    let m2 = MassFunction::from_labels(&omega, &[(&["w2"], 0.1), (&["w1", "w2"], 0.6), (&["w1", "w2", "w3"], 0.3)])?;

    let conj = combine_conjunctive(&m1, &m2)?;
    println!("conjunctive\n{}", mass_table(&conj));
    assert!((conj.conflict() - 0.02).abs() < 1e-12);

    println!("disjunctive\n{}", mass_table(&combine_disjunctive(&m1, &m2)?));

    let cautious = combine_cautious(&m1, &m2)?;
    println!("cautious\n{}", mass_table(&cautious));
    assert!(combine_cautious(&m1, &m1)?.approx_eq(&m1, 1e-12));

    // the bold rule needs mass on ∅ in both operands
    let bold = combine_bold(&conj, &conj)?;
    assert!(bold.approx_eq(&conj, 1e-12));

    let a = omega.set(&["w1", "w2"])?;
    println!("m1 given {a}\n{}", mass_table(&condition(&m1, &a)?));
    println!("pl(w2) = {:.3}, bel(w1 ∪ w2) = {:.3}", conj.pl(&omega.set(&["w2"])?)?, conj.bel(&a)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("combine_sources");
}
