//! Commonality, canonical weights and their inverse.
//!
//! ```bash
//! cargo run --example canonical_decomposition
//! ```

use bfi::mass::from_weights;
use bfi::report::{format_g6, mass_table};
use bfi::{Frame, MassFunction, WeightFunction};

pub fn run() -> bfi::Result<()> {
    let f = Frame::new(["a", "b", "c"])?;
    let m = MassFunction::from_labels(&f, &[(&["a"], 0.3), (&["a", "b"], 0.2), (&["b", "c"], 0.1), (&["a", "b", "c"], 0.4)])?;

    let q = m.commonality()?;
    println!("q(a) = {}, q(b) = {}", format_g6(q.get(&f.set(&["a"])?)?), format_g6(q.get(&f.set(&["b"])?)?));

    let w = m.canonical_weights()?;
    println!("non-trivial weights");
    for (set, weight) in w.non_trivial() {
        println!("  {set:<8} {}", format_g6(weight));
    }
    let back = from_weights(&w)?;
    assert!(back.approx_eq(&m, 1e-9));

    let w = WeightFunction::new(&f, [(f.set(&["a"])?, 0.5), (f.set(&["a", "b"])?, 0.8)])?;
    let separable = w.to_mass()?;
    println!("{{a}}^0.5 ∩ {{a,b}}^0.8\n{}", mass_table(&separable));
    assert!((separable.mass(&f.set(&["a"])?)? - 0.5).abs() < 1e-12);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("canonical_decomposition");
}
