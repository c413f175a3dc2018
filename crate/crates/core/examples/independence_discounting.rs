//! Discounting a source by how independent it is from another one.
//!
//! The source is extended to Ω × {I, P, P̄}: kept as is where it is
//! independent, vacuous where it positively depends on the other source and
//! empty where it contradicts it.
//!
//! ```bash
//! cargo run --example independence_discounting
//! ```

use bfi::independence::{discount_by_independence_closed_form, discount_by_independence_traced};
use bfi::report::{mass_table, product_table};
use bfi::{Frame, IndependenceParams, MassFunction};

pub fn run() -> bfi::Result<()> {
    let omega = Frame::new(["w1", "w2", "w3"])?;
    let m = MassFunction::from_labels(&omega, &[(&["w1"], 0.2), (&["w1", "w2"], 0.5), (&["w1", "w2", "w3"], 0.3)])?;

    let params = IndependenceParams::new(0.95, 0.05, 0.95)?;
    let trace = discount_by_independence_traced(&m, &params.to_mass()?)?;
    println!("on Ω × 𝓘\n{}", product_table(&trace.combined));
    println!("discounted\n{}", mass_table(&trace.marginal));

    let closed = discount_by_independence_closed_form(&m, &params)?;
    assert!(closed.approx_eq(&trace.marginal, 1e-12));

    for (alpha, beta, gamma, what) in [
        (1.0, 1.0, 0.5, "independent: unchanged"),
        (1.0, 0.0, 1.0, "positively dependent: vacuous"),
        (1.0, 0.0, 0.0, "negatively dependent: all on ∅"),
        (0.0, 0.5, 0.5, "nothing known: vacuous"),
    ] {
        let r = discount_by_independence_closed_form(&m, &IndependenceParams::new(alpha, beta, gamma)?)?;
        println!("{what}\n{}", mass_table(&r));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("independence_discounting");
}
