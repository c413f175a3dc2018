//! Classic discounting, directly and through the product frame Ω × {F, F̄}.
//!
//! ```bash
//! cargo run --example reliability_discounting
//! ```

use bfi::discounting::{discount, discount_via_product_space};
use bfi::report::mass_table;
use bfi::{Frame, MassFunction};

pub fn run() -> bfi::Result<()> {
    let f = Frame::new(["rain", "sun", "snow"])?;
    let m = MassFunction::from_labels(&f, &[(&["rain"], 0.6), (&["rain", "snow"], 0.3), (&["rain", "sun", "snow"], 0.1)])?;
    for alpha in [1.0, 0.8, 0.5, 0.0] {
        let direct = discount(&m, alpha)?;
        let lifted = discount_via_product_space(&m, alpha)?;
        assert!(direct.approx_eq(&lifted, 1e-12));
        println!("alpha = {alpha}\n{}", mass_table(&direct));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("reliability_discounting");
}
