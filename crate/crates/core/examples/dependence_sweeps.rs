//! Mass on ∅ and on Ω as β and γ vary, for a dogmatic source.
//!
//! ```bash
//! cargo run --example dependence_sweeps > sweep.csv
//! ```

use bfi::sweep::{default_base, Param, SweepSpec};

pub fn run() -> bfi::Result<()> {
    let spec = SweepSpec::new(vec![(Param::Alpha, 1.0)], vec![(Param::Beta, 5), (Param::Gamma, 5)], default_base())?;
    let sweep = spec.run()?;
    for row in sweep.rows() {
        let p = row.params;
        assert!((row.m_empty() - (1.0 - p.beta) * (1.0 - p.gamma)).abs() < 1e-12);
    }
    print!("{}", sweep.to_csv(false)?);

    let spec = SweepSpec::new(vec![(Param::Gamma, 1.0)], vec![(Param::Alpha, 3), (Param::Beta, 3)], default_base())?;
    print!("{}", spec.run()?.to_csv(true)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("dependence_sweeps");
}
