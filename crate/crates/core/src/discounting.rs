//! Reliability discounting, in closed form and through `Ω × 𝓕`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::mass::MassFunction;
use crate::product::{self, ProductFrame};

pub(crate) fn check_unit(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::OutOfRange { name, value })
    }
}

/// The reliability frame `𝓕 = {F, F̄}`.
pub fn reliability_frame() -> &'static Frame {
    static FRAME: OnceLock<Frame> = OnceLock::new();
    FRAME.get_or_init(|| Frame::new(["F", "Fbar"]).expect("static labels"))
}

/// Knowledge about a source's reliability: `m(F) = α`, `m(𝓕) = 1 - α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReliabilityMass {
    alpha: f64,
}

impl ReliabilityMass {
    pub fn new(alpha: f64) -> Result<Self> {
        check_unit("alpha", alpha)?;
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn to_mass(&self) -> MassFunction {
        let frame = reliability_frame();
        let mut map = BTreeMap::new();
        map.insert(frame.set(&["F"]).expect("static label").bits(), self.alpha);
        map.insert(frame.full_set().bits(), 1.0 - self.alpha);
        MassFunction::from_map(frame.clone(), map)
    }
}

/// Classic discounting: `ᵅm(X) = α m(X)` for `X ≠ Ω`, `ᵅm(Ω) = 1 - α (1 - m(Ω))`.
pub fn discount(m: &MassFunction, alpha: f64) -> Result<MassFunction> {
    check_unit("alpha", alpha)?;
    let full = m.frame().full_bits();
    let mut map: BTreeMap<u64, f64> =
        m.raw().iter().filter(|&&(b, _)| b != full).map(|&(b, v)| (b, alpha * v)).collect();
    map.insert(full, 1.0 - alpha * (1.0 - m.ignorance()));
    Ok(MassFunction::from_map(m.frame().clone(), map))
}

/// Discounting derived on `Ω × 𝓕`: vacuous extension of the reliability
/// mass, ballooning of `m[F] = m`, conjunctive combination, marginalization.
/// `m[F̄]` is vacuous and its ballooned factor is the neutral element, so it
/// is left out.
pub fn discount_via_product_space(m: &MassFunction, alpha: f64) -> Result<MassFunction> {
    let reliability = ReliabilityMass::new(alpha)?.to_mass();
    let rel_frame = reliability_frame();
    let pf = ProductFrame::new(m.frame(), rel_frame)?;
    let extended = product::vacuous_extension(&reliability, &pf)?;
    let reliable = rel_frame.set(&["F"])?;
    let ballooned = product::balloon(m, &pf, &reliable)?;
    let joint = product::combine_conjunctive(&extended, &ballooned)?;
    Ok(product::marginalize(&joint))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m1() -> MassFunction {
        let f = Frame::new(["w1", "w2", "w3"]).unwrap();
        MassFunction::from_labels(&f, &[(&["w1"], 0.2), (&["w1", "w2"], 0.5), (&["w1", "w2", "w3"], 0.3)])
            .unwrap()
    }

    #[test]
    fn limits() {
        let m = m1();
        assert!(discount(&m, 1.0).unwrap().approx_eq(&m, 1e-15));
        assert_eq!(discount(&m, 0.0).unwrap(), MassFunction::vacuous(m.frame()));
        assert!(discount_via_product_space(&m, 1.0).unwrap().approx_eq(&m, 1e-15));
    }

    #[test]
    fn half_reliability() {
        let m = m1();
        let expected = MassFunction::from_labels(
            m.frame(),
            &[(&["w1"], 0.1), (&["w1", "w2"], 0.25), (&["w1", "w2", "w3"], 0.65)],
        )
        .unwrap();
        assert!(discount(&m, 0.5).unwrap().approx_eq(&expected, 1e-12));
        assert!(discount_via_product_space(&m, 0.5).unwrap().approx_eq(&expected, 1e-12));
    }

    #[test]
    fn alpha_range() {
        let m = m1();
        assert_eq!(discount(&m, 1.5).unwrap_err(), Error::OutOfRange { name: "alpha", value: 1.5 });
        assert!(discount_via_product_space(&m, -0.1).is_err());
        assert!(ReliabilityMass::new(f64::NAN).is_err());
    }

    #[test]
    fn dogmatic_input_gains_ignorance() {
        let f = Frame::new(["a", "b"]).unwrap();
        let m = MassFunction::from_labels(&f, &[(&["a"], 1.0)]).unwrap();
        let d = discount(&m, 0.8).unwrap();
        assert!((d.ignorance() - 0.2).abs() < 1e-15);
    }
}
