//! Discounting a source by its measured independence from another source.
//!
//! The independence of source `S₁` with respect to `S₂` is a mass function on
//! `𝓘 = {I, P, P̄}` (independent, positively dependent, negatively dependent).
//! Conditionally on each atom the source's mass becomes:
//!
//! * `m[I] = m`: an independent source is kept as is;
//! * `m[P] = m_Ω`: a positively dependent source should not count twice;
//! * `m[P̄] = m_∅`: a negatively dependent source flags conflict.
//!
//! These are lifted to `Ω × 𝓘`, combined conjunctively with the vacuous
//! extension of the independence mass, and marginalized back onto `Ω`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::combination;
use crate::discounting::check_unit;
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::mass::MassFunction;
use crate::product::{self, ProductFrame, ProductMass};

/// Largest source frame accepted by the product-space pipeline.
pub const MAX_PIPELINE_ATOMS: usize = 16;

const I: u64 = 0b001;
const P: u64 = 0b010;
const PBAR: u64 = 0b100;
const DEPENDENT: u64 = P | PBAR;
const ALL: u64 = I | P | PBAR;

/// The independence frame `𝓘 = {I, P, P̄}`, labelled `I`, `P`, `Pbar`.
pub fn independence_frame() -> &'static Frame {
    static FRAME: OnceLock<Frame> = OnceLock::new();
    FRAME.get_or_init(|| Frame::new(["I", "P", "Pbar"]).expect("static labels"))
}

/// Reliability `alpha`, independence degree `beta` and positive-dependence
/// degree `gamma`, each in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndependenceParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl IndependenceParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        check_unit("alpha", alpha)?;
        check_unit("beta", beta)?;
        check_unit("gamma", gamma)?;
        Ok(Self { alpha, beta, gamma })
    }

    pub fn validate(&self) -> Result<()> {
        Self::new(self.alpha, self.beta, self.gamma).map(|_| ())
    }

    /// `m(I) = αβ`, `m(P) = α(1-β)γ`, `m(P̄) = α(1-β)(1-γ)`, `m(𝓘) = 1-α`.
    pub fn to_mass(&self) -> Result<IndependenceMass> {
        self.validate()?;
        let Self { alpha, beta, gamma } = *self;
        let mut map = BTreeMap::new();
        map.insert(I, alpha * beta);
        map.insert(P, alpha * (1.0 - beta) * gamma);
        map.insert(PBAR, alpha * (1.0 - beta) * (1.0 - gamma));
        map.insert(ALL, 1.0 - alpha);
        Ok(IndependenceMass(MassFunction::from_map(independence_frame().clone(), map)))
    }

    /// Inverse of [`IndependenceParams::to_mass`]. `None` when the mass has
    /// weight on `P ∪ P̄`. Parameters that do not affect the mass (β and γ
    /// when α = 0, γ when β = 1) are reported as 1.
    pub fn from_mass(m: &IndependenceMass) -> Option<Self> {
        if m.dependence() > 0.0 {
            return None;
        }
        let alpha = (1.0 - m.ignorance()).clamp(0.0, 1.0);
        if alpha == 0.0 {
            return Some(Self { alpha, beta: 1.0, gamma: 1.0 });
        }
        let beta = (m.independence() / alpha).clamp(0.0, 1.0);
        let rest = alpha * (1.0 - beta);
        let gamma = if rest > 0.0 { (m.positive() / rest).clamp(0.0, 1.0) } else { 1.0 };
        Some(Self { alpha, beta, gamma })
    }
}

/// Independence of a source with respect to another, as a mass function on
/// `𝓘` with focal sets among `{I}`, `{P}`, `{P̄}`, `P ∪ P̄` and `𝓘`.
#[derive(Clone, PartialEq)]
pub struct IndependenceMass(MassFunction);

impl IndependenceMass {
    pub fn new(m: MassFunction) -> Result<Self> {
        if m.frame() != independence_frame() {
            return Err(Error::FrameMismatch);
        }
        for &(b, _) in m.raw() {
            if !matches!(b, I | P | PBAR | DEPENDENT | ALL) {
                return Err(Error::UnsupportedFocalStructure(m.frame().display_bits(b)));
            }
        }
        Ok(Self(m))
    }

    /// Builds the mass from its five components (which must sum to 1).
    pub fn from_components(
        independent: f64,
        positive: f64,
        negative: f64,
        dependent: f64,
        ignorance: f64,
    ) -> Result<Self> {
        let f = independence_frame();
        let entries = [(I, independent), (P, positive), (PBAR, negative), (DEPENDENT, dependent), (ALL, ignorance)]
            .map(|(b, v)| (f.focal(b), v));
        Self::new(MassFunction::new(f, entries)?)
    }

    pub fn as_mass(&self) -> &MassFunction {
        &self.0
    }

    pub fn independence(&self) -> f64 {
        self.0.mass_bits(I)
    }

    pub fn positive(&self) -> f64 {
        self.0.mass_bits(P)
    }

    pub fn negative(&self) -> f64 {
        self.0.mass_bits(PBAR)
    }

    /// Mass on `Ī = P ∪ P̄`.
    pub fn dependence(&self) -> f64 {
        self.0.mass_bits(DEPENDENT)
    }

    pub fn ignorance(&self) -> f64 {
        self.0.mass_bits(ALL)
    }

    /// True when the mass is expressible as `(α, β, γ)`.
    pub fn is_parametric(&self) -> bool {
        self.dependence() == 0.0
    }
}

impl fmt::Debug for IndependenceMass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndependenceMass({:?})", self.0)
    }
}

/// The source's mass conditionally on each atom of `𝓘`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionalFamily {
    pub independent: MassFunction,
    pub positive: MassFunction,
    pub negative: MassFunction,
}

pub fn conditional_family(m: &MassFunction) -> ConditionalFamily {
    ConditionalFamily {
        independent: m.clone(),
        positive: MassFunction::vacuous(m.frame()),
        negative: MassFunction::empty(m.frame()),
    }
}

/// Every intermediate mass of the product-space pipeline.
#[derive(Debug, Clone)]
pub struct IndependenceTrace {
    pub frame: ProductFrame,
    /// `m^{𝓘↑Ω×𝓘}`
    pub extended: ProductMass,
    /// `m[I]` ballooned on atom `I`.
    pub independent: ProductMass,
    /// `m[P̄]` ballooned on atom `P̄`.
    pub negative: ProductMass,
    /// Conjunctive combination of the three factors.
    pub combined: ProductMass,
    /// Marginal on Ω: the discounted mass.
    pub marginal: MassFunction,
}

/// Runs the product-space pipeline and keeps the intermediate masses.
pub fn discount_by_independence_traced(m: &MassFunction, independence: &IndependenceMass) -> Result<IndependenceTrace> {
    m.frame().ensure_at_most(MAX_PIPELINE_ATOMS)?;
    let ind = independence_frame();
    let pf = ProductFrame::new(m.frame(), ind)?;
    let family = conditional_family(m);
    let extended = product::vacuous_extension(independence.as_mass(), &pf)?;
    let independent = product::balloon(&family.independent, &pf, &ind.focal(I))?;
    let negative = product::balloon(&family.negative, &pf, &ind.focal(PBAR))?;
    // m[P] balloons to the vacuous mass on Ω × 𝓘, the conjunctive neutral element
    let combined = product::combine_conjunctive(
        &product::combine_conjunctive(&extended, &independent)?,
        &negative,
    )?;
    let marginal = product::marginalize(&combined);
    Ok(IndependenceTrace { frame: pf, extended, independent, negative, combined, marginal })
}

/// Discounts `m` by the independence mass through `Ω × 𝓘`.
pub fn discount_by_independence(m: &MassFunction, independence: &IndependenceMass) -> Result<MassFunction> {
    Ok(discount_by_independence_traced(m, independence)?.marginal)
}

/// Shorthand for the pipeline driven by `(α, β, γ)`.
pub fn discount_by_params(m: &MassFunction, params: &IndependenceParams) -> Result<MassFunction> {
    discount_by_independence(m, &params.to_mass()?)
}

/// Closed form of the pipeline for parametric independence masses:
///
/// * `m′(X) = αβ m(X)` for `X ∉ {∅, Ω}`
/// * `m′(∅) = αβ m(∅) + α(1-β)(1-γ)`
/// * `m′(Ω) = αβ m(Ω) + α(1-β)γ + 1 - α`
pub fn discount_by_independence_closed_form(m: &MassFunction, params: &IndependenceParams) -> Result<MassFunction> {
    params.validate()?;
    let IndependenceParams { alpha, beta, gamma } = *params;
    let kept = alpha * beta;
    let full = m.frame().full_bits();
    let mut map: BTreeMap<u64, f64> = m.raw().iter().map(|&(b, v)| (b, kept * v)).collect();
    *map.entry(0).or_insert(0.0) += alpha * (1.0 - beta) * (1.0 - gamma);
    *map.entry(full).or_insert(0.0) += alpha * (1.0 - beta) * gamma + (1.0 - alpha);
    Ok(MassFunction::from_map(m.frame().clone(), map))
}

/// Discounts `m1` by `p12` and, when given, `m2` by `p21`, then combines the
/// two conjunctively. Without `p21`, `m2` is taken as fully independent.
pub fn fuse_with_independence(
    m1: &MassFunction,
    m2: &MassFunction,
    p12: &IndependenceParams,
    p21: Option<&IndependenceParams>,
) -> Result<MassFunction> {
    if m1.frame() != m2.frame() {
        return Err(Error::FrameMismatch);
    }
    let d1 = discount_by_params(m1, p12)?;
    let d2 = match p21 {
        Some(p) => discount_by_params(m2, p)?,
        None => m2.clone(),
    };
    combination::combine_conjunctive(&d1, &d2)
}

/// Raised when conflict after fusion reaches a threshold; a hint of negative
/// dependence between the sources.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConflictAlert {
    pub conflict: f64,
    pub threshold: f64,
}

impl fmt::Display for ConflictAlert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "conflict mass {:.4} reaches threshold {:.4}: sources look negatively dependent",
            self.conflict, self.threshold
        )
    }
}

pub fn conflict_alert(m: &MassFunction, threshold: f64) -> Option<ConflictAlert> {
    let conflict = m.conflict();
    (conflict >= threshold).then_some(ConflictAlert { conflict, threshold })
}
