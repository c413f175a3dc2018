//! Combination rules over mass functions sharing a frame.
//!
//! No rule renormalizes: conflict stays on `∅`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::frame::FocalSet;
use crate::mass::MassFunction;

/// Pointwise operator applied to canonical weights by the cautious and bold rules.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum WeightOp {
    #[default]
    Min,
    Max,
}

impl WeightOp {
    fn apply(self, a: f64, b: f64) -> f64 {
        match self {
            WeightOp::Min => a.min(b),
            WeightOp::Max => a.max(b),
        }
    }
}

/// The combination rules exposed by the toolkit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Conjunctive,
    Disjunctive,
    Cautious(WeightOp),
    Bold(WeightOp),
}

impl Rule {
    pub fn combine(self, m1: &MassFunction, m2: &MassFunction) -> Result<MassFunction> {
        match self {
            Rule::Conjunctive => combine_conjunctive(m1, m2),
            Rule::Disjunctive => combine_disjunctive(m1, m2),
            Rule::Cautious(op) => combine_cautious_with(m1, m2, op),
            Rule::Bold(op) => combine_bold_with(m1, m2, op),
        }
    }
}

fn same_frame(m1: &MassFunction, m2: &MassFunction) -> Result<()> {
    if m1.frame() == m2.frame() {
        Ok(())
    } else {
        Err(Error::FrameMismatch)
    }
}

fn pairwise(m1: &MassFunction, m2: &MassFunction, op: impl Fn(u64, u64) -> u64) -> Result<MassFunction> {
    same_frame(m1, m2)?;
    let mut acc = BTreeMap::new();
    for &(a, x) in m1.raw() {
        for &(b, y) in m2.raw() {
            *acc.entry(op(a, b)).or_insert(0.0) += x * y;
        }
    }
    Ok(MassFunction::from_map(m1.frame().clone(), acc))
}

/// `m(X) = Σ_{Y₁ ∩ Y₂ = X} m₁(Y₁) m₂(Y₂)`
pub fn combine_conjunctive(m1: &MassFunction, m2: &MassFunction) -> Result<MassFunction> {
    pairwise(m1, m2, |a, b| a & b)
}

/// `m(X) = Σ_{Y₁ ∪ Y₂ = X} m₁(Y₁) m₂(Y₂)`
pub fn combine_disjunctive(m1: &MassFunction, m2: &MassFunction) -> Result<MassFunction> {
    pairwise(m1, m2, |a, b| a | b)
}

/// Cautious rule: minimum of conjunctive weights, recomposed conjunctively.
pub fn combine_cautious(m1: &MassFunction, m2: &MassFunction) -> Result<MassFunction> {
    combine_cautious_with(m1, m2, WeightOp::Min)
}

pub fn combine_cautious_with(m1: &MassFunction, m2: &MassFunction, op: WeightOp) -> Result<MassFunction> {
    same_frame(m1, m2)?;
    let w1 = m1.canonical_weights()?;
    let w2 = m2.canonical_weights()?;
    w1.zip_with(&w2, |a, b| op.apply(a, b))?.to_mass()
}

/// Bold rule: minimum of disjunctive weights, recomposed disjunctively.
///
/// Both operands must be subnormal (`m(∅) > 0`).
pub fn combine_bold(m1: &MassFunction, m2: &MassFunction) -> Result<MassFunction> {
    combine_bold_with(m1, m2, WeightOp::Min)
}

pub fn combine_bold_with(m1: &MassFunction, m2: &MassFunction, op: WeightOp) -> Result<MassFunction> {
    same_frame(m1, m2)?;
    let v1 = m1.disjunctive_weights()?;
    let v2 = m2.disjunctive_weights()?;
    v1.zip_with(&v2, |a, b| op.apply(a, b))?.to_mass()
}

/// Conditioning `m[A] = m ∩ m_A`: every focal set `Y` moves to `Y ∩ A`.
pub fn condition(m: &MassFunction, set: &FocalSet) -> Result<MassFunction> {
    if set.frame() != m.frame() {
        return Err(Error::ForeignFocalSet);
    }
    if set.is_empty() {
        return Err(Error::EmptyConditioningSet);
    }
    combine_conjunctive(m, &MassFunction::categorical(set))
}

/// Left fold of `rule` over `masses`.
pub fn combine_all<'a, I>(rule: Rule, masses: I) -> Result<MassFunction>
where
    I: IntoIterator<Item = &'a MassFunction>,
{
    let mut it = masses.into_iter();
    let first = it.next().ok_or_else(|| Error::Parse("nothing to combine".into()))?;
    it.try_fold(first.clone(), |acc, m| rule.combine(&acc, m))
}
