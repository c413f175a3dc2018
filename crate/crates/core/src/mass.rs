//! Mass functions and the set functions derived from them.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::frame::{FocalSet, Frame};
use crate::transform;

/// Tolerance on `Σ m(A) = 1` at construction.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// Dense transforms leave round-off residue on sets that should carry no mass;
/// anything at or below this magnitude is dropped.
const DENSE_PRUNE: f64 = 1e-12;

/// A basic belief assignment on a frame.
///
/// Focal sets are kept sparse, sorted by bitmask, with strictly positive
/// masses. Mass on `∅` is allowed and never renormalized away.
#[derive(Clone, PartialEq)]
pub struct MassFunction {
    frame: Frame,
    focals: Vec<(u64, f64)>,
}

impl MassFunction {
    /// Builds a validated mass function. Zero entries are dropped.
    pub fn new<I>(frame: &Frame, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (FocalSet, f64)>,
    {
        let mut map = BTreeMap::new();
        for (set, value) in entries {
            if set.frame() != frame {
                return Err(Error::ForeignFocalSet);
            }
            if value.is_nan() || value > 1.0 {
                return Err(Error::MassOutOfRange { set: set.to_string(), value });
            }
            if value < 0.0 {
                return Err(Error::NegativeMass { set: set.to_string(), value });
            }
            if map.insert(set.bits(), value).is_some() {
                return Err(Error::DuplicateFocalSet(set.to_string()));
            }
        }
        let sum: f64 = map.values().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::SumNotOne { sum });
        }
        Ok(Self::from_map(frame.clone(), map))
    }

    /// Convenience constructor from label lists.
    pub fn from_labels(frame: &Frame, entries: &[(&[&str], f64)]) -> Result<Self> {
        let sets = entries
            .iter()
            .map(|(labels, v)| Ok((frame.set(labels)?, *v)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(frame, sets)
    }

    /// The vacuous mass `m_Ω`: total ignorance.
    pub fn vacuous(frame: &Frame) -> Self {
        Self { frame: frame.clone(), focals: vec![(frame.full_bits(), 1.0)] }
    }

    /// The mass `m_∅` with all mass on the empty set.
    pub fn empty(frame: &Frame) -> Self {
        Self { frame: frame.clone(), focals: vec![(0, 1.0)] }
    }

    /// The categorical mass `m_A(A) = 1`.
    pub fn categorical(set: &FocalSet) -> Self {
        Self { frame: set.frame().clone(), focals: vec![(set.bits(), 1.0)] }
    }

    /// Simple support mass `A^w`: `m(A) = 1 - w`, `m(Ω) = w`.
    pub fn simple_support(set: &FocalSet, weight: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&weight) {
            return Err(Error::OutOfRange { name: "weight", value: weight });
        }
        let frame = set.frame();
        let mut map = BTreeMap::new();
        *map.entry(set.bits()).or_insert(0.0) += 1.0 - weight;
        *map.entry(frame.full_bits()).or_insert(0.0) += weight;
        Ok(Self::from_map(frame.clone(), map))
    }

    /// Result of a combination: the accumulator already sums to one.
    pub(crate) fn from_map(frame: Frame, map: BTreeMap<u64, f64>) -> Self {
        let focals = map.into_iter().filter(|&(_, v)| v != 0.0).collect();
        Self { frame, focals }
    }

    /// Reads back a dense table produced by a transform.
    pub(crate) fn from_dense(frame: &Frame, table: &[f64]) -> Result<Self> {
        let mut focals = Vec::new();
        for (bits, &v) in table.iter().enumerate() {
            if !v.is_finite() || v < -DENSE_PRUNE {
                return Err(Error::NotAMassFunction(format!(
                    "value {v} on {}",
                    frame.display_bits(bits as u64)
                )));
            }
            if v > DENSE_PRUNE {
                focals.push((bits as u64, v));
            }
        }
        let sum: f64 = focals.iter().map(|(_, v)| v).sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::NotAMassFunction(format!("masses sum to {sum}")));
        }
        Ok(Self { frame: frame.clone(), focals })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Number of focal sets.
    pub fn len(&self) -> usize {
        self.focals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.focals.is_empty()
    }

    /// Focal sets and their masses in canonical (bitmask) order.
    pub fn focals(&self) -> impl Iterator<Item = (FocalSet, f64)> + '_ {
        self.focals.iter().map(|&(b, v)| (self.frame.focal(b), v))
    }

    pub(crate) fn raw(&self) -> &[(u64, f64)] {
        &self.focals
    }

    pub(crate) fn mass_bits(&self, bits: u64) -> f64 {
        self.focals
            .binary_search_by_key(&bits, |&(b, _)| b)
            .map_or(0.0, |i| self.focals[i].1)
    }

    pub fn mass(&self, set: &FocalSet) -> Result<f64> {
        self.check(set)?;
        Ok(self.mass_bits(set.bits()))
    }

    /// Mass on the empty set.
    pub fn conflict(&self) -> f64 {
        self.mass_bits(0)
    }

    /// Mass on Ω.
    pub fn ignorance(&self) -> f64 {
        self.mass_bits(self.frame.full_bits())
    }

    pub fn is_dogmatic(&self) -> bool {
        self.ignorance() == 0.0
    }

    pub fn is_subnormal(&self) -> bool {
        self.conflict() > 0.0
    }

    pub fn total(&self) -> f64 {
        self.focals.iter().map(|(_, v)| v).sum()
    }

    /// Largest absolute difference between the two masses over all subsets.
    pub fn max_abs_diff(&self, other: &MassFunction) -> Result<f64> {
        if self.frame != other.frame {
            return Err(Error::FrameMismatch);
        }
        let mut diff = 0.0f64;
        for &(b, v) in &self.focals {
            diff = diff.max((v - other.mass_bits(b)).abs());
        }
        for &(b, v) in &other.focals {
            diff = diff.max((v - self.mass_bits(b)).abs());
        }
        Ok(diff)
    }

    pub fn approx_eq(&self, other: &MassFunction, tol: f64) -> bool {
        self.max_abs_diff(other).is_ok_and(|d| d <= tol)
    }

    fn check(&self, set: &FocalSet) -> Result<()> {
        if set.frame() == &self.frame {
            Ok(())
        } else {
            Err(Error::ForeignFocalSet)
        }
    }

    /// Credibility: `Σ_{∅ ≠ Y ⊆ X} m(Y)`.
    pub fn bel(&self, set: &FocalSet) -> Result<f64> {
        self.check(set)?;
        let x = set.bits();
        Ok(self.focals.iter().filter(|&&(y, _)| y != 0 && y & !x == 0).map(|(_, v)| v).sum())
    }

    /// Plausibility: `Σ_{Y ∩ X ≠ ∅} m(Y)`.
    pub fn pl(&self, set: &FocalSet) -> Result<f64> {
        self.check(set)?;
        let x = set.bits();
        Ok(self.focals.iter().filter(|&&(y, _)| y & x != 0).map(|(_, v)| v).sum())
    }

    pub(crate) fn to_dense(&self) -> Result<Vec<f64>> {
        self.frame.ensure_dense()?;
        let mut table = vec![0.0; 1 << self.frame.len()];
        for &(b, v) in &self.focals {
            table[b as usize] = v;
        }
        Ok(table)
    }

    /// Commonality function `q(X) = Σ_{Y ⊇ X} m(Y)` over the whole powerset.
    pub fn commonality(&self) -> Result<SetTable> {
        let mut table = self.to_dense()?;
        transform::superset_sum(&mut table);
        Ok(SetTable { frame: self.frame.clone(), values: table })
    }

    /// Implicability function `b(X) = Σ_{Y ⊆ X} m(Y)`, including `m(∅)`.
    pub fn implicability(&self) -> Result<SetTable> {
        let mut table = self.to_dense()?;
        transform::subset_sum(&mut table);
        Ok(SetTable { frame: self.frame.clone(), values: table })
    }

    /// Conjunctive canonical decomposition: `m = ∩_{A ⊂ Ω} A^{w(A)}`.
    pub fn canonical_weights(&self) -> Result<WeightFunction> {
        if self.is_dogmatic() {
            return Err(Error::DogmaticMass);
        }
        let mut log_q: Vec<f64> = self.commonality()?.values.into_iter().map(f64::ln).collect();
        transform::superset_mobius(&mut log_q);
        let full = self.frame.full_bits() as usize;
        let weights = log_q
            .into_iter()
            .enumerate()
            .map(|(a, lw)| if a == full { 1.0 } else { (-lw).exp() })
            .collect();
        Ok(WeightFunction { frame: self.frame.clone(), kind: Decomposition::Conjunctive, weights })
    }

    /// Disjunctive canonical decomposition: `m = ∪_{A ≠ ∅} A_{v(A)}`, where
    /// `A_v` puts `v` on `∅` and `1 - v` on `A`. Requires `m(∅) > 0`.
    pub fn disjunctive_weights(&self) -> Result<WeightFunction> {
        if !self.is_subnormal() {
            return Err(Error::InvalidForBoldRule("mass function is not subnormal (m(∅) = 0)"));
        }
        let mut log_b: Vec<f64> =
            self.implicability()?.values.into_iter().map(f64::ln).collect();
        transform::subset_mobius(&mut log_b);
        let weights = log_b
            .into_iter()
            .enumerate()
            .map(|(a, lv)| if a == 0 { 1.0 } else { (-lv).exp() })
            .collect();
        Ok(WeightFunction { frame: self.frame.clone(), kind: Decomposition::Disjunctive, weights })
    }
}

impl fmt::Debug for MassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut map = f.debug_map();
        for &(b, v) in &self.focals {
            map.entry(&self.frame.display_bits(b), &v);
        }
        map.finish()
    }
}

/// A set function tabulated densely over `2^Ω`.
#[derive(Debug, Clone, PartialEq)]
pub struct SetTable {
    frame: Frame,
    values: Vec<f64>,
}

impl SetTable {
    pub fn get(&self, set: &FocalSet) -> Result<f64> {
        if set.frame() != &self.frame {
            return Err(Error::ForeignFocalSet);
        }
        Ok(self.values[set.bits() as usize])
    }

    /// Values indexed by subset bitmask.
    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Which canonical decomposition a [`WeightFunction`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decomposition {
    /// Weights on strict subsets `A ⊂ Ω`, recombined with the conjunctive rule.
    Conjunctive,
    /// Weights on non-empty subsets, recombined with the disjunctive rule.
    Disjunctive,
}

/// Canonical weights of a mass function. Unlisted sets have weight 1.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightFunction {
    frame: Frame,
    kind: Decomposition,
    weights: Vec<f64>,
}

impl WeightFunction {
    /// Builds a conjunctive weight function; every set not listed gets weight 1.
    pub fn new<I>(frame: &Frame, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (FocalSet, f64)>,
    {
        Self::with_kind(frame, Decomposition::Conjunctive, entries)
    }

    pub fn with_kind<I>(frame: &Frame, kind: Decomposition, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (FocalSet, f64)>,
    {
        frame.ensure_dense()?;
        let mut weights = vec![1.0; 1 << frame.len()];
        let excluded = match kind {
            Decomposition::Conjunctive => frame.full_bits(),
            Decomposition::Disjunctive => 0,
        };
        for (set, w) in entries {
            if set.frame() != frame {
                return Err(Error::ForeignFocalSet);
            }
            if set.bits() == excluded {
                return Err(Error::Parse(format!("no weight is defined on {set}")));
            }
            if !(w > 0.0 && w.is_finite()) {
                return Err(Error::NonPositiveWeight { set: set.to_string(), value: w });
            }
            weights[set.bits() as usize] = w;
        }
        Ok(Self { frame: frame.clone(), kind, weights })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn kind(&self) -> Decomposition {
        self.kind
    }

    pub fn weight(&self, set: &FocalSet) -> Result<f64> {
        if set.frame() != &self.frame {
            return Err(Error::ForeignFocalSet);
        }
        Ok(self.weights[set.bits() as usize])
    }

    /// Weights that differ from 1, in canonical order.
    pub fn non_trivial(&self) -> impl Iterator<Item = (FocalSet, f64)> + '_ {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, &w)| w != 1.0)
            .map(|(b, &w)| (self.frame.focal(b as u64), w))
    }

    /// Combines two weight functions of the same kind set by set.
    pub(crate) fn zip_with(&self, other: &WeightFunction, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        if self.frame != other.frame || self.kind != other.kind {
            return Err(Error::FrameMismatch);
        }
        let weights = self.weights.iter().zip(&other.weights).map(|(&a, &b)| f(a, b)).collect();
        Ok(Self { frame: self.frame.clone(), kind: self.kind, weights })
    }

    /// Recomposes the mass function.
    pub fn to_mass(&self) -> Result<MassFunction> {
        from_weights(self)
    }
}

/// Inverse of the canonical decompositions.
///
/// Conjunctive combination multiplies commonalities and disjunctive combination
/// multiplies implicabilities, so both recompositions are a log-domain zeta
/// transform followed by a Möbius inversion.
pub fn from_weights(w: &WeightFunction) -> Result<MassFunction> {
    let frame = &w.frame;
    for (b, &v) in w.weights.iter().enumerate() {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::NonPositiveWeight {
                set: frame.display_bits(b as u64),
                value: v,
            });
        }
    }
    let mut log_w: Vec<f64> = w.weights.iter().map(|v| v.ln()).collect();
    let table = match w.kind {
        Decomposition::Conjunctive => {
            // q(B) = Π_{A ⊉ B} w(A)
            transform::superset_sum(&mut log_w);
            let total = log_w[0];
            let mut q: Vec<f64> = log_w.iter().map(|s| (total - s).exp()).collect();
            transform::superset_mobius(&mut q);
            q
        }
        Decomposition::Disjunctive => {
            // b(B) = Π_{A ⊄ B} v(A)
            transform::subset_sum(&mut log_w);
            let total = log_w[frame.full_bits() as usize];
            let mut b: Vec<f64> = log_w.iter().map(|s| (total - s).exp()).collect();
            transform::subset_mobius(&mut b);
            b
        }
    };
    MassFunction::from_dense(frame, &table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omega() -> Frame {
        Frame::new(["w1", "w2", "w3"]).unwrap()
    }

    pub(crate) fn m1(f: &Frame) -> MassFunction {
        MassFunction::from_labels(f, &[(&["w1"], 0.2), (&["w1", "w2"], 0.5), (&["w1", "w2", "w3"], 0.3)])
            .unwrap()
    }

    fn m2(f: &Frame) -> MassFunction {
        MassFunction::from_labels(f, &[(&["w2"], 0.1), (&["w1", "w2"], 0.6), (&["w1", "w2", "w3"], 0.3)])
            .unwrap()
    }

    #[test]
    fn construction_validates() {
        let f = omega();
        assert_eq!(m1(&f).len(), 3);
        assert_eq!(MassFunction::from_labels(&f, &[(&["w1", "w2", "w3"], 1.0)]).unwrap(), MassFunction::vacuous(&f));
        let err = MassFunction::from_labels(&f, &[(&["w1"], 0.5), (&["w2"], 0.6)]).unwrap_err();
        assert!(matches!(err, Error::SumNotOne { sum } if (sum - 1.1).abs() < 1e-12));
        let err = MassFunction::from_labels(&f, &[(&["w1"], 1.5), (&["w2"], -0.5)]).unwrap_err();
        assert!(matches!(err, Error::MassOutOfRange { .. }));
        let err = MassFunction::from_labels(&f, &[(&["w1"], 1.0), (&["w2"], -0.0001)]).unwrap_err();
        assert!(matches!(err, Error::NegativeMass { .. }));
        let err = MassFunction::from_labels(&f, &[(&["w1"], 0.5), (&["w1"], 0.5)]).unwrap_err();
        assert!(matches!(err, Error::DuplicateFocalSet(_)));
        let g = Frame::new(["a", "b"]).unwrap();
        let err = MassFunction::new(&f, [(g.full_set(), 1.0)]).unwrap_err();
        assert_eq!(err, Error::ForeignFocalSet);
    }

    #[test]
    fn zero_entries_are_pruned() {
        let f = omega();
        let m = MassFunction::from_labels(&f, &[(&["w1"], 0.0), (&["w2"], 1.0)]).unwrap();
        assert_eq!(m.len(), 1);
    }

    #[test]
    fn plausibility_and_credibility() {
        let f = omega();
        let s = |l: &[&str]| f.set(l).unwrap();
        let a = m1(&f);
        let b = m2(&f);
        assert!((a.pl(&s(&["w2"])).unwrap() - 0.8).abs() < 1e-12);
        assert!((a.pl(&f.full_set()).unwrap() - 1.0).abs() < 1e-12);
        assert!((b.pl(&s(&["w3"])).unwrap() - 0.3).abs() < 1e-12);
        assert!((a.bel(&s(&["w1", "w2"])).unwrap() - 0.7).abs() < 1e-12);
        assert_eq!(a.bel(&f.empty_set()).unwrap(), 0.0);
        assert!((b.bel(&s(&["w2"])).unwrap() - 0.1).abs() < 1e-12);
        let g = Frame::new(["x"]).unwrap();
        assert_eq!(a.pl(&g.full_set()).unwrap_err(), Error::ForeignFocalSet);
    }

    #[test]
    fn commonality_values() {
        let f = omega();
        let q = MassFunction::vacuous(&f).commonality().unwrap();
        assert!(q.values().iter().all(|&v| v == 1.0));
        let q = m1(&f).commonality().unwrap();
        let s = |l: &[&str]| f.set(l).unwrap();
        assert!((q.get(&s(&["w1"])).unwrap() - 1.0).abs() < 1e-12);
        assert!((q.get(&s(&["w2"])).unwrap() - 0.8).abs() < 1e-12);
        assert!((q.get(&f.full_set()).unwrap() - 0.3).abs() < 1e-12);
        let q = MassFunction::empty(&f).commonality().unwrap();
        assert_eq!(q.values()[0], 1.0);
        assert!(q.values()[1..].iter().all(|&v| v == 0.0));
    }

    #[test]
    fn commonality_rejects_large_frames() {
        let f = Frame::new((0..21).map(|i| format!("a{i}"))).unwrap();
        let err = MassFunction::vacuous(&f).commonality().unwrap_err();
        assert_eq!(err, Error::FrameTooLarge { atoms: 21, max: 20 });
    }

    #[test]
    fn simple_support_weights() {
        let f = omega();
        let a = f.set(&["w1"]).unwrap();
        let m = MassFunction::simple_support(&a, 0.4).unwrap();
        let w = m.canonical_weights().unwrap();
        assert!((w.weight(&a).unwrap() - 0.4).abs() < 1e-12);
        for (set, v) in w.non_trivial() {
            if set != a {
                assert!((v - 1.0).abs() < 1e-12, "{set}: {v}");
            }
        }
        let w = MassFunction::vacuous(&f).canonical_weights().unwrap();
        assert_eq!(w.non_trivial().count(), 0);
    }

    #[test]
    fn weights_round_trip() {
        let f = omega();
        let m = m1(&f);
        let back = m.canonical_weights().unwrap().to_mass().unwrap();
        assert!(back.approx_eq(&m, 1e-12), "{back:?}");
        let mut d = crate::combination::combine_conjunctive(&m, &m2(&f)).unwrap();
        let back = d.disjunctive_weights().unwrap().to_mass().unwrap();
        assert!(back.approx_eq(&d, 1e-12));
        d = MassFunction::vacuous(&f);
        assert!(matches!(d.disjunctive_weights(), Err(Error::InvalidForBoldRule(_))));
    }

    #[test]
    fn dogmatic_has_no_weights() {
        let f = omega();
        let m = MassFunction::from_labels(&f, &[(&["w1"], 1.0)]).unwrap();
        assert_eq!(m.canonical_weights().unwrap_err(), Error::DogmaticMass);
    }

    #[test]
    fn from_weights_edge_cases() {
        let f = omega();
        let w = WeightFunction::new(&f, []).unwrap();
        assert_eq!(w.to_mass().unwrap(), MassFunction::vacuous(&f));
        let a = f.set(&["w2", "w3"]).unwrap();
        let w = WeightFunction::new(&f, [(a.clone(), 0.4)]).unwrap();
        let m = w.to_mass().unwrap();
        assert!(m.approx_eq(&MassFunction::simple_support(&a, 0.4).unwrap(), 1e-12));
        let err = WeightFunction::new(&f, [(a, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::NonPositiveWeight { .. }));
    }
}
