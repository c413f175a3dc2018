//! Frames of discernment and their subsets.
//!
//! A [`Frame`] is an ordered list of atom labels. Subsets are stored as `u64`
//! bitmasks (atom `i` is bit `i`), so a frame holds at most 63 atoms. Dense
//! powerset transforms are further limited to [`MAX_DENSE_ATOMS`].

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Upper bound on atoms for sparse (bitmask) operations.
pub const MAX_ATOMS: usize = 63;
/// Upper bound on atoms for operations that materialize the whole powerset.
pub const MAX_DENSE_ATOMS: usize = 20;

/// An ordered set of named, mutually exclusive hypotheses.
///
/// Cloning is cheap; two frames are equal when their labels are equal in order.
#[derive(Clone)]
pub struct Frame(Arc<[String]>);

impl Frame {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyFrame);
        }
        if labels.len() > MAX_ATOMS {
            return Err(Error::FrameTooLarge { atoms: labels.len(), max: MAX_ATOMS });
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel(i));
            }
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Frame(labels.into()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.iter().position(|l| l == label)
    }

    /// Bitmask of Ω.
    pub(crate) fn full_bits(&self) -> u64 {
        (1u64 << self.len()) - 1
    }

    pub(crate) fn ensure_dense(&self) -> Result<()> {
        self.ensure_at_most(MAX_DENSE_ATOMS)
    }

    pub(crate) fn ensure_at_most(&self, max: usize) -> Result<()> {
        if self.len() > max {
            Err(Error::FrameTooLarge { atoms: self.len(), max })
        } else {
            Ok(())
        }
    }

    pub fn empty_set(&self) -> FocalSet {
        FocalSet { frame: self.clone(), bits: 0 }
    }

    pub fn full_set(&self) -> FocalSet {
        FocalSet { frame: self.clone(), bits: self.full_bits() }
    }

    pub fn atom(&self, index: usize) -> Option<FocalSet> {
        (index < self.len()).then(|| FocalSet { frame: self.clone(), bits: 1 << index })
    }

    /// The subset made of the given labels. Order and repetition are irrelevant.
    pub fn set<S: AsRef<str>>(&self, labels: &[S]) -> Result<FocalSet> {
        let mut bits = 0u64;
        for label in labels {
            let label = label.as_ref();
            let i = self.index_of(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            bits |= 1 << i;
        }
        Ok(FocalSet { frame: self.clone(), bits })
    }

    pub(crate) fn focal(&self, bits: u64) -> FocalSet {
        debug_assert_eq!(bits & !self.full_bits(), 0);
        FocalSet { frame: self.clone(), bits }
    }

    /// Labels of the atoms in `bits`, in frame order.
    pub(crate) fn labels_of(&self, bits: u64) -> Vec<String> {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, l)| l.clone())
            .collect()
    }

    /// Human-readable form of a subset: `∅`, `Ω` or `{a,b}`.
    pub(crate) fn display_bits(&self, bits: u64) -> String {
        if bits == 0 {
            "∅".to_string()
        } else if bits == self.full_bits() && self.len() > 1 {
            "Ω".to_string()
        } else {
            format!("{{{}}}", self.labels_of(bits).join(","))
        }
    }
}

impl PartialEq for Frame {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Frame {}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// A subset of a frame's atoms.
#[derive(Clone, PartialEq, Eq)]
pub struct FocalSet {
    frame: Frame,
    bits: u64,
}

impl FocalSet {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == self.frame.full_bits()
    }

    pub fn is_atom(&self) -> bool {
        self.len() == 1
    }

    pub fn contains(&self, label: &str) -> bool {
        self.frame.index_of(label).is_some_and(|i| self.bits >> i & 1 == 1)
    }

    /// Canonical external form: member labels in frame order.
    pub fn labels(&self) -> Vec<String> {
        self.frame.labels_of(self.bits)
    }

    pub fn complement(&self) -> FocalSet {
        self.frame.focal(!self.bits & self.frame.full_bits())
    }

    pub fn intersection(&self, other: &FocalSet) -> Result<FocalSet> {
        self.same_frame(other)?;
        Ok(self.frame.focal(self.bits & other.bits))
    }

    pub fn union(&self, other: &FocalSet) -> Result<FocalSet> {
        self.same_frame(other)?;
        Ok(self.frame.focal(self.bits | other.bits))
    }

    pub fn is_subset(&self, other: &FocalSet) -> Result<bool> {
        self.same_frame(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    fn same_frame(&self, other: &FocalSet) -> Result<()> {
        if self.frame == other.frame {
            Ok(())
        } else {
            Err(Error::ForeignFocalSet)
        }
    }
}

impl fmt::Display for FocalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&self.frame.display_bits(self.bits))
    }
}

impl fmt::Debug for FocalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FocalSet({self})")
    }
}

/// Iterates the set bits of `bits` as atom indices.
pub(crate) fn atoms_of(mut bits: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if bits == 0 {
            None
        } else {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omega() -> Frame {
        Frame::new(["w1", "w2", "w3"]).unwrap()
    }

    #[test]
    fn rejects_bad_labels() {
        assert_eq!(Frame::new(Vec::<String>::new()).unwrap_err(), Error::EmptyFrame);
        assert_eq!(Frame::new(["a", ""]).unwrap_err(), Error::EmptyLabel(1));
        assert_eq!(Frame::new(["a", "b", "a"]).unwrap_err(), Error::DuplicateLabel("a".into()));
        let many: Vec<String> = (0..64).map(|i| format!("x{i}")).collect();
        assert!(matches!(Frame::new(many), Err(Error::FrameTooLarge { atoms: 64, .. })));
    }

    #[test]
    fn set_is_order_insensitive() {
        let f = omega();
        let a = f.set(&["w2", "w1"]).unwrap();
        assert_eq!(a.labels(), vec!["w1", "w2"]);
        assert_eq!(a.bits(), 0b011);
        assert_eq!(a.to_string(), "{w1,w2}");
        assert_eq!(f.full_set().to_string(), "Ω");
        assert_eq!(f.empty_set().to_string(), "∅");
        assert_eq!(f.set(&["w9"]).unwrap_err(), Error::UnknownLabel("w9".into()));
    }

    #[test]
    fn set_algebra() {
        let f = omega();
        let a = f.set(&["w1", "w2"]).unwrap();
        let b = f.set(&["w2", "w3"]).unwrap();
        assert_eq!(a.intersection(&b).unwrap().labels(), vec!["w2"]);
        assert!(a.union(&b).unwrap().is_full());
        assert_eq!(a.complement().labels(), vec!["w3"]);
        assert!(f.atom(1).unwrap().is_subset(&a).unwrap());
        assert!(f.atom(3).is_none());
    }

    #[test]
    fn cross_frame_operations_fail() {
        let f = omega();
        let g = Frame::new(["a", "b"]).unwrap();
        let err = f.full_set().intersection(&g.full_set()).unwrap_err();
        assert_eq!(err, Error::ForeignFocalSet);
        // equal labels count as the same frame
        let f2 = Frame::new(["w1", "w2", "w3"]).unwrap();
        assert!(f.full_set().union(&f2.empty_set()).is_ok());
    }

    #[test]
    fn atoms_iterator() {
        assert_eq!(atoms_of(0b10110).collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(atoms_of(0).count(), 0);
    }
}
