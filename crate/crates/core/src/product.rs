//! Mass functions on a product frame `Ω × C`.
//!
//! Pair-atoms are laid out row-major: `(ωᵢ, cⱼ)` is bit `i·|C| + j`. Product
//! sets are arbitrary subsets of pair-atoms, since combining ballooned masses
//! produces focal sets that are not cylinders.

use std::collections::BTreeMap;
use std::fmt;

use crate::combination;
use crate::error::{Error, Result};
use crate::frame::{atoms_of, FocalSet, Frame, MAX_ATOMS};
use crate::mass::MassFunction;

/// `Ω × C` with a flattened joint frame of pair-atoms.
#[derive(Clone, PartialEq, Eq)]
pub struct ProductFrame {
    left: Frame,
    right: Frame,
    joint: Frame,
}

impl ProductFrame {
    pub fn new(left: &Frame, right: &Frame) -> Result<Self> {
        let atoms = left.len() * right.len();
        if atoms > MAX_ATOMS {
            return Err(Error::FrameTooLarge { atoms, max: MAX_ATOMS });
        }
        let labels = left
            .labels()
            .iter()
            .flat_map(|l| right.labels().iter().map(move |r| format!("({l},{r})")));
        let joint = Frame::new(labels)?;
        Ok(Self { left: left.clone(), right: right.clone(), joint })
    }

    pub fn left(&self) -> &Frame {
        &self.left
    }

    pub fn right(&self) -> &Frame {
        &self.right
    }

    /// The frame whose atoms are the pairs, in row-major order.
    pub fn joint(&self) -> &Frame {
        &self.joint
    }

    fn width(&self) -> usize {
        self.right.len()
    }

    fn row_mask(&self) -> u64 {
        (1u64 << self.width()) - 1
    }

    fn cylinder_bits(&self, rows: u64, cols: u64) -> u64 {
        atoms_of(rows).fold(0, |acc, i| acc | cols << (i * self.width()))
    }

    /// Right-side columns present in row `i`.
    fn row(&self, bits: u64, i: usize) -> u64 {
        bits >> (i * self.width()) & self.row_mask()
    }

    fn project_left(&self, bits: u64) -> u64 {
        (0..self.left.len()).filter(|&i| self.row(bits, i) != 0).fold(0, |acc, i| acc | 1 << i)
    }

    fn project_right(&self, bits: u64) -> u64 {
        (0..self.left.len()).fold(0, |acc, i| acc | self.row(bits, i))
    }

    pub fn empty_set(&self) -> ProductSet {
        self.set_from_bits(0)
    }

    pub fn full_set(&self) -> ProductSet {
        self.set_from_bits(self.joint.full_bits())
    }

    /// The cylinder `A × B`.
    pub fn cylinder(&self, left: &FocalSet, right: &FocalSet) -> Result<ProductSet> {
        if left.frame() != &self.left || right.frame() != &self.right {
            return Err(Error::ForeignFocalSet);
        }
        Ok(self.set_from_bits(self.cylinder_bits(left.bits(), right.bits())))
    }

    /// A product set listed as `(left label, right label)` pairs.
    pub fn set_from_pairs<S: AsRef<str>>(&self, pairs: &[(S, S)]) -> Result<ProductSet> {
        let mut bits = 0u64;
        for (l, r) in pairs {
            let i = self.left.index_of(l.as_ref()).ok_or_else(|| Error::UnknownLabel(l.as_ref().into()))?;
            let j = self.right.index_of(r.as_ref()).ok_or_else(|| Error::UnknownLabel(r.as_ref().into()))?;
            bits |= 1 << (i * self.width() + j);
        }
        Ok(self.set_from_bits(bits))
    }

    pub(crate) fn set_from_bits(&self, bits: u64) -> ProductSet {
        ProductSet { frame: self.clone(), bits }
    }

    fn display_bits(&self, bits: u64) -> String {
        if bits == 0 {
            return "∅".into();
        }
        // group right atoms that share the same row set
        let mut groups: Vec<(u64, u64)> = Vec::new();
        for j in 0..self.width() {
            let rows = (0..self.left.len())
                .filter(|&i| bits >> (i * self.width() + j) & 1 == 1)
                .fold(0u64, |acc, i| acc | 1 << i);
            if rows == 0 {
                continue;
            }
            match groups.iter_mut().find(|(r, _)| *r == rows) {
                Some((_, cols)) => *cols |= 1 << j,
                None => groups.push((rows, 1 << j)),
            }
        }
        let part = |rows: u64, cols: u64| {
            let l = match self.left.labels_of(rows) {
                _ if rows == self.left.full_bits() && self.left.len() > 1 => "Ω".to_string(),
                labels if labels.len() == 1 => labels[0].clone(),
                labels => format!("{{{}}}", labels.join(",")),
            };
            let r = match self.right.labels_of(cols) {
                labels if labels.len() == 1 => labels[0].clone(),
                labels => format!("{{{}}}", labels.join(",")),
            };
            format!("{l}×{r}")
        };
        if groups.len() == 1 {
            let (rows, cols) = groups[0];
            return part(rows, cols);
        }
        groups.iter().map(|&(r, c)| format!("({})", part(r, c))).collect::<Vec<_>>().join(" ∪ ")
    }
}

impl fmt::Debug for ProductFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} × {:?}", self.left, self.right)
    }
}

/// A subset of the pair-atoms of a [`ProductFrame`].
#[derive(Clone, PartialEq, Eq)]
pub struct ProductSet {
    frame: ProductFrame,
    bits: u64,
}

impl ProductSet {
    pub fn frame(&self) -> &ProductFrame {
        &self.frame
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Member pairs in row-major order.
    pub fn pairs(&self) -> Vec<(String, String)> {
        let w = self.frame.width();
        atoms_of(self.bits)
            .map(|k| (self.frame.left.labels()[k / w].clone(), self.frame.right.labels()[k % w].clone()))
            .collect()
    }

    /// `Proj(Y ↓ Ω)`.
    pub fn project_left(&self) -> FocalSet {
        self.frame.left.focal(self.frame.project_left(self.bits))
    }

    pub fn project_right(&self) -> FocalSet {
        self.frame.right.focal(self.frame.project_right(self.bits))
    }

    /// `Some((A, B))` when this set is the cylinder `A × B`.
    pub fn as_cylinder(&self) -> Option<(FocalSet, FocalSet)> {
        let a = self.frame.project_left(self.bits);
        let b = self.frame.project_right(self.bits);
        (self.frame.cylinder_bits(a, b) == self.bits)
            .then(|| (self.frame.left.focal(a), self.frame.right.focal(b)))
    }
}

impl fmt::Display for ProductSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&self.frame.display_bits(self.bits))
    }
}

impl fmt::Debug for ProductSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProductSet({self})")
    }
}

/// A mass function on a product frame.
#[derive(Clone, PartialEq)]
pub struct ProductMass {
    frame: ProductFrame,
    mass: MassFunction,
}

impl ProductMass {
    /// Wraps a mass function defined on `pf.joint()`.
    pub fn new(frame: &ProductFrame, mass: MassFunction) -> Result<Self> {
        if mass.frame() != frame.joint() {
            return Err(Error::FrameMismatch);
        }
        Ok(Self { frame: frame.clone(), mass })
    }

    pub fn from_sets<I>(frame: &ProductFrame, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ProductSet, f64)>,
    {
        let joint = frame.joint();
        let mut sets = Vec::new();
        for (set, v) in entries {
            if set.frame != *frame {
                return Err(Error::ForeignFocalSet);
            }
            sets.push((joint.focal(set.bits), v));
        }
        Ok(Self { frame: frame.clone(), mass: MassFunction::new(joint, sets)? })
    }

    fn from_map(frame: &ProductFrame, map: BTreeMap<u64, f64>) -> Self {
        Self { frame: frame.clone(), mass: MassFunction::from_map(frame.joint().clone(), map) }
    }

    pub fn frame(&self) -> &ProductFrame {
        &self.frame
    }

    /// The underlying mass function on the joint frame.
    pub fn as_mass(&self) -> &MassFunction {
        &self.mass
    }

    pub fn len(&self) -> usize {
        self.mass.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mass.is_empty()
    }

    pub fn focals(&self) -> impl Iterator<Item = (ProductSet, f64)> + '_ {
        self.mass.raw().iter().map(|&(b, v)| (self.frame.set_from_bits(b), v))
    }

    pub fn mass(&self, set: &ProductSet) -> Result<f64> {
        if set.frame != self.frame {
            return Err(Error::ForeignFocalSet);
        }
        Ok(self.mass.mass_bits(set.bits))
    }

    pub fn total(&self) -> f64 {
        self.mass.total()
    }
}

impl fmt::Debug for ProductMass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut map = f.debug_map();
        for &(b, v) in self.mass.raw() {
            map.entry(&self.frame.display_bits(b), &v);
        }
        map.finish()
    }
}

/// Conjunctive combination on the product frame.
pub fn combine_conjunctive(a: &ProductMass, b: &ProductMass) -> Result<ProductMass> {
    if a.frame != b.frame {
        return Err(Error::FrameMismatch);
    }
    let mass = combination::combine_conjunctive(&a.mass, &b.mass)?;
    Ok(ProductMass { frame: a.frame.clone(), mass })
}

/// Vacuous extension `m^{C↑Ω×C}`: each focal `X ⊆ C` becomes `Ω × X`.
pub fn vacuous_extension(m: &MassFunction, pf: &ProductFrame) -> Result<ProductMass> {
    if m.frame() != pf.right() {
        return Err(Error::FrameMismatch);
    }
    let full = pf.left.full_bits();
    let map = m.raw().iter().map(|&(x, v)| (pf.cylinder_bits(full, x), v)).collect();
    Ok(ProductMass::from_map(pf, map))
}

/// Ω-cylinder extension: each focal `A ⊆ Ω` becomes `A × C`.
pub fn cylinder_extension(m: &MassFunction, pf: &ProductFrame) -> Result<ProductMass> {
    if m.frame() != pf.left() {
        return Err(Error::FrameMismatch);
    }
    let full = pf.right.full_bits();
    let map = m.raw().iter().map(|&(a, v)| (pf.cylinder_bits(a, full), v)).collect();
    Ok(ProductMass::from_map(pf, map))
}

/// Ballooning (deconditioning) of `m[c]`: each focal `A ⊆ Ω` becomes
/// `(A × {c}) ∪ (Ω × (C ∖ {c}))`.
pub fn balloon(m: &MassFunction, pf: &ProductFrame, atom: &FocalSet) -> Result<ProductMass> {
    if m.frame() != pf.left() {
        return Err(Error::FrameMismatch);
    }
    if atom.frame() != pf.right() {
        return Err(Error::ForeignFocalSet);
    }
    if !atom.is_atom() {
        return Err(Error::NotAnAtom(atom.to_string()));
    }
    let c = atom.bits();
    let rest = pf.cylinder_bits(pf.left.full_bits(), pf.right.full_bits() & !c);
    let map = m.raw().iter().map(|&(a, v)| (pf.cylinder_bits(a, c) | rest, v)).collect();
    Ok(ProductMass::from_map(pf, map))
}

/// Marginalization onto Ω: each focal `Y` moves to `Proj(Y ↓ Ω)`.
pub fn marginalize(m: &ProductMass) -> MassFunction {
    let pf = &m.frame;
    let mut map = BTreeMap::new();
    for &(y, v) in m.mass.raw() {
        *map.entry(pf.project_left(y)).or_insert(0.0) += v;
    }
    MassFunction::from_map(pf.left.clone(), map)
}
