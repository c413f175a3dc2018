//! Belief functions on finite frames, with discounting driven by how much two
//! sources can be trusted to be independent.
//!
//! Subsets of a frame are bitmasks, so frames hold at most 63 atoms. Mass
//! functions store only their focal sets; transforms that need every subset
//! (commonality, canonical weights) are limited to 20 atoms.
//!
//! ```
//! use bfi::{Frame, MassFunction, combination};
//!
//! let f = Frame::new(["w1", "w2", "w3"]).unwrap();
//! let m1 = MassFunction::from_labels(&f, &[(&["w1"], 0.2), (&["w1", "w2"], 0.5), (&["w1", "w2", "w3"], 0.3)]).unwrap();
//! let m2 = MassFunction::from_labels(&f, &[(&["w2"], 0.1), (&["w1", "w2"], 0.6), (&["w1", "w2", "w3"], 0.3)]).unwrap();
//! let m = combination::combine_conjunctive(&m1, &m2).unwrap();
//! assert!((m.conflict() - 0.02).abs() < 1e-12);
//! ```

pub mod cli;
pub mod combination;
pub mod discounting;
pub mod error;
pub mod estimation;
pub mod frame;
pub mod independence;
pub mod json;
pub mod mass;
pub mod product;
pub mod report;
pub mod repro;
pub mod scenario;
pub mod sweep;
pub mod synthetic;
mod transform;

pub use combination::{Rule, WeightOp};
pub use error::{Error, Result};
pub use estimation::{EstimationConfig, IndependenceEstimate, MassDataset};
pub use frame::{FocalSet, Frame};
pub use independence::{IndependenceMass, IndependenceParams};
pub use mass::{MassFunction, WeightFunction};
pub use product::{ProductFrame, ProductMass, ProductSet};
