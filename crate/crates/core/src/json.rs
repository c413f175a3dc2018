//! JSON value forms.
//!
//! Mass function: `{"frame": ["w1","w2"], "focals": [{"set": ["w1"], "mass": 0.2}, ...]}`,
//! where `"set": []` is `∅`. Dataset: `{"frame": [...], "items": [<mass>, ...]}`;
//! items may omit `frame`. Product focal sets list label pairs:
//! `{"set": [["w1","I"], ["w1","P"]], "mass": 0.01}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimation::MassDataset;
use crate::frame::Frame;
use crate::mass::MassFunction;
use crate::product::ProductMass;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FocalDoc {
    pub set: Vec<String>,
    pub mass: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame: Option<Vec<String>>,
    pub focals: Vec<FocalDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetDoc {
    pub frame: Vec<String>,
    pub items: Vec<MassDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductFocalDoc {
    pub set: Vec<[String; 2]>,
    pub mass: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductMassDoc {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub focals: Vec<ProductFocalDoc>,
}

impl MassDoc {
    pub fn from_mass(m: &MassFunction) -> Self {
        MassDoc {
            frame: Some(m.frame().labels().to_vec()),
            focals: m.focals().map(|(set, mass)| FocalDoc { set: set.labels(), mass }).collect(),
        }
    }

    /// Builds the mass function on `frame`, or on the document's own frame.
    pub fn to_mass(&self, frame: Option<&Frame>) -> Result<MassFunction> {
        let own = self.frame.as_ref().map(|labels| Frame::new(labels.iter().cloned())).transpose()?;
        let frame = match (own, frame) {
            (Some(own), Some(given)) if own != *given => {
                return Err(Error::Parse("frame: differs from the enclosing frame".into()))
            }
            (Some(own), _) => own,
            (None, Some(given)) => given.clone(),
            (None, None) => return Err(Error::Parse("frame: missing".into())),
        };
        let mut entries = Vec::with_capacity(self.focals.len());
        for (i, focal) in self.focals.iter().enumerate() {
            let set = frame.set(&focal.set).map_err(|e| Error::Parse(format!("focals[{i}].set: {e}")))?;
            entries.push((set, focal.mass));
        }
        MassFunction::new(&frame, entries).map_err(|e| match e {
            Error::SumNotOne { .. } => Error::Parse(format!("focals: {e}")),
            Error::NegativeMass { .. } | Error::MassOutOfRange { .. } | Error::DuplicateFocalSet(_) => {
                Error::Parse(format!("focals.mass: {e}"))
            }
            other => other,
        })
    }
}

impl DatasetDoc {
    pub fn from_dataset(ds: &MassDataset) -> Self {
        DatasetDoc {
            frame: ds.frame().labels().to_vec(),
            items: ds.items().iter().map(|m| MassDoc { frame: None, ..MassDoc::from_mass(m) }).collect(),
        }
    }

    pub fn to_dataset(&self) -> Result<MassDataset> {
        let frame = Frame::new(self.frame.iter().cloned()).map_err(|e| Error::Parse(format!("frame: {e}")))?;
        let items = self
            .items
            .iter()
            .enumerate()
            .map(|(i, doc)| doc.to_mass(Some(&frame)).map_err(|e| Error::Parse(format!("items[{i}].{e}"))))
            .collect::<Result<Vec<_>>>()?;
        MassDataset::new(&frame, items)
    }
}

impl ProductMassDoc {
    pub fn from_product(m: &ProductMass) -> Self {
        ProductMassDoc {
            left: m.frame().left().labels().to_vec(),
            right: m.frame().right().labels().to_vec(),
            focals: m
                .focals()
                .map(|(set, mass)| ProductFocalDoc { set: set.pairs().into_iter().map(|(l, r)| [l, r]).collect(), mass })
                .collect(),
        }
    }
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(format!("invalid JSON: {e}"))
}

pub fn mass_from_str(s: &str) -> Result<MassFunction> {
    let doc: MassDoc = serde_json::from_str(s).map_err(parse_err)?;
    doc.to_mass(None)
}

pub fn mass_to_string(m: &MassFunction) -> String {
    serde_json::to_string_pretty(&MassDoc::from_mass(m)).expect("mass document serializes")
}

pub fn dataset_from_str(s: &str) -> Result<MassDataset> {
    let doc: DatasetDoc = serde_json::from_str(s).map_err(parse_err)?;
    doc.to_dataset()
}

pub fn dataset_to_string(ds: &MassDataset) -> String {
    serde_json::to_string_pretty(&DatasetDoc::from_dataset(ds)).expect("dataset document serializes")
}

pub fn product_mass_to_string(m: &ProductMass) -> String {
    serde_json::to_string_pretty(&ProductMassDoc::from_product(m)).expect("product document serializes")
}
