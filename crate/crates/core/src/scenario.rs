//! Self-contained fusion scenarios read from JSON.
//!
//! ```json
//! {
//!   "frame": ["w1", "w2", "w3"],
//!   "masses": {
//!     "m1": [{"set": ["w1"], "mass": 0.2}, {"set": ["w1", "w2", "w3"], "mass": 0.8}],
//!     "m2": [{"set": ["w2"], "mass": 0.4}, {"set": ["w1", "w2", "w3"], "mass": 0.6}]
//!   },
//!   "independence": [{"source": "m1", "reference": "m2", "alpha": 0.9, "beta": 0.5, "gamma": 0.5}],
//!   "operation": {"kind": "fuse", "sources": ["m1", "m2"]},
//!   "output": {"conflict_threshold": 0.5}
//! }
//! ```
//!
//! Operations: `combine` (with `rule` and `sources`), `discount_independence`
//! (with `source` and `reference`) and `fuse` (two sources; the reverse
//! assessment is optional).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::combination::{combine_all, Rule, WeightOp};
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::independence::{conflict_alert, discount_by_params, fuse_with_independence, ConflictAlert, IndependenceParams};
use crate::json::{FocalDoc, MassDoc};
use crate::mass::MassFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleName {
    Conjunctive,
    Disjunctive,
    Cautious,
    Bold,
}

impl From<RuleName> for Rule {
    fn from(r: RuleName) -> Rule {
        match r {
            RuleName::Conjunctive => Rule::Conjunctive,
            RuleName::Disjunctive => Rule::Disjunctive,
            RuleName::Cautious => Rule::Cautious(WeightOp::Min),
            RuleName::Bold => Rule::Bold(WeightOp::Min),
        }
    }
}

/// How much `source` may be taken as independent of `reference`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Assessment {
    pub source: String,
    pub reference: String,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Operation {
    Combine { rule: RuleName, sources: Vec<String> },
    DiscountIndependence { source: String, reference: String },
    Fuse { sources: [String; 2] },
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputOptions {
    #[serde(default)]
    pub conflict_threshold: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub frame: Vec<String>,
    pub masses: BTreeMap<String, Vec<FocalDoc>>,
    #[serde(default)]
    pub independence: Vec<Assessment>,
    pub operation: Operation,
    #[serde(default)]
    pub output: OutputOptions,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioOutcome {
    pub result: MassFunction,
    pub alert: Option<ConflictAlert>,
}

impl Scenario {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("invalid scenario: {e}")))
    }

    fn masses(&self) -> Result<(Frame, BTreeMap<&str, MassFunction>)> {
        let frame = Frame::new(self.frame.iter().cloned()).map_err(|e| Error::Parse(format!("frame: {e}")))?;
        let mut out = BTreeMap::new();
        for (name, focals) in &self.masses {
            let doc = MassDoc { frame: None, focals: focals.clone() };
            let m = doc.to_mass(Some(&frame)).map_err(|e| Error::Parse(format!("masses.{name}.{e}")))?;
            out.insert(name.as_str(), m);
        }
        Ok((frame, out))
    }

    fn assessment(&self, source: &str, reference: &str) -> Result<Option<IndependenceParams>> {
        let mut found = self.independence.iter().filter(|a| a.source == source && a.reference == reference);
        let Some(a) = found.next() else { return Ok(None) };
        if found.next().is_some() {
            return Err(Error::Parse(format!("independence: `{source}` given twice against `{reference}`")));
        }
        IndependenceParams::new(a.alpha, a.beta, a.gamma)
            .map(Some)
            .map_err(|e| Error::Parse(format!("independence[{source}→{reference}]: {e}")))
    }

    /// Checks names and parameter ranges without running the operation.
    pub fn validate(&self) -> Result<()> {
        let (_, masses) = self.masses()?;
        let known = |name: &str, field: &str| {
            if masses.contains_key(name) {
                Ok(())
            } else {
                Err(Error::Parse(format!("{field}: unknown mass `{name}`")))
            }
        };
        for a in &self.independence {
            known(&a.source, "independence.source")?;
            known(&a.reference, "independence.reference")?;
            self.assessment(&a.source, &a.reference)?;
        }
        match &self.operation {
            Operation::Combine { sources, .. } => {
                if sources.is_empty() {
                    return Err(Error::Parse("operation.sources: empty".into()));
                }
                sources.iter().try_for_each(|s| known(s, "operation.sources"))?;
            }
            Operation::DiscountIndependence { source, reference } => {
                known(source, "operation.source")?;
                known(reference, "operation.reference")?;
                if self.assessment(source, reference)?.is_none() {
                    return Err(Error::Parse(format!("independence: no assessment of `{source}` against `{reference}`")));
                }
            }
            Operation::Fuse { sources: [a, b] } => {
                known(a, "operation.sources")?;
                known(b, "operation.sources")?;
                if self.assessment(a, b)?.is_none() {
                    return Err(Error::Parse(format!("independence: no assessment of `{a}` against `{b}`")));
                }
            }
        }
        if let Some(t) = self.output.conflict_threshold {
            if !(0.0..=1.0).contains(&t) {
                return Err(Error::Parse(format!("output.conflict_threshold: {t} is outside [0, 1]")));
            }
        }
        Ok(())
    }

    pub fn run(&self) -> Result<ScenarioOutcome> {
        self.validate()?;
        let (_, masses) = self.masses()?;
        let result = match &self.operation {
            Operation::Combine { rule, sources } => combine_all((*rule).into(), sources.iter().map(|s| &masses[s.as_str()]))?,
            Operation::DiscountIndependence { source, reference } => {
                let p = self.assessment(source, reference)?.expect("validated");
                discount_by_params(&masses[source.as_str()], &p)?
            }
            Operation::Fuse { sources: [a, b] } => {
                let p12 = self.assessment(a, b)?.expect("validated");
                let p21 = self.assessment(b, a)?;
                fuse_with_independence(&masses[a.as_str()], &masses[b.as_str()], &p12, p21.as_ref())?
            }
        };
        let alert = self.output.conflict_threshold.and_then(|t| conflict_alert(&result, t));
        Ok(ScenarioOutcome { result, alert })
    }
}
