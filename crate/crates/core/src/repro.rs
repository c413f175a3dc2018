//! Reproduction of the reference tables for the worked example.
//!
//! Each table is an embedded JSON fixture holding the input masses, the
//! independence settings and, per cell, the printed value, an independently
//! computed oracle value and a status. Cells marked `match` must agree with
//! the printed value within [`PRINTED_TOLERANCE`]; flagged cells are checked
//! against the oracle and reported separately.

use std::collections::BTreeMap;
use std::fmt;

use serde::Deserialize;

use crate::combination::combine_conjunctive;
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::independence::{discount_by_independence_traced, IndependenceParams, IndependenceTrace};
use crate::json::{FocalDoc, MassDoc};
use crate::mass::MassFunction;
use crate::product::{ProductMass, ProductSet};
use crate::report::format_g6;

/// Printed values carry four decimals, rounded or truncated.
pub const PRINTED_TOLERANCE: f64 = 1e-3;
pub const ORACLE_TOLERANCE: f64 = 1e-9;

const FIXTURES: [&str; 3] = [
    include_str!("../fixtures/table1.json"),
    include_str!("../fixtures/table2.json"),
    include_str!("../fixtures/table3.json"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellStatus {
    Match,
    PaperTypoSuspected,
    PaperOmission,
}

impl fmt::Display for CellStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellStatus::Match => "match",
            CellStatus::PaperTypoSuspected => "typo suspected",
            CellStatus::PaperOmission => "omitted in print",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
enum Quantity {
    /// Combined mass on `Ω × 𝓘`.
    Joint,
    /// The ballooned `m[P̄]` factor on `Ω × 𝓘`.
    NegativeBalloon,
    /// Discounted source.
    Marginal,
    /// Discounted second source.
    OtherMarginal,
    /// Conjunctive combination of both discounted sources.
    Fused,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CellDoc {
    quantity: Quantity,
    #[serde(default)]
    set: Option<Vec<String>>,
    #[serde(default)]
    pairs: Option<Vec<[String; 2]>>,
    printed: Option<f64>,
    oracle: f64,
    status: CellStatus,
    #[serde(default)]
    note: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioDoc {
    name: String,
    source: String,
    params: [f64; 3],
    #[serde(default)]
    other: Option<String>,
    #[serde(default)]
    other_params: Option<[f64; 3]>,
    cells: Vec<CellDoc>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    table: u8,
    caption: String,
    frame: Vec<String>,
    masses: BTreeMap<String, Vec<FocalDoc>>,
    scenarios: Vec<ScenarioDoc>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellResult {
    pub scenario: String,
    pub quantity: &'static str,
    pub set: String,
    pub printed: Option<f64>,
    pub oracle: f64,
    pub computed: f64,
    pub status: CellStatus,
    pub note: Option<String>,
}

impl CellResult {
    pub fn agrees_with_oracle(&self) -> bool {
        (self.computed - self.oracle).abs() <= ORACLE_TOLERANCE
    }

    pub fn agrees_with_print(&self) -> Option<bool> {
        self.printed.map(|p| (self.computed - p).abs() <= PRINTED_TOLERANCE)
    }

    /// Unflagged cells must match the print; flagged ones the oracle.
    pub fn passed(&self) -> bool {
        match self.status {
            CellStatus::Match => self.agrees_with_print() == Some(true) && self.agrees_with_oracle(),
            _ => self.agrees_with_oracle(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReproReport {
    pub table: u8,
    pub caption: String,
    pub cells: Vec<CellResult>,
    /// Sum over every focal set of each combined mass on `Ω × 𝓘`, and over the printed cells only.
    pub joint_totals: Vec<(f64, f64)>,
}

impl ReproReport {
    pub fn flagged(&self) -> impl Iterator<Item = &CellResult> {
        self.cells.iter().filter(|c| c.status != CellStatus::Match)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CellResult> {
        self.cells.iter().filter(|c| !c.passed())
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

impl fmt::Display for ReproReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Table {}: {}", self.table, self.caption)?;
        let mut scenario = "";
        for c in self.cells.iter().filter(|c| c.status == CellStatus::Match) {
            if c.scenario != scenario {
                scenario = &c.scenario;
                writeln!(f, "  {scenario}")?;
            }
            let printed = c.printed.map(format_g6).unwrap_or_default();
            writeln!(
                f,
                "    {} {:<16} {:<24} printed {:<8} computed {:<10} deviation {:.1e}",
                if c.passed() { "PASS" } else { "FAIL" },
                c.quantity,
                c.set,
                printed,
                format_g6(c.computed),
                c.printed.map_or(0.0, |p| (c.computed - p).abs()),
            )?;
        }
        let flagged: Vec<_> = self.flagged().collect();
        if !flagged.is_empty() {
            writeln!(f, "  known discrepancies")?;
            for c in flagged {
                let printed = c.printed.map_or_else(|| "absent".to_string(), format_g6);
                write!(
                    f,
                    "    {} {} [{}] {} {}: printed {}, oracle {}, computed {}",
                    if c.passed() { "PASS" } else { "FAIL" },
                    c.status,
                    c.scenario,
                    c.quantity,
                    c.set,
                    printed,
                    format_g6(c.oracle),
                    format_g6(c.computed),
                )?;
                match &c.note {
                    Some(note) => writeln!(f, " ({note})")?,
                    None => writeln!(f)?,
                }
            }
        }
        for (total, printed) in &self.joint_totals {
            writeln!(
                f,
                "  total mass on Ω×𝓘: {} (printed cells sum to {})",
                format_g6(*total),
                format_g6(*printed)
            )?;
        }
        let failed = self.failures().count();
        writeln!(
            f,
            "{}: {} cells, {} flagged, {} failed",
            if failed == 0 { "PASS" } else { "FAIL" },
            self.cells.len(),
            self.flagged().count(),
            failed
        )
    }
}

fn quantity_name(q: Quantity) -> &'static str {
    match q {
        Quantity::Joint => "combined",
        Quantity::NegativeBalloon => "m[Pbar] balloon",
        Quantity::Marginal => "source 1",
        Quantity::OtherMarginal => "source 2",
        Quantity::Fused => "fused",
    }
}

fn params(p: [f64; 3]) -> Result<IndependenceParams> {
    IndependenceParams::new(p[0], p[1], p[2])
}

struct Computed {
    trace: IndependenceTrace,
    other: Option<MassFunction>,
    fused: Option<MassFunction>,
}

fn lookup<'a>(masses: &'a BTreeMap<String, MassFunction>, name: &str) -> Result<&'a MassFunction> {
    masses.get(name).ok_or_else(|| Error::Parse(format!("fixture: unknown mass `{name}`")))
}

fn joint_set(m: &ProductMass, pairs: &[[String; 2]]) -> Result<ProductSet> {
    let pairs: Vec<(&str, &str)> = pairs.iter().map(|[l, r]| (l.as_str(), r.as_str())).collect();
    m.frame().set_from_pairs(&pairs)
}

fn evaluate(table: &TableDoc) -> Result<ReproReport> {
    let frame = Frame::new(table.frame.iter().cloned())?;
    let masses = table
        .masses
        .iter()
        .map(|(name, focals)| {
            let doc = MassDoc { frame: None, focals: focals.clone() };
            Ok((name.clone(), doc.to_mass(Some(&frame))?))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    let mut cells = Vec::new();
    let mut joint_totals = Vec::new();
    for sc in &table.scenarios {
        let source = lookup(&masses, &sc.source)?;
        let trace = discount_by_independence_traced(source, &params(sc.params)?.to_mass()?)?;
        let other = match (&sc.other, sc.other_params) {
            (Some(name), Some(p)) => Some(crate::independence::discount_by_params(lookup(&masses, name)?, &params(p)?)?),
            (Some(name), None) => Some(lookup(&masses, name)?.clone()),
            (None, _) => None,
        };
        let fused = other.as_ref().map(|o| combine_conjunctive(&trace.marginal, o)).transpose()?;
        let computed = Computed { trace, other, fused };
        let mut printed_joint = None;
        for cell in &sc.cells {
            let (set, value) = match cell.quantity {
                Quantity::Joint | Quantity::NegativeBalloon => {
                    let m = if cell.quantity == Quantity::Joint {
                        &computed.trace.combined
                    } else {
                        &computed.trace.negative
                    };
                    let pairs = cell.pairs.as_ref().ok_or_else(|| Error::Parse("fixture: joint cell without pairs".into()))?;
                    let set = joint_set(m, pairs)?;
                    if cell.quantity == Quantity::Joint && cell.printed.is_some() {
                        *printed_joint.get_or_insert(0.0) += cell.printed.unwrap_or_default();
                    }
                    (set.to_string(), m.mass(&set)?)
                }
                q => {
                    let m = match q {
                        Quantity::Marginal => Some(&computed.trace.marginal),
                        Quantity::OtherMarginal => computed.other.as_ref(),
                        _ => computed.fused.as_ref(),
                    }
                    .ok_or_else(|| Error::Parse(format!("fixture: scenario `{}` has no second source", sc.name)))?;
                    let labels = cell.set.as_ref().ok_or_else(|| Error::Parse("fixture: cell without set".into()))?;
                    let set = frame.set(labels)?;
                    (set.to_string(), m.mass(&set)?)
                }
            };
            cells.push(CellResult {
                scenario: sc.name.clone(),
                quantity: quantity_name(cell.quantity),
                set,
                printed: cell.printed,
                oracle: cell.oracle,
                computed: value,
                status: cell.status,
                note: cell.note.clone(),
            });
        }
        if let Some(printed) = printed_joint {
            joint_totals.push((computed.trace.combined.total(), printed));
        }
    }
    Ok(ReproReport { table: table.table, caption: table.caption.clone(), cells, joint_totals })
}

/// Recomputes table 1, 2 or 3.
pub fn reproduce(table: u8) -> Result<ReproReport> {
    let text = match table {
        1..=3 => FIXTURES[table as usize - 1],
        _ => return Err(Error::OutOfRange { name: "table", value: table as f64 }),
    };
    let doc: TableDoc = serde_json::from_str(text).map_err(|e| Error::Parse(format!("fixture table{table}.json: {e}")))?;
    evaluate(&doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_tables_pass() {
        for t in 1..=3 {
            let r = reproduce(t).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn table_one_needs_the_omitted_focal_set() {
        let r = reproduce(1).unwrap();
        assert_eq!(r.cells.iter().filter(|c| c.status == CellStatus::Match).count(), 7);
        let (total, printed) = r.joint_totals[0];
        assert!((total - 1.0).abs() < 1e-12);
        assert!((printed - 0.985).abs() < 1e-3);
        let omitted = r.flagged().find(|c| c.status == CellStatus::PaperOmission).unwrap();
        assert!((omitted.computed - 0.015).abs() < 1e-12);
    }

    #[test]
    fn table_three_flags_the_typo() {
        let r = reproduce(3).unwrap();
        let typo: Vec<_> = r.flagged().collect();
        assert_eq!(typo.len(), 1);
        assert_eq!(typo[0].agrees_with_print(), Some(false));
        assert!(typo[0].passed());
    }

    #[test]
    fn unknown_table() {
        assert!(reproduce(4).is_err());
    }
}
