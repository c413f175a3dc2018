//! Grids over `(α, β, γ)` tracking the discounted mass on `∅` and `Ω`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::independence::{discount_by_params, IndependenceParams};
use crate::mass::MassFunction;
use crate::report::format_g6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Param {
    Alpha,
    Beta,
    Gamma,
}

impl Param {
    pub const ALL: [Param; 3] = [Param::Alpha, Param::Beta, Param::Gamma];

    pub fn name(self) -> &'static str {
        match self {
            Param::Alpha => "alpha",
            Param::Beta => "beta",
            Param::Gamma => "gamma",
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "alpha" | "a" | "α" => Ok(Param::Alpha),
            "beta" | "b" | "β" => Ok(Param::Beta),
            "gamma" | "g" | "γ" => Ok(Param::Gamma),
            other => Err(Error::Parse(format!("unknown parameter `{other}` (expected alpha, beta or gamma)"))),
        }
    }
}

/// A dogmatic mass on three atoms with nothing on `∅`:
/// `{w1}: 0.2, {w1,w2}: 0.5, {w2,w3}: 0.3`.
pub fn default_base() -> MassFunction {
    let f = Frame::new(["w1", "w2", "w3"]).expect("static labels");
    MassFunction::from_labels(&f, &[(&["w1"], 0.2), (&["w1", "w2"], 0.5), (&["w2", "w3"], 0.3)])
        .expect("static mass")
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    fixed: Vec<(Param, f64)>,
    varying: Vec<(Param, usize)>,
    base: MassFunction,
}

impl SweepSpec {
    /// Every parameter must appear exactly once, fixed or varying. A varying
    /// parameter with `s` steps takes the values `i / (s - 1)`; the first
    /// varying parameter is the outermost loop.
    pub fn new(fixed: Vec<(Param, f64)>, varying: Vec<(Param, usize)>, base: MassFunction) -> Result<Self> {
        let mut seen: Vec<Param> = fixed.iter().map(|p| p.0).chain(varying.iter().map(|p| p.0)).collect();
        seen.sort();
        for p in Param::ALL {
            match seen.iter().filter(|&&q| q == p).count() {
                0 => return Err(Error::Parse(format!("sweep: {p} is neither fixed nor varying"))),
                1 => {}
                _ => return Err(Error::Parse(format!("sweep: {p} is given more than once"))),
            }
        }
        for &(p, v) in &fixed {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::OutOfRange { name: p.name(), value: v });
            }
        }
        for &(p, steps) in &varying {
            if steps < 2 {
                return Err(Error::Parse(format!("sweep: {p} needs at least 2 steps, got {steps}")));
            }
        }
        Ok(Self { fixed, varying, base })
    }

    pub fn base(&self) -> &MassFunction {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.varying.iter().map(|v| v.1).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Parameter triples in grid order.
    pub fn points(&self) -> Vec<IndependenceParams> {
        let mut out = Vec::with_capacity(self.len());
        let mut index = vec![0usize; self.varying.len()];
        loop {
            let mut p = IndependenceParams { alpha: 0.0, beta: 0.0, gamma: 0.0 };
            let assignments = self
                .fixed
                .iter()
                .copied()
                .chain(self.varying.iter().zip(&index).map(|(&(q, s), &i)| (q, i as f64 / (s - 1) as f64)));
            for (q, v) in assignments {
                match q {
                    Param::Alpha => p.alpha = v,
                    Param::Beta => p.beta = v,
                    Param::Gamma => p.gamma = v,
                }
            }
            out.push(p);
            let mut axis = self.varying.len();
            loop {
                if axis == 0 {
                    return out;
                }
                axis -= 1;
                index[axis] += 1;
                if index[axis] < self.varying[axis].1 {
                    break;
                }
                index[axis] = 0;
            }
        }
    }

    pub fn run(&self) -> Result<Sweep> {
        let rows = self
            .points()
            .into_iter()
            .map(|params| Ok(SweepRow { params, mass: discount_by_params(&self.base, &params)? }))
            .collect::<Result<_>>()?;
        Ok(Sweep { rows })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub params: IndependenceParams,
    pub mass: MassFunction,
}

impl SweepRow {
    pub fn m_empty(&self) -> f64 {
        self.mass.conflict()
    }

    pub fn m_omega(&self) -> f64 {
        self.mass.ignorance()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    rows: Vec<SweepRow>,
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Sweep {
    pub fn rows(&self) -> &[SweepRow] {
        &self.rows
    }

    /// Header `alpha,beta,gamma,m_empty,m_omega`. With `full`, one more
    /// column per remaining subset of the frame, labelled like `{w1,w2}`.
    pub fn to_csv(&self, full: bool) -> Result<String> {
        let mut out = String::from("alpha,beta,gamma,m_empty,m_omega");
        let Some(first) = self.rows.first() else {
            out.push('\n');
            return Ok(out);
        };
        let frame = first.mass.frame().clone();
        let subsets: Vec<u64> = if full {
            frame.ensure_at_most(10)?;
            (1..frame.full_bits()).collect()
        } else {
            Vec::new()
        };
        for &b in &subsets {
            out.push(',');
            out.push_str(&csv_field(&frame.focal(b).to_string()));
        }
        out.push('\n');
        for row in &self.rows {
            let p = row.params;
            let mut cells = vec![p.alpha, p.beta, p.gamma, row.m_empty(), row.m_omega()];
            cells.extend(subsets.iter().map(|&b| row.mass.mass_bits(b)));
            let line: Vec<String> = cells.into_iter().map(format_g6).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        Ok(out)
    }
}
