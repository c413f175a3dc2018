//! The `bfi` command line.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::combination::{combine_all, Rule, WeightOp};
use crate::discounting::{discount, discount_via_product_space};
use crate::error::Error;
use crate::estimation::{
    source_independence_mass, ConfidencePolicy, EstimationConfig, IndependenceEstimate, MassDataset, Orientation,
};
use crate::independence::{
    conflict_alert, discount_by_independence_closed_form, discount_by_independence_traced, fuse_with_independence,
    IndependenceParams,
};
use crate::json::{self as j, MassDoc, ProductMassDoc};
use crate::mass::MassFunction;
use crate::report::{format_g6, mass_table, product_table};
use crate::repro::reproduce;
use crate::scenario::Scenario;
use crate::sweep::{default_base, Param, SweepSpec};
use crate::synthetic::{generate_pair, seed_from_env, Relation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "bfi", version, about = "Belief-function combination and independence-aware discounting")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Output {
    /// Emit JSON instead of a text table.
    #[arg(long)]
    json: bool,
    /// Write the result to this file instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Combine two or more mass functions with one rule (left fold).
    Combine {
        #[arg(long, value_enum)]
        rule: RuleArg,
        /// How cautious and bold rules merge weights.
        #[arg(long, value_enum, default_value_t = OpArg::Min, alias = "cautious-op")]
        weight_op: OpArg,
        #[arg(required = true, num_args = 2.., value_name = "MASS")]
        files: Vec<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Classic reliability discounting.
    Discount {
        file: PathBuf,
        #[arg(long)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = DiscountMode::ClosedForm)]
        mode: DiscountMode,
        #[command(flatten)]
        output: Output,
    },
    /// Discounting by an (α, β, γ) independence assessment.
    DiscountIndependence {
        file: PathBuf,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        gamma: f64,
        #[arg(long, value_enum, default_value_t = IndependenceMode::Pipeline)]
        mode: IndependenceMode,
        /// Also print the combined mass on Ω×𝓘.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Discount one or both sources by independence, then combine conjunctively.
    Fuse {
        #[arg(num_args = 2, value_name = "MASS", required_unless_present = "scenario", conflicts_with = "scenario")]
        files: Vec<PathBuf>,
        /// Independence of the first source from the second, as `alpha,beta,gamma`.
        #[arg(long, value_name = "A,B,G", required_unless_present = "scenario")]
        p12: Option<String>,
        /// Independence of the second source from the first; without it the second source is used as is.
        #[arg(long, value_name = "A,B,G")]
        p21: Option<String>,
        /// Warn when the fused conflict mass reaches this value.
        #[arg(long)]
        conflict_threshold: Option<f64>,
        /// Run a JSON scenario instead.
        #[arg(long, value_name = "FILE", conflicts_with_all = ["p12", "p21"])]
        scenario: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Estimate how independent one source is from another from aligned datasets.
    EstimateIndependence {
        #[arg(num_args = 2, value_name = "DATASET", required_unless_present = "synthetic")]
        files: Vec<PathBuf>,
        /// Use a seeded synthetic pair (seed from BFI_SEED, default 42).
        #[arg(long, value_enum, conflicts_with = "files")]
        synthetic: Option<SyntheticArg>,
        /// Objects in the synthetic datasets.
        #[arg(long, default_value_t = 60)]
        items: usize,
        /// Atoms in the synthetic frame.
        #[arg(long, default_value_t = 3)]
        atoms: usize,
        /// Clusters per source; defaults to the frame size.
        #[arg(long)]
        k: Option<usize>,
        /// Constant cluster confidence instead of |Cl| / (|Cl| + 1).
        #[arg(long)]
        beta_conf: Option<f64>,
        #[arg(long, value_enum, default_value_t = OrientationArg::OverlapDependent)]
        independence_orientation: OrientationArg,
        #[command(flatten)]
        output: Output,
    },
    /// Recompute the reference tables and compare them with the printed values.
    Repro {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        table: Option<u8>,
    },
    /// Sweep (α, β, γ) over a grid and emit CSV.
    Sweep {
        /// Fixed parameter, e.g. `alpha=1`.
        #[arg(long, value_name = "PARAM=VALUE")]
        fix: Vec<String>,
        /// Varying parameter with its step count, e.g. `beta=21`.
        #[arg(long, value_name = "PARAM=STEPS")]
        vary: Vec<String>,
        /// Base mass; defaults to a dogmatic mass on three atoms.
        #[arg(long, value_name = "MASS")]
        base: Option<PathBuf>,
        /// Add one column per subset of the frame.
        #[arg(long)]
        full: bool,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RuleArg {
    Conjunctive,
    Disjunctive,
    Cautious,
    Bold,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OpArg {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DiscountMode {
    ClosedForm,
    ProductSpace,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum IndependenceMode {
    Pipeline,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SyntheticArg {
    Identical,
    Independent,
    Swapped,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrientationArg {
    #[value(alias = "eq9")]
    OverlapDependent,
    #[value(alias = "eq13")]
    OverlapIndependent,
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::input(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

struct Io<'a> {
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn emit(&mut self, out: Option<&Path>, text: &str) -> std::result::Result<(), Failure> {
        match out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Failure::input(format!("{}: cannot write: {e}", path.display()))),
            None => self.stdout.write_all(text.as_bytes()).map_err(|e| Failure::input(format!("stdout: {e}"))),
        }
    }

    fn warn(&mut self, message: &str) {
        let _ = writeln!(self.stderr, "warning: {message}");
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: cannot read: {e}", path.display())))
}

fn read_mass(path: &Path) -> std::result::Result<MassFunction, Failure> {
    j::mass_from_str(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_dataset(path: &Path) -> std::result::Result<MassDataset, Failure> {
    j::dataset_from_str(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn parse_params(flag: &str, text: &str) -> std::result::Result<IndependenceParams, Failure> {
    let values: Vec<f64> = text
        .split(',')
        .map(|v| v.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Failure::input(format!("--{flag}: {e}")))?;
    let [a, b, g] = values[..] else {
        return Err(Failure::input(format!("--{flag}: expected alpha,beta,gamma")));
    };
    IndependenceParams::new(a, b, g).map_err(|e| Failure::input(format!("--{flag}: {e}")))
}

fn mass_output(m: &MassFunction, output: &Output) -> String {
    if output.json {
        j::mass_to_string(m) + "\n"
    } else {
        mass_table(m)
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return EXIT_INPUT;
        }
    };
    let mut io = Io { stdout, stderr };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, io: &mut Io<'_>) -> Outcome {
    match command {
        Command::Combine { rule, weight_op, files, output } => {
            let masses = files.iter().map(|p| read_mass(p)).collect::<std::result::Result<Vec<_>, _>>()?;
            let op = match weight_op {
                OpArg::Min => WeightOp::Min,
                OpArg::Max => WeightOp::Max,
            };
            let rule = match rule {
                RuleArg::Conjunctive => Rule::Conjunctive,
                RuleArg::Disjunctive => Rule::Disjunctive,
                RuleArg::Cautious => Rule::Cautious(op),
                RuleArg::Bold => Rule::Bold(op),
            };
            let result = combine_all(rule, &masses)?;
            io.emit(output.out.as_deref(), &mass_output(&result, &output))?;
        }
        Command::Discount { file, alpha, mode, output } => {
            let m = read_mass(&file)?;
            let result = match mode {
                DiscountMode::ClosedForm => discount(&m, alpha)?,
                DiscountMode::ProductSpace => discount_via_product_space(&m, alpha)?,
            };
            io.emit(output.out.as_deref(), &mass_output(&result, &output))?;
        }
        Command::DiscountIndependence { file, alpha, beta, gamma, mode, trace, output } => {
            let m = read_mass(&file)?;
            let params = IndependenceParams::new(alpha, beta, gamma)?;
            let traced = match (mode, trace) {
                (IndependenceMode::Pipeline, _) | (_, true) => Some(discount_by_independence_traced(&m, &params.to_mass()?)?),
                _ => None,
            };
            let result = match mode {
                IndependenceMode::Pipeline => traced.as_ref().expect("pipeline traced").marginal.clone(),
                IndependenceMode::ClosedForm => discount_by_independence_closed_form(&m, &params)?,
            };
            let text = match (trace, output.json) {
                (true, true) => {
                    let combined = &traced.as_ref().expect("trace requested").combined;
                    let value = json!({
                        "combined": ProductMassDoc::from_product(combined),
                        "result": MassDoc::from_mass(&result),
                    });
                    serde_json::to_string_pretty(&value).expect("serializable") + "\n"
                }
                (true, false) => {
                    let combined = &traced.as_ref().expect("trace requested").combined;
                    format!("on Ω×𝓘\n{}\non Ω\n{}", product_table(combined), mass_table(&result))
                }
                (false, _) => mass_output(&result, &output),
            };
            io.emit(output.out.as_deref(), &text)?;
        }
        Command::Fuse { files, p12, p21, conflict_threshold, scenario, output } => {
            if let Some(t) = conflict_threshold {
                if !(0.0..=1.0).contains(&t) {
                    return Err(Failure::input(format!("--conflict-threshold: {t} is outside [0, 1]")));
                }
            }
            let (result, alert) = match scenario {
                Some(path) => {
                    let mut sc = Scenario::from_json(&read(&path)?)
                        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
                    if conflict_threshold.is_some() {
                        sc.output.conflict_threshold = conflict_threshold;
                    }
                    let outcome = sc.run().map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
                    (outcome.result, outcome.alert)
                }
                None => {
                    let m1 = read_mass(&files[0])?;
                    let m2 = read_mass(&files[1])?;
                    let p12 = parse_params("p12", p12.as_deref().expect("required by clap"))?;
                    let p21 = p21.as_deref().map(|t| parse_params("p21", t)).transpose()?;
                    let result = fuse_with_independence(&m1, &m2, &p12, p21.as_ref())?;
                    let alert = conflict_threshold.and_then(|t| conflict_alert(&result, t));
                    (result, alert)
                }
            };
            if let Some(alert) = alert {
                io.warn(&alert.to_string());
            }
            io.emit(output.out.as_deref(), &mass_output(&result, &output))?;
        }
        Command::EstimateIndependence {
            files,
            synthetic,
            items,
            atoms,
            k,
            beta_conf,
            independence_orientation,
            output,
        } => {
            let (ds1, ds2) = match synthetic {
                Some(kind) => {
                    let relation = match kind {
                        SyntheticArg::Identical => Relation::Identical,
                        SyntheticArg::Independent => Relation::Independent,
                        SyntheticArg::Swapped => Relation::Swapped,
                    };
                    generate_pair(relation, atoms, items, seed_from_env())?
                }
                None => (read_dataset(&files[0])?, read_dataset(&files[1])?),
            };
            let config = EstimationConfig {
                clusters: k,
                confidence: beta_conf.map_or(ConfidencePolicy::ClusterSize, ConfidencePolicy::Constant),
                orientation: match independence_orientation {
                    OrientationArg::OverlapDependent => Orientation::OverlapIsDependence,
                    OrientationArg::OverlapIndependent => Orientation::OverlapIsIndependence,
                },
            };
            let estimate = source_independence_mass(&ds1, &ds2, &config)?;
            for p in estimate.pairs.iter().filter(|p| p.distance.no_common_items()) {
                io.warn(&format!(
                    "cluster {} shares no object with its match; distance taken as 1",
                    p.matched.source_cluster
                ));
            }
            for p in estimate.pairs.iter().filter(|p| p.matched.empty_source_cluster) {
                io.warn(&format!("cluster {} is empty and contributes only ignorance", p.matched.source_cluster));
            }
            let text = if output.json { estimate_json(&estimate) } else { estimate_text(&estimate) };
            io.emit(output.out.as_deref(), &text)?;
        }
        Command::Repro { table } => {
            let tables = match table {
                Some(t) => vec![t],
                None => vec![1, 2, 3],
            };
            let mut all_passed = true;
            let mut text = String::new();
            for t in tables {
                let report = reproduce(t)?;
                all_passed &= report.passed();
                write!(text, "{report}").expect("writing to a String");
            }
            io.emit(None, &text)?;
            return Ok(if all_passed { EXIT_OK } else { EXIT_MISMATCH });
        }
        Command::Sweep { fix, vary, base, full, out } => {
            let split = |flag: &str, s: &str| -> std::result::Result<(Param, String), Failure> {
                let (name, value) =
                    s.split_once('=').ok_or_else(|| Failure::input(format!("--{flag} {s}: expected PARAM=VALUE")))?;
                Ok((name.parse::<Param>().map_err(|e| Failure::input(format!("--{flag}: {e}")))?, value.to_string()))
            };
            let fixed = fix
                .iter()
                .map(|s| {
                    let (p, v) = split("fix", s)?;
                    let v = v.parse::<f64>().map_err(|e| Failure::input(format!("--fix {s}: {e}")))?;
                    Ok((p, v))
                })
                .collect::<std::result::Result<Vec<_>, Failure>>()?;
            let varying = vary
                .iter()
                .map(|s| {
                    let (p, v) = split("vary", s)?;
                    let v = v.parse::<usize>().map_err(|e| Failure::input(format!("--vary {s}: {e}")))?;
                    Ok((p, v))
                })
                .collect::<std::result::Result<Vec<_>, Failure>>()?;
            let base = match base {
                Some(path) => read_mass(&path)?,
                None => default_base(),
            };
            let spec = SweepSpec::new(fixed, varying, base)?;
            io.emit(out.as_deref(), &spec.run()?.to_csv(full)?)?;
        }
    }
    Ok(EXIT_OK)
}

fn components(m: &crate::independence::IndependenceMass) -> [(&'static str, f64); 5] {
    [
        ("I", m.independence()),
        ("P", m.positive()),
        ("Pbar", m.negative()),
        ("{P,Pbar}", m.dependence()),
        ("Ω", m.ignorance()),
    ]
}

fn estimate_text(e: &IndependenceEstimate) -> String {
    let mut s = String::from("independence mass\n");
    for (name, v) in components(&e.mass) {
        writeln!(s, "  {name:<9} {}", format_g6(v)).expect("writing to a String");
    }
    match e.params() {
        Some(p) => writeln!(
            s,
            "parameters\n  alpha {}\n  beta  {}\n  gamma {}",
            format_g6(p.alpha),
            format_g6(p.beta),
            format_g6(p.gamma)
        ),
        None => writeln!(s, "parameters\n  none: mass on {{P,Pbar}} has no (alpha, beta, gamma) form"),
    }
    .expect("writing to a String");
    writeln!(s, "clusters\n  source  size  match  overlap  common  distance  confidence").expect("writing to a String");
    for p in &e.pairs {
        writeln!(
            s,
            "  {:<6}  {:<4}  {:<5}  {:<7}  {:<6}  {:<8}  {}",
            p.matched.source_cluster,
            p.source_size,
            p.matched.matched_cluster,
            format_g6(p.matched.overlap),
            p.distance.common,
            format_g6(p.distance.mean),
            format_g6(p.confidence),
        )
        .expect("writing to a String");
    }
    s
}

fn estimate_json(e: &IndependenceEstimate) -> String {
    let mass: serde_json::Map<String, serde_json::Value> =
        components(&e.mass).into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    let pairs: Vec<_> = e
        .pairs
        .iter()
        .map(|p| {
            json!({
                "source_cluster": p.matched.source_cluster,
                "size": p.source_size,
                "matched_cluster": p.matched.matched_cluster,
                "overlap": p.matched.overlap,
                "common": p.distance.common,
                "distance": p.distance.mean,
                "confidence": p.confidence,
            })
        })
        .collect();
    let params = e.params().map(|p| json!({"alpha": p.alpha, "beta": p.beta, "gamma": p.gamma}));
    serde_json::to_string_pretty(&json!({"mass": mass, "params": params, "clusters": pairs})).expect("serializable") + "\n"
}
