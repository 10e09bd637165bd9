//! Subcommands. Exit codes: 0 when every check passes, 2 when a check
//! fails, 1 on usage or IO errors.

use std::collections::HashMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rii_core::holomorphic_curves::{
    area, boundary_length, boundary_log_density, check_thick_thin, relative_fiber_residual,
    AnnulusMap, Boundary, EnergyDensityField, ThickThinConfig,
};
use rii_core::hyperbolic_geometry::{
    collar_width, conformal_radius, injrad_in_collar, injrad_ratio_scan, modulus, CollarData,
    Curvature, MetricProfile,
};
use rii_core::hypograph::{thick_thin_partition, verify_cardinality_bounds, BoundsReport};
use rii_core::integral_geometry::{crofton_counts, generators, ProjectiveCurve};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{ExperimentConfig, Format, PartitionOverrides};
use crate::formats::{
    arc_rows, bounds_json, partition_json, to_csv, CurveDoc, DensityGridDoc, EstimateDoc, FieldDoc,
    SweepRow,
};
use crate::fuzz::{run_fuzz, CHECKS};
use crate::manifest::{Recorder, RunManifest};
use crate::Error;

const DEFAULT_SAMPLES: usize = 100_000;
const DEFAULT_BOUNDARY_SAMPLES: usize = 64;
const AREA_TOLERANCE: f64 = 1e-6;
const RESIDUAL_TOLERANCE: f64 = 1e-9;
const AREA_ORDER: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "rii", version, about = "Reverse isoperimetric experiments")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GlobalArgs {
    /// Seed for stochastic subcommands.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Monte Carlo samples (crofton) or boundary samples per circle
    /// (partition --from-annulus, pipeline).
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Output directory; without it results go to stdout and the manifest
    /// to stderr.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Area tolerance for annulus-sweep and pipeline.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    /// JSON file with the same keys, overridden by flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Crofton estimate of the normalized length of a projective curve.
    Crofton(CroftonArgs),
    /// Area, boundary lengths and fiber residuals across the annulus family.
    AnnulusSweep(SweepArgs),
    /// Thick-thin partition of a field, or a fuzz run over random fields.
    Partition(PartitionArgs),
    /// Hyperbolic and conformal calculators.
    Hyp {
        #[command(subcommand)]
        calc: HypCommand,
    },
    /// Annulus map, boundary density, partition and bounds report.
    Pipeline(PipelineArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Builtin {
    Line,
    Conic,
    Cubic,
}

impl Builtin {
    fn degree(self) -> u32 {
        match self {
            Builtin::Line => 1,
            Builtin::Conic => 2,
            Builtin::Cubic => 3,
        }
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CroftonArgs {
    #[arg(long, value_enum, required_unless_present = "curve")]
    pub builtin: Option<Builtin>,
    /// Curve JSON `{n, closed, points}`.
    #[arg(long, conflicts_with = "builtin")]
    pub curve: Option<PathBuf>,
    /// Polyline vertices of a builtin curve.
    #[arg(long, default_value_t = 720)]
    pub vertices: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SweepArgs {
    /// Comma-separated parameters.
    #[arg(long, value_delimiter = ',', required = true)]
    pub a: Vec<f64>,
}

#[derive(Debug, Clone, Args, Serialize)]
#[group(id = "source", required = true, multiple = false)]
pub struct PartitionArgs {
    /// Field JSON with rational breakpoints.
    #[arg(long, group = "source")]
    pub field: Option<PathBuf>,
    /// Boundary log-density of the annulus with this parameter.
    #[arg(long, group = "source")]
    pub from_annulus: Option<f64>,
    /// Number of random exact fields to check.
    #[arg(long, group = "source")]
    pub fuzz: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct PipelineArgs {
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    /// Radial cells of the cylinder density grid.
    #[arg(long, default_value_t = 32)]
    pub rows: usize,
    /// Angular cells of the cylinder density grid.
    #[arg(long, default_value_t = 1440)]
    pub cols: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProfileKind {
    Flat,
    Euclidean,
    Spherical,
    Hyperbolic,
    Collar,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
pub enum HypCommand {
    /// Width of the standard collar around a geodesic of length l.
    CollarWidth {
        #[arg(long, required_unless_present = "input")]
        l: Option<f64>,
        /// CSV with an `l` column; one JSON line per row.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Injectivity radius at distance d from the collar boundary.
    Injrad {
        #[arg(long, required_unless_present = "input")]
        l: Option<f64>,
        #[arg(long, required_unless_present = "input", allow_negative_numbers = true)]
        d: Option<f64>,
        /// CSV with `l,d` columns.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Conformal radius of the disk of radius r in curvature K.
    ConformalRadius {
        #[arg(
            long = "K",
            required_unless_present = "input",
            allow_negative_numbers = true
        )]
        k: Option<i32>,
        #[arg(long, required_unless_present = "input")]
        r: Option<f64>,
        /// CSV with `K,r` columns.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Conformal modulus of [a, b] x S^1.
    Modulus {
        #[arg(long, value_enum, required_unless_present = "input")]
        profile: Option<ProfileKind>,
        /// Geodesic length, collar profile only.
        #[arg(long)]
        l: Option<f64>,
        #[arg(long, required_unless_present = "input", allow_negative_numbers = true)]
        a: Option<f64>,
        #[arg(long, required_unless_present = "input", allow_negative_numbers = true)]
        b: Option<f64>,
        /// CSV with `profile,l,a,b` columns (`l` may be empty).
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Grid of h_theta / InjRad over geodesic lengths and collar positions.
    RatioScan {
        #[arg(long, default_value_t = 0.01)]
        l_min: f64,
        #[arg(long, default_value_t = 2.0)]
        l_max: f64,
        /// Grid points per axis.
        #[arg(long, default_value_t = 100)]
        points: usize,
    },
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(manifest) => manifest.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// Runs a parsed command, writing outputs and the manifest.
pub fn execute(cli: &Cli) -> Result<RunManifest, Error> {
    let cfg = resolve_config(&cli.global)?;
    let out = Output::new(cfg.out.clone())?;
    let manifest = match &cli.command {
        Command::Crofton(a) => crofton(&cfg, a, &out)?,
        Command::AnnulusSweep(a) => annulus_sweep(&cfg, a, &out)?,
        Command::Partition(a) => partition(&cfg, a, &out)?,
        Command::Hyp { calc } => hyp(&cfg, calc, &out)?,
        Command::Pipeline(a) => pipeline(&cfg, a, &out)?,
    };
    out.manifest(&manifest)?;
    Ok(manifest)
}

fn resolve_config(g: &GlobalArgs) -> Result<ExperimentConfig, Error> {
    let file = match &g.config {
        Some(p) => ExperimentConfig::load(p)?,
        None => ExperimentConfig::default(),
    };
    let flags = ExperimentConfig {
        seed: g.seed,
        samples: g.samples,
        out: g.out.clone(),
        format: g.format,
        tolerance: g.tolerance,
        partition: PartitionOverrides::default(),
    };
    let cfg = file.merged_with(flags);
    cfg.validate()?;
    Ok(cfg)
}

fn echo<T: Serialize>(cfg: &ExperimentConfig, args: &T) -> Value {
    json!({ "global": cfg, "args": args })
}

/// Where results go: files in a directory, or stdout.
struct Output {
    dir: Option<PathBuf>,
}

impl Output {
    fn new(dir: Option<PathBuf>) -> Result<Self, Error> {
        if let Some(d) = &dir {
            fs::create_dir_all(d).map_err(|e| Error::io(d, e))?;
        }
        Ok(Output { dir })
    }

    /// Writes `name` into the output directory, or prints it when there is
    /// none and `primary` is set.
    fn emit(&self, name: &str, content: &str, primary: bool) -> Result<(), Error> {
        match &self.dir {
            Some(d) => {
                let path = d.join(name);
                fs::write(&path, content).map_err(|e| Error::io(&path, e))
            }
            None => {
                if primary {
                    print!("{content}");
                }
                Ok(())
            }
        }
    }

    fn manifest(&self, m: &RunManifest) -> Result<(), Error> {
        let text = serde_json::to_string(m).map_err(Error::input)?;
        match &self.dir {
            Some(_) => self.emit("manifest.json", &(text + "\n"), false),
            None => {
                eprintln!("{text}");
                Ok(())
            }
        }
    }
}

fn json_line(v: &impl Serialize) -> Result<String, Error> {
    Ok(serde_json::to_string(v).map_err(Error::input)? + "\n")
}

fn json_pretty(v: &impl Serialize) -> Result<String, Error> {
    Ok(serde_json::to_string_pretty(v).map_err(Error::input)? + "\n")
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn crofton(cfg: &ExperimentConfig, args: &CroftonArgs, out: &Output) -> Result<RunManifest, Error> {
    let seed = cfg.require_seed()?;
    let samples = cfg.samples.unwrap_or(DEFAULT_SAMPLES);
    let curve: ProjectiveCurve = match (args.builtin, &args.curve) {
        (Some(b), _) => match b {
            Builtin::Line => generators::line(2, args.vertices),
            Builtin::Conic => generators::conic(args.vertices),
            Builtin::Cubic => generators::nodal_cubic(args.vertices),
        }
        .map_err(Error::input)?,
        (None, Some(p)) => CurveDoc::parse(&read(p)?)?.to_curve()?,
        (None, None) => return Err(Error::Usage("--builtin or --curve is required".into())),
    };
    let mut rec = Recorder::new("crofton", echo(cfg, args));
    let run = crofton_counts(&curve, samples, seed).map_err(Error::input)?;
    let est = &run.estimate;
    rec.check(
        "mean within 3 standard errors",
        est.consistent_within(3.0),
        format!(
            "mean {} exact {} std_error {}",
            est.mean, est.exact_length, est.std_error
        ),
    );
    if let Some(b) = args.builtin {
        let worst = run.counts.iter().copied().max().unwrap_or(0);
        rec.check(
            "counts within the degree",
            worst <= b.degree(),
            format!("max count {worst}, degree {}", b.degree()),
        );
    }
    #[derive(Serialize)]
    struct SampleRow {
        sample: usize,
        count: u32,
    }
    let rows: Vec<SampleRow> = run
        .counts
        .iter()
        .enumerate()
        .map(|(sample, &count)| SampleRow { sample, count })
        .collect();
    let estimate = json_pretty(&EstimateDoc::from(est))?;
    let csv = to_csv(&rows)?;
    let as_csv = cfg.format == Some(Format::Csv);
    out.emit("estimate.json", &estimate, !as_csv)?;
    out.emit("samples.csv", &csv, as_csv)?;
    Ok(rec.finish())
}

pub fn sweep_row(a: f64) -> Result<SweepRow, Error> {
    let m = AnnulusMap::new(a).map_err(Error::input)?;
    let lengths = boundary_length(&m);
    let area = area(&m, AREA_ORDER);
    Ok(SweepRow {
        a,
        r_a: m.r_inner,
        area,
        outer_len: lengths.outer,
        inner_len: lengths.inner,
        ratio: lengths.total() / area,
        outer_residual: relative_fiber_residual(&m, Boundary::Outer, 512),
        inner_residual: relative_fiber_residual(&m, Boundary::Inner, 512),
    })
}

fn annulus_sweep(
    cfg: &ExperimentConfig,
    args: &SweepArgs,
    out: &Output,
) -> Result<RunManifest, Error> {
    let tol = cfg.tolerance_or(AREA_TOLERANCE);
    let mut rec = Recorder::new("annulus-sweep", echo(cfg, args));
    let rows = args
        .a
        .iter()
        .map(|&a| sweep_row(a))
        .collect::<Result<Vec<_>, _>>()?;
    let two_pi = 2.0 * std::f64::consts::PI;
    let area_err = rows
        .iter()
        .map(|r| (r.area - two_pi).abs())
        .fold(0.0, f64::max);
    rec.check(
        "area constant",
        area_err <= tol,
        format!("max |area - 2pi| = {area_err:e}"),
    );
    let residual = rows
        .iter()
        .map(|r| r.outer_residual.max(r.inner_residual))
        .fold(0.0, f64::max);
    rec.check(
        "fiber residuals",
        residual < RESIDUAL_TOLERANCE,
        format!("max relative residual {residual:e}"),
    );
    let mut by_a: Vec<&SweepRow> = rows.iter().collect();
    by_a.sort_by(|x, y| x.a.total_cmp(&y.a));
    let increasing = by_a
        .windows(2)
        .all(|w| w[0].a == w[1].a || w[1].ratio > w[0].ratio);
    rec.check(
        "length over area increasing in a",
        increasing,
        String::new(),
    );
    let text = match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => to_csv(&rows)?,
        Format::Json => json_pretty(&rows)?,
    };
    let name = match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => "sweep.csv",
        Format::Json => "sweep.json",
    };
    out.emit(name, &text, true)?;
    Ok(rec.finish())
}

/// Asserts the combinatorial bounds. The measure-dependent ones only mean
/// something for a genuine energy measure and are logged when `measured`.
fn record_bounds(rec: &mut Recorder, report: &BoundsReport, measured: bool) {
    for c in &report.checks {
        let detail = format!("{} <= {}", c.count, c.bound);
        if c.asserted {
            rec.check(c.name, c.pass, detail);
        } else if measured {
            rec.report(c.name, c.pass, detail);
        }
    }
}

fn partition(
    cfg: &ExperimentConfig,
    args: &PartitionArgs,
    out: &Output,
) -> Result<RunManifest, Error> {
    let mut rec = Recorder::new("partition", echo(cfg, args));
    let overrides = &cfg.partition;
    let as_csv = cfg.format == Some(Format::Csv);
    if let Some(n) = args.fuzz {
        let seed = cfg.require_seed()?;
        let report = run_fuzz(n, seed, overrides);
        for name in CHECKS {
            let v = report.violations[name];
            rec.check(name, v == 0, format!("{v} violations in {n} fields"));
        }
        out.emit("fuzz.json", &json_pretty(&report)?, true)?;
        return Ok(rec.finish());
    }
    let (doc, arcs, bounds, measured) = if let Some(path) = &args.field {
        let field = FieldDoc::parse(&read(path)?)?.to_field()?;
        let top = (0..field.domain().len())
            .map(|c| field.max_value(c))
            .max()
            .unwrap_or_else(|| field.xi().clone());
        let params = overrides.exact_params(field.xi(), &top)?;
        let p = thick_thin_partition(&field, &params).map_err(Error::input)?;
        let bounds = verify_cardinality_bounds(&p, 1.0, 1.0).map_err(Error::input)?;
        (
            partition_json(&p, &bounds),
            to_csv(&arc_rows(&p))?,
            bounds,
            false,
        )
    } else {
        let a = args.from_annulus.expect("clap enforces one source");
        let m = AnnulusMap::new(a).map_err(Error::input)?;
        let samples = cfg.samples.unwrap_or(DEFAULT_BOUNDARY_SAMPLES);
        let field = boundary_log_density(&m, samples).map_err(Error::input)?;
        let p = thick_thin_partition(&field, &overrides.float_params()).map_err(Error::input)?;
        let mu = area(&m, AREA_ORDER);
        let delta1 = ThickThinConfig::default().delta1;
        let bounds = verify_cardinality_bounds(&p, mu, delta1).map_err(Error::input)?;
        (
            partition_json(&p, &bounds),
            to_csv(&arc_rows(&p))?,
            bounds,
            true,
        )
    };
    record_bounds(&mut rec, &bounds, measured);
    out.emit("partition.json", &json_pretty(&doc)?, !as_csv)?;
    out.emit("arcs.csv", &arcs, as_csv)?;
    Ok(rec.finish())
}

fn curvature(k: i32) -> Result<Curvature, Error> {
    Curvature::try_from(k).map_err(Error::input)
}

fn profile(kind: ProfileKind, l: Option<f64>) -> Result<MetricProfile, Error> {
    Ok(match kind {
        ProfileKind::Flat => MetricProfile::Cylinder,
        ProfileKind::Euclidean => MetricProfile::Euclidean,
        ProfileKind::Spherical => MetricProfile::Spherical,
        ProfileKind::Hyperbolic => MetricProfile::Hyperbolic,
        ProfileKind::Collar => MetricProfile::Collar {
            length: l
                .ok_or_else(|| Error::Usage("--l is required for the collar profile".into()))?,
        },
    })
}

type Row = HashMap<String, String>;

fn read_rows(path: &Path) -> Result<Vec<Row>, Error> {
    let text = read(path)?;
    let mut r = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    r.deserialize()
        .collect::<Result<Vec<Row>, _>>()
        .map_err(Error::input)
}

fn field<T: std::str::FromStr>(row: &Row, name: &str) -> Result<Option<T>, Error> {
    match row.get(name).map(String::as_str) {
        None | Some("") => Ok(None),
        Some(s) => s
            .parse()
            .map(Some)
            .map_err(|_| Error::Input(format!("column {name}: cannot parse {s:?}"))),
    }
}

fn need<T>(v: Option<T>, name: &str) -> Result<T, Error> {
    v.ok_or_else(|| Error::Input(format!("missing {name}")))
}

/// `{input, value}` for a single calculator call.
fn calculate(calc: &HypCommand, row: Option<&Row>) -> Result<Value, Error> {
    let num = |name: &str, flag: Option<f64>| -> Result<f64, Error> {
        match row {
            Some(r) => need(field(r, name)?, name),
            None => need(flag, name),
        }
    };
    match calc {
        HypCommand::CollarWidth { l, .. } => {
            let l = num("l", *l)?;
            let value = collar_width(l).map_err(Error::input)?;
            Ok(json!({ "input": { "l": l }, "value": value }))
        }
        HypCommand::Injrad { l, d, .. } => {
            let (l, d) = (num("l", *l)?, num("d", *d)?);
            let value = injrad_in_collar(l, d).map_err(Error::input)?;
            Ok(json!({ "input": { "l": l, "d": d }, "value": value }))
        }
        HypCommand::ConformalRadius { k, r, .. } => {
            let k = match row {
                Some(row) => need(field::<i32>(row, "K")?, "K")?,
                None => need(*k, "K")?,
            };
            let r = num("r", *r)?;
            let value = conformal_radius(curvature(k)?, r).map_err(Error::input)?;
            Ok(json!({ "input": { "K": k, "r": r }, "value": value }))
        }
        HypCommand::Modulus {
            profile: p,
            l,
            a,
            b,
            ..
        } => {
            let (kind, l) = match row {
                Some(row) => {
                    let name: String = need(field(row, "profile")?, "profile")?;
                    let kind = ProfileKind::from_str(&name, true).map_err(Error::Input)?;
                    (kind, field(row, "l")?)
                }
                None => (need(*p, "profile")?, *l),
            };
            let (a, b) = (num("a", *a)?, num("b", *b)?);
            let value = modulus(profile(kind, l)?, a, b).map_err(Error::input)?;
            Ok(json!({ "input": { "profile": kind, "l": l, "a": a, "b": b }, "value": value }))
        }
        HypCommand::RatioScan { .. } => unreachable!("handled by ratio_scan"),
    }
}

fn input_of(calc: &HypCommand) -> Option<&PathBuf> {
    match calc {
        HypCommand::CollarWidth { input, .. }
        | HypCommand::Injrad { input, .. }
        | HypCommand::ConformalRadius { input, .. }
        | HypCommand::Modulus { input, .. } => input.as_ref(),
        HypCommand::RatioScan { .. } => None,
    }
}

fn hyp(cfg: &ExperimentConfig, calc: &HypCommand, out: &Output) -> Result<RunManifest, Error> {
    let mut rec = Recorder::new("hyp", echo(cfg, calc));
    if let HypCommand::RatioScan {
        l_min,
        l_max,
        points,
    } = *calc
    {
        ratio_scan(&mut rec, l_min, l_max, points, out)?;
        return Ok(rec.finish());
    }
    let text = match input_of(calc) {
        Some(path) => {
            let mut lines = String::new();
            for row in read_rows(path)? {
                lines += &json_line(&calculate(calc, Some(&row))?)?;
            }
            lines
        }
        None => json_line(&calculate(calc, None)?)?,
    };
    let name = if input_of(calc).is_some() {
        "values.jsonl"
    } else {
        "value.json"
    };
    out.emit(name, &text, true)?;
    Ok(rec.finish())
}

fn ratio_scan(
    rec: &mut Recorder,
    l_min: f64,
    l_max: f64,
    points: usize,
    out: &Output,
) -> Result<(), Error> {
    if points < 2 || !(0.0 < l_min && l_min < l_max) {
        return Err(Error::Usage(
            "ratio-scan needs 0 < l-min < l-max and at least 2 points".into(),
        ));
    }
    let step = |lo: f64, hi: f64, i: usize| lo + (hi - lo) * i as f64 / (points - 1) as f64;
    let lengths: Vec<f64> = (0..points).map(|i| step(l_min, l_max, i)).collect();
    let fractions: Vec<f64> = (0..points).map(|j| step(-1.0, 1.0, j)).collect();
    let scan = injrad_ratio_scan(&lengths, &fractions).map_err(Error::input)?;

    #[derive(Serialize)]
    struct GridRow {
        l: f64,
        rho: f64,
        ratio: f64,
    }
    let mut rows = Vec::with_capacity(points * points);
    for &l in &lengths {
        let collar = CollarData::new(l).map_err(Error::input)?;
        for &s in &fractions {
            let rho = s * collar.width;
            let injrad = collar.injrad_at(rho).map_err(Error::input)?;
            rows.push(GridRow {
                l,
                rho,
                ratio: collar.h_theta(rho) / injrad,
            });
        }
    }
    let lower = 1.0 / std::f64::consts::PI;
    rec.check(
        "ratio >= 1/pi",
        scan.min_ratio >= lower - 1e-9,
        format!("min {} at {:?}", scan.min_ratio, scan.argmin),
    );
    rec.report(
        "empirical c",
        scan.max_ratio.is_finite(),
        format!(
            "max {} at {:?}; proof expression {}",
            scan.max_ratio, scan.argmax, scan.proof_bound
        ),
    );
    out.emit("ratio_scan.csv", &to_csv(&rows)?, true)
}

fn pipeline(
    cfg: &ExperimentConfig,
    args: &PipelineArgs,
    out: &Output,
) -> Result<RunManifest, Error> {
    let tol = cfg.tolerance_or(AREA_TOLERANCE);
    let mut rec = Recorder::new("pipeline", echo(cfg, args));
    let row = sweep_row(args.a)?;
    let m = AnnulusMap::new(args.a).map_err(Error::input)?;
    let area_err = (row.area - 2.0 * std::f64::consts::PI).abs();
    rec.check(
        "area",
        area_err <= tol,
        format!("|area - 2pi| = {area_err:e}"),
    );
    let residual = row.outer_residual.max(row.inner_residual);
    rec.check(
        "fiber residuals",
        residual < RESIDUAL_TOLERANCE,
        format!("max relative residual {residual:e}"),
    );
    rec.report(
        "length over area",
        row.ratio.is_finite(),
        format!("{}", row.ratio),
    );

    let samples = cfg.samples.unwrap_or(DEFAULT_BOUNDARY_SAMPLES);
    let field = boundary_log_density(&m, samples).map_err(Error::input)?;
    let p = thick_thin_partition(&field, &cfg.partition.float_params()).map_err(Error::input)?;
    let config = ThickThinConfig::default();
    let bounds = verify_cardinality_bounds(&p, row.area, config.delta1).map_err(Error::input)?;
    record_bounds(&mut rec, &bounds, true);

    let grid = EnergyDensityField::from_annulus(&m, args.rows, args.cols).map_err(Error::input)?;
    let probes = (args.cols / 16).max(4);
    let tt = check_thick_thin(&grid, config, probes, 8).map_err(Error::input)?;
    rec.report(
        "empirical gradient ratio",
        tt.empirical_c1.is_finite(),
        format!(
            "c1 {} over {} disks, {} above the configured c1",
            tt.empirical_c1, tt.disks_tested, tt.gradient_violations
        ),
    );

    let doc = json!({
        "annulus": row,
        "partition": partition_json(&p, &bounds),
        "bounds": bounds_json(&bounds),
        "thick_thin": {
            "empirical_c1": tt.empirical_c1,
            "gradient_violations": tt.gradient_violations,
            "disks_tested": tt.disks_tested,
        },
    });
    out.emit("pipeline.json", &json_pretty(&doc)?, true)?;
    out.emit("arcs.csv", &to_csv(&arc_rows(&p))?, false)?;
    out.emit(
        "density.json",
        &json_line(&DensityGridDoc::from(&grid))?,
        false,
    )?;
    Ok(rec.finish())
}
