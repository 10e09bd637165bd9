//! One line per acceptance criterion, driven through the `rii` binary where a
//! subcommand covers the criterion. Exits non-zero if any criterion fails.

mod support;

#[path = "../../core/tests/common/mod.rs"]
mod common;

#[allow(clippy::excessive_precision)]
mod frozen {
    include!("../../core/tests/data/collar_grid.rs");
}

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::spanning::{brute_force_mst, K5_EDGES};
use common::{base_level, compare_with_grid, decisive_grid, random_raw_field};
use frozen::COLLAR_GRID;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rii_core::holomorphic_curves::{solve_inner_radius, AnnulusMap};
use rii_core::hyperbolic_geometry::{
    admissible_chain, fit_conformal_constant, tree_path, BridgeGraph, Edge,
};
use rii_core::integral_geometry::{generators::line, verify_projective_rii};
use serde_json::Value;
use support::{check, manifest, read_json, rii_into};
use tempfile::TempDir;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn FnOnce() -> Outcome + 'a>);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit_s: f64) -> Result<(), String> {
    ensure(
        elapsed.as_secs_f64() < limit_s,
        format!("took {:.2} s, limit {limit_s} s", elapsed.as_secs_f64()),
    )
}

fn run_ok(dir: &Path, args: &[&str]) -> Result<Duration, String> {
    let run = rii_into(dir, args);
    ensure(
        run.code == 0,
        format!("exit {}: {}", run.code, run.stderr.trim()),
    )?;
    Ok(run.elapsed)
}

fn manifest_check(dir: &Path, name: &str) -> Result<(), String> {
    match check(&manifest(dir), name) {
        Some(true) => Ok(()),
        Some(false) => Err(format!("manifest check {name:?} failed")),
        None => Err(format!("manifest lacks {name:?}")),
    }
}

fn tmp() -> Result<TempDir, String> {
    tempfile::tempdir().map_err(|e| e.to_string())
}

fn num(v: &Value, key: &str) -> Result<f64, String> {
    v[key]
        .as_f64()
        .ok_or_else(|| format!("{key} is not a number"))
}

fn crofton_sanity() -> Outcome {
    let dir = tmp()?;
    let args = [
        "crofton",
        "--builtin",
        "line",
        "--samples",
        "100000",
        "--seed",
        "7",
    ];
    let elapsed = run_ok(dir.path(), &args)?;
    let est = read_json(&dir.path().join("estimate.json"));
    let (mean, se) = (num(&est, "mean")?, num(&est, "std_error")?);
    ensure(est["samples"] == 100000, "wrong sample count")?;
    ensure(mean == 1.0, format!("mean {mean}"))?;
    ensure(se < 1e-6, format!("std_error {se}"))?;
    manifest_check(dir.path(), "mean within 3 standard errors")?;
    within(elapsed, 5.0)?;
    Ok(format!(
        "mean {mean}, std_error {se}, {:.2} s",
        elapsed.as_secs_f64()
    ))
}

fn degree_bound() -> Outcome {
    let dir = tmp()?;
    let args = [
        "crofton",
        "--builtin",
        "conic",
        "--samples",
        "100000",
        "--seed",
        "7",
    ];
    let elapsed = run_ok(dir.path(), &args)?;
    let samples = fs::read_to_string(dir.path().join("samples.csv")).map_err(|e| e.to_string())?;
    let counts = samples
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().and_then(|c| c.parse::<u32>().ok()))
        .collect::<Option<Vec<_>>>()
        .ok_or("unreadable samples.csv")?;
    ensure(counts.len() == 100000, format!("{} counts", counts.len()))?;
    let worst = counts.iter().copied().max().unwrap_or(0);
    ensure(
        worst <= 2,
        format!("a hyperplane meets the conic {worst} times"),
    )?;
    let mean = num(&read_json(&dir.path().join("estimate.json")), "mean")?;
    ensure(mean <= 2.0, format!("mean {mean}"))?;
    manifest_check(dir.path(), "counts within the degree")?;
    within(elapsed, 10.0)?;
    Ok(format!(
        "max count {worst}, mean {mean:.5}, {:.2} s",
        elapsed.as_secs_f64()
    ))
}

fn projective_equality() -> Outcome {
    let boundary = line(2, 360).map_err(|e| e.to_string())?;
    let c = verify_projective_rii(&boundary, 1, 1e-4).map_err(|e| e.to_string())?;
    ensure(c.pass, "inequality fails")?;
    ensure(
        (c.lhs - 1.0).abs() < 1e-12 && (c.rhs - 1.0).abs() < 1e-4,
        format!("2 pi Area {} vs length {}", c.lhs, c.rhs),
    )?;
    Ok(format!("2 pi Area {}, boundary length {:.8}", c.lhs, c.rhs))
}

fn annulus_family(ratios: &mut Vec<f64>) -> Outcome {
    let dir = tmp()?;
    let args = ["annulus-sweep", "--a", "0.5,1,5,50,500", "--format", "json"];
    let elapsed = run_ok(dir.path(), &args)?;
    let rows = read_json(&dir.path().join("sweep.json"));
    let rows = rows.as_array().ok_or("sweep.json is not an array")?;
    ensure(rows.len() == 5, "expected 5 rows")?;
    for r in rows {
        let a = num(r, "a")?;
        let area = num(r, "area")?;
        ensure(
            (area - 2.0 * PI).abs() <= 1e-6,
            format!("area({a}) = {area}"),
        )?;
        let res = num(r, "outer_residual")?.max(num(r, "inner_residual")?);
        ensure(
            res < 1e-9,
            format!("relative fiber residual {res:e} at a = {a}"),
        )?;
        ratios.push(num(r, "ratio")?);
    }
    let gain = ratios[4] / ratios[1];
    ensure(gain > 100.0, format!("ratio grows only {gain}x"))?;
    for name in [
        "area constant",
        "fiber residuals",
        "length over area increasing in a",
    ] {
        manifest_check(dir.path(), name)?;
    }
    within(elapsed, 10.0)?;
    Ok(format!(
        "length/area at 500 is {gain:.1}x that at 1, {:.2} s",
        elapsed.as_secs_f64()
    ))
}

fn r_a_limit() -> Outcome {
    let r = solve_inner_radius(1e6).map_err(|e| e.to_string())?;
    ensure(r > 1.0 - 1e-3, format!("r = {r}"))?;
    let res = AnnulusMap::new(1e6)
        .map_err(|e| e.to_string())?
        .equation_residual();
    ensure(res.abs() < 1e-12, format!("residual {res:e}"))?;
    Ok(format!("r_1e6 = {r}, residual {res:e}"))
}

fn hypograph_combinatorics() -> Outcome {
    let dir = tmp()?;
    let elapsed = run_ok(dir.path(), &["partition", "--fuzz", "1000", "--seed", "3"])?;
    let report = read_json(&dir.path().join("fuzz.json"));
    ensure(report["fields"] == 1000, "wrong field count")?;
    ensure(
        report["max_breakpoints"].as_u64() <= Some(20),
        "too many breakpoints",
    )?;
    let violations = report["violations"]
        .as_object()
        .ok_or("no violations map")?;
    ensure(
        violations.len() == 6,
        format!("{} properties", violations.len()),
    )?;
    let total: u64 = violations.values().filter_map(Value::as_u64).sum();
    ensure(total == 0, format!("violations {violations:?}"))?;
    for name in violations.keys() {
        manifest_check(dir.path(), name)?;
    }
    within(elapsed, 60.0)?;
    Ok(format!(
        "1000 fields, 6 properties, 0 violations, {:.2} s",
        elapsed.as_secs_f64()
    ))
}

fn oracle_equivalence() -> Outcome {
    let started = Instant::now();
    let (mut compared, mut skipped, mut necks) = (0, 0, 0);
    let mut seed = 0;
    while compared < 100 {
        let raw = random_raw_field(seed);
        let Some(grid) = decisive_grid(&raw, base_level()) else {
            skipped += 1;
            seed += 1;
            continue;
        };
        compare_with_grid(&raw, &grid).map_err(|e| format!("seed {seed}: {e}"))?;
        for (c, levels) in grid.levels.iter().enumerate() {
            let rises = raw[c].2.iter().any(|p| p.1 > base_level());
            ensure(
                !rises || levels.len() >= 1000,
                format!("seed {seed}: {} levels", levels.len()),
            )?;
        }
        necks += grid.classes.iter().map(|c| c.necks.len()).sum::<usize>();
        compared += 1;
        seed += 1;
    }
    ensure(skipped < compared, format!("{skipped} fields undecided"))?;
    within(started.elapsed(), 120.0)?;
    Ok(format!(
        "{compared} fields ({necks} necks) agree, {skipped} skipped as grid-ambiguous, {:.2} s",
        started.elapsed().as_secs_f64()
    ))
}

fn batch(dir: &Path, calc: &str, csv: &str) -> Result<Vec<f64>, String> {
    let input = dir.join(format!("{calc}.csv"));
    fs::write(&input, csv).map_err(|e| e.to_string())?;
    let out = dir.join(calc);
    let path = input.to_str().ok_or("non-utf-8 path")?;
    run_ok(&out, &["hyp", calc, "--input", path])?;
    let text = fs::read_to_string(out.join("values.jsonl")).map_err(|e| e.to_string())?;
    text.lines()
        .map(|l| {
            let v: Value = serde_json::from_str(l).map_err(|e| e.to_string())?;
            num(&v, "value")
        })
        .collect()
}

fn hyperbolic_formulas() -> Outcome {
    let dir = tmp()?;
    let mut widths = String::from("l\n");
    let mut points = String::from("l,d\n");
    for (l, d, _, _) in COLLAR_GRID {
        writeln!(widths, "{l:?}").unwrap();
        writeln!(points, "{l:?},{d:?}").unwrap();
    }
    let w = batch(dir.path(), "collar-width", &widths)?;
    let inj = batch(dir.path(), "injrad", &points)?;
    ensure(w.len() == 100 && inj.len() == 100, "short batch output")?;
    let mut worst: f64 = 0.0;
    for (i, &(_, _, w_ref, inj_ref)) in COLLAR_GRID.iter().enumerate() {
        worst = worst
            .max((w[i] - w_ref).abs())
            .max((inj[i] - inj_ref).abs());
    }
    ensure(worst < 1e-12, format!("collar grid error {worst:e}"))?;

    let scan = dir.path().join("scan");
    run_ok(&scan, &["hyp", "ratio-scan"])?;
    manifest_check(&scan, "ratio >= 1/pi")?;

    let radii: Vec<f64> = (1..=1000).map(|i| 3.0 * i as f64 / 1000.0).collect();
    let mut rows = String::from("K,r\n");
    for k in [1, 0, -1] {
        for r in &radii {
            writeln!(rows, "{k},{r:?}").unwrap();
        }
    }
    let conf = batch(dir.path(), "conformal-radius", &rows)?;
    let (pos, rest) = conf.split_at(1000);
    let (flat, neg) = rest.split_at(1000);
    let mut closed: f64 = 0.0;
    let mut previous = f64::INFINITY;
    for (i, &r) in radii.iter().enumerate() {
        closed = closed
            .max((pos[i] - 2.0 * (r / 2.0).tan()).abs())
            .max((flat[i] - r).abs())
            .max((neg[i] - 2.0 * (r / 2.0).tanh()).abs());
        ensure(
            pos[i] >= r && flat[i] >= r,
            format!("r_conf < r at r = {r}"),
        )?;
        let ratio = neg[i] / r;
        ensure(
            ratio > 0.0 && ratio < previous,
            format!("K = -1 ratio not decreasing at {r}"),
        )?;
        previous = ratio;
    }
    ensure(closed < 1e-10, format!("closed-form error {closed:e}"))?;
    let kappa = 2.0;
    let c = fit_conformal_constant(
        rii_core::hyperbolic_geometry::Curvature::Negative,
        kappa,
        500,
    )
    .map_err(|e| e.to_string())?;
    for (i, &r) in radii.iter().enumerate() {
        ensure(
            r > kappa || neg[i] >= c * r - 1e-12,
            format!("r_conf < c r at r = {r}"),
        )?;
    }
    Ok(format!(
        "collar grid error {worst:.1e}, closed-form error {closed:.1e}, c = {c:.6} on r <= {kappa}"
    ))
}

fn mst_chain() -> Outcome {
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = BridgeGraph::from_fn(5, |_, _| rng.random_range(0.1..10.0))
            .map_err(|e| e.to_string())?;
        let (chosen, total, trees) = brute_force_mst(&g);
        ensure(trees == 125, format!("seed {seed}: {trees} spanning trees"))?;
        let tree: Vec<Edge> = chosen
            .iter()
            .map(|&i| {
                let (u, v) = K5_EDGES[i];
                Edge {
                    u,
                    v,
                    length: g.length(u, v),
                }
            })
            .collect();
        let from = (seed % 5) as usize;
        let to = (from + 1 + (seed / 5 % 4) as usize) % 5;
        let chain = admissible_chain(&g, from, to, None).map_err(|e| e.to_string())?;
        ensure(
            (chain.tree_length - total).abs() < 1e-12,
            format!("seed {seed}: tree length {} vs {total}", chain.tree_length),
        )?;
        ensure(
            tree_path(5, &tree, from, to).as_ref() == Some(&chain.path),
            format!("seed {seed}: path {:?}", chain.path),
        )?;
    }
    Ok("100 K5 instances match the exhaustive minimum".into())
}

fn main() -> ExitCode {
    let mut ratios = Vec::new();
    let criteria: Vec<Criterion> = vec![
        ("Crofton sanity", Box::new(crofton_sanity)),
        ("Degree bound", Box::new(degree_bound)),
        ("Projective equality witness", Box::new(projective_equality)),
        ("Annulus family", Box::new(|| annulus_family(&mut ratios))),
        ("r_a limit", Box::new(r_a_limit)),
        ("Hypograph combinatorics", Box::new(hypograph_combinatorics)),
        ("Oracle equivalence", Box::new(oracle_equivalence)),
        ("Hyperbolic formulas", Box::new(hyperbolic_formulas)),
        ("MST chain", Box::new(mst_chain)),
    ];
    let mut failed = 0;
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    // logged only: no constant is asserted for this ratio
    let finite = !ratios.is_empty() && ratios.iter().all(|r| r.is_finite());
    println!("INFO  length/area over the annulus sweep: {ratios:.4?} (finite: {finite})");
    if failed == 0 && finite {
        println!("acceptance: 9 of 9 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 9 criteria fail");
        ExitCode::FAILURE
    }
}
