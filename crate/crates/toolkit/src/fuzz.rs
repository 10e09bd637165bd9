//! Seeded random exact fields and the combinatorial invariants that must
//! hold on every one of them.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rii_core::hypograph::{
    compare_segments, e_segment, level_slice, stable_forest_reduce, thick_thin_partition,
    tree_partition, verify_cardinality_bounds, Component, ComponentKind, Domain1D,
    PiecewiseScalarField, SegmentOrder, TreePartition,
};
use rii_core::scalar::{rational, Rational};
use serde::Serialize;

use crate::config::PartitionOverrides;

/// Positions live on a grid of `1/POSITION_DEN`, values on `1/VALUE_DEN`.
const POSITION_DEN: i64 = 4;
const VALUE_DEN: i64 = 8;
pub const MAX_BREAKPOINTS: usize = 20;

pub const CHECKS: [&str; 6] = [
    "tree-like order",
    "slice connectivity",
    "closed from above",
    "classes <= 2 maxima",
    "short necks <= 2 classes",
    "stable forest <= 2 leaves",
];

/// One or two components of integer length 2 to 12 with at most
/// [`MAX_BREAKPOINTS`] breakpoints each and values in `[0, 2]`, base level 0.
pub fn random_exact_field(seed: u64) -> PiecewiseScalarField<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(1..=2);
    let mut comps = Vec::new();
    let mut points = Vec::new();
    for _ in 0..n {
        let circle = rng.random_bool(0.5);
        let span = rng.random_range(2..=12) * POSITION_DEN;
        let interior = if circle {
            MAX_BREAKPOINTS
        } else {
            MAX_BREAKPOINTS - 2
        };
        let count = rng.random_range(1..=interior.min(span as usize - 1));
        let mut xs: Vec<i64> = sample(&mut rng, span as usize - 1, count)
            .into_iter()
            .map(|i| i as i64 + 1)
            .collect();
        xs.sort_unstable();
        if !circle {
            xs.insert(0, 0);
            xs.push(span);
        }
        let pts = xs
            .into_iter()
            .map(|x| {
                let v = rng.random_range(0..=2 * VALUE_DEN);
                (rational(x, POSITION_DEN), rational(v, VALUE_DEN))
            })
            .collect();
        comps.push(Component {
            kind: if circle {
                ComponentKind::Circle
            } else {
                ComponentKind::Interval
            },
            length: rational(span, POSITION_DEN),
        });
        points.push(pts);
    }
    let domain = Domain1D::new(comps).expect("generated lengths are positive");
    PiecewiseScalarField::new(domain, points, rational(0, 1)).expect("generated field is valid")
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct FuzzReport {
    pub fields: usize,
    pub seed: u64,
    pub max_breakpoints: usize,
    pub violations: BTreeMap<&'static str, usize>,
    /// Seeds of fields with at least one violation, capped at 20.
    pub failing_seeds: Vec<u64>,
}

impl FuzzReport {
    pub fn total_violations(&self) -> usize {
        self.violations.values().sum()
    }
}

fn probe_levels(tree: &TreePartition<Rational>, class: usize) -> Vec<Rational> {
    let iv = &tree.classes()[class].levels;
    let mut out = Vec::new();
    if iv.lo_closed {
        out.push(iv.lo.clone());
    }
    for k in 1..4 {
        let t = iv.lo.clone() + (iv.hi.clone() - iv.lo.clone()) * rational(k, 4);
        if iv.contains(&t) {
            out.push(t);
        }
    }
    out.push(iv.hi.clone());
    out
}

fn tree_order_ok(tree: &TreePartition<Rational>) -> bool {
    let forest = tree.forest();
    let n = tree.len();
    for a in 0..n {
        for b in 0..n {
            if tree.class_leq(a, b) != forest.is_ancestor(a, b)
                || (a != b && tree.class_leq(a, b) && tree.class_leq(b, a))
            {
                return false;
            }
        }
        let below: Vec<usize> = (0..n).filter(|&x| tree.class_leq(x, a)).collect();
        for &x in &below {
            for &y in &below {
                if !(tree.class_leq(x, y) || tree.class_leq(y, x)) {
                    return false;
                }
            }
        }
    }
    true
}

fn slices_ok(tree: &TreePartition<Rational>) -> bool {
    let f = tree.field();
    for class in tree.classes() {
        let mut previous = None;
        for t in probe_levels(tree, class.id) {
            let Some(slice) = tree.slice(class.id, &t) else {
                return false;
            };
            let connected = e_segment(f, class.component, &class.anchor, &t)
                .is_ok_and(|s| s == slice)
                && level_slice(f, class.component, &t).is_ok_and(|all| all.contains(&slice));
            let nested = previous.as_ref().is_none_or(|p| {
                matches!(
                    compare_segments(p, &slice),
                    Ok(SegmentOrder::LessEq | SegmentOrder::Equal)
                )
            });
            if !(connected && nested) {
                return false;
            }
            previous = Some(slice);
        }
    }
    true
}

fn closed_from_above_ok(tree: &TreePartition<Rational>) -> bool {
    let f = tree.field();
    for c in 0..f.domain().len() {
        let len = f.component(c).length.clone();
        let mut xs: Vec<Rational> = f.breakpoints(c).iter().map(|p| p.0.clone()).collect();
        xs.extend((0..8).map(|k| len.clone() * rational(2 * k + 1, 16)));
        for x in xs {
            let Ok(top) = f.value_at(c, &x) else {
                return false;
            };
            for k in 0..=4 {
                let t = f.xi().clone() + (top.clone() - f.xi().clone()) * rational(k, 4);
                let holders: Vec<usize> = tree
                    .classes()
                    .iter()
                    .filter(|cl| cl.component == c && tree.contains(cl.id, &x, &t))
                    .map(|cl| cl.id)
                    .collect();
                if holders.len() != 1 || tree.class_of(c, &x, &t) != Ok(holders[0]) {
                    return false;
                }
                let hi = &tree.classes()[holders[0]].levels.hi;
                let lifted = if top < *hi { top.clone() } else { hi.clone() };
                if !tree.contains(holders[0], &x, &lifted) {
                    return false;
                }
            }
        }
    }
    true
}

/// Reduces a random subset of the class forest and checks the result is
/// stable with at most twice as many nodes as leaves.
fn stable_forest_ok(tree: &TreePartition<Rational>, rng: &mut ChaCha8Rng) -> bool {
    let forest = tree.forest();
    let subset: Vec<usize> = (0..forest.len()).filter(|_| rng.random_bool(0.6)).collect();
    let Ok(out) = stable_forest_reduce(&forest, &subset) else {
        return false;
    };
    let Ok(induced) = forest.induced(&out) else {
        return false;
    };
    induced.is_stable() && (out.is_empty() || out.len() <= 2 * induced.leaves())
}

/// Per-check violation flags for one field, in the order of [`CHECKS`].
pub fn check_field(
    f: &PiecewiseScalarField<Rational>,
    overrides: &PartitionOverrides,
    rng: &mut ChaCha8Rng,
) -> [bool; 6] {
    let tree = tree_partition(f);
    let mut bad = [false; 6];
    bad[0] = !tree_order_ok(&tree);
    bad[1] = !slices_ok(&tree);
    bad[2] = !closed_from_above_ok(&tree);
    let top = (0..f.domain().len())
        .map(|c| f.max_value(c))
        .max()
        .unwrap_or_else(|| f.xi().clone());
    let report = overrides
        .exact_params(f.xi(), &top)
        .ok()
        .and_then(|p| thick_thin_partition(f, &p).ok())
        .and_then(|p| verify_cardinality_bounds(&p, 1.0, 1.0).ok());
    match report {
        Some(r) => {
            let holds = |name| r.checks.iter().any(|c| c.name == name && c.pass);
            bad[3] = !holds(CHECKS[3]);
            bad[4] = !holds(CHECKS[4]);
        }
        None => {
            bad[3] = true;
            bad[4] = true;
        }
    }
    bad[5] = !stable_forest_ok(&tree, rng);
    bad
}

/// Runs the checks on fields seeded `seed, seed + 1, ...`.
pub fn run_fuzz(fields: usize, seed: u64, overrides: &PartitionOverrides) -> FuzzReport {
    let mut report = FuzzReport {
        fields,
        seed,
        max_breakpoints: MAX_BREAKPOINTS,
        violations: CHECKS.iter().map(|&c| (c, 0)).collect(),
        failing_seeds: Vec::new(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_f0e5);
    for i in 0..fields as u64 {
        let s = seed.wrapping_add(i);
        let bad = check_field(&random_exact_field(s), overrides, &mut rng);
        for (name, b) in CHECKS.iter().zip(bad) {
            if b {
                *report.violations.get_mut(name).expect("known check") += 1;
            }
        }
        if bad.iter().any(|&b| b) && report.failing_seeds.len() < 20 {
            report.failing_seeds.push(s);
        }
    }
    report
}
