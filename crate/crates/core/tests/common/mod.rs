//! Random field generators and a brute-force grid oracle for the hypograph
//! partition, shared by the integration tests.

#![allow(dead_code)]

pub mod spanning;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rii_core::hypograph::{
    thick_thin_partition, Component, ComponentKind, Domain1D, PartitionParams, PiecewiseScalarField,
};
use rii_core::scalar::{rational, Rational};

/// Breakpoint data: per component `(kind, length, [(position, value)])`.
pub type RawField = Vec<(ComponentKind, f64, Vec<(f64, f64)>)>;

/// `(is_circle, length, [(position, value)])` in integer units.
pub type IntComponent = (bool, i64, Vec<(i64, i64)>);

/// Base level used by the oracle fields: `ln 2`, i.e. `k = 1`.
pub fn base_level() -> f64 {
    std::f64::consts::LN_2
}

/// Values `xi + i/8` with `i <= 16` at random positions on one or two
/// components of length 2 to 16.
pub fn random_raw_field(seed: u64) -> RawField {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xi = base_level();
    let comps = rng.random_range(1..=2);
    (0..comps)
        .map(|_| {
            let kind = if rng.random_bool(0.5) {
                ComponentKind::Circle
            } else {
                ComponentKind::Interval
            };
            let length: f64 = rng.random_range(2.0..16.0);
            let interior = rng.random_range(1..=9);
            let mut xs: Vec<f64> = (0..interior)
                .map(|_| rng.random_range(0.0..length))
                .collect();
            if kind == ComponentKind::Interval {
                xs.push(0.0);
                xs.push(length);
            }
            xs.sort_by(f64::total_cmp);
            xs.dedup();
            let pts = xs
                .into_iter()
                .map(|x| (x, xi + rng.random_range(0..=16) as f64 / 8.0))
                .collect();
            (kind, length, pts)
        })
        .collect()
}

/// A wide shelf around a narrow-walled plateau: thick at the base, a thin
/// band above the shelf and thick again once the plateau outgrows `24 e^{-t}`.
pub fn shelf_raw_field(seed: u64) -> RawField {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xi = base_level();
    let circle = rng.random_bool(0.5);
    let shelf: f64 = rng.random_range(0.25..0.75);
    let top = shelf + rng.random_range(0.9..1.6);
    let plateau: f64 = rng.random_range(2.5..5.0);
    let wall = rng.random_range(0.05..0.5);
    let left: f64 = rng.random_range(3.0..6.0);
    let right: f64 = rng.random_range(3.0..6.0);
    let rim = rng.random_range(0.2..0.6);
    let mut x = rim;
    let mut pts = Vec::new();
    if !circle {
        pts.push((0.0, xi));
    }
    for (dx, v) in [
        (0.0, shelf),
        (left, shelf),
        (wall, top),
        (plateau, top),
        (wall, shelf),
        (right, shelf),
    ] {
        x += dx;
        pts.push((x, xi + v));
    }
    let length = x + rim;
    if !circle {
        pts.push((length, xi));
    }
    let kind = if circle {
        ComponentKind::Circle
    } else {
        ComponentKind::Interval
    };
    vec![(kind, length, pts)]
}

pub fn float_field(raw: &RawField, xi: f64) -> PiecewiseScalarField<f64> {
    let domain = Domain1D::new(
        raw.iter()
            .map(|(kind, length, _)| Component {
                kind: *kind,
                length: *length,
            })
            .collect(),
    )
    .unwrap();
    PiecewiseScalarField::new(domain, raw.iter().map(|c| c.2.clone()).collect(), xi).unwrap()
}

/// Exact field from integer data: positions `p / den` on components of
/// length `len / den`, values `v / 8`.
pub fn exact_field(comps: &[IntComponent], den: i64) -> PiecewiseScalarField<Rational> {
    let domain = Domain1D::new(
        comps
            .iter()
            .map(|(circle, len, _)| Component {
                kind: if *circle {
                    ComponentKind::Circle
                } else {
                    ComponentKind::Interval
                },
                length: rational(*len, den),
            })
            .collect(),
    )
    .unwrap();
    let bps = comps
        .iter()
        .map(|(_, _, pts)| {
            pts.iter()
                .map(|&(p, v)| (rational(p, den), rational(v, 8)))
                .collect()
        })
        .collect();
    PiecewiseScalarField::new(domain, bps, rational(0, 1)).unwrap()
}

/// The float twin of `exact_field` data, without its base level.
pub fn to_raw(comps: &[IntComponent], den: i64) -> RawField {
    let den = den as f64;
    comps
        .iter()
        .map(|(circle, len, pts)| {
            let kind = if *circle {
                ComponentKind::Circle
            } else {
                ComponentKind::Interval
            };
            let pts = pts
                .iter()
                .map(|&(p, v)| (p as f64 / den, v as f64 / 8.0))
                .collect();
            (kind, *len as f64 / den, pts)
        })
        .collect()
}

/// Segment of `{f >= t}` on one component: `start..end` with `start` in
/// `[0, length)`, `end` possibly past `length` on circles.
#[derive(Debug, Clone, Copy)]
pub struct GridSegment {
    pub start: f64,
    pub end: f64,
    pub full: bool,
}

impl GridSegment {
    pub fn length(&self, period: f64) -> f64 {
        if self.full {
            period
        } else {
            self.end - self.start
        }
    }

    pub fn contains(&self, x: f64, period: Option<f64>) -> bool {
        if self.full {
            return true;
        }
        match period {
            None => self.start <= x && x <= self.end,
            Some(l) => {
                let x = x.rem_euclid(l);
                (self.start <= x && x <= self.end) || (self.start <= x + l && x + l <= self.end)
            }
        }
    }

    fn probe(&self) -> f64 {
        if self.full {
            0.0
        } else {
            0.5 * (self.start + self.end)
        }
    }
}

/// Pieces of `{f >= t}` edge by edge, merged into segments.
pub fn segments_at(
    kind: ComponentKind,
    length: f64,
    pts: &[(f64, f64)],
    t: f64,
) -> Vec<GridSegment> {
    let circle = kind == ComponentKind::Circle;
    let n = pts.len();
    if pts.iter().all(|p| p.1 >= t) && circle {
        return vec![GridSegment {
            start: 0.0,
            end: length,
            full: true,
        }];
    }
    let edges = if circle { n } else { n - 1 };
    let mut pieces: Vec<(f64, f64)> = Vec::new();
    if n == 1 {
        return Vec::new();
    }
    for e in 0..edges {
        let (x0, v0) = pts[e];
        let (mut x1, v1) = pts[(e + 1) % n];
        if e + 1 == n {
            x1 += length;
        }
        let cross = |v: f64| x0 + (t - v0) * (x1 - x0) / (v - v0);
        let piece = match (v0 >= t, v1 >= t) {
            (true, true) => Some((x0, x1)),
            (true, false) => Some((x0, cross(v1))),
            (false, true) => Some((cross(v1), x1)),
            (false, false) => None,
        };
        if let Some(p) = piece {
            match pieces.last_mut() {
                Some(last) if last.1 == p.0 => last.1 = p.1,
                _ => pieces.push(p),
            }
        }
    }
    if circle && pieces.len() > 1 {
        let first = pieces[0];
        let last = *pieces.last().unwrap();
        if first.0 == pts[0].0 && last.1 == pts[0].0 + length {
            pieces.pop();
            pieces[0] = (last.0, first.1 + length);
        }
    }
    pieces
        .into_iter()
        .map(|(a, b)| {
            let shift = if circle {
                (a / length).floor() * length
            } else {
                0.0
            };
            GridSegment {
                start: a - shift,
                end: b - shift,
                full: false,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridNeck {
    pub bottom: usize,
    pub top: usize,
    pub exceptional: bool,
}

#[derive(Debug, Clone)]
pub struct GridClass {
    pub component: usize,
    pub first: usize,
    pub last: usize,
    pub segs: Vec<usize>,
    pub necks: Vec<GridNeck>,
}

#[derive(Debug)]
pub struct GridPartition {
    pub levels: Vec<Vec<f64>>,
    pub segments: Vec<Vec<Vec<GridSegment>>>,
    pub class_of: Vec<Vec<Vec<usize>>>,
    pub classes: Vec<GridClass>,
    /// Some label or neck height sits too close to a threshold for this
    /// grid to decide.
    pub ambiguous: bool,
}

impl GridPartition {
    /// Grid class holding position `x` at the given level index.
    pub fn class_at(
        &self,
        component: usize,
        level: usize,
        x: f64,
        period: Option<f64>,
    ) -> Option<usize> {
        self.segments[component][level]
            .iter()
            .position(|s| s.contains(x, period))
            .map(|i| self.class_of[component][level][i])
    }
}

/// Scans levels `xi`, `xi + (j - 1/2) h` for `j >= 1`, with `h` at most
/// `1 / (8 m)` and a thousandth of the component's rise, and every vertex
/// value up to the top of each component. Between vertex values the length
/// is affine in `t`, so the samples pin down `length - w` exactly there; a
/// window in which the labels change and change back unseen marks the field
/// undecided. The scan links each segment to the one below containing it,
/// and cuts chains wherever a segment has more or fewer than one segment
/// directly above it. A segment is thin when its length is at most
/// `24 e^{-t}`.
pub fn grid_partition(raw: &RawField, xi: f64, m: usize) -> GridPartition {
    let gap = 3f64.ln();
    let w = |t: f64| 24.0 * (-t).exp();
    let mut out = GridPartition {
        levels: Vec::new(),
        segments: Vec::new(),
        class_of: Vec::new(),
        classes: Vec::new(),
        ambiguous: false,
    };
    for (c, (kind, length, pts)) in raw.iter().enumerate() {
        let period = (*kind == ComponentKind::Circle).then_some(*length);
        let top = pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
        // at least a thousand levels on any component that rises at all
        let h = (1.0 / (8.0 * m as f64)).min((top - xi) / 1000.0);
        let mut levels = vec![xi];
        let mut j = 1;
        loop {
            let t = xi + (j as f64 - 0.5) * h;
            if t > top {
                break;
            }
            levels.push(t);
            j += 1;
        }
        levels.extend(pts.iter().map(|p| p.1).filter(|&v| v > xi));
        levels.sort_by(f64::total_cmp);
        levels.dedup();
        let vertex = |t: f64| pts.iter().any(|p| p.1 == t);

        let segs: Vec<Vec<GridSegment>> = levels
            .iter()
            .map(|&t| segments_at(*kind, *length, pts, t))
            .collect();
        let mut below: Vec<Vec<Option<usize>>> = Vec::with_capacity(levels.len());
        let mut above_count: Vec<Vec<usize>> = segs.iter().map(|s| vec![0; s.len()]).collect();
        for j in 0..levels.len() {
            let links: Vec<Option<usize>> = segs[j]
                .iter()
                .map(|s| {
                    if j == 0 {
                        return None;
                    }
                    let p = segs[j - 1]
                        .iter()
                        .position(|q| q.contains(s.probe(), period));
                    assert!(p.is_some(), "higher segment outside every lower one");
                    p
                })
                .collect();
            for p in links.iter().flatten() {
                above_count[j - 1][*p] += 1;
            }
            below.push(links);
        }
        let mut class_of: Vec<Vec<usize>> =
            segs.iter().map(|s| vec![usize::MAX; s.len()]).collect();
        for j in 0..levels.len() {
            for i in 0..segs[j].len() {
                let continues = below[j][i].filter(|&p| above_count[j - 1][p] == 1);
                let id = match continues {
                    Some(p) => class_of[j - 1][p],
                    None => {
                        out.classes.push(GridClass {
                            component: c,
                            first: j,
                            last: j,
                            segs: Vec::new(),
                            necks: Vec::new(),
                        });
                        out.classes.len() - 1
                    }
                };
                class_of[j][i] = id;
                out.classes[id].last = j;
                out.classes[id].segs.push(i);
            }
        }

        let thin = |j: usize, i: usize| segs[j][i].length(*length) <= w(levels[j]);
        let first_class = out
            .classes
            .iter()
            .position(|k| k.component == c)
            .unwrap_or(out.classes.len());
        let mut undecided = false;
        for k in &out.classes[first_class..] {
            let len = |off: usize| segs[k.first + off][k.segs[off]].length(*length);
            for off in 0..k.segs.len() {
                let j = k.first + off;
                if j == 0 {
                    continue;
                }
                let (lo, hi) = (levels[j - 1], levels[j]);
                // slope of the length on (lo, hi], which holds no vertex value
                let slope = if off > 0 && !vertex(lo) {
                    (len(off) - len(off - 1)) / (hi - lo)
                } else if off + 1 < k.segs.len() && !vertex(hi) {
                    (len(off + 1) - len(off)) / (levels[j + 1] - hi)
                } else {
                    undecided = true;
                    continue;
                };
                let d = |t: f64| len(off) + slope * (t - hi) - w(t);
                let peak = if slope < 0.0 {
                    (24.0 / -slope).ln().clamp(lo, hi)
                } else {
                    hi
                };
                let prior = (off > 0).then(|| len(off - 1) - w(lo));
                let (dmax, start) = (d(peak), d(lo));
                let eps = 1e-9;
                if d(hi) <= 0.0 {
                    // a thick stretch strictly inside the window goes unseen
                    if dmax > -eps && prior.is_none_or(|p| p <= 0.0) {
                        undecided = true;
                    }
                } else if start < eps && prior.is_none_or(|p| p > 0.0) {
                    // a thin stretch right above `lo`
                    undecided = true;
                }
            }
        }
        out.ambiguous |= undecided;
        for id in first_class..out.classes.len() {
            let k = out.classes[id].clone();
            let mut necks = Vec::new();
            let mut run: Option<usize> = None;
            for (off, &i) in k.segs.iter().enumerate() {
                let j = k.first + off;
                match (thin(j, i), run) {
                    (true, None) => run = Some(j),
                    (false, Some(b)) => {
                        necks.push((b, j - 1));
                        run = None;
                    }
                    _ => {}
                }
            }
            if let Some(b) = run {
                necks.push((b, k.last));
            }
            for (b, tp) in necks {
                let bottom_seg = k.segs[b - k.first];
                let top_seg = k.segs[tp - k.first];
                // heights: bottom in (t_{b-1}, t_b], top in [t_tp, t_{tp+1})
                let lo_b = if b == 0 { levels[0] } else { levels[b - 1] };
                let hi_top = levels.get(tp + 1).copied().unwrap_or(top);
                let (min_h, max_h) = (levels[tp] - levels[b], hi_top - lo_b);
                if min_h < gap && gap <= max_h {
                    out.ambiguous = true;
                }
                let short = max_h < gap;
                let lower = b > 0 && below[b][bottom_seg].is_some_and(|p| !thin(b - 1, p));
                let upper = tp + 1 < levels.len()
                    && (0..segs[tp + 1].len())
                        .any(|i| below[tp + 1][i] == Some(top_seg) && !thin(tp + 1, i));
                out.classes[id].necks.push(GridNeck {
                    bottom: b,
                    top: tp,
                    exceptional: short && lower && upper,
                });
            }
        }
        out.levels.push(levels);
        out.segments.push(segs);
        out.class_of.push(class_of);
    }
    out
}

/// Runs the grid at 1/1024, 1/4096 and 1/16384 until it is unambiguous.
pub fn decisive_grid(raw: &RawField, xi: f64) -> Option<GridPartition> {
    [128, 512, 2048]
        .into_iter()
        .map(|m| grid_partition(raw, xi, m))
        .find(|g| !g.ambiguous)
}

/// Compares the exact partition of one field with the grid; `Err` names the
/// first mismatch.
pub fn compare_with_grid(raw: &RawField, grid: &GridPartition) -> Result<(), String> {
    let xi = base_level();
    let field = float_field(raw, xi);
    let p =
        thick_thin_partition(&field, &PartitionParams::float(1.0)).map_err(|e| e.to_string())?;
    if p.classes().len() != grid.classes.len() {
        return Err(format!(
            "{} classes, grid has {}",
            p.classes().len(),
            grid.classes.len()
        ));
    }
    let mut matched = vec![false; grid.classes.len()];
    for class in p.classes() {
        let c = class.component;
        let period = (raw[c].0 == ComponentKind::Circle).then_some(raw[c].1);
        let levels = &grid.levels[c];
        let inside: Vec<usize> = (0..levels.len())
            .filter(|&j| class.levels.contains(&levels[j]))
            .collect();
        let Some(&j) = inside.get(inside.len() / 2) else {
            return Err(format!("class {} holds no grid level", class.id));
        };
        let g = grid
            .class_at(c, j, class.anchor, period)
            .ok_or_else(|| format!("anchor of class {} outside the grid slice", class.id))?;
        if std::mem::replace(&mut matched[g], true) {
            return Err(format!("grid class {g} matched twice"));
        }
        let mut necks: Vec<_> = p
            .thin_necks()
            .iter()
            .filter(|n| n.class == class.id)
            .collect();
        necks.sort_by(|a, b| a.levels.lo.total_cmp(&b.levels.lo));
        let exact: Vec<bool> = necks.iter().map(|n| n.exceptional).collect();
        let oracle: Vec<bool> = grid.classes[g]
            .necks
            .iter()
            .map(|n| n.exceptional)
            .collect();
        if exact != oracle {
            return Err(format!(
                "class {}: necks {exact:?}, grid {oracle:?}",
                class.id
            ));
        }
    }
    Ok(())
}
