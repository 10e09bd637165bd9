use alloc::vec::Vec;

use super::segment::Arc;
use super::thick::{HypographPartition, Status};
use super::{HypographError, PiecewiseScalarField, RadiusProfile};
use crate::scalar::Scalar;

/// Arc `start..end` of one component at level `level`, in float
/// coordinates; on circles `end` may run past the component length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskSegment {
    pub component: usize,
    pub start: f64,
    pub end: f64,
    pub level: f64,
}

impl DiskSegment {
    pub fn length(&self) -> f64 {
        self.end - self.start
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DenseDisk {
    pub component: usize,
    pub center: f64,
    pub level: f64,
    pub radius: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiskAssignment {
    pub disks: Vec<DenseDisk>,
    /// Every pair of centers is farther apart than `2 (e^{-t1} + e^{-t2})`.
    pub disjoint: bool,
}

const LENGTH_SLACK: f64 = 1e-12;

/// Points of `[lo, hi]` where `f >= t`, reduced to the candidates for the
/// one nearest `mid`: `mid` itself, the window ends and level crossings.
fn nearest_dense_point<S: Scalar>(
    f: &PiecewiseScalarField<S>,
    c: usize,
    lo: f64,
    hi: f64,
    t: f64,
) -> Option<f64> {
    let mid = 0.5 * (lo + hi);
    let value = |x: f64| {
        S::from_f64(x)
            .and_then(|x| f.value_at(c, &x).ok())
            .map(|v| v.as_f64())
    };
    let mut candidates = alloc::vec![mid, lo, hi];
    let n = f.n(c);
    let range = if f.is_circle(c) {
        -2 * n..3 * n
    } else {
        0..n - 1
    };
    for k in range {
        let (pa, pb) = (f.vpos(c, k).as_f64(), f.vpos(c, k + 1).as_f64());
        let (va, vb) = (f.vval(c, k).as_f64(), f.vval(c, k + 1).as_f64());
        if pb < lo || pa > hi || (va - t) * (vb - t) > 0.0 || va == vb {
            continue;
        }
        let x = pa + (t - va) * (pb - pa) / (vb - va);
        if (lo..=hi).contains(&x) {
            candidates.push(x);
        }
    }
    candidates
        .into_iter()
        .filter(|&x| value(x).is_some_and(|v| v >= t * (1.0 - LENGTH_SLACK) - LENGTH_SLACK))
        .min_by(|a, b| (a - mid).abs().total_cmp(&(b - mid).abs()))
}

fn circle_distance(a: f64, b: f64, period: Option<f64>) -> f64 {
    let d = (a - b).abs();
    match period {
        Some(l) => {
            let d = d - l * libm::floor(d / l);
            d.min(l - d)
        }
        None => d,
    }
}

/// Places one disk in each segment: centered at a point of the segment
/// where the field reaches the segment's level, at least `2 e^{-t}` from
/// both ends and as central as possible, with radius `e^{-t} r(center)`.
/// Every segment must be at least `8 e^{-t}` long.
pub fn dense_disk_assignment<S: Scalar>(
    field: &PiecewiseScalarField<S>,
    r: &RadiusProfile<S>,
    segments: &[DiskSegment],
) -> Result<DiskAssignment, HypographError> {
    let mut disks = Vec::with_capacity(segments.len());
    for (i, s) in segments.iter().enumerate() {
        field.check_component(s.component)?;
        let unit = libm::exp(-s.level);
        if s.length() < 8.0 * unit * (1.0 - LENGTH_SLACK) {
            return Err(HypographError::SegmentTooShort(i));
        }
        let center = nearest_dense_point(
            field,
            s.component,
            s.start + 2.0 * unit,
            s.end - 2.0 * unit,
            s.level,
        )
        .ok_or(HypographError::NoDensePoint(i))?;
        let rc = S::from_f64(center).ok_or(HypographError::NoDensePoint(i))?;
        let radius = unit * r.value_at(s.component, &rc)?.as_f64();
        disks.push(DenseDisk {
            component: s.component,
            center,
            level: s.level,
            radius,
        });
    }
    let mut disjoint = true;
    for (i, a) in disks.iter().enumerate() {
        for b in &disks[i + 1..] {
            if a.component != b.component {
                continue;
            }
            let period = field.period(a.component).map(|l| l.as_f64());
            let gap = 2.0 * (libm::exp(-a.level) + libm::exp(-b.level));
            if circle_distance(a.center, b.center, period) <= gap {
                disjoint = false;
            }
        }
    }
    Ok(DiskAssignment { disks, disjoint })
}

/// One thick slice at a discretization level: the slice `k` used for
/// counting, its length and the `n = floor(e^t len / 8)` pieces cut from it.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscretizedSegment {
    pub class: usize,
    /// The level the slice was taken at; above the neck when the nominal
    /// level falls in an exceptional thin neck.
    pub level: f64,
    pub length: f64,
    pub count: u64,
    pub pieces: Vec<DiskSegment>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiscretizationLevel {
    pub index: usize,
    pub level: f64,
    pub segments: Vec<DiscretizedSegment>,
}

/// Slices the thick part at levels `t_i = 2 i ln 3 + t_min` up to the top
/// of the field. A slice inside an exceptional neck is replaced by the
/// thick slice just above the neck. Each slice of length `len` at level `t`
/// is cut into `floor(e^t len / 8)` equal pieces, each at least `8 e^{-t}`
/// long.
pub fn discretize_thick_part<S: Scalar>(
    p: &HypographPartition<S>,
    t_min: f64,
) -> Vec<DiscretizationLevel> {
    let tree = p.tree();
    let f = tree.field();
    let top = (0..f.domain().len())
        .map(|c| f.max_value(c).as_f64())
        .fold(f64::NEG_INFINITY, f64::max);
    let step = 2.0 * libm::log(3.0);
    let mut out = Vec::new();
    let mut i = 0;
    loop {
        let t = t_min + step * i as f64;
        if t > top {
            break;
        }
        let mut segments = Vec::new();
        if let Some(ts) = S::from_f64(t) {
            for class in tree.classes().iter().filter(|c| c.levels.contains(&ts)) {
                let Some(status) = p.status_at(class.id, &ts) else {
                    continue;
                };
                let chosen = match status {
                    Status::Thick => Some((class.id, ts.clone())),
                    Status::Thin => above_neck(p, class.id, &ts),
                };
                if let Some((cls, level)) = chosen {
                    if let Some(seg) = discretize_slice(p, cls, &level) {
                        segments.push(seg);
                    }
                }
            }
        }
        out.push(DiscretizationLevel {
            index: i,
            level: t,
            segments,
        });
        i += 1;
    }
    out
}

/// For a level inside an exceptional neck: a class and a level just above
/// the neck's top where the slice is thick.
fn above_neck<S: Scalar>(p: &HypographPartition<S>, class: usize, t: &S) -> Option<(usize, S)> {
    let neck = p
        .thin_necks()
        .iter()
        .find(|n| n.class == class && n.levels.contains(t))?;
    if !neck.exceptional {
        return None;
    }
    let top = neck.levels.hi.clone();
    let nudge = |hi: &S| {
        let room = (hi.clone() - top.clone()) / S::from_int(2);
        let eps = S::from_f64(1e-9 * top.as_f64().abs().max(1.0)).unwrap_or_else(|| room.clone());
        top.clone() + S::min_of(&room, &eps)
    };
    let runs = p.status_runs(class);
    if let Some(next) = runs
        .iter()
        .find(|r| r.status == Status::Thick && r.levels.lo == top)
    {
        return Some((class, nudge(&next.levels.hi)));
    }
    p.tree().classes()[class].children.iter().find_map(|&ch| {
        let first = p.status_runs(ch).first()?;
        (first.status == Status::Thick).then(|| (ch, nudge(&first.levels.hi)))
    })
}

fn discretize_slice<S: Scalar>(
    p: &HypographPartition<S>,
    class: usize,
    level: &S,
) -> Option<DiscretizedSegment> {
    let seg = p.tree().slice(class, level)?;
    let t = level.as_f64();
    let length = seg.length().as_f64();
    let count = libm::floor(libm::exp(t) * length / 8.0).max(0.0) as u64;
    let start = match &seg.arc {
        Arc::Full => 0.0,
        Arc::Span { start, .. } => start.as_f64(),
    };
    let piece = if count > 0 {
        length / count as f64
    } else {
        0.0
    };
    let pieces = (0..count)
        .map(|k| DiskSegment {
            component: seg.component,
            start: start + piece * k as f64,
            end: start + piece * (k + 1) as f64,
            level: t,
        })
        .collect();
    Some(DiscretizedSegment {
        class,
        level: t,
        length,
        count,
        pieces,
    })
}
