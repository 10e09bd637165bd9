//! JSON and CSV encodings. Rationals travel as integer pairs `[num, den]`;
//! parts beyond `i64` are written as decimal strings.

use std::fmt::Display;

use num_traits::ToPrimitive;
use rii_core::holomorphic_curves::EnergyDensityField;
use rii_core::hypograph::{
    Arc, BoundsReport, Component, ComponentKind, Domain1D, HypographPartition, Interval,
    PiecewiseScalarField, Status,
};
use rii_core::integral_geometry::{CroftonEstimate, ProjectiveCurve};
use rii_core::scalar::{rational, Rational, Scalar};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::Error;

/// Scalars that know their JSON form.
pub trait JsonScalar: Scalar {
    fn to_json(&self) -> Value;
}

impl JsonScalar for f64 {
    fn to_json(&self) -> Value {
        json!(self)
    }
}

fn integer<T: ToPrimitive + Display>(x: &T) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

impl JsonScalar for Rational {
    fn to_json(&self) -> Value {
        json!([integer(self.numer()), integer(self.denom())])
    }
}

fn ratio(num: i64, den: i64, what: &str) -> Result<Rational, Error> {
    if den == 0 {
        return Err(Error::Input(format!("{what}: zero denominator")));
    }
    Ok(rational(num, den))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindDoc {
    Circle,
    Interval,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    pub kind: KindDoc,
    /// `[num, den]`.
    pub length: [i64; 2],
    /// `[pos_num, pos_den, val_num, val_den]` per breakpoint.
    pub breakpoints: Vec<[i64; 4]>,
}

/// Exact piecewise-linear field.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDoc {
    pub components: Vec<ComponentDoc>,
    pub xi: [i64; 2],
}

impl FieldDoc {
    pub fn parse(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(Error::input)
    }

    pub fn to_field(&self) -> Result<PiecewiseScalarField<Rational>, Error> {
        let mut comps = Vec::new();
        let mut points = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            comps.push(Component {
                kind: match c.kind {
                    KindDoc::Circle => ComponentKind::Circle,
                    KindDoc::Interval => ComponentKind::Interval,
                },
                length: ratio(c.length[0], c.length[1], &format!("component {i} length"))?,
            });
            let pts = c
                .breakpoints
                .iter()
                .map(|&[pn, pd, vn, vd]| {
                    let what = format!("component {i} breakpoint");
                    Ok((ratio(pn, pd, &what)?, ratio(vn, vd, &what)?))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            points.push(pts);
        }
        let domain = Domain1D::new(comps).map_err(Error::input)?;
        let xi = ratio(self.xi[0], self.xi[1], "xi")?;
        PiecewiseScalarField::new(domain, points, xi).map_err(Error::input)
    }
}

/// Polyline in `RP^n` given by representatives on the unit sphere.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveDoc {
    pub n: usize,
    pub closed: bool,
    pub points: Vec<Vec<f64>>,
}

impl CurveDoc {
    pub fn parse(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(Error::input)
    }

    pub fn to_curve(&self) -> Result<ProjectiveCurve, Error> {
        ProjectiveCurve::new(self.n, self.points.clone(), self.closed).map_err(Error::input)
    }

    pub fn from_curve(c: &ProjectiveCurve) -> Self {
        CurveDoc {
            n: c.dimension(),
            closed: c.is_closed(),
            points: c.points().map(<[f64]>::to_vec).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateDoc {
    pub mean: f64,
    pub std_error: f64,
    pub samples: usize,
    pub exact_length: f64,
    pub resamples: u64,
}

impl From<&CroftonEstimate> for EstimateDoc {
    fn from(e: &CroftonEstimate) -> Self {
        EstimateDoc {
            mean: e.mean,
            std_error: e.std_error,
            samples: e.samples,
            exact_length: e.exact_length,
            resamples: e.resamples,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityGridDoc {
    pub rows: usize,
    pub cols: usize,
    pub dr: f64,
    pub dtheta: f64,
    pub values: Vec<f64>,
}

impl DensityGridDoc {
    pub fn to_grid(&self) -> Result<EnergyDensityField, Error> {
        EnergyDensityField::new(
            self.rows,
            self.cols,
            self.dr,
            self.dtheta,
            self.values.clone(),
        )
        .map_err(Error::input)
    }
}

impl From<&EnergyDensityField> for DensityGridDoc {
    fn from(g: &EnergyDensityField) -> Self {
        DensityGridDoc {
            rows: g.rows,
            cols: g.cols,
            dr: g.dr,
            dtheta: g.dtheta,
            values: g.values.clone(),
        }
    }
}

/// One row of the annulus sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub a: f64,
    pub r_a: f64,
    pub area: f64,
    pub outer_len: f64,
    pub inner_len: f64,
    pub ratio: f64,
    pub outer_residual: f64,
    pub inner_residual: f64,
}

fn interval_json<S: JsonScalar>(iv: &Interval<S>) -> Value {
    json!({
        "lo": iv.lo.to_json(),
        "lo_closed": iv.lo_closed,
        "hi": iv.hi.to_json(),
        "hi_closed": iv.hi_closed,
    })
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Thick => "thick",
        Status::Thin => "thin",
    }
}

pub fn bounds_json(r: &BoundsReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "count": c.count,
                "bound": c.bound,
                "pass": c.pass,
                "asserted": c.asserted,
            })
        })
        .collect();
    json!({
        "local_maxima": r.local_maxima,
        "classes": r.classes,
        "short_necks": r.short_necks,
        "non_exceptional_necks": r.non_exceptional_necks,
        "thick_components": r.thick_components,
        "checks": checks,
    })
}

/// Classes with their thick and thin slabs, the forest as parent pointers,
/// thin necks and the bounds report.
pub fn partition_json<S: JsonScalar>(p: &HypographPartition<S>, bounds: &BoundsReport) -> Value {
    let tree = p.tree();
    let classes: Vec<Value> = tree
        .classes()
        .iter()
        .map(|c| {
            let slabs: Vec<Value> = p
                .status_runs(c.id)
                .iter()
                .map(|r| {
                    let mut v = interval_json(&r.levels);
                    v["status"] = json!(status_name(r.status));
                    v
                })
                .collect();
            json!({
                "id": c.id,
                "component": c.component,
                "levels": interval_json(&c.levels.as_interval()),
                "anchor": c.anchor.to_json(),
                "slabs": slabs,
            })
        })
        .collect();
    let parents: Vec<Option<usize>> = tree.classes().iter().map(|c| c.parent).collect();
    let necks: Vec<Value> = p
        .thin_necks()
        .iter()
        .map(|n| {
            json!({
                "class": n.class,
                "levels": interval_json(&n.levels),
                "exceptional": n.exceptional,
            })
        })
        .collect();
    json!({
        "exact": S::EXACT,
        "xi": tree.field().xi().to_json(),
        "classes": classes,
        "forest": { "parents": parents },
        "thin_necks": necks,
        "thick_components": p.thick_components(),
        "bounds": bounds_json(bounds),
    })
}

/// Plot data: the arc of every class at the bottom, middle and top of each
/// of its slabs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ArcRow {
    pub class: usize,
    pub component: usize,
    pub status: &'static str,
    pub level: f64,
    pub start: f64,
    pub end: f64,
}

pub fn arc_rows<S: Scalar>(p: &HypographPartition<S>) -> Vec<ArcRow> {
    let tree = p.tree();
    let mut rows = Vec::new();
    for c in tree.classes() {
        for run in p.status_runs(c.id) {
            let iv = &run.levels;
            let mid = S::midpoint(&iv.lo, &iv.hi);
            for t in [iv.lo.clone(), mid, iv.hi.clone()] {
                if !iv.contains(&t) {
                    continue;
                }
                let Some(seg) = tree.slice(c.id, &t) else {
                    continue;
                };
                let (start, end) = match seg.arc {
                    Arc::Full => (0.0, seg.component_length.as_f64()),
                    Arc::Span { start, end } => (start.as_f64(), end.as_f64()),
                };
                rows.push(ArcRow {
                    class: c.id,
                    component: c.component,
                    status: status_name(run.status),
                    level: t.as_f64(),
                    start,
                    end,
                });
            }
        }
    }
    rows
}

/// Serializes records as CSV with a header row.
pub fn to_csv<T: Serialize>(rows: &[T]) -> Result<String, Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(Error::input)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Input(e.to_string()))?;
    String::from_utf8(bytes).map_err(Error::input)
}
