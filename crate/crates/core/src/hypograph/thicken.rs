use alloc::vec::Vec;

use super::field::{Pred, Run};
use super::levels::{Interval, LevelSet};
use super::thick::run_length_affine;
use super::threshold::Threshold;
use super::{HypographError, PartitionParams, PiecewiseScalarField, RadiusProfile};
use crate::scalar::Scalar;

/// Per-component report on the preconditions of the thickening.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentConditions<S> {
    pub component: usize,
    pub max_value: S,
    /// `w_E(max g) <= length`.
    pub long: bool,
    /// `max g >= t_min`.
    pub hot: bool,
}

/// A gap raised to a constant level: positions `start..end` (unwrapped on
/// circles) take the value `level`.
#[derive(Debug, Clone, PartialEq)]
pub struct Fill<S> {
    pub component: usize,
    pub start: S,
    pub end: S,
    pub level: S,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Thickening<S> {
    pub field: PiecewiseScalarField<S>,
    pub fills: Vec<Fill<S>>,
    pub conditions: Vec<ComponentConditions<S>>,
}

/// Node of the join tree of sublevel gaps `{g < t}`: one gap for levels in
/// `(birth, death]`, `death = None` meaning unbounded.
struct GapNode<S> {
    birth: S,
    death: Option<S>,
    parent: Option<usize>,
    vertex: i64,
}

/// Maximal runs of vertices with value `<= u`; a circle entirely below
/// gives one run of all vertices.
fn runs_at_most<S: Scalar>(f: &PiecewiseScalarField<S>, c: usize, u: &S) -> Vec<Vec<i64>> {
    let n = f.n(c);
    let start = if f.is_circle(c) {
        match (0..n).find(|&k| f.vval(c, k) > u) {
            Some(k) => k + 1,
            None => return alloc::vec![(0..n).collect()],
        }
    } else {
        0
    };
    let mut runs = Vec::new();
    let mut cur = Vec::new();
    for k in start..start + n {
        if f.vval(c, k) <= u {
            cur.push(k);
        } else if !cur.is_empty() {
            runs.push(core::mem::take(&mut cur));
        }
    }
    if !cur.is_empty() {
        runs.push(cur);
    }
    runs
}

fn gap_nodes<S: Scalar>(f: &PiecewiseScalarField<S>, c: usize) -> Vec<GapNode<S>> {
    let n = f.n(c);
    let mut nodes: Vec<GapNode<S>> = Vec::new();
    let mut node_of: Vec<Option<usize>> = alloc::vec![None; n as usize];
    for u in f.distinct_values(c) {
        for run in runs_at_most(f, c, &u) {
            let mut below = Vec::new();
            let mut prev_below = false;
            for &k in &run {
                let is_below = *f.vval(c, k) < u;
                if is_below && !prev_below {
                    below.push(
                        node_of[k.rem_euclid(n) as usize]
                            .expect("lower vertices already have a gap"),
                    );
                }
                prev_below = is_below;
            }
            let id = if below.len() == 1 {
                below[0]
            } else {
                let id = nodes.len();
                for &child in &below {
                    nodes[child].death = Some(u.clone());
                    nodes[child].parent = Some(id);
                }
                nodes.push(GapNode {
                    birth: u.clone(),
                    death: None,
                    parent: None,
                    vertex: run[0],
                });
                id
            };
            for &k in &run {
                node_of[k.rem_euclid(n) as usize] = Some(id);
            }
        }
    }
    nodes
}

fn gap_length<S: Scalar>(f: &PiecewiseScalarField<S>, c: usize, run: &Run<S>, t: &S) -> S {
    let (alpha, beta) = run_length_affine(f, c, run);
    alpha + beta * t.clone()
}

/// Largest level in `(lo, inf)` where a gap of constant length `len` is
/// still short, or `None` when it stays short forever.
fn last_short_level<S: Scalar>(w: &Threshold<S>, lo: &S, len: &S) -> Option<S> {
    match w {
        Threshold::Zero => Some(lo.clone()),
        Threshold::Exponential { coeff } => {
            let t = libm::log(coeff / len.as_f64());
            let t = S::from_f64(t).unwrap_or_else(|| lo.clone());
            Some(S::max_of(&t, lo))
        }
        Threshold::Staircase { cuts, values } => {
            if values[values.len() - 1] >= *len {
                return None;
            }
            let best = cuts
                .iter()
                .zip(values)
                .filter(|(cut, v)| *cut > lo && *v >= len)
                .map(|(cut, _)| cut.clone())
                .last();
            Some(best.unwrap_or_else(|| lo.clone()))
        }
    }
}

/// Supremum of the short levels of `node`, and whether the node is short
/// all the way up to its death.
fn short_until<S: Scalar>(
    f: &PiecewiseScalarField<S>,
    c: usize,
    node: &GapNode<S>,
    w: &Threshold<S>,
    tol: f64,
) -> Result<(S, bool), HypographError> {
    let mut levels: Vec<S> = f
        .distinct_values(c)
        .into_iter()
        .filter(|v| *v > node.birth && node.death.as_ref().is_none_or(|d| v <= d))
        .collect();
    if let Some(d) = &node.death {
        if levels.last() != Some(d) {
            levels.push(d.clone());
        }
    }
    let mut prev = node.birth.clone();
    for v in levels {
        let mid = S::midpoint(&prev, &v);
        let run = f.walk(c, node.vertex, Pred::Below, &mid);
        let (alpha, beta) = run_length_affine(f, c, &run);
        let atom = Interval::open(prev.clone(), v.clone());
        // staircase parts split at cuts; glue them back
        let mut short = LevelSet::new();
        for p in w.solve_le(&atom, &alpha, &beta, tol) {
            short.push(p);
        }
        let parts = short.parts();
        if parts.first() != Some(&atom) {
            let sup = match parts.first() {
                Some(p) if p.lo == atom.lo => p.hi.clone(),
                _ => prev,
            };
            return Ok((sup, false));
        }
        let at = f.walk(c, node.vertex, Pred::Below, &v);
        if gap_length(f, c, &at, &v) > w.value(&v) {
            return Ok((v, false));
        }
        prev = v;
    }
    if node.death.is_some() {
        return Ok((prev, true));
    }
    // above the top vertex the gap is the whole component
    let len = f.component(c).length.clone();
    match last_short_level(w, &prev, &len) {
        Some(t) => Ok((t, false)),
        None => Err(HypographError::UnboundedFill(c)),
    }
}

/// Fills every gap of `{g < t}` whose length is at most `w_E(t)`, giving
/// the boundary function of the thickened hypograph: each point is raised
/// to the supremum of the levels at which its gap is short. The result is
/// continuous and never below `g`.
///
/// Positions are lengths in the normalized metric, so `r` only has to
/// match the domain. The long and hot conditions are reported per
/// component without failing.
pub fn thickened_hypograph<S: Scalar>(
    g: &PiecewiseScalarField<S>,
    r: &RadiusProfile<S>,
    params: &PartitionParams<S>,
) -> Result<Thickening<S>, HypographError> {
    params.validate()?;
    let count = g.domain().len();
    if r.components() != count {
        return Err(HypographError::ComponentCount {
            expected: count,
            found: r.components(),
        });
    }
    let w = &params.width_e;
    let mut fills = Vec::new();
    let mut breakpoints = Vec::with_capacity(count);
    let mut conditions = Vec::with_capacity(count);
    for c in 0..count {
        let max_value = g.max_value(c);
        let length = g.component(c).length.clone();
        conditions.push(ComponentConditions {
            component: c,
            long: w.value(&max_value) <= length,
            hot: max_value >= params.t_min,
            max_value,
        });

        let nodes = gap_nodes(g, c);
        let mut sup: Vec<Option<S>> = alloc::vec![None; nodes.len()];
        let mut reaches: Vec<bool> = alloc::vec![false; nodes.len()];
        for (i, node) in nodes.iter().enumerate() {
            let (s, full) = short_until(g, c, node, w, params.tolerance)?;
            sup[i] = Some(s);
            reaches[i] = full;
        }
        // a node short up to its death inherits its parent's supremum
        let level_of = |mut i: usize| -> S {
            while reaches[i] {
                i = nodes[i].parent.expect("only unbounded nodes lack a parent");
            }
            sup[i].clone().expect("computed above")
        };
        let mut comp_fills: Vec<Fill<S>> = Vec::new();
        for (i, node) in nodes.iter().enumerate() {
            let level = level_of(i);
            let inside = level > node.birth && node.death.as_ref().is_none_or(|d| level <= *d);
            if !inside {
                continue;
            }
            let run = g.walk(c, node.vertex, Pred::Below, &level);
            let (start, end) = if run.full {
                (S::zero(), length.clone())
            } else {
                (
                    g.end_position(c, &run.left, &level),
                    g.end_position(c, &run.right, &level),
                )
            };
            comp_fills.push(Fill {
                component: c,
                start,
                end,
                level,
            });
        }
        breakpoints.push(raise(g, c, &comp_fills));
        fills.extend(comp_fills);
    }
    let field = PiecewiseScalarField::new(g.domain().clone(), breakpoints, g.xi().clone())?;
    Ok(Thickening {
        field,
        fills,
        conditions,
    })
}

fn raise<S: Scalar>(g: &PiecewiseScalarField<S>, c: usize, fills: &[Fill<S>]) -> Vec<(S, S)> {
    let period = g.period(c);
    let length = g.component(c).length.clone();
    let whole = |fl: &Fill<S>| period.is_some() && fl.end.clone() - fl.start.clone() >= length;
    if let Some(top) = fills.iter().find(|fl| whole(fl)) {
        return alloc::vec![(S::zero(), top.level.clone())];
    }
    let shifts: &[i64] = if period.is_some() { &[-1, 0, 1] } else { &[0] };
    let strictly_inside = |x: &S, fl: &Fill<S>| {
        shifts.iter().any(|&k| {
            let y = x.clone() + S::from_int(k) * length.clone();
            fl.start < y && y < fl.end
        })
    };
    let mut pts: Vec<(S, S)> = g
        .breakpoints(c)
        .iter()
        .filter(|(x, _)| !fills.iter().any(|fl| strictly_inside(x, fl)))
        .cloned()
        .collect();
    for fl in fills {
        for x in [&fl.start, &fl.end] {
            let x = match &period {
                Some(l) => x.rem_euclid_by(l),
                None => x.clone(),
            };
            if !fills.iter().any(|other| strictly_inside(&x, other)) {
                pts.push((x, fl.level.clone()));
            }
        }
    }
    pts.sort_by(|a, b| a.0.cmp_total(&b.0).then_with(|| b.1.cmp_total(&a.1)));
    pts.dedup_by(|later, earlier| later.0 == earlier.0);
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypograph::{Component, ComponentKind, Domain1D};
    use crate::scalar::{rational, Rational};
    use alloc::vec;

    fn interval(length: f64, pts: Vec<(f64, f64)>, xi: f64) -> PiecewiseScalarField<f64> {
        let d = Domain1D::new(vec![Component {
            kind: ComponentKind::Interval,
            length,
        }])
        .unwrap();
        PiecewiseScalarField::new(d, vec![pts], xi).unwrap()
    }

    fn two_tents() -> PiecewiseScalarField<f64> {
        // gap of width 0.01 at level 1 closing to a V at level 0.5
        interval(
            2.02,
            vec![
                (0.0, 0.5),
                (1.0, 9.0),
                (1.005, 0.5),
                (1.01, 0.5),
                (1.015, 0.5),
                (1.02, 9.0),
                (2.02, 0.5),
            ],
            0.5,
        )
    }

    #[test]
    fn zero_threshold_changes_nothing() {
        let g = two_tents();
        let r = RadiusProfile::constant(g.domain(), 1.0).unwrap();
        let mut params = PartitionParams::float(1.0);
        params.width_e = Threshold::Zero;
        let th = thickened_hypograph(&g, &r, &params).unwrap();
        assert_eq!(th.field.breakpoints(0), g.breakpoints(0));
        assert!(th.fills.is_empty());
    }

    #[test]
    fn narrow_gap_fills_to_the_crossing() {
        let g = two_tents();
        let r = RadiusProfile::constant(g.domain(), 1.0).unwrap();
        let th = thickened_hypograph(&g, &r, &PartitionParams::float(1.0)).unwrap();
        // the gaps at both interval ends fill too; pick the middle one
        let inner: Vec<&Fill<f64>> = th
            .fills
            .iter()
            .filter(|f| f.start > 0.5 && f.end < 1.5)
            .collect();
        assert_eq!(inner.len(), 1);
        let fl = inner[0];
        let gap = fl.end - fl.start;
        assert!((gap - 4.0 * libm::exp(-fl.level)).abs() < 1e-9, "{fl:?}");
        assert!(th.field.value_at(0, &1.01).unwrap() >= fl.level - 1e-12);
        for x in [0.3, 1.0, 1.7] {
            // float breakpoints land on g up to roundoff
            assert!(th.field.value_at(0, &x).unwrap() >= g.value_at(0, &x).unwrap() - 1e-12);
        }
    }

    #[test]
    fn ramp_fills_its_boundary_gap() {
        let d = Domain1D::new(vec![Component {
            kind: ComponentKind::Interval,
            length: rational(4, 1),
        }])
        .unwrap();
        let g = PiecewiseScalarField::new(
            d,
            vec![vec![
                (rational(0, 1), rational(1, 1)),
                (rational(4, 1), rational(3, 1)),
            ]],
            rational(1, 1),
        )
        .unwrap();
        let r = RadiusProfile::constant(g.domain(), rational(1, 1)).unwrap();
        let w = Threshold::Staircase {
            cuts: vec![rational(2, 1)],
            values: vec![rational(1, 100), rational(1, 200)],
        };
        let params: PartitionParams<Rational> =
            PartitionParams::exact(rational(1, 1), rational(1, 1), w.clone(), w);
        let th = thickened_hypograph(&g, &r, &params).unwrap();
        // {g < t} = [0, 2(t - 1)) stays short up to t = 1 + 1/200
        assert_eq!(th.fills.len(), 1);
        assert_eq!(th.fills[0].level, rational(201, 200));
        assert_eq!(
            th.field.value_at(0, &rational(0, 1)).unwrap(),
            rational(201, 200)
        );
        assert_eq!(
            th.field.value_at(0, &rational(2, 1)).unwrap(),
            rational(2, 1)
        );
        assert!(th.conditions[0].long && th.conditions[0].hot);
    }

    #[test]
    fn plateau_has_nothing_to_fill() {
        let g =
            PiecewiseScalarField::constant_circle(rational(3, 1), rational(2, 1), rational(1, 1))
                .unwrap();
        let r = RadiusProfile::constant(g.domain(), rational(1, 1)).unwrap();
        let w = Threshold::Staircase {
            cuts: vec![rational(2, 1)],
            values: vec![rational(1, 1), rational(1, 2)],
        };
        let params = PartitionParams::exact(rational(1, 1), rational(1, 1), w.clone(), w);
        assert_eq!(thickened_hypograph(&g, &r, &params).unwrap().field, g);
    }

    #[test]
    fn huge_staircase_fills_without_bound() {
        let g =
            PiecewiseScalarField::constant_circle(rational(1, 1), rational(2, 1), rational(0, 1))
                .unwrap();
        let r = RadiusProfile::constant(g.domain(), rational(1, 2)).unwrap();
        let w = Threshold::Staircase {
            cuts: vec![rational(1, 1)],
            values: vec![rational(5, 1), rational(2, 1)],
        };
        let params = PartitionParams::exact(rational(0, 1), rational(1, 1), w.clone(), w);
        assert_eq!(
            thickened_hypograph(&g, &r, &params),
            Err(HypographError::UnboundedFill(0))
        );
    }
}
