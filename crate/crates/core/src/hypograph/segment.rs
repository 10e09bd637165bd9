use alloc::vec::Vec;

use super::field::{End, Pred, Run};
use super::{HypographError, PiecewiseScalarField};
use crate::scalar::Scalar;

/// Arc of one component. On circles `start` lies in `[0, length)` and `end`
/// may exceed `length` when the arc wraps.
#[derive(Debug, Clone, PartialEq)]
pub enum Arc<S> {
    Full,
    Span { start: S, end: S },
}

/// A connected component of a horizontal slice `{x : f(x) >= t}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ESegment<S> {
    pub field: u64,
    pub component: usize,
    pub arc: Arc<S>,
    pub level: S,
    /// Component length, or `None` for intervals.
    pub period: Option<S>,
    pub component_length: S,
}

impl<S: Scalar> ESegment<S> {
    pub fn length(&self) -> S {
        match &self.arc {
            Arc::Full => self.component_length.clone(),
            Arc::Span { start, end } => end.clone() - start.clone(),
        }
    }

    /// Whether position `x` lies on the arc.
    pub fn contains_position(&self, x: &S) -> bool {
        match &self.arc {
            Arc::Full => true,
            Arc::Span { start, end } => match &self.period {
                None => start <= x && x <= end,
                Some(l) => {
                    let x = x.rem_euclid_by(l);
                    (start <= &x && &x <= end)
                        || (start <= &(x.clone() + l.clone()) && &(x + l.clone()) <= end)
                }
            },
        }
    }

    /// Whether this arc contains `other`'s arc.
    pub fn arc_contains(&self, other: &ESegment<S>) -> bool {
        if self.component != other.component {
            return false;
        }
        match (&self.arc, &other.arc) {
            (Arc::Full, _) => true,
            (_, Arc::Full) => false,
            (Arc::Span { start: s1, end: e1 }, Arc::Span { start: s2, end: e2 }) => {
                match &self.period {
                    None => s1 <= s2 && e2 <= e1,
                    Some(l) => [-1i64, 0, 1].iter().any(|&k| {
                        let shift = S::from_int(k) * l.clone();
                        *s1 <= s2.clone() + shift.clone() && e2.clone() + shift <= *e1
                    }),
                }
            }
        }
    }
}

pub(crate) fn run_to_segment<S: Scalar>(
    f: &PiecewiseScalarField<S>,
    c: usize,
    run: &Run<S>,
    t: &S,
) -> ESegment<S> {
    let arc = if run.full {
        Arc::Full
    } else {
        let mut start = f.end_position(c, &run.left, t);
        let mut end = f.end_position(c, &run.right, t);
        if let Some(l) = f.period(c) {
            let shifted = start.rem_euclid_by(&l);
            end = end + (shifted.clone() - start);
            start = shifted;
        }
        Arc::Span { start, end }
    };
    ESegment {
        field: f.fingerprint(),
        component: c,
        arc,
        level: t.clone(),
        period: f.period(c),
        component_length: f.component(c).length.clone(),
    }
}

/// `e(x, t)`: the maximal closed arc through `x` on which `f >= t`.
pub fn e_segment<S: Scalar>(
    f: &PiecewiseScalarField<S>,
    component: usize,
    x: &S,
    t: &S,
) -> Result<ESegment<S>, HypographError> {
    f.check_component(component)?;
    if t < f.xi() {
        return Err(HypographError::NotInHypograph);
    }
    let x = f.normalize(component, x)?;
    if f.value_at(component, &x)? < *t {
        return Err(HypographError::NotInHypograph);
    }
    let k = f
        .vertex_near(component, &x, Pred::AtLeast, t)
        .ok_or(HypographError::NotInHypograph)?;
    let run = f.walk(component, k, Pred::AtLeast, t);
    Ok(run_to_segment(f, component, &run, t))
}

/// Every E-segment of component `c` at level `t`, in arclength order of
/// their first vertex.
pub fn level_slice<S: Scalar>(
    f: &PiecewiseScalarField<S>,
    c: usize,
    t: &S,
) -> Result<Vec<ESegment<S>>, HypographError> {
    f.check_component(c)?;
    Ok(slice_at(f, c, t))
}

fn slice_at<S: Scalar>(f: &PiecewiseScalarField<S>, c: usize, t: &S) -> Vec<ESegment<S>> {
    let n = f.n(c);
    let mut seen = alloc::vec![false; n as usize];
    let mut out = Vec::new();
    for k in 0..n {
        if seen[k as usize] || !Pred::AtLeast.holds(f.vval(c, k), t) {
            continue;
        }
        let run = f.walk(c, k, Pred::AtLeast, t);
        if run.full {
            return alloc::vec![run_to_segment(f, c, &run, t)];
        }
        let (a, b) = match (&run.left, &run.right) {
            (End::Cross { inside: a, .. }, End::Cross { inside: b, .. }) => (*a, *b),
            (End::Boundary(_), End::Cross { inside: b, .. }) => (0, *b),
            (End::Cross { inside: a, .. }, End::Boundary(_)) => (*a, n - 1),
            (End::Boundary(_), End::Boundary(_)) => (0, n - 1),
        };
        for j in a..=b {
            seen[j.rem_euclid(n) as usize] = true;
        }
        out.push(run_to_segment(f, c, &run, t));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentOrder {
    LessEq,
    GreaterEq,
    Equal,
    Incomparable,
}

/// `e1 <= e2` when `e2`'s arc lies inside `e1`'s and `e1` is not higher.
pub fn compare_segments<S: Scalar>(
    e1: &ESegment<S>,
    e2: &ESegment<S>,
) -> Result<SegmentOrder, HypographError> {
    if e1.field != e2.field {
        return Err(HypographError::MixedFields);
    }
    if e1.component != e2.component {
        return Ok(SegmentOrder::Incomparable);
    }
    if e1.level == e2.level && e1.arc == e2.arc {
        return Ok(SegmentOrder::Equal);
    }
    if e1.level <= e2.level && e1.arc_contains(e2) {
        return Ok(SegmentOrder::LessEq);
    }
    if e2.level <= e1.level && e2.arc_contains(e1) {
        return Ok(SegmentOrder::GreaterEq);
    }
    Ok(SegmentOrder::Incomparable)
}

/// Distance between the arcs of two segments; `None` across components.
pub fn segment_distance<S: Scalar>(e1: &ESegment<S>, e2: &ESegment<S>) -> Option<S> {
    if e1.component != e2.component {
        return None;
    }
    match (&e1.arc, &e2.arc) {
        (Arc::Full, _) | (_, Arc::Full) => Some(S::zero()),
        (
            Arc::Span {
                start: s1,
                end: e1e,
            },
            Arc::Span {
                start: s2,
                end: e2e,
            },
        ) => {
            let gap = |a0: &S, a1: &S, b0: &S, b1: &S| {
                let d = S::max_of(&(b0.clone() - a1.clone()), &(a0.clone() - b1.clone()));
                S::max_of(&d, &S::zero())
            };
            match &e1.period {
                None => Some(gap(s1, e1e, s2, e2e)),
                Some(l) => [-1i64, 0, 1]
                    .iter()
                    .map(|&k| {
                        let shift = S::from_int(k) * l.clone();
                        gap(
                            s1,
                            e1e,
                            &(s2.clone() + shift.clone()),
                            &(e2e.clone() + shift),
                        )
                    })
                    .reduce(|a, b| S::min_of(&a, &b)),
            }
        }
    }
}
