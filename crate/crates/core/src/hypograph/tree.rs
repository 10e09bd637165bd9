use alloc::vec::Vec;

use super::field::{Pred, Run};
use super::forest::Forest;
use super::levels::Interval;
use super::segment::{run_to_segment, ESegment};
use super::{HypographError, PiecewiseScalarField};
use crate::scalar::Scalar;

/// Levels `lo < t <= hi` (or `lo <= t <= hi` when `lo_closed`) of a class.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelInterval<S> {
    pub lo: S,
    pub lo_closed: bool,
    pub hi: S,
}

impl<S: Scalar> LevelInterval<S> {
    pub fn contains(&self, t: &S) -> bool {
        *t <= self.hi && (*t > self.lo || (self.lo_closed && *t == self.lo))
    }

    pub fn as_interval(&self) -> Interval<S> {
        Interval {
            lo: self.lo.clone(),
            lo_closed: self.lo_closed,
            hi: self.hi.clone(),
            hi_closed: true,
        }
    }
}

/// One equivalence class of E-segments: those at levels in `levels`
/// reachable from the top slice without crossing a branching level. Its
/// slice at level `t` is `e(anchor, t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeClass<S> {
    pub id: usize,
    pub component: usize,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    pub levels: LevelInterval<S>,
    /// A position whose value is at least `levels.hi`.
    pub anchor: S,
    pub(crate) anchor_vertex: i64,
}

/// Classes of the tree partition of a field's hypograph.
#[derive(Debug, Clone, PartialEq)]
pub struct TreePartition<S> {
    field: PiecewiseScalarField<S>,
    classes: Vec<TreeClass<S>>,
}

struct Building<S> {
    component: usize,
    parent: Option<usize>,
    children: Vec<usize>,
    lo: Option<(S, bool)>,
    hi: S,
    anchor_vertex: i64,
}

/// Maximal runs of vertices with value `>= u`, as lists of unwrapped
/// indices; a run covering a whole circle starts at a vertex equal to `u`.
fn runs_at_least<S: Scalar>(f: &PiecewiseScalarField<S>, c: usize, u: &S) -> Vec<Vec<i64>> {
    let n = f.n(c);
    let mut runs = Vec::new();
    if f.is_circle(c) {
        let Some(start) = (0..n).find(|&k| f.vval(c, k) < u) else {
            let s = (0..n).find(|&k| f.vval(c, k) == u).unwrap_or(0);
            return alloc::vec![(s..s + n).collect()];
        };
        let mut cur = Vec::new();
        for k in start + 1..=start + n {
            if f.vval(c, k) >= u {
                cur.push(k);
            } else if !cur.is_empty() {
                runs.push(core::mem::take(&mut cur));
            }
        }
    } else {
        let mut cur = Vec::new();
        for k in 0..n {
            if f.vval(c, k) >= u {
                cur.push(k);
            } else if !cur.is_empty() {
                runs.push(core::mem::take(&mut cur));
            }
        }
        if !cur.is_empty() {
            runs.push(cur);
        }
    }
    runs
}

/// Splits the hypograph of `field` into tree classes.
///
/// Levels are swept downward over the distinct vertex values of each
/// component. A run of `{f >= u}` holding no vertex above `u` starts a new
/// leaf class; a run holding one run of `{f > u}` extends that run's class;
/// a run holding two or more starts a new class whose children end just
/// above `u`. This includes minima sitting exactly at the base level, which
/// produce a one-level class `[xi, xi]`. Interval endpoints never separate
/// two runs, so they never branch. The last class of each component reaches
/// down to `xi`.
pub fn tree_partition<S: Scalar>(field: &PiecewiseScalarField<S>) -> TreePartition<S> {
    let mut building: Vec<Building<S>> = Vec::new();
    for c in 0..field.domain().len() {
        let n = field.n(c) as usize;
        let mut class_of: Vec<Option<usize>> = alloc::vec![None; n];
        let mut values = field.distinct_values(c);
        values.reverse();
        for u in &values {
            for run in runs_at_least(field, c, u) {
                let mut above: Vec<usize> = Vec::new();
                let mut prev_above = false;
                for &k in &run {
                    let is_above = field.vval(c, k) > u;
                    if is_above && !prev_above {
                        let cls = class_of[k.rem_euclid(n as i64) as usize]
                            .expect("vertices above the sweep level already have a class");
                        above.push(cls);
                    }
                    prev_above = is_above;
                }
                let cls = match above.len() {
                    1 => above[0],
                    _ => {
                        let id = building.len();
                        for &child in &above {
                            building[child].lo = Some((u.clone(), false));
                            building[child].parent = Some(id);
                        }
                        building.push(Building {
                            component: c,
                            parent: None,
                            children: above,
                            lo: None,
                            hi: u.clone(),
                            anchor_vertex: run[0].rem_euclid(n as i64),
                        });
                        id
                    }
                };
                for &k in &run {
                    class_of[k.rem_euclid(n as i64) as usize] = Some(cls);
                }
            }
        }
        let root = class_of[0].expect("the lowest level covers the whole component");
        building[root].lo = Some((field.xi().clone(), true));
    }
    let classes = building
        .into_iter()
        .enumerate()
        .map(|(id, b)| {
            let (lo, lo_closed) = b.lo.expect("every class gets a bottom");
            TreeClass {
                id,
                component: b.component,
                parent: b.parent,
                children: b.children,
                levels: LevelInterval {
                    lo,
                    lo_closed,
                    hi: b.hi,
                },
                anchor: field.vpos(b.component, b.anchor_vertex),
                anchor_vertex: b.anchor_vertex,
            }
        })
        .collect();
    TreePartition {
        field: field.clone(),
        classes,
    }
}

impl<S: Scalar> TreePartition<S> {
    pub fn field(&self) -> &PiecewiseScalarField<S> {
        &self.field
    }

    pub fn classes(&self) -> &[TreeClass<S>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Maximal classes, i.e. those without children.
    pub fn maximal(&self) -> Vec<usize> {
        self.classes
            .iter()
            .filter(|c| c.children.is_empty())
            .map(|c| c.id)
            .collect()
    }

    pub(crate) fn run_at(&self, class: usize, t: &S) -> Run<S> {
        let c = &self.classes[class];
        self.field
            .walk(c.component, c.anchor_vertex, Pred::AtLeast, t)
    }

    /// The class's E-segment at level `t`, if `t` is one of its levels.
    pub fn slice(&self, class: usize, t: &S) -> Option<ESegment<S>> {
        let c = self.classes.get(class)?;
        if !c.levels.contains(t) {
            return None;
        }
        Some(run_to_segment(
            &self.field,
            c.component,
            &self.run_at(class, t),
            t,
        ))
    }

    /// Whether `(x, t)` belongs to the class.
    pub fn contains(&self, class: usize, x: &S, t: &S) -> bool {
        self.slice(class, t).is_some_and(|s| s.contains_position(x))
    }

    /// The class holding the point `(x, t)` of the hypograph.
    pub fn class_of(&self, component: usize, x: &S, t: &S) -> Result<usize, HypographError> {
        self.field.check_component(component)?;
        if t < self.field.xi() || self.field.value_at(component, x)? < *t {
            return Err(HypographError::NotInHypograph);
        }
        self.classes
            .iter()
            .filter(|c| c.component == component)
            .find(|c| self.contains(c.id, x, t))
            .map(|c| c.id)
            .ok_or(HypographError::NotInHypograph)
    }

    /// `a <= b` computed from the slices: `a`'s top lies below `b` and
    /// `b`'s slice at `a`'s top level is `a`'s top slice.
    pub fn class_leq(&self, a: usize, b: usize) -> bool {
        if a == b {
            return true;
        }
        let (ca, cb) = (&self.classes[a], &self.classes[b]);
        if ca.component != cb.component || ca.levels.hi > cb.levels.lo {
            return false;
        }
        let top = &ca.levels.hi;
        let here = run_to_segment(&self.field, ca.component, &self.run_at(a, top), top);
        let there = run_to_segment(
            &self.field,
            cb.component,
            &self
                .field
                .walk(cb.component, cb.anchor_vertex, Pred::AtLeast, top),
            top,
        );
        here == there
    }

    /// Parent pointers as a forest over class ids.
    pub fn forest(&self) -> Forest {
        Forest::from_parents(self.classes.iter().map(|c| c.parent).collect())
            .expect("tree partition parents are acyclic")
    }
}
