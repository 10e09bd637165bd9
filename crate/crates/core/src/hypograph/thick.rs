use alloc::vec::Vec;

use super::field::Run;
use super::levels::{Interval, LevelSet};
use super::threshold::Threshold;
use super::tree::{tree_partition, TreeClass, TreePartition};
use super::{HypographError, PartitionParams, PiecewiseScalarField};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// `N`: the segment is no longer than the thin threshold.
    Thin,
    /// `K`: the segment is longer.
    Thick,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StatusRun<S> {
    pub status: Status,
    pub levels: Interval<S>,
}

/// A maximal run of thin levels inside one class.
#[derive(Debug, Clone, PartialEq)]
pub struct ThinNeck<S> {
    pub class: usize,
    pub levels: Interval<S>,
    pub exceptional: bool,
}

impl<S: Scalar> ThinNeck<S> {
    pub fn height(&self) -> S {
        self.levels.height()
    }
}

/// Part of one class left after removing its non-exceptional thin necks.
#[derive(Debug, Clone, PartialEq)]
pub struct ThickPiece<S> {
    pub class: usize,
    pub levels: Interval<S>,
    /// Index into [`HypographPartition::thick_components`].
    pub component: usize,
}

/// Tree classes with their thick/thin labels, thin necks and the
/// connected components of the thick part `C`.
#[derive(Debug, Clone, PartialEq)]
pub struct HypographPartition<S> {
    tree: TreePartition<S>,
    runs: Vec<Vec<StatusRun<S>>>,
    necks: Vec<ThinNeck<S>>,
    pieces: Vec<ThickPiece<S>>,
    components: usize,
    exceptional_gap: S,
}

fn run_length<S: Scalar>(f: &PiecewiseScalarField<S>, c: usize, run: &Run<S>, t: &S) -> S {
    if run.full {
        f.component(c).length.clone()
    } else {
        f.end_position(c, &run.right, t) - f.end_position(c, &run.left, t)
    }
}

/// Affine form of a run's length, valid while its end edges stay fixed.
pub(crate) fn run_length_affine<S: Scalar>(
    f: &PiecewiseScalarField<S>,
    c: usize,
    run: &Run<S>,
) -> (S, S) {
    if run.full {
        return (f.component(c).length.clone(), S::zero());
    }
    let (ar, br) = f.end_affine(c, &run.right);
    let (al, bl) = f.end_affine(c, &run.left);
    (ar - al, br - bl)
}

/// Levels of `class` whose slice is thin.
fn thin_levels<S: Scalar>(
    tree: &TreePartition<S>,
    class: &TreeClass<S>,
    w: &Threshold<S>,
    tol: f64,
) -> LevelSet<S> {
    let f = tree.field();
    let c = class.component;
    let lv = &class.levels;
    let mut thin = LevelSet::new();
    let point = |t: &S, thin: &mut LevelSet<S>| {
        if run_length(f, c, &tree.run_at(class.id, t), t) <= w.value(t) {
            thin.push(Interval::point(t.clone()));
        }
    };
    if lv.lo_closed {
        point(&lv.lo, &mut thin);
    }
    let mut prev = lv.lo.clone();
    for v in f
        .distinct_values(c)
        .into_iter()
        .filter(|v| *v > lv.lo && *v <= lv.hi)
    {
        let mid = S::midpoint(&prev, &v);
        let (alpha, beta) = run_length_affine(f, c, &tree.run_at(class.id, &mid));
        for part in w.solve_le(&Interval::open(prev.clone(), v.clone()), &alpha, &beta, tol) {
            thin.push(part);
        }
        point(&v, &mut thin);
        prev = v;
    }
    thin
}

fn status_runs<S: Scalar>(levels: &Interval<S>, thin: &LevelSet<S>) -> Vec<StatusRun<S>> {
    let thick = thin.complement_in(levels);
    let mut runs: Vec<StatusRun<S>> = thin
        .parts()
        .iter()
        .map(|p| StatusRun {
            status: Status::Thin,
            levels: p.clone(),
        })
        .chain(thick.parts().iter().map(|p| StatusRun {
            status: Status::Thick,
            levels: p.clone(),
        }))
        .collect();
    runs.sort_by(|a, b| {
        a.levels
            .lo
            .cmp_total(&b.levels.lo)
            .then_with(|| b.levels.lo_closed.cmp(&a.levels.lo_closed))
    });
    runs
}

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Labels every point of the hypograph thin (`N`) or thick (`K`) with the
/// width threshold `params.width_n`, collects thin necks per class and
/// decides which are exceptional.
///
/// A neck is exceptional when its height is below `params.exceptional_gap`
/// and thick segments below and above it come arbitrarily close to its
/// bottom and top levels. Below: a thick run earlier in the class, or, at
/// an open class bottom, a parent whose top level is thick or whose top
/// thin run is the single top level preceded by thick levels. Above: a
/// thick run later in the class, or a child starting thick.
pub fn thick_thin_partition<S: Scalar>(
    field: &PiecewiseScalarField<S>,
    params: &PartitionParams<S>,
) -> Result<HypographPartition<S>, HypographError> {
    params.validate()?;
    let tree = tree_partition(field);
    let runs: Vec<Vec<StatusRun<S>>> = tree
        .classes()
        .iter()
        .map(|c| {
            status_runs(
                &c.levels.as_interval(),
                &thin_levels(&tree, c, &params.width_n, params.tolerance),
            )
        })
        .collect();

    let mut necks = Vec::new();
    for class in tree.classes() {
        let rs = &runs[class.id];
        for (i, r) in rs.iter().enumerate() {
            if r.status != Status::Thin {
                continue;
            }
            let short = r.levels.height() < params.exceptional_gap;
            let lower = i > 0
                || (!class.levels.lo_closed
                    && class.parent.is_some_and(|p| {
                        let prs = &runs[p];
                        let last = &prs[prs.len() - 1];
                        last.status == Status::Thick
                            || (prs.len() >= 2
                                && last.levels.lo == last.levels.hi
                                && last.levels.lo_closed)
                    }));
            let upper = i + 1 < rs.len()
                || class
                    .children
                    .iter()
                    .any(|&ch| runs[ch].first().is_some_and(|r| r.status == Status::Thick));
            necks.push(ThinNeck {
                class: class.id,
                levels: r.levels.clone(),
                exceptional: short && lower && upper,
            });
        }
    }

    let mut pieces = Vec::new();
    let mut first_piece = alloc::vec![None; tree.len()];
    let mut last_piece = alloc::vec![None; tree.len()];
    for class in tree.classes() {
        let mut cut = LevelSet::new();
        for n in necks
            .iter()
            .filter(|n| n.class == class.id && !n.exceptional)
        {
            cut.push(n.levels.clone());
        }
        let iv = class.levels.as_interval();
        for p in cut.complement_in(&iv).parts() {
            if p.lo == iv.lo && p.lo_closed == iv.lo_closed {
                first_piece[class.id] = Some(pieces.len());
            }
            if p.hi == iv.hi && p.hi_closed {
                last_piece[class.id] = Some(pieces.len());
            }
            pieces.push(ThickPiece {
                class: class.id,
                levels: p.clone(),
                component: 0,
            });
        }
    }
    let mut sets = DisjointSets((0..pieces.len()).collect());
    for class in tree.classes() {
        if let (Some(p), Some(a)) = (class.parent, first_piece[class.id]) {
            if let Some(b) = last_piece[p] {
                sets.union(a, b);
            }
        }
    }
    let mut label = alloc::vec![usize::MAX; pieces.len()];
    let mut components = 0;
    for (i, piece) in pieces.iter_mut().enumerate() {
        let r = sets.find(i);
        if label[r] == usize::MAX {
            label[r] = components;
            components += 1;
        }
        piece.component = label[r];
    }

    Ok(HypographPartition {
        tree,
        runs,
        necks,
        pieces,
        components,
        exceptional_gap: params.exceptional_gap.clone(),
    })
}

impl<S: Scalar> HypographPartition<S> {
    pub fn tree(&self) -> &TreePartition<S> {
        &self.tree
    }

    pub fn classes(&self) -> &[TreeClass<S>] {
        self.tree.classes()
    }

    pub fn status_runs(&self, class: usize) -> &[StatusRun<S>] {
        &self.runs[class]
    }

    pub fn status_at(&self, class: usize, t: &S) -> Option<Status> {
        self.runs
            .get(class)?
            .iter()
            .find(|r| r.levels.contains(t))
            .map(|r| r.status)
    }

    pub fn thin_necks(&self) -> &[ThinNeck<S>] {
        &self.necks
    }

    pub fn thick_pieces(&self) -> &[ThickPiece<S>] {
        &self.pieces
    }

    /// Number of connected components of the thick part.
    pub fn thick_components(&self) -> usize {
        self.components
    }

    /// `G`: the non-exceptional thin necks.
    pub fn non_exceptional(&self) -> impl Iterator<Item = &ThinNeck<S>> {
        self.necks.iter().filter(|n| !n.exceptional)
    }

    /// `H`: non-exceptional thin necks lower than the exceptional gap.
    pub fn short_non_exceptional(&self) -> impl Iterator<Item = &ThinNeck<S>> {
        self.non_exceptional()
            .filter(|n| n.height() < self.exceptional_gap)
    }
}
