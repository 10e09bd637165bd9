use alloc::vec::Vec;
use core::hash::Hasher;

use super::HypographError;
use crate::scalar::{Fnv, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    Circle,
    Interval,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Component<S> {
    pub kind: ComponentKind,
    pub length: S,
}

/// A compact 1-manifold: a list of circles and closed intervals, each with
/// its length in the normalized metric.
#[derive(Debug, Clone, PartialEq)]
pub struct Domain1D<S> {
    components: Vec<Component<S>>,
}

impl<S: Scalar> Domain1D<S> {
    pub fn new(components: Vec<Component<S>>) -> Result<Self, HypographError> {
        if components.is_empty() {
            return Err(HypographError::EmptyDomain);
        }
        for (i, c) in components.iter().enumerate() {
            if !(c.length.is_finite_value() && c.length > S::zero()) {
                return Err(HypographError::NonPositiveLength(i));
            }
        }
        Ok(Domain1D { components })
    }

    pub fn components(&self) -> &[Component<S>] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Predicates a walk along the field can follow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Pred {
    AtLeast,
    Below,
}

impl Pred {
    pub(crate) fn holds<S: Scalar>(self, v: &S, t: &S) -> bool {
        match self {
            Pred::AtLeast => v >= t,
            Pred::Below => v < t,
        }
    }
}

/// One end of a run, in unwrapped vertex indices.
#[derive(Debug, Clone, PartialEq)]
pub(crate) enum End<S> {
    /// End of an interval component, at this position.
    Boundary(S),
    /// The level is crossed on the edge from `inside` to `outside`.
    Cross { inside: i64, outside: i64 },
}

/// Maximal run of a predicate through a vertex; `full` when it covers a
/// whole circle.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Run<S> {
    pub(crate) left: End<S>,
    pub(crate) right: End<S>,
    pub(crate) full: bool,
}

/// Piecewise-linear function `f >= xi` on a [`Domain1D`], given per
/// component by `(position, value)` breakpoints with strictly increasing
/// positions. Interval components carry breakpoints at both ends; circle
/// components take positions in `[0, length)` and interpolate across the
/// wrap.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseScalarField<S> {
    domain: Domain1D<S>,
    breakpoints: Vec<Vec<(S, S)>>,
    xi: S,
    fingerprint: u64,
}

impl<S: Scalar> PiecewiseScalarField<S> {
    pub fn new(
        domain: Domain1D<S>,
        breakpoints: Vec<Vec<(S, S)>>,
        xi: S,
    ) -> Result<Self, HypographError> {
        if breakpoints.len() != domain.len() {
            return Err(HypographError::ComponentCount {
                expected: domain.len(),
                found: breakpoints.len(),
            });
        }
        if !xi.is_finite_value() {
            return Err(HypographError::BadParams("base level must be finite"));
        }
        for (ci, (comp, pts)) in domain.components.iter().zip(&breakpoints).enumerate() {
            if pts.is_empty() {
                return Err(HypographError::EmptyComponent(ci));
            }
            for (i, (p, v)) in pts.iter().enumerate() {
                if !p.is_finite_value() || !v.is_finite_value() {
                    return Err(HypographError::NonFinite {
                        component: ci,
                        index: i,
                    });
                }
                if *p < S::zero()
                    || *p > comp.length
                    || (comp.kind == ComponentKind::Circle && *p == comp.length)
                {
                    return Err(HypographError::PositionOutOfRange {
                        component: ci,
                        index: i,
                    });
                }
                if i > 0 && pts[i - 1].0 >= *p {
                    return Err(HypographError::NotIncreasing {
                        component: ci,
                        index: i,
                    });
                }
                if *v < xi {
                    return Err(HypographError::BelowBase {
                        component: ci,
                        index: i,
                    });
                }
            }
            if comp.kind == ComponentKind::Interval
                && (pts.len() < 2 || !pts[0].0.is_zero() || pts[pts.len() - 1].0 != comp.length)
            {
                return Err(HypographError::IntervalEnds(ci));
            }
        }
        let mut h = Fnv::default();
        xi.feed(&mut h);
        for (comp, pts) in domain.components.iter().zip(&breakpoints) {
            h.write_u8(comp.kind as u8);
            comp.length.feed(&mut h);
            h.write_usize(pts.len());
            for (p, v) in pts {
                p.feed(&mut h);
                v.feed(&mut h);
            }
        }
        Ok(PiecewiseScalarField {
            domain,
            breakpoints,
            xi,
            fingerprint: h.finish(),
        })
    }

    /// Constant function `value` on a single circle.
    pub fn constant_circle(length: S, value: S, xi: S) -> Result<Self, HypographError> {
        let domain = Domain1D::new(alloc::vec![Component {
            kind: ComponentKind::Circle,
            length,
        }])?;
        Self::new(domain, alloc::vec![alloc::vec![(S::zero(), value)]], xi)
    }

    pub fn domain(&self) -> &Domain1D<S> {
        &self.domain
    }

    pub fn xi(&self) -> &S {
        &self.xi
    }

    pub fn breakpoints(&self, component: usize) -> &[(S, S)] {
        &self.breakpoints[component]
    }

    pub fn all_breakpoints(&self) -> &[Vec<(S, S)>] {
        &self.breakpoints
    }

    pub fn component(&self, c: usize) -> &Component<S> {
        &self.domain.components[c]
    }

    /// Hash of the defining data; segments remember it to detect mixing.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub(crate) fn check_component(&self, c: usize) -> Result<(), HypographError> {
        if c < self.domain.len() {
            Ok(())
        } else {
            Err(HypographError::NoComponent(c))
        }
    }

    pub(crate) fn is_circle(&self, c: usize) -> bool {
        self.domain.components[c].kind == ComponentKind::Circle
    }

    pub(crate) fn period(&self, c: usize) -> Option<S> {
        self.is_circle(c)
            .then(|| self.domain.components[c].length.clone())
    }

    pub(crate) fn n(&self, c: usize) -> i64 {
        self.breakpoints[c].len() as i64
    }

    /// Position of unwrapped vertex `k`.
    pub(crate) fn vpos(&self, c: usize, k: i64) -> S {
        let n = self.n(c);
        let (i, wraps) = (k.rem_euclid(n) as usize, k.div_euclid(n));
        let p = self.breakpoints[c][i].0.clone();
        if wraps == 0 {
            p
        } else {
            p + S::from_int(wraps) * self.domain.components[c].length.clone()
        }
    }

    pub(crate) fn vval(&self, c: usize, k: i64) -> &S {
        &self.breakpoints[c][k.rem_euclid(self.n(c)) as usize].1
    }

    pub fn max_value(&self, c: usize) -> S {
        self.breakpoints[c]
            .iter()
            .map(|b| b.1.clone())
            .reduce(|a, b| S::max_of(&a, &b))
            .unwrap_or_else(|| self.xi.clone())
    }

    /// Distinct vertex values of component `c`, ascending.
    pub(crate) fn distinct_values(&self, c: usize) -> Vec<S> {
        let mut vals: Vec<S> = self.breakpoints[c].iter().map(|b| b.1.clone()).collect();
        vals.sort_by(|a, b| a.cmp_total(b));
        vals.dedup();
        vals
    }

    /// Maps `x` into the component's coordinate range, wrapping on circles.
    pub(crate) fn normalize(&self, c: usize, x: &S) -> Result<S, HypographError> {
        let comp = &self.domain.components[c];
        match comp.kind {
            ComponentKind::Circle => Ok(x.rem_euclid_by(&comp.length)),
            ComponentKind::Interval => {
                if *x < S::zero() || *x > comp.length {
                    Err(HypographError::OutsideComponent)
                } else {
                    Ok(x.clone())
                }
            }
        }
    }

    /// Unwrapped index `k` with `vpos(k) <= x < vpos(k + 1)` (the last edge
    /// of an interval also takes its right end).
    pub(crate) fn locate(&self, c: usize, x: &S) -> i64 {
        let pts = &self.breakpoints[c];
        let idx = pts.partition_point(|b| b.0 <= *x) as i64;
        if self.is_circle(c) {
            idx - 1
        } else {
            (idx - 1).clamp(0, (pts.len() as i64 - 2).max(0))
        }
    }

    pub fn value_at(&self, c: usize, x: &S) -> Result<S, HypographError> {
        self.check_component(c)?;
        let x = self.normalize(c, x)?;
        let k = self.locate(c, &x);
        Ok(self.interpolate(c, k, &x))
    }

    pub(crate) fn interpolate(&self, c: usize, k: i64, x: &S) -> S {
        if self.n(c) == 1 {
            return self.vval(c, 0).clone();
        }
        let (pa, pb) = (self.vpos(c, k), self.vpos(c, k + 1));
        let (va, vb) = (self.vval(c, k).clone(), self.vval(c, k + 1).clone());
        if *x == pa {
            return va;
        }
        if *x == pb {
            return vb;
        }
        va.clone() + (vb - va) * (x.clone() - pa.clone()) / (pb - pa)
    }

    /// Walks both ways from unwrapped vertex `k0`, which must satisfy `pred`
    /// at level `t`.
    pub(crate) fn walk(&self, c: usize, k0: i64, pred: Pred, t: &S) -> Run<S> {
        let n = self.n(c);
        let circle = self.is_circle(c);
        let length = self.domain.components[c].length.clone();
        let mut j = k0;
        let right = loop {
            if !circle && j == n - 1 {
                break End::Boundary(length.clone());
            }
            if circle && j + 1 - k0 >= n {
                return Run {
                    left: End::Boundary(S::zero()),
                    right: End::Boundary(length),
                    full: true,
                };
            }
            if !pred.holds(self.vval(c, j + 1), t) {
                break End::Cross {
                    inside: j,
                    outside: j + 1,
                };
            }
            j += 1;
        };
        let mut j = k0;
        let left = loop {
            if !circle && j == 0 {
                break End::Boundary(S::zero());
            }
            if !pred.holds(self.vval(c, j - 1), t) {
                break End::Cross {
                    inside: j,
                    outside: j - 1,
                };
            }
            j -= 1;
        };
        Run {
            left,
            right,
            full: false,
        }
    }

    /// Affine form `(alpha, beta)` of the crossing position `alpha + beta t`
    /// on an edge, valid while the crossing stays on that edge.
    pub(crate) fn crossing_affine(&self, c: usize, inside: i64, outside: i64) -> (S, S) {
        let (pa, va) = (self.vpos(c, inside), self.vval(c, inside).clone());
        let (pb, vb) = (self.vpos(c, outside), self.vval(c, outside).clone());
        let slope = (pb - pa.clone()) / (vb - va.clone());
        (pa - va * slope.clone(), slope)
    }

    pub(crate) fn end_affine(&self, c: usize, end: &End<S>) -> (S, S) {
        match end {
            End::Boundary(p) => (p.clone(), S::zero()),
            End::Cross { inside, outside } => self.crossing_affine(c, *inside, *outside),
        }
    }

    /// Position where the level `t` is crossed, snapping to a vertex the
    /// level passes through exactly.
    pub(crate) fn end_position(&self, c: usize, end: &End<S>, t: &S) -> S {
        match end {
            End::Boundary(p) => p.clone(),
            End::Cross { inside, outside } => {
                let (pa, va) = (self.vpos(c, *inside), self.vval(c, *inside));
                let (pb, vb) = (self.vpos(c, *outside), self.vval(c, *outside));
                if va == t {
                    pa
                } else if vb == t {
                    pb
                } else {
                    pa.clone() + (t.clone() - va.clone()) * (pb - pa) / (vb.clone() - va.clone())
                }
            }
        }
    }

    /// Unwrapped vertex on the edge through `x` satisfying `pred` at `t`.
    pub(crate) fn vertex_near(&self, c: usize, x: &S, pred: Pred, t: &S) -> Option<i64> {
        let k = self.locate(c, x);
        if self.n(c) == 1 {
            return pred.holds(self.vval(c, 0), t).then_some(0);
        }
        let (a, b) = (self.vval(c, k), self.vval(c, k + 1));
        // prefer the endpoint at x itself, otherwise the one beyond the level
        if self.vpos(c, k) == *x && pred.holds(a, t) {
            return Some(k);
        }
        if self.vpos(c, k + 1) == *x && pred.holds(b, t) {
            return Some(k + 1);
        }
        let pick_a = match pred {
            Pred::Below => a < b,
            _ => a > b,
        };
        let k = if pick_a { k } else { k + 1 };
        pred.holds(self.vval(c, k), t).then_some(k)
    }
}

/// Per-component piecewise-linear weight `r(x) > 0` with slope at most 1
/// in absolute value; breakpoints follow the same conventions as a field.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusProfile<S> {
    breakpoints: Vec<Vec<(S, S)>>,
    lengths: Vec<(ComponentKind, S)>,
}

impl<S: Scalar> RadiusProfile<S> {
    /// `r` constant on every component of `domain`.
    pub fn constant(domain: &Domain1D<S>, r: S) -> Result<Self, HypographError> {
        let bps = domain
            .components()
            .iter()
            .map(|c| match c.kind {
                ComponentKind::Circle => alloc::vec![(S::zero(), r.clone())],
                ComponentKind::Interval => {
                    alloc::vec![(S::zero(), r.clone()), (c.length.clone(), r.clone())]
                }
            })
            .collect();
        Self::new(domain, bps)
    }

    pub fn new(
        domain: &Domain1D<S>,
        breakpoints: Vec<Vec<(S, S)>>,
    ) -> Result<Self, HypographError> {
        let probe = PiecewiseScalarField::new(domain.clone(), breakpoints.clone(), S::zero())
            .map_err(|e| match e {
                HypographError::BelowBase { component, index } => {
                    HypographError::NonPositiveRadius { component, index }
                }
                other => other,
            })?;
        for (ci, pts) in breakpoints.iter().enumerate() {
            for (i, (_, r)) in pts.iter().enumerate() {
                if *r <= S::zero() {
                    return Err(HypographError::NonPositiveRadius {
                        component: ci,
                        index: i,
                    });
                }
            }
            let edges = if probe.is_circle(ci) {
                pts.len()
            } else {
                pts.len() - 1
            };
            if pts.len() < 2 {
                continue;
            }
            for k in 0..edges as i64 {
                let dx = probe.vpos(ci, k + 1) - probe.vpos(ci, k);
                let dr = probe.vval(ci, k + 1).clone() - probe.vval(ci, k).clone();
                if dr.abs() > dx {
                    return Err(HypographError::RadiusNotLipschitz {
                        component: ci,
                        index: k as usize,
                    });
                }
            }
        }
        Ok(RadiusProfile {
            lengths: domain
                .components()
                .iter()
                .map(|c| (c.kind, c.length.clone()))
                .collect(),
            breakpoints,
        })
    }

    pub fn components(&self) -> usize {
        self.lengths.len()
    }

    pub fn value_at(&self, c: usize, x: &S) -> Result<S, HypographError> {
        let domain = Domain1D::new(
            self.lengths
                .iter()
                .map(|(kind, length)| Component {
                    kind: *kind,
                    length: length.clone(),
                })
                .collect(),
        )?;
        PiecewiseScalarField::new(domain, self.breakpoints.clone(), S::zero())?.value_at(c, x)
    }
}
