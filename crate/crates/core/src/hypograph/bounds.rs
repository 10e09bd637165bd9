use alloc::vec::Vec;

use super::thick::HypographPartition;
use super::{HypographError, PiecewiseScalarField};
use crate::scalar::Scalar;

/// Number of local maxima of the field: maximal plateaus of equal vertex
/// values whose neighbours on both sides are strictly lower. Interval ends
/// count as lower neighbours, and a constant circle is one maximum.
pub fn count_local_maxima<S: Scalar>(field: &PiecewiseScalarField<S>) -> usize {
    (0..field.domain().len()).map(|c| maxima_on(field, c)).sum()
}

fn maxima_on<S: Scalar>(f: &PiecewiseScalarField<S>, c: usize) -> usize {
    let pts = f.breakpoints(c);
    let n = pts.len();
    if f.is_circle(c) {
        // start right after a strict descent so no plateau straddles the start
        let Some(s) = (0..n).find(|&k| pts[k].1 < pts[(k + n - 1) % n].1) else {
            return 1;
        };
        let vals: Vec<&S> = (0..n).map(|k| &pts[(s + k) % n].1).collect();
        let mut count = 0;
        let mut i = 0;
        while i < n {
            let mut j = i;
            while j + 1 < n && vals[j + 1] == vals[i] {
                j += 1;
            }
            let before = vals[(i + n - 1) % n];
            let after = vals[(j + 1) % n];
            if before < vals[i] && after < vals[i] {
                count += 1;
            }
            i = j + 1;
        }
        count
    } else {
        let mut count = 0;
        let mut i = 0;
        while i < n {
            let mut j = i;
            while j + 1 < n && pts[j + 1].1 == pts[i].1 {
                j += 1;
            }
            let v = &pts[i].1;
            let lower_before = i == 0 || pts[i - 1].1 < *v;
            let lower_after = j + 1 == n || pts[j + 1].1 < *v;
            if lower_before && lower_after {
                count += 1;
            }
            i = j + 1;
        }
        count
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub count: usize,
    pub bound: f64,
    pub pass: bool,
    /// Combinatorial bounds must hold for every input; the others depend on
    /// the measure being a genuine energy measure and are only reported.
    pub asserted: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    pub local_maxima: usize,
    pub classes: usize,
    pub short_necks: usize,
    pub non_exceptional_necks: usize,
    pub thick_components: usize,
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    /// Whether every asserted bound holds.
    pub fn asserted_pass(&self) -> bool {
        self.checks.iter().filter(|c| c.asserted).all(|c| c.pass)
    }
}

pub fn verify_cardinality_bounds<S: Scalar>(
    p: &HypographPartition<S>,
    mu_total: f64,
    delta1: f64,
) -> Result<BoundsReport, HypographError> {
    if !(mu_total > 0.0 && delta1 > 0.0 && mu_total.is_finite() && delta1.is_finite()) {
        return Err(HypographError::NonPositiveMeasure);
    }
    let m = count_local_maxima(p.tree().field());
    let classes = p.tree().len();
    let h = p.short_non_exceptional().count();
    let g = p.non_exceptional().count();
    let c = p.thick_components();
    let ratio = mu_total / delta1;
    let check = |name, count: usize, bound: f64, asserted| BoundCheck {
        name,
        count,
        bound,
        pass: count as f64 <= bound,
        asserted,
    };
    let checks = alloc::vec![
        check("classes <= 2 maxima", classes, 2.0 * m as f64, true),
        check("short necks <= 2 classes", h, 2.0 * classes as f64, true),
        check("classes <= 2 mu/delta1", classes, 2.0 * ratio, false),
        check("thick components <= 10 mu/delta1", c, 10.0 * ratio, false),
        check(
            "non-exceptional necks <= 12 mu/delta1",
            g,
            12.0 * ratio,
            false
        ),
    ];
    Ok(BoundsReport {
        local_maxima: m,
        classes,
        short_necks: h,
        non_exceptional_necks: g,
        thick_components: c,
        checks,
    })
}
