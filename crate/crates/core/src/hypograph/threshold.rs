use alloc::vec::Vec;
use core::cmp::Ordering;

use super::levels::Interval;
use super::HypographError;
use crate::scalar::Scalar;

/// Width threshold `t -> w(t)`, positive and non-increasing.
#[derive(Debug, Clone, PartialEq)]
pub enum Threshold<S> {
    /// `w = 0`: no segment is ever short.
    Zero,
    /// `w(t) = coeff e^{-t}`; float mode only.
    Exponential { coeff: f64 },
    /// `values[0]` on `(-inf, cuts[0]]`, `values[i]` on `(cuts[i-1], cuts[i]]`,
    /// and the last value beyond the last cut.
    Staircase { cuts: Vec<S>, values: Vec<S> },
}

/// Bisection until the bracket is at most `tol` wide or no float lies
/// strictly inside. `below` holds at `lo` and fails at `hi`.
fn bisect(mut lo: f64, mut hi: f64, tol: f64, mut below: impl FnMut(f64) -> bool) -> (f64, f64) {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= tol {
            break;
        }
        if below(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

impl<S: Scalar> Threshold<S> {
    /// Staircase with `values[i] = coeff e^{-cuts[i]}` on `(cuts[i-1], cuts[i]]`,
    /// rounded to scalars: an exact-mode stand-in for `coeff e^{-t}` that
    /// never exceeds it.
    pub fn staircase_below_exponential(coeff: f64, cuts: Vec<S>) -> Result<Self, HypographError> {
        if cuts.is_empty() {
            return Err(HypographError::BadThreshold);
        }
        let mut values: Vec<S> = cuts
            .iter()
            .map(|c| {
                S::from_f64(coeff * libm::exp(-c.as_f64())).ok_or(HypographError::BadThreshold)
            })
            .collect::<Result<_, _>>()?;
        let last = values[values.len() - 1].clone() / S::from_int(2);
        values.push(last);
        let t = Threshold::Staircase { cuts, values };
        t.validate(true)?;
        Ok(t)
    }

    pub fn validate(&self, exact: bool) -> Result<(), HypographError> {
        match self {
            Threshold::Zero => Ok(()),
            Threshold::Exponential { coeff } => {
                if exact {
                    Err(HypographError::ExactNeedsStaircase)
                } else if *coeff > 0.0 && coeff.is_finite() {
                    Ok(())
                } else {
                    Err(HypographError::BadThreshold)
                }
            }
            Threshold::Staircase { cuts, values } => {
                let ok = values.len() == cuts.len() + 1
                    && cuts.windows(2).all(|w| w[0] < w[1])
                    && values.windows(2).all(|w| w[0] >= w[1])
                    && values.iter().all(|v| *v > S::zero() && v.is_finite_value());
                if ok {
                    Ok(())
                } else {
                    Err(HypographError::BadThreshold)
                }
            }
        }
    }

    pub fn value(&self, t: &S) -> S {
        match self {
            Threshold::Zero => S::zero(),
            Threshold::Exponential { coeff } => {
                S::from_f64(coeff * libm::exp(-t.as_f64())).unwrap_or_else(S::zero)
            }
            Threshold::Staircase { cuts, values } => {
                values[cuts.partition_point(|c| c < t)].clone()
            }
        }
    }

    /// `{t in iv : alpha + beta t <= w(t)}` for an interval with `lo < hi`,
    /// returned as ascending disjoint parts. Crossings of the exponential are
    /// located to `tol`; every returned endpoint was evaluated on the `<=`
    /// side.
    pub(crate) fn solve_le(
        &self,
        iv: &Interval<S>,
        alpha: &S,
        beta: &S,
        tol: f64,
    ) -> Vec<Interval<S>> {
        match self {
            Threshold::Zero => affine_le(iv, alpha, beta, &S::zero()).into_iter().collect(),
            Threshold::Staircase { cuts, values } => {
                let mut out = Vec::new();
                let mut lo = (S::zero(), false, true); // (level, closed, unbounded)
                for (i, v) in values.iter().enumerate() {
                    let piece_hi = cuts.get(i);
                    let piece = Interval {
                        lo: if lo.2 { iv.lo.clone() } else { lo.0.clone() },
                        lo_closed: if lo.2 { iv.lo_closed } else { lo.1 },
                        hi: piece_hi.cloned().unwrap_or_else(|| iv.hi.clone()),
                        hi_closed: piece_hi.is_some() || iv.hi_closed,
                    };
                    let part = piece.intersect(iv);
                    if !part.is_empty() {
                        out.extend(affine_le(&part, alpha, beta, v));
                    }
                    if let Some(c) = piece_hi {
                        lo = (c.clone(), false, false);
                    }
                }
                out
            }
            Threshold::Exponential { coeff } => {
                let (a, b) = (iv.lo.as_f64(), iv.hi.as_f64());
                let (al, be) = (alpha.as_f64(), beta.as_f64());
                let h = |t: f64| al + be * t - coeff * libm::exp(-t);
                let from = |x: f64| S::from_f64(x).unwrap_or_else(S::zero);
                let mut out = Vec::new();
                // h is concave; its maximum sits at ln(coeff / -beta)
                let peak = if be < 0.0 {
                    libm::log(coeff / -be)
                } else {
                    f64::INFINITY
                };
                let rising = |lo: f64,
                              lo_closed: bool,
                              hi: f64,
                              hi_closed: bool,
                              out: &mut Vec<Interval<S>>| {
                    if h(hi) <= 0.0 {
                        out.push(Interval {
                            lo: from(lo),
                            lo_closed,
                            hi: from(hi),
                            hi_closed,
                        });
                    } else if h(lo) <= 0.0 {
                        let (r, _) = bisect(lo, hi, tol, |t| h(t) <= 0.0);
                        out.push(Interval {
                            lo: from(lo),
                            lo_closed,
                            hi: from(r),
                            hi_closed: true,
                        });
                    }
                };
                let falling = |lo: f64,
                               lo_closed: bool,
                               hi: f64,
                               hi_closed: bool,
                               out: &mut Vec<Interval<S>>| {
                    if h(lo) <= 0.0 {
                        out.push(Interval {
                            lo: from(lo),
                            lo_closed,
                            hi: from(hi),
                            hi_closed,
                        });
                    } else if h(hi) <= 0.0 {
                        let (_, r) = bisect(lo, hi, tol, |t| h(t) > 0.0);
                        out.push(Interval {
                            lo: from(r),
                            lo_closed: true,
                            hi: from(hi),
                            hi_closed,
                        });
                    }
                };
                if peak >= b {
                    rising(a, iv.lo_closed, b, iv.hi_closed, &mut out);
                } else if peak <= a {
                    falling(a, iv.lo_closed, b, iv.hi_closed, &mut out);
                } else if h(peak) <= 0.0 {
                    out.push(iv.clone());
                } else {
                    rising(a, iv.lo_closed, peak, false, &mut out);
                    falling(peak, false, b, iv.hi_closed, &mut out);
                }
                out.retain(|p| !p.is_empty());
                out
            }
        }
    }
}

/// `{t in iv : alpha + beta t <= v}`.
fn affine_le<S: Scalar>(iv: &Interval<S>, alpha: &S, beta: &S, v: &S) -> Option<Interval<S>> {
    let rhs = v.clone() - alpha.clone();
    let half = if beta.is_zero() {
        return if S::zero() <= rhs {
            Some(iv.clone())
        } else {
            None
        };
    } else if beta.is_positive() {
        // t <= rhs / beta
        Interval {
            lo: iv.lo.clone(),
            lo_closed: iv.lo_closed,
            hi: rhs / beta.clone(),
            hi_closed: true,
        }
    } else {
        Interval {
            lo: rhs / beta.clone(),
            lo_closed: true,
            hi: iv.hi.clone(),
            hi_closed: iv.hi_closed,
        }
    };
    let part = half.intersect(iv);
    (!part.is_empty()).then_some(part)
}

/// Knobs of the thick-thin construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionParams<S> {
    /// Base level `ln 2k` (a scalar supplied by the caller in exact mode).
    pub t_min: S,
    pub k: S,
    /// Gap filling threshold, default `4 e^{-t}`.
    pub width_e: Threshold<S>,
    /// Thin threshold, default `24 e^{-t}`.
    pub width_n: Threshold<S>,
    /// Height below which a thin neck can be exceptional, default `ln 3`.
    pub exceptional_gap: S,
    /// Root-finding tolerance for float mode.
    pub tolerance: f64,
}

impl PartitionParams<f64> {
    pub fn float(k: f64) -> Self {
        PartitionParams {
            t_min: libm::log(2.0 * k),
            k,
            width_e: Threshold::Exponential { coeff: 4.0 },
            width_n: Threshold::Exponential { coeff: 24.0 },
            exceptional_gap: libm::log(3.0),
            tolerance: 1e-12,
        }
    }
}

impl<S: Scalar> PartitionParams<S> {
    /// Exact-mode parameters; `ln 3` enters as its nearest double.
    pub fn exact(t_min: S, k: S, width_e: Threshold<S>, width_n: Threshold<S>) -> Self {
        PartitionParams {
            t_min,
            k,
            width_e,
            width_n,
            exceptional_gap: S::from_f64(libm::log(3.0)).unwrap_or_else(S::one),
            tolerance: 1e-12,
        }
    }

    pub fn validate(&self) -> Result<(), HypographError> {
        if self.k < S::one() {
            return Err(HypographError::BadParams("k must be at least 1"));
        }
        if self.exceptional_gap.partial_cmp(&S::zero()) != Some(Ordering::Greater) {
            return Err(HypographError::BadParams(
                "exceptional gap must be positive",
            ));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(HypographError::BadParams("tolerance must be positive"));
        }
        self.width_e.validate(S::EXACT)?;
        self.width_n.validate(S::EXACT)
    }
}
