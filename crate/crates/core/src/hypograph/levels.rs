use alloc::vec::Vec;

use crate::scalar::Scalar;

/// Bounded interval of levels with independently open or closed ends.
#[derive(Debug, Clone, PartialEq)]
pub struct Interval<S> {
    pub lo: S,
    pub lo_closed: bool,
    pub hi: S,
    pub hi_closed: bool,
}

impl<S: Scalar> Interval<S> {
    pub fn closed(lo: S, hi: S) -> Self {
        Interval {
            lo,
            lo_closed: true,
            hi,
            hi_closed: true,
        }
    }

    pub fn point(t: S) -> Self {
        Self::closed(t.clone(), t)
    }

    pub fn open(lo: S, hi: S) -> Self {
        Interval {
            lo,
            lo_closed: false,
            hi,
            hi_closed: false,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi || (self.lo == self.hi && !(self.lo_closed && self.hi_closed))
    }

    pub fn contains(&self, t: &S) -> bool {
        let above = if self.lo_closed {
            *t >= self.lo
        } else {
            *t > self.lo
        };
        let below = if self.hi_closed {
            *t <= self.hi
        } else {
            *t < self.hi
        };
        above && below
    }

    /// `sup - inf`.
    pub fn height(&self) -> S {
        self.hi.clone() - self.lo.clone()
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let (lo, lo_closed) = match self.lo.cmp_total(&other.lo) {
            core::cmp::Ordering::Less => (other.lo.clone(), other.lo_closed),
            core::cmp::Ordering::Greater => (self.lo.clone(), self.lo_closed),
            core::cmp::Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp_total(&other.hi) {
            core::cmp::Ordering::Less => (self.hi.clone(), self.hi_closed),
            core::cmp::Ordering::Greater => (other.hi.clone(), other.hi_closed),
            core::cmp::Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
        };
        Interval {
            lo,
            lo_closed,
            hi,
            hi_closed,
        }
    }
}

/// Finite union of disjoint intervals, kept sorted and maximal.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSet<S> {
    parts: Vec<Interval<S>>,
}

impl<S: Scalar> Default for LevelSet<S> {
    fn default() -> Self {
        LevelSet { parts: Vec::new() }
    }
}

impl<S: Scalar> LevelSet<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[Interval<S>] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, t: &S) -> bool {
        self.parts.iter().any(|p| p.contains(t))
    }

    /// Adds an interval lying entirely at or above everything added so far,
    /// gluing it to the last part when they touch.
    pub fn push(&mut self, iv: Interval<S>) {
        if iv.is_empty() {
            return;
        }
        if let Some(last) = self.parts.last_mut() {
            let touches = last.hi > iv.lo || (last.hi == iv.lo && (last.hi_closed || iv.lo_closed));
            if touches {
                if iv.hi > last.hi {
                    last.hi = iv.hi;
                    last.hi_closed = iv.hi_closed;
                } else if iv.hi == last.hi {
                    last.hi_closed |= iv.hi_closed;
                }
                return;
            }
        }
        self.parts.push(iv);
    }

    /// Complement inside `within`, which must contain every part.
    pub fn complement_in(&self, within: &Interval<S>) -> LevelSet<S> {
        let mut out = LevelSet::new();
        let mut lo = within.lo.clone();
        let mut lo_closed = within.lo_closed;
        for p in &self.parts {
            out.push(Interval {
                lo: lo.clone(),
                lo_closed,
                hi: p.lo.clone(),
                hi_closed: !p.lo_closed,
            });
            lo = p.hi.clone();
            lo_closed = !p.hi_closed;
        }
        out.push(Interval {
            lo,
            lo_closed,
            hi: within.hi.clone(),
            hi_closed: within.hi_closed,
        });
        out
    }
}
