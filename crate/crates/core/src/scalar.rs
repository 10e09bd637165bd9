//! Number types shared by the exact and the floating-point paths.
//!
//! The hypograph machinery is generic over [`Scalar`]; [`Rational`] gives
//! exactly reproducible combinatorics and `f64` is used wherever thresholds
//! are transcendental.

use core::cmp::Ordering;
use core::fmt::Debug;
use core::hash::Hasher;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive, Zero};

/// Arbitrary precision rational.
pub type Rational = BigRational;

/// Ordered field used for positions, levels and lengths.
pub trait Scalar: Num + Signed + Clone + PartialOrd + Debug + ToPrimitive + 'static {
    /// True for exact arithmetic.
    const EXACT: bool;

    /// Converts a finite float; exact types convert without rounding.
    fn from_f64(x: f64) -> Option<Self>;

    fn from_ratio(num: i64, den: i64) -> Self;

    fn floor(&self) -> Self;

    /// Feeds a canonical encoding of the value into `h`.
    fn feed<H: Hasher>(&self, h: &mut H);

    fn is_finite_value(&self) -> bool;

    fn as_f64(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Total order; NaN never reaches this point because constructors reject it.
    fn cmp_total(&self, other: &Self) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    fn midpoint(a: &Self, b: &Self) -> Self {
        (a.clone() + b.clone()) / Self::from_int(2)
    }

    fn min_of(a: &Self, b: &Self) -> Self {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    fn max_of(a: &Self, b: &Self) -> Self {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    /// Representative of `x` modulo `m` in `[0, m)`.
    fn rem_euclid_by(&self, m: &Self) -> Self {
        let q = (self.clone() / m.clone()).floor();
        let r = self.clone() - q * m.clone();
        if r < Self::zero() {
            r + m.clone()
        } else if &r >= m {
            r - m.clone()
        } else {
            r
        }
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_f64(x: f64) -> Option<Self> {
        x.is_finite().then_some(x)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn floor(&self) -> Self {
        libm::floor(*self)
    }

    fn feed<H: Hasher>(&self, h: &mut H) {
        // -0.0 and 0.0 describe the same field
        let v = if *self == 0.0 { 0.0f64 } else { *self };
        h.write_u64(v.to_bits());
    }

    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn floor(&self) -> Self {
        BigRational::floor(self)
    }

    fn feed<H: Hasher>(&self, h: &mut H) {
        let (sign, digits) = self.numer().to_u64_digits();
        h.write_u8(sign as u8);
        for d in digits {
            h.write_u64(d);
        }
        h.write_u8(0xff);
        let (_, digits) = self.denom().to_u64_digits();
        for d in digits {
            h.write_u64(d);
        }
    }

    fn is_finite_value(&self) -> bool {
        !self.denom().is_zero()
    }
}

/// Builds a rational from a numerator/denominator pair.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::from_ratio(num, den)
}

/// FNV-1a, used for field fingerprints.
#[derive(Debug, Clone)]
pub(crate) struct Fnv(u64);

impl Default for Fnv {
    fn default() -> Self {
        Fnv(0xcbf2_9ce4_8422_2325)
    }
}

impl Hasher for Fnv {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for b in bytes {
            self.0 ^= u64::from(*b);
            self.0 = self.0.wrapping_mul(0x0100_0000_01b3);
        }
    }
}
