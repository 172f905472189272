//! Exact rational interval arithmetic, enough to certify enclosures of e
//! and of the handful of exponential constants the limit statements use.
//!
//! Enclosures come from the Maclaurin series of e^x with the Lagrange
//! remainder R_k(x) = e^y x^(k+1) / (k+1)! bounded crudely (e^y <= 3 on
//! [0, 1]); everything downstream is exact rational arithmetic, so a true
//! comparison against an interval end is a proof.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::num::ExactRatio;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: ExactRatio,
    pub hi: ExactRatio,
}

impl RatInterval {
    pub fn new(lo: ExactRatio, hi: ExactRatio) -> RatInterval {
        assert!(lo <= hi, "inverted interval");
        RatInterval { lo, hi }
    }

    pub fn point(v: ExactRatio) -> RatInterval {
        RatInterval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn width(&self) -> ExactRatio {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &ExactRatio) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        RatInterval::new(lo, hi)
    }

    pub fn scale(&self, c: &ExactRatio) -> RatInterval {
        self.mul(&RatInterval::point(c.clone()))
    }

    /// Reciprocal; requires the interval to exclude zero.
    pub fn recip(&self) -> RatInterval {
        assert!(
            self.lo.is_positive() || self.hi.is_negative(),
            "reciprocal of an interval containing zero"
        );
        RatInterval::new(self.hi.recip(), self.lo.recip())
    }

    pub fn square(&self) -> RatInterval {
        self.mul(self)
    }

    /// Upper bound on |x - v| over x in the interval.
    pub fn distance_upper(&self, v: &ExactRatio) -> ExactRatio {
        let a = (&self.lo - v).abs();
        let b = (&self.hi - v).abs();
        a.max(b)
    }
}

fn factorial(k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    acc
}

/// Enclosure of e from its Maclaurin series with `terms` terms; the tail
/// past index N is below 2/(N+1)!.
pub fn e_enclosure(terms: u32) -> RatInterval {
    let mut sum = ExactRatio::zero();
    for i in 0..=terms {
        sum += BigRational::new(BigInt::one(), factorial(i));
    }
    let rem = BigRational::new(BigInt::from(2), factorial(terms + 1));
    RatInterval::new(sum.clone(), sum + rem)
}

/// Enclosure of e^x for an interval x inside [0, 1].
pub fn exp_enclosure(x: &RatInterval, terms: u32) -> RatInterval {
    assert!(!x.lo.is_negative() && x.hi <= ExactRatio::one());
    let series = |v: &ExactRatio| -> ExactRatio {
        let mut sum = ExactRatio::one();
        let mut pow = ExactRatio::one();
        for i in 1..=terms {
            pow *= v;
            sum += &pow / BigRational::from_integer(factorial(i));
        }
        sum
    };
    let lo = series(&x.lo);
    let tail = {
        let mut pow = ExactRatio::one();
        for _ in 0..=terms {
            pow *= &x.hi;
        }
        pow * BigRational::new(BigInt::from(3), factorial(terms + 1))
    };
    let hi = series(&x.hi) + tail;
    RatInterval::new(lo, hi)
}
