use std::ops::{Add, Mul};

use crate::polycore::Sparse;
use crate::scalar::Scalar;

/// Closed interval `[lo, hi]` with exact endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Scalar> Interval<T> {
    pub fn new(lo: T, hi: T) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn point(v: T) -> Self {
        Self { lo: v.clone(), hi: v }
    }

    pub fn contains(&self, v: &T) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&T::zero())
    }

    pub fn scale(&self, c: &T) -> Self {
        let (a, b) = (self.lo.clone() * c.clone(), self.hi.clone() * c.clone());
        if a <= b {
            Self::new(a, b)
        } else {
            Self::new(b, a)
        }
    }

    /// Tight enclosure of `{x^k : x in self}`.
    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::point(T::one());
        }
        let p = |v: &T| (0..k).fold(T::one(), |acc, _| acc * v.clone());
        let (a, b) = (p(&self.lo), p(&self.hi));
        if k % 2 == 1 {
            Self::new(a, b)
        } else if self.contains_zero() {
            Self::new(T::zero(), if a > b { a } else { b })
        } else if a <= b {
            Self::new(a, b)
        } else {
            Self::new(b, a)
        }
    }
}

impl<T: Scalar> Add for Interval<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.lo + rhs.lo, self.hi + rhs.hi)
    }
}

impl<T: Scalar> Mul for Interval<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let candidates = [
            self.lo.clone() * rhs.lo.clone(),
            self.lo.clone() * rhs.hi.clone(),
            self.hi.clone() * rhs.lo.clone(),
            self.hi * rhs.hi,
        ];
        let mut lo = candidates[0].clone();
        let mut hi = candidates[0].clone();
        for c in &candidates[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        Self::new(lo, hi)
    }
}

/// Enclosure of `p` over a box, term by term with tight per-variable powers.
pub fn enclose<T: Scalar>(p: &Sparse<T>, cell: &[Interval<T>]) -> Interval<T> {
    let mut acc = Interval::point(T::zero());
    for (exps, c) in p.terms() {
        let mut term = Interval::point(c.clone());
        for (iv, &e) in cell.iter().zip(exps) {
            if e > 0 {
                term = term * iv.pow(e);
            }
        }
        acc = acc + term;
    }
    acc
}
