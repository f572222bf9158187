//! Exact rational interval arithmetic.
//!
//! Endpoints are rationals, so no rounding is involved; enclosures are exact
//! bounds on the range of the expression over the box.

use crate::rat::{sign_of, Rational};
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct RatInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn point(r: Rational) -> Self {
        RatInterval { lo: r.clone(), hi: r }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign of every value in the interval, if constant: -1, 0 (point zero), +1.
    pub fn decided_sign(&self) -> Option<i8> {
        let (sl, sh) = (sign_of(&self.lo), sign_of(&self.hi));
        if sl == sh {
            return Some(sl);
        }
        if sl > 0 || sh < 0 {
            return Some(sl.max(sh)); // unreachable given lo<=hi; kept for clarity
        }
        None
    }

    pub fn add(&self, other: &Self) -> Self {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn neg(&self) -> Self {
        RatInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if c < &lo {
                lo = c.clone();
            }
            if c > &hi {
                hi = c.clone();
            }
        }
        RatInterval::new(lo, hi)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return RatInterval::point(Rational::zero());
        }
        if r.is_negative() {
            RatInterval::new(&self.hi * r, &self.lo * r)
        } else {
            RatInterval::new(&self.lo * r, &self.hi * r)
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn mul_signs() {
        let a = RatInterval::new(rat(-1, 1), rat(2, 1));
        let b = RatInterval::new(rat(-3, 1), rat(1, 2));
        let p = a.mul(&b);
        assert_eq!(p.lo, rat(-6, 1));
        assert_eq!(p.hi, rat(3, 1));
        assert!(p.contains_zero());
        assert_eq!(p.decided_sign(), None);
    }
}
