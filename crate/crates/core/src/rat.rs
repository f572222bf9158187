//! Arbitrary-precision rationals and a few interval-search helpers.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

pub fn sign_of(r: &Rational) -> i8 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// gcd on rationals: gcd of numerators over lcm of denominators.
/// This is the content notion that makes `a / rat_gcd(a, b)` an integer
/// multiple for both arguments.
pub fn rat_gcd(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let n = a.numer().gcd(b.numer());
    let d = a.denom().lcm(b.denom());
    Rational::new(n, d)
}

/// Largest integer strictly below `r`.
pub fn integer_below(r: &Rational) -> Rational {
    let f = r.floor();
    if &f == r {
        f - Rational::one()
    } else {
        f
    }
}

/// Smallest integer strictly above `r`.
pub fn integer_above(r: &Rational) -> Rational {
    let c = r.ceil();
    if &c == r {
        c + Rational::one()
    } else {
        c
    }
}

/// The rational with smallest denominator (then smallest numerator) in the
/// open interval `(lo, hi)`. Stern-Brocot style descent.
pub fn simplest_in_open(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo < hi, "empty interval");
    // Any integer in the interval is simplest.
    let f = lo.floor() + Rational::one();
    if &f < hi {
        // smallest integer > lo; if lo itself is an integer, lo+1
        return if &f > lo { f } else { f + Rational::one() };
    }
    if lo.is_negative() && hi.is_positive() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_in_open(&-hi.clone(), &-lo.clone());
    }
    // 0 <= lo < hi, no integer inside: recurse on the fractional parts.
    let n = lo.floor();
    let (flo, fhi) = (lo - &n, hi - &n);
    // simplest in (flo, fhi) = 1 / simplest in (1/fhi, 1/flo)
    if flo.is_zero() {
        // interval (n, n+fhi): 1/(k) for smallest k with 1/k < fhi
        let k = (fhi.recip().floor()) + Rational::one();
        return n + k.recip();
    }
    let inner = simplest_in_open(&fhi.recip(), &flo.recip());
    n + inner.recip()
}

/// Midpoint helper.
pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / rat_int(2)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.numer()
        .to_f64()
        .and_then(|n| r.denom().to_f64().map(|d| n / d))
        .unwrap_or_else(|| {
            // fall back through a scaled division for huge operands
            let scaled = (r * Rational::from(BigInt::from(1u64 << 53))).to_integer();
            scaled.to_f64().unwrap_or(f64::NAN) / (1u64 << 53) as f64
        })
}
