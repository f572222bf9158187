//! Real algebraic numbers: isolation, refinement, comparison, sign queries.
//!
//! A number is a squarefree integer polynomial plus an isolating interval
//! with rational endpoints. Rational values are stored exactly (collapsed
//! interval). Root isolation uses Descartes bisection; exact decisions
//! (equality, vanishing) go through integer polynomial gcds.

use crate::error::{CadError, Result};
use crate::interval::RatInterval;
use crate::poly::MultiPoly;
use crate::rat::{midpoint, sign_of, simplest_in_open, to_f64, Rational};
use crate::unipoly::UniPoly;
use crate::var::Var;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Refinement width below which sign decisions fall back to exact
/// (gcd-based) zero tests.
fn exact_decision_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2u8).pow(64))
}

#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    defining: UniPoly,
    lo: Rational,
    hi: Rational,
}

/// Coordinates of a sample point, smallest variable first.
pub type SamplePoint = Vec<AlgebraicNumber>;

impl AlgebraicNumber {
    pub fn from_rational(r: Rational) -> Self {
        // defining polynomial den*x - num has positive leading coefficient
        let defining = UniPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
        AlgebraicNumber {
            defining,
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from(BigInt::from(n)))
    }

    /// Internal constructor; `defining` must be squarefree with exactly one
    /// root in the open interval and non-root endpoints.
    pub(crate) fn new_root(defining: UniPoly, lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo < hi);
        debug_assert_ne!(defining.sign_at(&lo), 0);
        debug_assert_ne!(defining.sign_at(&hi), 0);
        AlgebraicNumber {
            defining: defining.monic_like(),
            lo,
            hi,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.lo)
        } else {
            None
        }
    }

    pub fn defining(&self) -> &UniPoly {
        &self.defining
    }

    pub fn interval(&self) -> RatInterval {
        RatInterval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Same number with interval width at most `width`.
    pub fn refine(&self, width: &Rational) -> Self {
        let mut out = self.clone();
        out.refine_in_place(width);
        out
    }

    pub(crate) fn refine_in_place(&mut self, width: &Rational) {
        if self.is_rational() {
            return;
        }
        let mut sign_lo = self.defining.sign_at(&self.lo);
        debug_assert_ne!(sign_lo, 0);
        while self.width() > *width {
            let m = midpoint(&self.lo, &self.hi);
            let sm = self.defining.sign_at(&m);
            if sm == 0 {
                // the isolated root is m itself
                self.lo = m.clone();
                self.hi = m;
                return;
            }
            if sm == sign_lo {
                self.lo = m;
                sign_lo = sm;
            } else {
                self.hi = m;
            }
        }
    }

    /// Halve the interval once.
    pub(crate) fn refine_step(&mut self) {
        if self.is_rational() {
            return;
        }
        let target = self.width() / Rational::from(BigInt::from(2));
        self.refine_in_place(&target);
    }

    pub fn approx_f64(&self) -> f64 {
        let r = self.refine(&Rational::new(BigInt::one(), BigInt::from(1u64 << 40)));
        to_f64(&midpoint(&r.lo, &r.hi))
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        compare(self, other) == Ordering::Equal
    }
}
impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(compare(self, other))
    }
}
impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

/// Exact order on real algebraic numbers.
pub fn compare(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Ordering {
    match (a.as_rational(), b.as_rational()) {
        (Some(x), Some(y)) => x.cmp(y),
        (Some(x), None) => compare_rational_with(x, b),
        (None, Some(y)) => compare_rational_with(y, a).reverse(),
        (None, None) => compare_algebraic(a, b),
    }
}

fn compare_rational_with(x: &Rational, b: &AlgebraicNumber) -> Ordering {
    if x <= b.lo() {
        return Ordering::Less;
    }
    if x >= b.hi() {
        return Ordering::Greater;
    }
    if b.defining.sign_at(x) == 0 {
        // x lies in the isolating interval and is a root: it is the number
        return Ordering::Equal;
    }
    let mut bb = b.clone();
    loop {
        bb.refine_step();
        if x <= bb.lo() {
            return Ordering::Less;
        }
        if x >= bb.hi() {
            return Ordering::Greater;
        }
    }
}

fn compare_algebraic(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Ordering {
    // equality iff the defining gcd has a root in the interval intersection
    let olo = a.lo().max(b.lo()).clone();
    let ohi = a.hi().min(b.hi()).clone();
    if olo < ohi {
        let g = a.defining.gcd(&b.defining);
        if g.degree() >= 1 {
            let (sl, sh) = (g.sign_at(&olo), g.sign_at(&ohi));
            debug_assert!(sl != 0 && sh != 0);
            if sl != sh {
                return Ordering::Equal;
            }
        }
    }
    // distinct numbers: refine until the intervals separate
    let mut aa = a.clone();
    let mut bb = b.clone();
    loop {
        if aa.hi() <= bb.lo() {
            return Ordering::Less;
        }
        if bb.hi() <= aa.lo() {
            return Ordering::Greater;
        }
        aa.refine_step();
        bb.refine_step();
    }
}

/// Exact sign of a univariate polynomial at an algebraic number.
pub fn sign_at(p: &MultiPoly, v: Var, a: &AlgebraicNumber) -> i8 {
    if p.is_zero() {
        return 0;
    }
    if let Some(r) = a.as_rational() {
        let coeffs = p
            .univariate_coeffs(v)
            .expect("sign_at needs a polynomial univariate in v");
        let mut acc = Rational::zero();
        for c in coeffs.iter().rev() {
            acc = acc * r + c;
        }
        return sign_of(&acc);
    }
    let q = UniPoly::from_rational_coeffs(
        &p.univariate_coeffs(v)
            .expect("sign_at needs a polynomial univariate in v"),
    );
    sign_at_unipoly(&q, a)
}

pub(crate) fn sign_at_unipoly(q: &UniPoly, a: &AlgebraicNumber) -> i8 {
    if q.is_zero() {
        return 0;
    }
    if let Some(r) = a.as_rational() {
        return q.sign_at(r);
    }
    // cheap refinement first
    let mut aa = a.clone();
    let floor = exact_decision_width();
    loop {
        if let Some(s) = unipoly_box_sign(q, &aa) {
            return s;
        }
        if aa.width() < floor {
            break;
        }
        aa.refine_step();
        if aa.is_rational() {
            return q.sign_at(aa.as_rational().unwrap());
        }
    }
    // exact zero decision via the defining polynomial
    let g = q.squarefree_part().gcd(&aa.defining);
    if g.degree() >= 1 && g.sign_at(aa.lo()) != g.sign_at(aa.hi()) {
        return 0;
    }
    // provably nonzero: keep refining until the enclosure decides
    loop {
        aa.refine_step();
        if aa.is_rational() {
            return q.sign_at(aa.as_rational().unwrap());
        }
        if let Some(s) = unipoly_box_sign(q, &aa) {
            return s;
        }
    }
}

fn unipoly_box_sign(q: &UniPoly, a: &AlgebraicNumber) -> Option<i8> {
    let x = a.interval();
    let mut acc = RatInterval::point(Rational::zero());
    for c in q.coeffs().iter().rev() {
        acc = acc
            .mul(&x)
            .add(&RatInterval::point(Rational::from(c.clone())));
    }
    acc.decided_sign()
}

/// All distinct real roots of a nonzero univariate polynomial, increasing,
/// rational roots exact.
pub fn isolate_real_roots(p: &MultiPoly, v: Var) -> Result<Vec<AlgebraicNumber>> {
    if p.is_zero() {
        return Err(CadError::ZeroPolynomial);
    }
    let coeffs = p
        .univariate_coeffs(v)
        .expect("isolate_real_roots needs a polynomial univariate in v");
    Ok(isolate_unipoly(&UniPoly::from_rational_coeffs(&coeffs)))
}

/// Root isolation on an integer polynomial.
pub fn isolate_unipoly(p: &UniPoly) -> Vec<AlgebraicNumber> {
    let sf = p.squarefree_part();
    if sf.degree() == 0 {
        return vec![];
    }
    if sf.degree() == 1 {
        let c = sf.coeffs();
        let r = -Rational::new(c[0].clone(), c[1].clone());
        return vec![AlgebraicNumber::from_rational(r)];
    }
    let b = sf.root_bound();
    let mut out = Vec::new();
    descend(&sf, &-b.clone(), &b, &mut out);
    out.into_iter().map(|c| finish_candidate(&sf, c)).collect()
}

enum Candidate {
    Exact(Rational),
    Open(Rational, Rational),
}

fn descend(sf: &UniPoly, lo: &Rational, hi: &Rational, out: &mut Vec<Candidate>) {
    match sf.descartes_bound(lo, hi) {
        0 => {}
        1 => out.push(Candidate::Open(lo.clone(), hi.clone())),
        _ => {
            let m = midpoint(lo, hi);
            let root_at_mid = sf.sign_at(&m) == 0;
            descend(sf, lo, &m, out);
            if root_at_mid {
                out.push(Candidate::Exact(m.clone()));
            }
            descend(sf, &m, hi, out);
        }
    }
}

/// Shrink a one-root window until the endpoints are non-roots, then either
/// pin the root as an exact rational or return it with its interval.
fn finish_candidate(sf: &UniPoly, c: Candidate) -> AlgebraicNumber {
    let (mut lo, mut hi) = match c {
        Candidate::Exact(r) => return AlgebraicNumber::from_rational(r),
        Candidate::Open(lo, hi) => (lo, hi),
    };
    // any rational root here has denominator dividing lc(sf)
    let lc = Rational::from(sf.lc()).abs();
    let threshold = (&lc * &lc).recip();
    loop {
        let width = &hi - &lo;
        let endpoints_clean = sf.sign_at(&lo) != 0 && sf.sign_at(&hi) != 0;
        if endpoints_clean && width < threshold {
            break;
        }
        let m = midpoint(&lo, &hi);
        if sf.sign_at(&m) == 0 {
            return AlgebraicNumber::from_rational(m);
        }
        if sf.descartes_bound(&lo, &m) == 1 {
            hi = m;
        } else {
            lo = m;
        }
    }
    let s = simplest_in_open(&lo, &hi);
    if sf.sign_at(&s) == 0 {
        return AlgebraicNumber::from_rational(s);
    }
    AlgebraicNumber::new_root(sf.clone(), lo, hi)
}

/// Refine two distinct numbers until their intervals are disjoint
/// (`a.hi <= b.lo` for a < b); returns refined copies in the original order.
pub fn separate(a: &AlgebraicNumber, b: &AlgebraicNumber) -> (AlgebraicNumber, AlgebraicNumber) {
    debug_assert_ne!(compare(a, b), Ordering::Equal);
    let mut aa = a.clone();
    let mut bb = b.clone();
    loop {
        if aa.hi() <= bb.lo() || bb.hi() <= aa.lo() {
            return (aa, bb);
        }
        aa.refine_step();
        bb.refine_step();
    }
}

/// A rational strictly between a < b.
pub fn rational_between(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Rational {
    debug_assert_eq!(compare(a, b), Ordering::Less);
    let (aa, bb) = separate(a, b);
    if aa.hi() <= bb.lo() {
        midpoint(aa.hi(), bb.lo())
    } else {
        midpoint(bb.hi(), aa.lo())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn sqrt2() -> AlgebraicNumber {
        let roots = isolate_unipoly(&UniPoly::from_int_slice(&[-2, 0, 1]));
        assert_eq!(roots.len(), 2);
        roots[1].clone()
    }

    #[test]
    fn isolates_sqrt2() {
        let roots = isolate_unipoly(&UniPoly::from_int_slice(&[-2, 0, 1]));
        assert_eq!(roots.len(), 2);
        assert!(roots[0] < roots[1]);
        assert!(!roots[0].is_rational());
        let a = roots[1].approx_f64();
        assert!((a - std::f64::consts::SQRT_2).abs() < 1e-9);
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_unipoly(&UniPoly::from_int_slice(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn rational_roots_exact() {
        let roots = isolate_unipoly(&UniPoly::from_int_slice(&[-1, 0, 1]));
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].as_rational(), Some(&rat_int(-1)));
        assert_eq!(roots[1].as_rational(), Some(&rat_int(1)));

        // (3x-1)(x^2-2): the rational root 1/3 is off the dyadic grid
        let p = UniPoly::from_int_slice(&[2, -6, -1, 3]);
        let roots = isolate_unipoly(&p);
        assert_eq!(roots.len(), 3);
        assert_eq!(roots[1].as_rational(), Some(&rat(1, 3)));
        assert!(!roots[0].is_rational());
        assert!(!roots[2].is_rational());
    }

    #[test]
    fn refine_keeps_the_number() {
        let a = sqrt2();
        let r = a.refine(&rat(1, 8));
        assert!(r.width() <= rat(1, 8));
        assert_eq!(compare(&a, &r), Ordering::Equal);
        // a width-1/4096 interval around sqrt(2) cannot contain 1.415
        let r = a.refine(&rat(1, 4096));
        assert!(r.lo() > &rat(1415, 1001) || r.hi() < &rat(1415, 1000));
        let e = AlgebraicNumber::from_int(3);
        assert_eq!(e.refine(&rat(1, 100)).as_rational(), Some(&rat_int(3)));
    }

    #[test]
    fn compare_examples() {
        let a = sqrt2();
        assert_eq!(compare(&a, &AlgebraicNumber::from_int(1)), Ordering::Greater);
        // same number presented through a non-primitive defining polynomial
        let other = isolate_unipoly(&UniPoly::from_int_slice(&[-4, 0, 2]));
        assert_eq!(compare(&a, &other[1]), Ordering::Equal);
        let neg = isolate_unipoly(&UniPoly::from_int_slice(&[-2, 0, 1]))[0].clone();
        assert_eq!(compare(&neg, &a), Ordering::Less);
        // sqrt2 via x^4-4 = (x^2-2)(x^2+2): reducible but squarefree defining
        let v = isolate_unipoly(&UniPoly::from_int_slice(&[-4, 0, 0, 0, 1]));
        assert_eq!(v.len(), 2);
        assert_eq!(compare(&v[1], &a), Ordering::Equal);
    }

    #[test]
    fn sign_at_examples() {
        let a = sqrt2();
        let x2m2 = UniPoly::from_int_slice(&[-2, 0, 1]);
        assert_eq!(sign_at_unipoly(&x2m2, &a), 0);
        let xm1 = UniPoly::from_int_slice(&[-1, 1]);
        assert_eq!(sign_at_unipoly(&xm1, &a), 1);
        let x = UniPoly::from_int_slice(&[0, 1]);
        assert_eq!(sign_at_unipoly(&x, &AlgebraicNumber::from_int(0)), 0);
        // square is nonnegative
        let sq = UniPoly::from_int_slice(&[4, -4, 1]); // (x-2)^2
        assert!(sign_at_unipoly(&sq, &a) >= 0);
    }

    #[test]
    fn between_and_separate() {
        let v = isolate_unipoly(&UniPoly::from_int_slice(&[-2, 0, 1]));
        let m = rational_between(&v[0], &v[1]);
        assert!(compare(&AlgebraicNumber::from_rational(m.clone()), &v[0]) == Ordering::Greater);
        assert!(compare(&AlgebraicNumber::from_rational(m), &v[1]) == Ordering::Less);
    }
}
