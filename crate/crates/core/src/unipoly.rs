//! Dense univariate polynomials with integer coefficients.
//!
//! The working type behind real root isolation and algebraic number
//! arithmetic. Construction from rational coefficients multiplies through by
//! a positive factor, so signs of values are preserved.

use crate::rat::Rational;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly {
    /// Ascending coefficients, last entry nonzero; empty for the zero polynomial.
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn from_int_slice(c: &[i64]) -> Self {
        UniPoly::new(c.iter().map(|&n| BigInt::from(n)).collect())
    }

    /// Clear denominators (positive multiplier) and strip the positive
    /// integer content.
    pub fn from_rational_coeffs(coeffs: &[Rational]) -> Self {
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        UniPoly::new(ints).primitive()
    }

    /// Divide by the positive integer content (sign preserved).
    pub fn primitive(&self) -> Self {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Canonical associate: primitive with positive leading coefficient.
    pub fn monic_like(&self) -> Self {
        let p = self.primitive();
        match p.coeffs.last() {
            Some(c) if c.sign() == Sign::Minus => UniPoly {
                coeffs: p.coeffs.iter().map(|c| -c).collect(),
            },
            _ => p,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval_rat(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from(c.clone());
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> i8 {
        let v = self.eval_rat(x);
        if v.is_zero() {
            0
        } else if v.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * BigInt::from(j))
                .collect(),
        )
    }

    fn mul_bigint(&self, k: &BigInt) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|j| {
                    let a = self.coeffs.get(j).cloned().unwrap_or_else(BigInt::zero);
                    let b = other.coeffs.get(j).cloned().unwrap_or_else(BigInt::zero);
                    a - b
                })
                .collect(),
        )
    }

    fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: c }
    }

    /// Pseudo-remainder.
    fn prem(&self, d: &Self) -> Self {
        let dd = d.degree();
        let lb = d.lc();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= dd {
            let lead = r.lc();
            let k = r.degree() - dd;
            r = r.mul_bigint(&lb).sub(&d.mul_bigint(&lead).shift_up(k));
        }
        r
    }

    /// Primitive-PRS gcd, normalized to positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic_like();
        let mut b = other.monic_like();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_zero() {
                return a.monic_like();
            }
            if b.degree() == 0 {
                return UniPoly::new(vec![BigInt::one()]);
            }
            let r = a.prem(&b).monic_like();
            a = b;
            b = r;
        }
    }

    /// `self / gcd(self, self')`, canonical associate of the squarefree part.
    pub fn squarefree_part(&self) -> Self {
        if self.degree() <= 1 {
            return self.monic_like();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.monic_like();
        }
        self.div_exact(&g).monic_like()
    }

    /// Exact division (panics if not exact; internal invariant).
    pub fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero());
        if self.is_zero() {
            return Self::zero();
        }
        let mut r: Vec<Rational> = self.coeffs.iter().map(|c| Rational::from(c.clone())).collect();
        let dd = d.degree();
        let dl = Rational::from(d.lc());
        let mut q = vec![Rational::zero(); self.coeffs.len() - dd];
        for i in (dd..self.coeffs.len()).rev() {
            let c = &r[i] / &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let idx = i - dd + j;
                    r[idx] = &r[idx] - &(&c * &Rational::from(dc.clone()));
                }
            }
            q[i - dd] = c;
        }
        assert!(r.iter().all(|c| c.is_zero()), "division not exact");
        UniPoly::from_rational_coeffs(&q)
    }

    /// Cauchy root bound: every real root has absolute value below the result.
    pub fn root_bound(&self) -> Rational {
        let lc = Rational::from(self.lc()).abs();
        let mut m = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = Rational::from(c.clone()).abs() / &lc;
            if a > m {
                m = a;
            }
        }
        m + Rational::one()
    }

    /// Taylor shift by one: p(x) -> p(x+1), in place Ruffini-Horner.
    pub fn taylor_shift_1(&self) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        if n <= 1 {
            return self.clone();
        }
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let tmp = a[j + 1].clone();
                a[j] += tmp;
            }
        }
        UniPoly::new(a)
    }

    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        UniPoly::new(c)
    }

    /// Number of sign variations in the coefficient sequence.
    pub fn sign_variations(&self) -> usize {
        let mut vars = 0;
        let mut last = 0i8;
        for c in &self.coeffs {
            let s = match c.sign() {
                Sign::Minus => -1,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            };
            if s != 0 {
                if last != 0 && s != last {
                    vars += 1;
                }
                last = s;
            }
        }
        vars
    }

    /// Map `(lo, hi)` to `(0, 1)`: returns an integer polynomial whose roots in
    /// `(0,1)` are the roots of `self` in `(lo, hi)`.
    pub fn to_unit_interval(&self, lo: &Rational, hi: &Rational) -> Self {
        let w = hi - lo;
        // p(lo + w x): shift by lo, then scale by w
        let shifted = self.taylor_shift_rat(lo);
        let mut pw = Rational::one();
        let scaled: Vec<Rational> = shifted
            .iter()
            .map(|c| {
                let r = c * &pw;
                pw = &pw * &w;
                r
            })
            .collect();
        UniPoly::from_rational_coeffs(&scaled)
    }

    /// Coefficients of p(x + t) for rational t.
    fn taylor_shift_rat(&self, t: &Rational) -> Vec<Rational> {
        let mut a: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|c| Rational::from(c.clone()))
            .collect();
        let n = a.len();
        if n <= 1 {
            return a;
        }
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let tmp = &a[j + 1] * t;
                a[j] = &a[j] + &tmp;
            }
        }
        a
    }

    /// Descartes bound on the number of roots in the open interval `(lo, hi)`:
    /// 0 means none, 1 means exactly one; larger values are only bounds.
    pub fn descartes_bound(&self, lo: &Rational, hi: &Rational) -> usize {
        let q = self.to_unit_interval(lo, hi);
        // roots of q in (0,1) <-> positive roots of (1+x)^d q(1/(1+x))
        q.reversed().taylor_shift_1().sign_variations()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn basic_ops() {
        let p = UniPoly::from_int_slice(&[-2, 0, 1]); // x^2-2
        assert_eq!(p.degree(), 2);
        assert_eq!(p.eval_rat(&rat_int(2)), rat_int(2));
        assert_eq!(p.sign_at(&rat_int(1)), -1);
        assert_eq!(p.derivative(), UniPoly::from_int_slice(&[0, 2]));
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2)
        let p = UniPoly::from_int_slice(&[2, -3, 0, 1]);
        let sf = p.squarefree_part();
        assert_eq!(sf, UniPoly::from_int_slice(&[-2, 1, 1])); // (x-1)(x+2)
        let g = UniPoly::from_int_slice(&[-1, 0, 1]).gcd(&UniPoly::from_int_slice(&[-1, 1]));
        assert_eq!(g, UniPoly::from_int_slice(&[-1, 1]));
    }

    #[test]
    fn descartes_counts() {
        let p = UniPoly::from_int_slice(&[-2, 0, 1]); // roots ±sqrt(2)
        assert_eq!(p.descartes_bound(&rat_int(0), &rat_int(2)), 1);
        assert_eq!(p.descartes_bound(&rat_int(-2), &rat_int(0)), 1);
        assert_eq!(p.descartes_bound(&rat_int(2), &rat_int(3)), 0);
        assert!(p.descartes_bound(&rat_int(-2), &rat_int(2)) >= 2);
        // the count is only a bound, but parity is guaranteed
        let q = UniPoly::from_int_slice(&[1, 0, 1]); // no real roots
        assert_eq!(q.descartes_bound(&rat(-5, 1), &rat(5, 1)) % 2, 0);
        assert_eq!(q.descartes_bound(&rat(-1, 2), &rat(1, 2)), 0);
    }

    #[test]
    fn from_rationals_preserves_sign() {
        let p = UniPoly::from_rational_coeffs(&[rat(-1, 2), rat(1, 3)]); // x/3 - 1/2
        assert_eq!(p, UniPoly::from_int_slice(&[-3, 2]));
        assert_eq!(p.sign_at(&rat_int(0)), -1);
        assert_eq!(p.sign_at(&rat_int(2)), 1);
    }
}
