//! Multivariate polynomials over the rationals.
//!
//! Recursive dense representation keyed by a [`VarOrder`]: a polynomial is a
//! rational constant or a dense coefficient vector in its main variable, each
//! coefficient a polynomial in strictly smaller variables. The representation
//! is canonical (no zero leading coefficients, degree-0 nodes collapse), so
//! structural equality is semantic equality.

use crate::interval::RatInterval;
use crate::rat::{rat_gcd, sign_of, Rational};
use crate::var::{Var, VarOrder};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MultiPoly {
    Const(Rational),
    Poly { var: Var, coeffs: Vec<MultiPoly> },
}

use MultiPoly::{Const, Poly};

impl MultiPoly {
    pub fn zero() -> Self {
        Const(Rational::zero())
    }

    pub fn one() -> Self {
        Const(Rational::one())
    }

    pub fn constant(r: Rational) -> Self {
        Const(r)
    }

    pub fn int(n: i64) -> Self {
        Const(Rational::from(num_bigint::BigInt::from(n)))
    }

    pub fn variable(v: Var) -> Self {
        Poly {
            var: v,
            coeffs: vec![Self::zero(), Self::one()],
        }
    }

    /// Canonicalising constructor: trims zero leading coefficients and
    /// collapses degree-0 nodes.
    pub fn make(var: Var, mut coeffs: Vec<MultiPoly>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        match coeffs.len() {
            0 => Self::zero(),
            1 => coeffs.pop().unwrap(),
            _ => Poly { var, coeffs },
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Const(r) if r.is_zero())
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, Const(_))
    }

    pub fn as_constant(&self) -> Option<&Rational> {
        match self {
            Const(r) => Some(r),
            Poly { .. } => None,
        }
    }

    /// Greatest variable present, or `None` for constants.
    pub fn mvar(&self) -> Option<Var> {
        match self {
            Const(_) => None,
            Poly { var, .. } => Some(*var),
        }
    }

    /// Degree in `v` (0 for constants and for variables not present).
    pub fn degree(&self, v: Var) -> usize {
        match self {
            Const(_) => 0,
            Poly { var, coeffs } => match var.cmp(&v) {
                Ordering::Equal => coeffs.len() - 1,
                Ordering::Less => 0,
                Ordering::Greater => coeffs.iter().map(|c| c.degree(v)).max().unwrap_or(0),
            },
        }
    }

    pub fn total_degree(&self) -> usize {
        match self {
            Const(_) => 0,
            Poly { coeffs, .. } => coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| j + c.total_degree())
                .max()
                .unwrap_or(0),
        }
    }

    pub fn vars_present(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        if let Poly { var, coeffs } = self {
            if coeffs.iter().skip(1).any(|c| !c.is_zero()) {
                out.insert(*var);
            }
            for c in coeffs {
                c.collect_vars(out);
            }
        }
    }

    /// Dense coefficient vector with respect to an arbitrary variable `v`
    /// (ascending powers). Coefficients may contain variables greater than
    /// `v`; [`MultiPoly::from_coeffs`] inverts this.
    pub fn coeffs_wrt(&self, v: Var) -> Vec<MultiPoly> {
        match self {
            Const(_) => vec![self.clone()],
            Poly { var, coeffs } => match var.cmp(&v) {
                Ordering::Equal => coeffs.clone(),
                Ordering::Less => vec![self.clone()],
                Ordering::Greater => {
                    let parts: Vec<Vec<MultiPoly>> =
                        coeffs.iter().map(|c| c.coeffs_wrt(v)).collect();
                    let deg = parts.iter().map(|p| p.len()).max().unwrap_or(1);
                    (0..deg)
                        .map(|j| {
                            Self::make(
                                *var,
                                parts
                                    .iter()
                                    .map(|p| p.get(j).cloned().unwrap_or_else(Self::zero))
                                    .collect(),
                            )
                        })
                        .collect()
                }
            },
        }
    }

    /// Rebuild `sum coeffs[j] * v^j`.
    pub fn from_coeffs(v: Var, coeffs: &[MultiPoly]) -> Self {
        let mut acc = Self::zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(&Self::variable(v)).add(c);
        }
        acc
    }

    /// Leading coefficient with respect to `v`.
    pub fn lc_wrt(&self, v: Var) -> MultiPoly {
        self.coeffs_wrt(v).pop().unwrap_or_else(Self::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Const(a), Const(b)) => Const(a + b),
            (Poly { var, coeffs }, Const(_)) => {
                let mut c = coeffs.clone();
                c[0] = c[0].add(other);
                Self::make(*var, c)
            }
            (Const(_), Poly { .. }) => other.add(self),
            (
                Poly { var: v1, coeffs: c1 },
                Poly { var: v2, coeffs: c2 },
            ) => match v1.cmp(v2) {
                Ordering::Equal => {
                    let n = c1.len().max(c2.len());
                    let coeffs = (0..n)
                        .map(|j| {
                            let a = c1.get(j).cloned().unwrap_or_else(Self::zero);
                            let b = c2.get(j).cloned().unwrap_or_else(Self::zero);
                            a.add(&b)
                        })
                        .collect();
                    Self::make(*v1, coeffs)
                }
                Ordering::Greater => {
                    let mut c = c1.clone();
                    c[0] = c[0].add(other);
                    Self::make(*v1, c)
                }
                Ordering::Less => other.add(self),
            },
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Const(r) => Const(-r.clone()),
            Poly { var, coeffs } => Poly {
                var: *var,
                coeffs: coeffs.iter().map(|c| c.neg()).collect(),
            },
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        match (self, other) {
            (Const(a), Const(b)) => Const(a * b),
            (Poly { var, coeffs }, Const(_)) => Self::make(
                *var,
                coeffs.iter().map(|c| c.mul(other)).collect(),
            ),
            (Const(_), Poly { .. }) => other.mul(self),
            (
                Poly { var: v1, coeffs: c1 },
                Poly { var: v2, coeffs: c2 },
            ) => match v1.cmp(v2) {
                Ordering::Equal => {
                    let mut out = vec![Self::zero(); c1.len() + c2.len() - 1];
                    for (i, a) in c1.iter().enumerate() {
                        if a.is_zero() {
                            continue;
                        }
                        for (j, b) in c2.iter().enumerate() {
                            if b.is_zero() {
                                continue;
                            }
                            out[i + j] = out[i + j].add(&a.mul(b));
                        }
                    }
                    Self::make(*v1, out)
                }
                Ordering::Greater => Self::make(
                    *v1,
                    c1.iter().map(|c| c.mul(other)).collect(),
                ),
                Ordering::Less => other.mul(self),
            },
        }
    }

    pub fn mul_rat(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        match self {
            Const(a) => Const(a * r),
            Poly { var, coeffs } => Poly {
                var: *var,
                coeffs: coeffs.iter().map(|c| c.mul_rat(r)).collect(),
            },
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> Self {
        match self {
            Const(_) => Self::zero(),
            Poly { var, coeffs } => match var.cmp(&v) {
                Ordering::Less => Self::zero(),
                Ordering::Equal => Self::make(
                    *var,
                    coeffs
                        .iter()
                        .enumerate()
                        .skip(1)
                        .map(|(j, c)| c.mul_rat(&Rational::from(num_bigint::BigInt::from(j))))
                        .collect(),
                ),
                Ordering::Greater => Self::make(
                    *var,
                    coeffs.iter().map(|c| c.derivative(v)).collect(),
                ),
            },
        }
    }

    /// Substitute an exact rational for `v`.
    pub fn substitute(&self, v: Var, r: &Rational) -> Self {
        match self {
            Const(_) => self.clone(),
            Poly { var, coeffs } => match var.cmp(&v) {
                Ordering::Less => self.clone(),
                Ordering::Equal => {
                    let mut acc = Self::zero();
                    for c in coeffs.iter().rev() {
                        acc = acc.mul_rat(r).add(c);
                    }
                    acc
                }
                Ordering::Greater => Self::make(
                    *var,
                    coeffs.iter().map(|c| c.substitute(v, r)).collect(),
                ),
            },
        }
    }

    /// Substitute several variables at once.
    pub fn substitute_all(&self, assign: &BTreeMap<Var, Rational>) -> Self {
        let mut p = self.clone();
        for (v, r) in assign {
            p = p.substitute(*v, r);
        }
        p
    }

    /// Full evaluation at a rational point covering every present variable.
    pub fn eval(&self, assign: &BTreeMap<Var, Rational>) -> Rational {
        match self {
            Const(r) => r.clone(),
            Poly { var, coeffs } => {
                let x = assign
                    .get(var)
                    .unwrap_or_else(|| panic!("missing assignment for {var:?}"));
                let mut acc = Rational::zero();
                for c in coeffs.iter().rev() {
                    acc = acc * x + c.eval(assign);
                }
                acc
            }
        }
    }

    /// Exact interval enclosure of the range over a box. Every present
    /// variable must have an interval.
    pub fn eval_box(&self, boxes: &BTreeMap<Var, RatInterval>) -> RatInterval {
        match self {
            Const(r) => RatInterval::point(r.clone()),
            Poly { var, coeffs } => {
                let x = boxes
                    .get(var)
                    .unwrap_or_else(|| panic!("missing box for {var:?}"));
                let mut acc = RatInterval::point(Rational::zero());
                for c in coeffs.iter().rev() {
                    acc = acc.mul(x).add(&c.eval_box(boxes));
                }
                acc
            }
        }
    }

    /// Rational content: the signed gcd of all base coefficients, carrying the
    /// sign of the leading coefficient. Zero for the zero polynomial.
    pub fn rat_content(&self) -> Rational {
        let mut g = Rational::zero();
        self.fold_coeffs(&mut |r| g = rat_gcd(&g, r));
        if sign_of(&self.leading_base_coeff()) < 0 {
            -g
        } else {
            g
        }
    }

    fn fold_coeffs(&self, f: &mut impl FnMut(&Rational)) {
        match self {
            Const(r) => {
                if !r.is_zero() {
                    f(r)
                }
            }
            Poly { coeffs, .. } => coeffs.iter().for_each(|c| c.fold_coeffs(f)),
        }
    }

    /// The base-ring coefficient of the canonical leading term.
    pub fn leading_base_coeff(&self) -> Rational {
        match self {
            Const(r) => r.clone(),
            Poly { coeffs, .. } => coeffs.last().unwrap().leading_base_coeff(),
        }
    }

    /// Integer-primitive associate with positive leading coefficient;
    /// the canonical representative used throughout projection sets.
    pub fn normalized(&self) -> Self {
        let c = self.rat_content();
        if c.is_zero() {
            return Self::zero();
        }
        self.mul_rat(&c.recip())
    }

    /// Quotient if `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Const(c) = d {
            return Some(self.mul_rat(&c.recip()));
        }
        let dv = d.mvar().unwrap();
        match self.mvar() {
            None => None,
            Some(pv) if pv < dv => None,
            Some(pv) if pv > dv => {
                // divide coefficient-wise in the greater variable
                let Poly { var, coeffs } = self else { unreachable!() };
                let mut out = Vec::with_capacity(coeffs.len());
                for c in coeffs {
                    out.push(c.exact_div(d)?);
                }
                Some(Self::make(*var, out))
            }
            Some(_) => {
                // same main variable: long division with recursive coefficient division
                let dc = d.coeffs_wrt(dv);
                let mut rc = self.coeffs_wrt(dv);
                let dd = dc.len() - 1;
                let dlead = &dc[dd];
                let mut q = vec![Self::zero(); rc.len().saturating_sub(dd)];
                loop {
                    while rc.len() > 1 && rc.last().unwrap().is_zero() {
                        rc.pop();
                    }
                    let rd = rc.len() - 1;
                    if rc.len() == 1 && rc[0].is_zero() {
                        break;
                    }
                    if rd < dd {
                        return None;
                    }
                    let c = rc[rd].exact_div(dlead)?;
                    q[rd - dd] = c.clone();
                    for (j, dj) in dc.iter().enumerate() {
                        rc[rd - dd + j] = rc[rd - dd + j].sub(&c.mul(dj));
                    }
                }
                Some(Self::from_coeffs(dv, &q))
            }
        }
    }

    /// Polynomial gcd, normalized (integer-primitive, positive leading
    /// coefficient). Rational factors are treated as units.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        let (pv, qv) = (self.mvar().unwrap(), other.mvar().unwrap());
        let v = pv.max(qv);
        if pv < v {
            // self is free of v: only the content of `other` can share factors
            let (c, _) = other.content_primpart(v);
            return self.gcd(&c);
        }
        if qv < v {
            let (c, _) = self.content_primpart(v);
            return other.gcd(&c);
        }
        let (cp, pp) = self.content_primpart(v);
        let (cq, qq) = other.content_primpart(v);
        let cont = cp.normalized().gcd(&cq.normalized());
        // primitive PRS on the primitive parts
        let mut a = pp.coeffs_wrt(v);
        let mut b = qq.coeffs_wrt(v);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.len() == 1 {
                if b[0].is_zero() {
                    // gcd is (the primitive part of) a
                    let g = Self::from_coeffs(v, &a);
                    let (_, gp) = g.content_primpart(v);
                    return cont.mul(&gp.normalized()).normalized();
                }
                // degree 0 in v: primitive parts are coprime
                return cont.normalized();
            }
            let (r, _) = prem(&a, &b);
            let rp = Self::from_coeffs(v, &r);
            if rp.is_zero() {
                a = b;
                b = vec![Self::zero()];
            } else {
                let (_, rpp) = rp.content_primpart(v);
                a = b;
                b = rpp.normalized().coeffs_wrt(v);
            }
        }
    }

    /// Split into content and primitive part with respect to `v`:
    /// `self == content * primitive`, the content free of `v`, the primitive
    /// part integer-primitive in `v` with positive leading coefficient.
    pub fn content_primpart(&self, v: Var) -> (MultiPoly, MultiPoly) {
        assert!(!self.is_zero(), "content of the zero polynomial");
        let coeffs = self.coeffs_wrt(v);
        let mut g = Self::zero();
        for c in &coeffs {
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        // g is normalized; pull the rational factor so the primitive part is canonical
        let quot = self.exact_div(&g).expect("content divides");
        let c = quot.rat_content();
        let prim = quot.mul_rat(&c.recip());
        (g.mul_rat(&c), prim)
    }

    /// Squarefree part with respect to the main variable (the polynomial
    /// divided by `gcd(p, dp/dv)`), normalized.
    pub fn squarefree_part(&self) -> Self {
        let Some(v) = self.mvar() else {
            return self.normalized();
        };
        let d = self.derivative(v);
        let g = self.gcd(&d);
        self.exact_div(&g)
            .expect("gcd divides")
            .normalized()
    }

    /// Flatten to (coefficient, exponent list) terms, exponents listed for
    /// present variables only, greatest variable first.
    pub fn terms(&self) -> Vec<(Rational, Vec<(Var, usize)>)> {
        let mut out = Vec::new();
        self.collect_terms(&mut Vec::new(), &mut out);
        out.sort_by(|a, b| cmp_exps(&b.1, &a.1));
        out
    }

    fn collect_terms(
        &self,
        prefix: &mut Vec<(Var, usize)>,
        out: &mut Vec<(Rational, Vec<(Var, usize)>)>,
    ) {
        match self {
            Const(r) => {
                if !r.is_zero() {
                    out.push((r.clone(), prefix.clone()));
                }
            }
            Poly { var, coeffs } => {
                for (j, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if j > 0 {
                        prefix.push((*var, j));
                    }
                    c.collect_terms(prefix, out);
                    if j > 0 {
                        prefix.pop();
                    }
                }
            }
        }
    }

    /// Deterministic total order used to keep polynomial sets reproducible:
    /// by total degree, then term count, then term-by-term comparison.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let (ta, tb) = (self.total_degree(), other.total_degree());
        ta.cmp(&tb)
            .then_with(|| {
                let (la, lb) = (self.terms(), other.terms());
                la.len().cmp(&lb.len()).then_with(|| {
                    for ((ca, ea), (cb, eb)) in la.iter().zip(lb.iter()) {
                        let o = cmp_exps(ea, eb).then_with(|| ca.cmp(cb));
                        if o != Ordering::Equal {
                            return o;
                        }
                    }
                    Ordering::Equal
                })
            })
    }

    /// Dense rational coefficient vector when the polynomial involves no
    /// variable other than `v` (ascending powers).
    pub fn univariate_coeffs(&self, v: Var) -> Option<Vec<Rational>> {
        match self {
            Const(r) => Some(vec![r.clone()]),
            Poly { var, coeffs } => {
                if *var != v {
                    return None;
                }
                coeffs
                    .iter()
                    .map(|c| c.as_constant().cloned())
                    .collect::<Option<Vec<_>>>()
            }
        }
    }

    /// Render with the variable names of `order`.
    pub fn display<'a>(&'a self, order: &'a VarOrder) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, order }
    }
}

fn cmp_exps(a: &[(Var, usize)], b: &[(Var, usize)]) -> Ordering {
    // exponent vectors sorted greatest-variable-major, larger power first
    let key = |e: &[(Var, usize)]| -> Vec<(usize, usize)> {
        let mut k: Vec<(usize, usize)> = e.iter().map(|(v, p)| (v.0, *p)).collect();
        k.sort_by(|x, y| y.0.cmp(&x.0));
        k
    };
    let (ka, kb) = (key(a), key(b));
    let mut ia = ka.iter();
    let mut ib = kb.iter();
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(&(va, pa)), Some(&(vb, pb))) => {
                // higher variable dominates; then higher power
                let o = va.cmp(&vb).then(pa.cmp(&pb));
                if o != Ordering::Equal {
                    return o;
                }
            }
        }
    }
}

/// Pseudo-remainder of dense vectors in the shared working variable:
/// returns `(r, k)` with `lc(b)^k * a = q*b + r` and `deg r < deg b`.
pub(crate) fn prem(a: &[MultiPoly], b: &[MultiPoly]) -> (Vec<MultiPoly>, usize) {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<MultiPoly> = a.to_vec();
    let mut k = 0usize;
    loop {
        while r.len() > 1 && r.last().unwrap().is_zero() {
            r.pop();
        }
        let dr = r.len() - 1;
        if (r.len() == 1 && r[0].is_zero()) || dr < db {
            return (r, k);
        }
        let lead = r[dr].clone();
        // r := lb*r - lead * x^(dr-db) * b
        let mut next = vec![MultiPoly::zero(); dr.max(1)];
        for (j, rj) in r.iter().enumerate().take(dr) {
            next[j] = rj.mul(lb);
        }
        for (j, bj) in b.iter().enumerate().take(db) {
            let idx = dr - db + j;
            next[idx] = next[idx].sub(&lead.mul(bj));
        }
        r = next;
        k += 1;
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a MultiPoly,
    order: &'a VarOrder,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.poly.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (coeff, exps)) in terms.iter().enumerate() {
            let neg = coeff.is_negative();
            let mag = coeff.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || exps.is_empty() {
                factors.push(mag.to_string());
            }
            let mut sorted = exps.clone();
            sorted.sort_by(|a, b| b.0.cmp(&a.0));
            for (v, p) in sorted {
                if p == 1 {
                    factors.push(self.order.name(v).to_string());
                } else {
                    factors.push(format!("{}^{}", self.order.name(v), p));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rat::rat;

    fn xy_order() -> VarOrder {
        VarOrder::new(vec!["x", "y"])
    }

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &xy_order()).unwrap()
    }

    #[test]
    fn mvar_of_circle_and_constant() {
        let ord = xy_order();
        assert_eq!(p("x^2+y^2-1").mvar(), ord.find("y"));
        assert_eq!(p("7").mvar(), None);
    }

    #[test]
    fn mvar_five_vars() {
        let ord = VarOrder::new(vec!["a", "b", "c", "d", "e"]);
        let f = parse_poly("a*e+b*d+c*e+d+e", &ord).unwrap();
        assert_eq!(f.mvar(), ord.find("e"));
    }

    #[test]
    fn arithmetic_roundtrip() {
        let a = p("x^2+y^2-1");
        let b = p("x*y-1/4");
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert!(a.mul(&b).sub(&b.mul(&a)).is_zero());
    }

    #[test]
    fn content_primitive_examples() {
        let ord = xy_order();
        let y = ord.find("y").unwrap();
        let (c, pr) = p("2*x*y^2+4*x").content_primpart(y);
        assert_eq!(c, p("2*x"));
        assert_eq!(pr, p("y^2+2"));

        let (c, pr) = p("x^2+y^2-1").content_primpart(y);
        assert_eq!(c, MultiPoly::one());
        assert_eq!(pr, p("x^2+y^2-1"));

        let (c, pr) = p("x^2*y-y").content_primpart(y);
        assert_eq!(c, p("x^2-1"));
        assert_eq!(pr, p("y"));
    }

    #[test]
    fn content_times_primitive_reconstructs() {
        for s in ["2*x*y^2+4*x", "x^2*y-y", "3*y^3-3*y", "-6*x^2*y+4*x*y"] {
            let q = p(s);
            let v = q.mvar().unwrap();
            let (c, pr) = q.content_primpart(v);
            assert_eq!(c.mul(&pr), q, "failed for {s}");
        }
    }

    #[test]
    fn gcd_splits_common_factor() {
        let g = p("x^2-1").gcd(&p("x-1"));
        assert_eq!(g, p("x-1"));
        let g = p("x^2+y^2-1").gcd(&p("x*y-1/4"));
        assert_eq!(g, MultiPoly::one());
        // rational multiples share everything
        let g = p("4-4*x^2").gcd(&p("x^2-1"));
        assert_eq!(g, p("x^2-1"));
    }

    #[test]
    fn squarefree_part_strips_powers() {
        let q = p("x-1").mul(&p("x-1")).mul(&p("x+2"));
        assert_eq!(q.squarefree_part(), p("x-1").mul(&p("x+2")));
    }

    #[test]
    fn substitution_and_eval() {
        let ord = xy_order();
        let x = ord.find("x").unwrap();
        let circle = p("x^2+y^2-1");
        assert_eq!(circle.substitute(x, &rat(0, 1)), p("y^2-1"));
        assert_eq!(circle.substitute(x, &rat(-2, 1)), p("y^2+3"));
        let mut a = BTreeMap::new();
        a.insert(x, rat(1, 1));
        a.insert(ord.find("y").unwrap(), rat(0, 1));
        assert_eq!(circle.eval(&a), rat(0, 1));
    }

    #[test]
    fn coeffs_wrt_lower_variable() {
        let ord = xy_order();
        let x = ord.find("x").unwrap();
        // x*y + x^2 as a polynomial in x: [0, y, 1]
        let q = p("x*y+x^2");
        let c = q.coeffs_wrt(x);
        assert_eq!(c.len(), 3);
        assert_eq!(c[1], p("y"));
        assert_eq!(c[2], MultiPoly::one());
        assert_eq!(MultiPoly::from_coeffs(x, &c), q);
    }

    #[test]
    fn display_roundtrip() {
        let ord = xy_order();
        for s in ["x^2+y^2-1", "x*y-1/4", "x^3-y^2", "-x+2", "1/2"] {
            let q = p(s);
            let txt = q.display(&ord).to_string();
            assert_eq!(parse_poly(&txt, &ord).unwrap(), q, "roundtrip of {s} via {txt}");
        }
    }
}
