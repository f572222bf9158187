//! Exact evaluation over sample points with algebraic coordinates.
//!
//! Two primitives drive every stack construction:
//!
//! * [`sign_at_point`] — the exact sign of a polynomial at a tuple of real
//!   algebraic numbers. Nonzero signs are decided by refining interval
//!   enclosures; zeroes are certified algebraically. With several algebraic
//!   coordinates the zero test reduces the top coordinate through the
//!   subresultant chain against its defining polynomial (the chain
//!   specializes faithfully once the true degree is known), recursing with
//!   one coordinate fewer.
//!
//! * [`roots_over_sample`] — the real roots of `q(s, x_k)`. Algebraic
//!   coordinates are eliminated by iterated resultants against their
//!   defining polynomials, which yields an integer candidate polynomial
//!   whose roots contain the true ones; candidates are then filtered with
//!   `sign_at_point`.

use crate::arith::{resultant, subresultant};
use crate::error::{CadError, Result};
use crate::interval::RatInterval;
use crate::poly::MultiPoly;
use crate::rat::{sign_of, Rational};
use crate::realalg::{isolate_unipoly, sign_at_unipoly, AlgebraicNumber};
use crate::unipoly::UniPoly;
use crate::var::Var;
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;

fn refine_floor() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2u8).pow(64))
}

pub fn unipoly_to_multipoly(u: &UniPoly, v: Var) -> MultiPoly {
    let coeffs: Vec<MultiPoly> = u
        .coeffs()
        .iter()
        .map(|c| MultiPoly::constant(Rational::from(c.clone())))
        .collect();
    MultiPoly::from_coeffs(v, &coeffs)
}

/// Exact sign of `f` at the point whose `i`-th coordinate (variable of index
/// `i`) is `sample[i]`. Every variable of `f` must be covered.
pub fn sign_at_point(f: &MultiPoly, sample: &[AlgebraicNumber]) -> i8 {
    let mut g = f.clone();
    for (i, a) in sample.iter().enumerate() {
        if let Some(r) = a.as_rational() {
            if g.degree(Var(i)) > 0 {
                g = g.substitute(Var(i), r);
            }
        }
    }
    sign_irrational(&g, sample)
}

/// `f` contains only variables whose sample coordinate is irrational.
fn sign_irrational(f: &MultiPoly, sample: &[AlgebraicNumber]) -> i8 {
    if let Some(c) = f.as_constant() {
        return sign_of(c);
    }
    let vars: Vec<Var> = f.vars_present().into_iter().collect();
    debug_assert!(vars.iter().all(|v| v.0 < sample.len()));
    if vars.len() == 1 {
        let v = vars[0];
        let q = UniPoly::from_rational_coeffs(&f.univariate_coeffs(v).unwrap());
        return sign_at_unipoly(&q, &sample[v.0]);
    }

    // fast numeric path
    let mut coords: Vec<(Var, AlgebraicNumber)> = vars
        .iter()
        .map(|&v| (v, sample[v.0].clone()))
        .collect();
    if let Some(s) = interval_sign(f, &mut coords, true) {
        return s;
    }

    // exact path: reduce the greatest coordinate
    let xj = *vars.last().unwrap();
    let a = &sample[xj.0];
    let d = unipoly_to_multipoly(a.defining(), xj);
    let coeffs = f.coeffs_wrt(xj);

    // true degree of the specialized polynomial
    let mut top = None;
    for l in (0..coeffs.len()).rev() {
        if sign_irrational(&coeffs[l], sample) != 0 {
            top = Some(l);
            break;
        }
    }
    let Some(top) = top else {
        return 0; // every coefficient vanishes
    };
    if top == 0 {
        return sign_irrational(&coeffs[0], sample);
    }
    let ft = MultiPoly::from_coeffs(xj, &coeffs[..=top]);
    let ddeg = d.degree(xj);
    debug_assert!(ddeg >= 2, "irrational coordinate with linear defining polynomial");

    // degree of gcd(defining, specialized f) = first nonvanishing psc
    let bound = ddeg.min(top);
    let mut gcd_deg = bound;
    for k in 0..bound {
        let psc = {
            let s = subresultant(&d, &ft, xj, k);
            s.coeffs_wrt(xj)
                .get(k)
                .cloned()
                .unwrap_or_else(MultiPoly::zero)
        };
        if sign_irrational(&psc, sample) != 0 {
            gcd_deg = k;
            break;
        }
    }

    let vanishes = if gcd_deg == 0 {
        false
    } else if gcd_deg == bound && bound == ddeg {
        // the defining polynomial divides the specialized f
        true
    } else {
        // the gcd divides the squarefree defining polynomial, so it has a
        // root in the isolating interval iff it changes sign there
        let g = if gcd_deg == bound {
            ft.clone()
        } else {
            subresultant(&d, &ft, xj, gcd_deg)
        };
        let s_lo = sign_irrational(&g.substitute(xj, a.lo()), sample);
        let s_hi = sign_irrational(&g.substitute(xj, a.hi()), sample);
        debug_assert!(s_lo != 0 && s_hi != 0);
        s_lo != s_hi
    };
    if vanishes {
        return 0;
    }

    // provably nonzero: the enclosure must eventually decide
    interval_sign(f, &mut coords, false).expect("nonzero value decided by refinement")
}

/// Adaptive interval evaluation. With `bounded` the refinement stops at the
/// exact-decision width and may return `None`.
fn interval_sign(
    f: &MultiPoly,
    coords: &mut [(Var, AlgebraicNumber)],
    bounded: bool,
) -> Option<i8> {
    let floor = refine_floor();
    loop {
        let boxes: BTreeMap<Var, RatInterval> =
            coords.iter().map(|(v, a)| (*v, a.interval())).collect();
        if let Some(s) = f.eval_box(&boxes).decided_sign() {
            return Some(s);
        }
        let mut progressed = false;
        for (_, a) in coords.iter_mut() {
            if !a.is_rational() && (!bounded || a.width() >= floor) {
                a.refine_step();
                progressed = true;
            }
        }
        if !progressed {
            return None;
        }
    }
}

/// Result of substituting a sample into all but the last variable.
#[derive(Clone, Debug)]
pub enum RootsOutcome {
    Roots(Vec<AlgebraicNumber>),
    /// The polynomial vanishes identically over the sample.
    IdenticallyZero,
}

/// Distinct real roots of `q(sample, x_k)` in increasing order.
///
/// `sample` provides coordinates for all variables below `xk`.
pub fn roots_over_sample(
    q: &MultiPoly,
    sample: &[AlgebraicNumber],
    xk: Var,
) -> Result<RootsOutcome> {
    if q.is_zero() {
        return Err(CadError::ZeroPolynomial);
    }
    let mut g = q.clone();
    for (i, a) in sample.iter().enumerate() {
        if let Some(r) = a.as_rational() {
            if g.degree(Var(i)) > 0 {
                g = g.substitute(Var(i), r);
            }
        }
    }
    if g.is_zero() {
        return Ok(RootsOutcome::IdenticallyZero);
    }

    // true coefficient pattern at the sample
    let coeffs = g.coeffs_wrt(xk);
    let mut top = None;
    for l in (0..coeffs.len()).rev() {
        if sign_irrational(&coeffs[l], sample) != 0 {
            top = Some(l);
            break;
        }
    }
    let Some(top) = top else {
        return Ok(RootsOutcome::IdenticallyZero);
    };
    if top == 0 {
        return Ok(RootsOutcome::Roots(vec![])); // nonzero constant in x_k
    }
    let ft = MultiPoly::from_coeffs(xk, &coeffs[..=top]);

    let alg_vars: Vec<Var> = ft
        .vars_present()
        .into_iter()
        .filter(|&v| v != xk)
        .collect();
    if alg_vars.is_empty() {
        let roots = isolate_unipoly(&UniPoly::from_rational_coeffs(
            &ft.univariate_coeffs(xk).unwrap(),
        ));
        return Ok(RootsOutcome::Roots(roots));
    }

    // candidate polynomial by iterated resultants, trying elimination orders
    // until one survives the degenerate cases
    let candidate_poly = eliminate_all(&ft, &alg_vars, sample, xk)?;
    let candidates = isolate_unipoly(&candidate_poly);
    let mut roots = Vec::new();
    let mut extended: Vec<AlgebraicNumber> = sample.to_vec();
    extended.resize(xk.0 + 1, AlgebraicNumber::from_int(0));
    for c in candidates {
        extended[xk.0] = c.clone();
        if sign_at_point(&ft, &extended) == 0 {
            roots.push(c);
        }
    }
    Ok(RootsOutcome::Roots(roots))
}

fn eliminate_all(
    ft: &MultiPoly,
    alg_vars: &[Var],
    sample: &[AlgebraicNumber],
    xk: Var,
) -> Result<UniPoly> {
    let mut orders: Vec<Vec<Var>> = Vec::new();
    permutations(alg_vars, &mut Vec::new(), &mut orders);
    let mut last_err = CadError::DegenerateElimination;
    for order in orders {
        match try_eliminate(ft, &order, sample, xk) {
            Ok(u) => return Ok(u),
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

fn permutations(rest: &[Var], acc: &mut Vec<Var>, out: &mut Vec<Vec<Var>>) {
    if rest.is_empty() {
        out.push(acc.clone());
        return;
    }
    for (i, &v) in rest.iter().enumerate() {
        let mut r = rest.to_vec();
        r.remove(i);
        acc.push(v);
        permutations(&r, acc, out);
        acc.pop();
    }
}

fn try_eliminate(
    ft: &MultiPoly,
    order: &[Var],
    sample: &[AlgebraicNumber],
    xk: Var,
) -> Result<UniPoly> {
    let mut h = ft.clone();
    for (depth, &xi) in order.iter().enumerate() {
        if h.degree(xi) == 0 {
            continue;
        }
        let d = unipoly_to_multipoly(sample[xi.0].defining(), xi);
        loop {
            let r = resultant(&h, &d, xi)?;
            if !r.is_zero() {
                h = r;
                break;
            }
            // literal zero resultant: h and the defining polynomial share a
            // univariate factor; split it off
            let g = h.gcd(&d);
            debug_assert!(!g.is_constant());
            if sign_at_unipoly(
                &UniPoly::from_rational_coeffs(&g.univariate_coeffs(xi).unwrap()),
                &sample[xi.0],
            ) == 0
            {
                if depth == 0 {
                    unreachable!("leading-coefficient-faithful input vanished identically");
                }
                return Err(CadError::DegenerateElimination);
            }
            h = h.exact_div(&g).expect("gcd divides");
        }
    }
    let coeffs = h
        .univariate_coeffs(xk)
        .ok_or(CadError::DegenerateElimination)?;
    let u = UniPoly::from_rational_coeffs(&coeffs);
    if u.is_zero() {
        return Err(CadError::DegenerateElimination);
    }
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rat::{rat, rat_int};
    use crate::realalg::compare;
    use crate::var::VarOrder;
    use std::cmp::Ordering;

    fn ord() -> VarOrder {
        VarOrder::new(vec!["x", "y"])
    }

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &ord()).unwrap()
    }

    fn sqrt2() -> AlgebraicNumber {
        isolate_unipoly(&UniPoly::from_int_slice(&[-2, 0, 1]))[1].clone()
    }

    #[test]
    fn circle_roots_over_rational_samples() {
        let circle = p("x^2+y^2-1");
        let y = ord().find("y").unwrap();
        match roots_over_sample(&circle, &[AlgebraicNumber::from_int(0)], y).unwrap() {
            RootsOutcome::Roots(r) => {
                assert_eq!(r.len(), 2);
                assert_eq!(r[0].as_rational(), Some(&rat_int(-1)));
                assert_eq!(r[1].as_rational(), Some(&rat_int(1)));
            }
            _ => panic!("expected roots"),
        }
        match roots_over_sample(&circle, &[AlgebraicNumber::from_int(-2)], y).unwrap() {
            RootsOutcome::Roots(r) => assert!(r.is_empty()),
            _ => panic!("expected roots"),
        }
    }

    #[test]
    fn nullification_detected() {
        // x*y over x=0: identically zero in y
        let q = p("x*y");
        let y = ord().find("y").unwrap();
        match roots_over_sample(&q, &[AlgebraicNumber::from_int(0)], y).unwrap() {
            RootsOutcome::IdenticallyZero => {}
            _ => panic!("expected nullification"),
        }
    }

    #[test]
    fn roots_over_algebraic_sample() {
        // y^2 - x at x = sqrt(2): roots are ±2^(1/4)
        let q = p("y^2-x");
        let y = ord().find("y").unwrap();
        match roots_over_sample(&q, &[sqrt2()], y).unwrap() {
            RootsOutcome::Roots(r) => {
                assert_eq!(r.len(), 2);
                let fourth = isolate_unipoly(&UniPoly::from_int_slice(&[-2, 0, 0, 0, 1]));
                assert_eq!(fourth.len(), 2);
                assert_eq!(compare(&r[0], &fourth[0]), Ordering::Equal);
                assert_eq!(compare(&r[1], &fourth[1]), Ordering::Equal);
            }
            _ => panic!("expected roots"),
        }
        // rational sample agrees with direct substitution
        let over4 = roots_over_sample(&q, &[AlgebraicNumber::from_int(4)], y).unwrap();
        match over4 {
            RootsOutcome::Roots(r) => {
                assert_eq!(r.len(), 2);
                assert_eq!(r[1].as_rational(), Some(&rat_int(2)));
            }
            _ => panic!(),
        }
    }

    #[test]
    fn sign_at_tuple_with_two_algebraic_coords() {
        // b = 1 - sqrt(2) is the root of y^2 - 2y - 1 in (-1, 0)
        let b = isolate_unipoly(&UniPoly::from_int_slice(&[-1, -2, 1]))[0].clone();
        assert!(!b.is_rational());
        let s = vec![sqrt2(), b];
        // x + y - 1 = sqrt2 + (1 - sqrt2) - 1 = 0
        assert_eq!(sign_at_point(&p("x+y-1"), &s), 0);
        // x + y = 1 > 0
        assert_eq!(sign_at_point(&p("x+y"), &s), 1);
        // x*y = sqrt2*(1-sqrt2) = sqrt2 - 2 < 0
        assert_eq!(sign_at_point(&p("x*y"), &s), -1);
        // x^2 + y^2 = 2 + (3 - 2*sqrt2), so x^2+y^2-5+2x = 0
        assert_eq!(sign_at_point(&p("x^2+y^2-5+2*x"), &s), 0);
    }

    #[test]
    fn sign_at_point_rational_fallthrough() {
        let s = vec![AlgebraicNumber::from_rational(rat(1, 2)), sqrt2()];
        // y^2 - 2 = 0 regardless of x
        assert_eq!(sign_at_point(&p("y^2-2"), &s), 0);
        assert_eq!(sign_at_point(&p("x*y^2-1"), &s), 0);
        assert_eq!(sign_at_point(&p("x*y^2-2"), &s), -1);
    }
}
