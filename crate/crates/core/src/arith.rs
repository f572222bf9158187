//! Resultants, discriminants, subresultants and squarefree bases.
//!
//! The resultant follows the Sylvester determinant convention exactly; it is
//! computed by a pseudo-remainder sequence with cofactor bookkeeping rather
//! than determinant expansion. Subresultant polynomials come straight from
//! the determinant definition (fraction-free Bareiss elimination), so
//! `psc[0]` equals the resultant on the nose.

use crate::error::{CadError, Result};
use crate::poly::{prem, MultiPoly};
use crate::rat::Rational;
use crate::var::Var;
use num_traits::One;

fn trim(mut v: Vec<MultiPoly>) -> Vec<MultiPoly> {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
    v
}

/// Resultant of `p` and `q` with respect to `v`: the determinant of their
/// Sylvester matrix, sign included.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<MultiPoly> {
    if p.is_zero() || q.is_zero() {
        return Err(CadError::ZeroPolynomial);
    }
    let mut a = trim(p.coeffs_wrt(v));
    let mut b = trim(q.coeffs_wrt(v));
    let mut negate = false;
    let mut num = MultiPoly::one();
    let mut den = MultiPoly::one();
    let mut numr = Rational::one();
    let base = loop {
        let m = a.len() - 1;
        let n = b.len() - 1;
        if n == 0 {
            break b[0].pow(m);
        }
        if m == 0 {
            break a[0].pow(n);
        }
        if m < n {
            if (m * n) % 2 == 1 {
                negate = !negate;
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let (r, k) = prem(&a, &b);
        let rp = MultiPoly::from_coeffs(v, &r);
        if rp.is_zero() {
            return Ok(MultiPoly::zero());
        }
        let c = rp.rat_content();
        let rn = rp.mul_rat(&c.recip());
        let dr = rn.degree(v);
        // lc(b)^k * a = q*b + r  =>  res(a,b) = (-1)^{mn} lc(b)^{m-dr-k*n} c^n res(b, rn)
        let e = m as i64 - dr as i64 - (k * n) as i64;
        let lcb = b[n].clone();
        if e >= 0 {
            num = num.mul(&lcb.pow(e as usize));
        } else {
            den = den.mul(&lcb.pow((-e) as usize));
        }
        let mut cp = Rational::one();
        for _ in 0..n {
            cp = cp * &c;
        }
        numr = numr * cp;
        if (m * n) % 2 == 1 {
            negate = !negate;
        }
        a = b;
        b = trim(rn.coeffs_wrt(v));
    };
    let mut out = num.mul(&base).mul_rat(&numr);
    if negate {
        out = out.neg();
    }
    Ok(out
        .exact_div(&den)
        .expect("cofactor denominator divides the resultant"))
}

/// Discriminant with respect to `v`:
/// `(-1)^{d(d-1)/2} * res(p, dp/dv) / lc(p)` for `d = deg_v(p) >= 1`.
pub fn discriminant(p: &MultiPoly, v: Var) -> Result<MultiPoly> {
    let d = p.degree(v);
    if d < 1 {
        return Err(CadError::DegreeTooLow);
    }
    let dp = p.derivative(v);
    let r = if dp.is_zero() {
        // cannot happen over Q for d >= 1
        MultiPoly::zero()
    } else {
        resultant(p, &dp, v)?
    };
    let lc = p.lc_wrt(v);
    let mut out = r.exact_div(&lc).expect("leading coefficient divides");
    if (d * (d - 1) / 2) % 2 == 1 {
        out = out.neg();
    }
    Ok(out)
}

/// The `j`-th subresultant polynomial of `(p, q)` with respect to `v`, by the
/// determinant definition; valid for `0 <= j < min(deg p, deg q)`.
pub fn subresultant(p: &MultiPoly, q: &MultiPoly, v: Var, j: usize) -> MultiPoly {
    let a = trim(p.coeffs_wrt(v));
    let b = trim(q.coeffs_wrt(v));
    let m = a.len() - 1;
    let n = b.len() - 1;
    assert!(j < m.min(n), "subresultant index out of range");
    let size = m + n - 2 * j;
    let coeff_cols = size - 1;
    let top_degree = m + n - j - 1;
    // row for v^s * P: coefficient columns of degrees top_degree..j+1, then
    // the tail of degree <= j as a polynomial entry
    let row = |poly: &[MultiPoly], s: usize| -> Vec<MultiPoly> {
        let coeff = |d: usize| -> MultiPoly {
            if d < s {
                return MultiPoly::zero();
            }
            poly.get(d - s).cloned().unwrap_or_else(MultiPoly::zero)
        };
        let mut r: Vec<MultiPoly> = (0..coeff_cols)
            .map(|c| coeff(top_degree - c))
            .collect();
        let tail: Vec<MultiPoly> = (0..=j).map(coeff).collect();
        r.push(MultiPoly::from_coeffs(v, &tail));
        r
    };
    let mut mat: Vec<Vec<MultiPoly>> = Vec::with_capacity(size);
    for s in (0..n - j).rev() {
        mat.push(row(&a, s));
    }
    for s in (0..m - j).rev() {
        mat.push(row(&b, s));
    }
    bareiss_det(mat)
}

/// Principal subresultant coefficients `psc_0 .. psc_{min(deg p, deg q)-1}`,
/// ascending; `psc_0` is the resultant.
pub fn psc_chain(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<Vec<MultiPoly>> {
    if p.is_zero() || q.is_zero() {
        return Err(CadError::ZeroPolynomial);
    }
    let (m, n) = (p.degree(v), q.degree(v));
    if m < 1 || n < 1 {
        return Err(CadError::DegreeTooLow);
    }
    Ok((0..m.min(n))
        .map(|j| {
            let s = subresultant(p, q, v, j);
            s.coeffs_wrt(v)
                .get(j)
                .cloned()
                .unwrap_or_else(MultiPoly::zero)
        })
        .collect())
}

/// Fraction-free determinant (Bareiss) over the polynomial ring.
pub(crate) fn bareiss_det(mut mat: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = mat.len();
    if n == 0 {
        return MultiPoly::one();
    }
    let mut negate = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if mat[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !mat[i][k].is_zero()) else {
                return MultiPoly::zero();
            };
            mat.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = mat[k][k].mul(&mat[i][j]).sub(&mat[i][k].mul(&mat[k][j]));
                mat[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
            mat[i][k] = MultiPoly::zero();
        }
        prev = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Finest squarefree basis: pairwise-coprime, squarefree, primitive
/// polynomials such that every input is a rational multiple of a product of
/// powers of basis elements. Pure gcd splitting, no factorization.
pub fn finest_squarefree_basis(inputs: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut queue: Vec<MultiPoly> = Vec::new();
    for p in inputs {
        shatter(p, &mut queue);
    }
    let mut basis: Vec<MultiPoly> = Vec::new();
    while let Some(raw) = queue.pop() {
        let mut p = raw.squarefree_part();
        if p.is_constant() {
            continue;
        }
        let mut i = 0;
        while i < basis.len() {
            let g = p.gcd(&basis[i]);
            if g.is_constant() {
                i += 1;
                continue;
            }
            let q = basis.remove(i);
            let q1 = q.exact_div(&g).expect("gcd divides").normalized();
            p = p.exact_div(&g).expect("gcd divides").normalized();
            // q squarefree: g and q/g are coprime, both coprime with the rest
            basis.push(g);
            if !q1.is_constant() {
                basis.push(q1);
            }
            if p.is_constant() {
                break;
            }
        }
        if !p.is_constant() {
            basis.push(p);
        }
    }
    basis.sort_by(|a, b| a.canonical_cmp(b));
    basis
}

/// Split into primitive pieces along the content chain.
fn shatter(p: &MultiPoly, out: &mut Vec<MultiPoly>) {
    if p.is_zero() {
        return;
    }
    let Some(v) = p.mvar() else {
        return;
    };
    let (c, prim) = p.content_primpart(v);
    out.push(prim.normalized());
    shatter(&c, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::var::VarOrder;
    use num_traits::Signed;

    fn ord() -> VarOrder {
        VarOrder::new(vec!["x", "y"])
    }

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &ord()).unwrap()
    }

    fn y() -> Var {
        ord().find("y").unwrap()
    }

    /// Naive cofactor-expansion Sylvester determinant, small inputs only.
    fn sylvester_oracle(a: &MultiPoly, b: &MultiPoly, v: Var) -> MultiPoly {
        let ac = a.coeffs_wrt(v);
        let bc = b.coeffs_wrt(v);
        let (m, n) = (ac.len() - 1, bc.len() - 1);
        if m == 0 && n == 0 {
            return MultiPoly::one();
        }
        let size = m + n;
        let mut mat = vec![vec![MultiPoly::zero(); size]; size];
        for r in 0..n {
            for (k, c) in ac.iter().enumerate() {
                mat[r][r + (m - k)] = c.clone();
            }
        }
        for r in 0..m {
            for (k, c) in bc.iter().enumerate() {
                mat[n + r][r + (n - k)] = c.clone();
            }
        }
        cofactor_det(&mat)
    }

    fn cofactor_det(m: &[Vec<MultiPoly>]) -> MultiPoly {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = MultiPoly::zero();
        for c in 0..n {
            if m[0][c].is_zero() {
                continue;
            }
            let minor: Vec<Vec<MultiPoly>> = (1..n)
                .map(|r| {
                    (0..n)
                        .filter(|&cc| cc != c)
                        .map(|cc| m[r][cc].clone())
                        .collect()
                })
                .collect();
            let term = m[0][c].mul(&cofactor_det(&minor));
            acc = if c % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p("y^2+x^2-1"), &p("2*y"), y()).unwrap(), p("4*x^2-4"));
        assert_eq!(resultant(&p("y-x"), &p("y+x"), y()).unwrap(), p("2*x"));
        assert_eq!(resultant(&p("y-1"), &p("3"), y()).unwrap(), p("3"));
    }

    #[test]
    fn resultant_matches_sylvester_determinant() {
        let cases = [
            ("y^2+x^2-1", "x*y-1/4"),
            ("y^3-x", "y^2+x"),
            ("2*y^2-3*y+x", "y^2+x*y+1"),
            ("y^4-x^2*y+1", "3*y^2-x"),
            ("y-x", "y^3+x^3"),
        ];
        for (a, b) in cases {
            let (a, b) = (p(a), p(b));
            assert_eq!(
                resultant(&a, &b, y()).unwrap(),
                sylvester_oracle(&a, &b, y()),
                "mismatch for {a:?} / {b:?}"
            );
        }
    }

    #[test]
    fn resultant_swap_sign() {
        for (a, b) in [("y^2+x^2-1", "x*y-1/4"), ("y^3-x", "y^2+x"), ("y^2-x", "y-1")] {
            let (a, b) = (p(a), p(b));
            let ab = resultant(&a, &b, y()).unwrap();
            let ba = resultant(&b, &a, y()).unwrap();
            let flip = (a.degree(y()) * b.degree(y())) % 2 == 1;
            assert_eq!(ab, if flip { ba.neg() } else { ba });
        }
    }

    #[test]
    fn resultant_vanishes_on_planted_common_root() {
        // (y - x) is a common factor
        let a = p("y-x").mul(&p("y^2+1"));
        let b = p("y-x").mul(&p("y+3"));
        assert!(resultant(&a, &b, y()).unwrap().is_zero());
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&p("y^2+x^2-1"), y()).unwrap(), p("4-4*x^2"));
        assert!(discriminant(&p("y^2"), y()).unwrap().is_zero());
        assert_eq!(discriminant(&p("y^2-2"), y()).unwrap(), p("8"));
        assert_eq!(discriminant(&p("x^2-1"), y()), Err(CadError::DegreeTooLow));
    }

    #[test]
    fn psc_examples() {
        let chain = psc_chain(&p("y^2-x"), &p("y^2+x"), y()).unwrap();
        assert_eq!(chain[0], p("4*x^2"));
        let chain = psc_chain(&p("y-1"), &p("y+1"), y()).unwrap();
        assert_eq!(chain.len(), 1);
        assert_eq!(chain[0], p("2"));
        let chain = psc_chain(&p("y^2"), &p("2*y"), y()).unwrap();
        assert!(chain[0].is_zero());
    }

    #[test]
    fn psc_zero_agrees_with_resultant() {
        let cases = [
            ("y^2+x^2-1", "x*y-1/4"),
            ("y^3-x", "y^2+x"),
            ("y^4-2*y+x", "y^3+x*y-1"),
            ("2*y^2-y+1", "y^2-x"),
        ];
        for (a, b) in cases {
            let (a, b) = (p(a), p(b));
            let chain = psc_chain(&a, &b, y()).unwrap();
            assert_eq!(chain[0], resultant(&a, &b, y()).unwrap());
        }
    }

    #[test]
    fn subresultant_gcd_degree() {
        // gcd (y-x) of degree 1: psc_0 = 0, psc_1 != 0
        let a = p("y-x").mul(&p("y^2+1"));
        let b = p("y-x").mul(&p("y+3"));
        let chain = psc_chain(&a, &b, y()).unwrap();
        assert!(chain[0].is_zero());
        assert!(!chain[1].is_zero());
        // S_1 is an associate of the gcd
        let s1 = subresultant(&a, &b, y(), 1);
        assert!(s1.exact_div(&p("y-x")).is_some() || p("y-x").exact_div(&s1).is_some());
    }

    #[test]
    fn basis_examples() {
        let b = finest_squarefree_basis(&[p("x^2+y^2-1")]);
        assert_eq!(b, vec![p("x^2+y^2-1")]);

        let b = finest_squarefree_basis(&[p("x^2-1"), p("x-1")]);
        assert_eq!(b.len(), 2);
        assert!(b.contains(&p("x-1")));
        assert!(b.contains(&p("x+1")));

        let b = finest_squarefree_basis(&[p("(x-1)^2")]);
        assert_eq!(b, vec![p("x-1")]);

        assert!(finest_squarefree_basis(&[]).is_empty());
    }

    #[test]
    fn basis_elements_squarefree_and_coprime() {
        let inputs = [
            p("(x-1)^2*(x+2)"),
            p("x^2-1"),
            p("x*y^2-x"),
            p("y^3-y"),
            p("2*x*y-2*x"),
        ];
        let b = finest_squarefree_basis(&inputs);
        for (i, e) in b.iter().enumerate() {
            let v = e.mvar().unwrap();
            assert!(e.gcd(&e.derivative(v)).is_constant(), "{e:?} not squarefree");
            for f in &b[i + 1..] {
                assert!(e.gcd(f).is_constant(), "{e:?} and {f:?} share a factor");
            }
        }
        // every input is a rational multiple of a product of basis powers
        for q in &inputs {
            let mut rem = q.normalized();
            loop {
                let mut progress = false;
                for e in &b {
                    while let Some(next) = rem.exact_div(e) {
                        rem = next.normalized();
                        progress = true;
                    }
                }
                if !progress {
                    break;
                }
            }
            assert!(
                rem.is_constant() && rem.as_constant().unwrap().abs() == Rational::one(),
                "input {q:?} not reconstructed, left {rem:?}"
            );
        }
    }
}
