//! Projection operators and the projection phase.
//!
//! Operators map a squarefree basis at one level to polynomials at lower
//! levels whose sign behaviour governs delineability. Supported: Collins,
//! McCallum (all coefficients, discriminant, pairwise resultants), and the
//! reduced McCallum operator for an equational constraint, applied to the
//! first projection only.

use crate::arith::{discriminant, finest_squarefree_basis, psc_chain, resultant};
use crate::error::{CadError, Result};
use crate::poly::MultiPoly;
use crate::var::{Var, VarOrder};

#[derive(Clone, Debug, PartialEq)]
pub enum ProjOpKind {
    Collins,
    McCallum,
    /// Reduced operator; carries the finest squarefree basis of the
    /// equational constraint.
    McCallumEc { ec_basis: Vec<MultiPoly> },
}

impl ProjOpKind {
    pub fn name(&self) -> &'static str {
        match self {
            ProjOpKind::Collins => "collins",
            ProjOpKind::McCallum => "mccallum",
            ProjOpKind::McCallumEc { .. } => "mccallum-ec",
        }
    }
}

/// Operator choice for plain sign-invariant constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseOp {
    Collins,
    McCallum,
}

/// An equational constraint `ec = 0` together with the remaining
/// constraint polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct ECInput {
    pub ec: MultiPoly,
    pub others: Vec<MultiPoly>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ProblemInput {
    Polys(Vec<MultiPoly>),
    Ec(ECInput),
}

impl ProblemInput {
    pub fn all_polys(&self) -> Vec<MultiPoly> {
        match self {
            ProblemInput::Polys(p) => p.clone(),
            ProblemInput::Ec(e) => {
                let mut v = vec![e.ec.clone()];
                v.extend(e.others.iter().cloned());
                v
            }
        }
    }
}

/// Per-level projection polynomial sets: `levels[k]` holds the polynomials
/// with main variable `Var(k)`, each set a sorted finest squarefree basis.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectionTable {
    pub levels: Vec<Vec<MultiPoly>>,
    /// Basis used for the final lift in equational-constraint constructions.
    pub final_lift_basis: Option<Vec<MultiPoly>>,
}

impl ProjectionTable {
    pub fn level(&self, level: usize) -> &[MultiPoly] {
        &self.levels[level - 1]
    }

    pub fn dimension(&self) -> usize {
        self.levels.len()
    }
}

fn sorted(mut v: Vec<MultiPoly>) -> Vec<MultiPoly> {
    v.sort_by(|a, b| a.canonical_cmp(b));
    v.dedup();
    v
}

/// McCallum projection of a set with main variable `v`: over the finest
/// squarefree basis, all coefficients, the discriminant of each element and
/// the resultant of each pair. Constants are dropped and the output is
/// reduced to a finest squarefree basis.
pub fn proj_mccallum(set: &[MultiPoly], v: Var) -> Vec<MultiPoly> {
    let basis = finest_squarefree_basis(set);
    let (main, lower): (Vec<_>, Vec<_>) = basis.into_iter().partition(|b| b.mvar() == Some(v));
    let mut out: Vec<MultiPoly> = lower;
    for b in &main {
        for c in b.coeffs_wrt(v) {
            if !c.is_constant() {
                out.push(c.normalized());
            }
        }
        if b.degree(v) >= 2 {
            let d = discriminant(b, v).expect("degree checked");
            if !d.is_constant() {
                out.push(d.normalized());
            }
        }
    }
    for (i, a) in main.iter().enumerate() {
        for b in &main[i + 1..] {
            let r = resultant(a, b, v).expect("nonzero basis elements");
            if !r.is_constant() {
                out.push(r.normalized());
            }
        }
    }
    sorted(finest_squarefree_basis(&out))
}

/// Collins projection: leading coefficients of all reducta, subresultant
/// coefficients of each reductum against its derivative, and of reducta
/// pairs across distinct basis elements.
pub fn proj_collins(set: &[MultiPoly], v: Var) -> Vec<MultiPoly> {
    let basis = finest_squarefree_basis(set);
    let (main, lower): (Vec<_>, Vec<_>) = basis.into_iter().partition(|b| b.mvar() == Some(v));
    let mut out: Vec<MultiPoly> = lower;
    let reducta = |b: &MultiPoly| -> Vec<MultiPoly> {
        let mut r = Vec::new();
        let mut coeffs = b.coeffs_wrt(v);
        while coeffs.len() > 1 {
            r.push(MultiPoly::from_coeffs(v, &coeffs));
            coeffs.pop();
            while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
                coeffs.pop();
            }
        }
        if !coeffs[0].is_zero() {
            r.push(coeffs[0].clone());
        }
        r
    };
    let push_chain = |a: &MultiPoly, b: &MultiPoly, out: &mut Vec<MultiPoly>| {
        if let Ok(chain) = psc_chain(a, b, v) {
            for c in chain {
                if !c.is_constant() && !c.is_zero() {
                    out.push(c.normalized());
                }
            }
        }
    };
    let all_reducta: Vec<Vec<MultiPoly>> = main.iter().map(&reducta).collect();
    for reds in &all_reducta {
        for r in reds {
            // leading coefficient of each reductum
            let lc = r.lc_wrt(v);
            if !lc.is_constant() {
                out.push(lc.normalized());
            }
            if r.degree(v) >= 2 {
                push_chain(r, &r.derivative(v), &mut out);
            }
        }
    }
    for (i, ra) in all_reducta.iter().enumerate() {
        for rb in &all_reducta[i + 1..] {
            for a in ra {
                if a.degree(v) < 1 {
                    continue;
                }
                for b in rb {
                    if b.degree(v) < 1 {
                        continue;
                    }
                    push_chain(a, b, &mut out);
                }
            }
        }
    }
    sorted(finest_squarefree_basis(&out))
}

/// Reduced first projection for an equational constraint:
/// `proj_mccallum(E)` plus the resultants of the constraint basis against
/// every other basis element in the main variable.
pub fn proj_ec(input: &ECInput, order: &VarOrder) -> Result<Vec<MultiPoly>> {
    let main = order.main_var();
    let e_basis = ec_basis(input, order)?;
    let mut out = proj_mccallum(&e_basis, main);
    let full_basis = finest_squarefree_basis(&input.all_polys_vec());
    for g in &full_basis {
        if e_basis.contains(g) {
            continue;
        }
        if g.mvar() != Some(main) {
            out.push(g.clone());
            continue;
        }
        for e in &e_basis {
            let r = resultant(e, g, main)?;
            if !r.is_constant() {
                out.push(r.normalized());
            }
        }
    }
    Ok(sorted(finest_squarefree_basis(&out)))
}

impl ECInput {
    fn all_polys_vec(&self) -> Vec<MultiPoly> {
        let mut v = vec![self.ec.clone()];
        v.extend(self.others.iter().cloned());
        v
    }
}

/// Finest squarefree basis of the constraint; every element must have the
/// main variable as its main variable.
pub fn ec_basis(input: &ECInput, order: &VarOrder) -> Result<Vec<MultiPoly>> {
    let basis = finest_squarefree_basis(std::slice::from_ref(&input.ec));
    if basis.is_empty() || basis.iter().any(|b| b.mvar() != Some(order.main_var())) {
        return Err(CadError::ECNotInMainVariable);
    }
    Ok(sorted(basis))
}

/// Run the projection phase. With `McCallumEc` the reduced operator is used
/// for the first projection only, full McCallum below.
pub fn projection_phase(
    input: &ProblemInput,
    order: &VarOrder,
    op: &ProjOpKind,
) -> Result<ProjectionTable> {
    let n = order.len();
    let mut pending: Vec<Vec<MultiPoly>> = vec![Vec::new(); n];
    for b in finest_squarefree_basis(&input.all_polys())
        .into_iter()
        .filter(|b| !b.is_constant())
    {
        let v = b.mvar().expect("nonconstant");
        pending[v.0].push(b);
    }

    let mut levels: Vec<Vec<MultiPoly>> = vec![Vec::new(); n];
    let mut final_lift_basis = None;
    for k in (0..n).rev() {
        levels[k] = sorted(finest_squarefree_basis(&pending[k]));
        if k == 0 {
            break;
        }
        let raw = match op {
            ProjOpKind::McCallumEc { ec_basis } if k == n - 1 => {
                let ProblemInput::Ec(ec) = input else {
                    return Err(CadError::MalformedEC(
                        "reduced operator needs an equational constraint".into(),
                    ));
                };
                final_lift_basis = Some(ec_basis.clone());
                proj_ec(ec, order)?
            }
            ProjOpKind::Collins => proj_collins(&levels[k], Var(k)),
            _ => proj_mccallum(&levels[k], Var(k)),
        };
        for q in raw {
            if let Some(v) = q.mvar() {
                debug_assert!(v.0 < k);
                pending[v.0].push(q);
            }
        }
    }
    Ok(ProjectionTable {
        levels,
        final_lift_basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rat::rat_int;
    use crate::realalg::isolate_real_roots;

    fn ord() -> VarOrder {
        VarOrder::new(vec!["x", "y"])
    }

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &ord()).unwrap()
    }

    fn y() -> Var {
        ord().find("y").unwrap()
    }

    #[test]
    fn mccallum_circle() {
        // coefficients {1, x^2-1} and discriminant 4-4x^2 reduce to {x^2-1}
        let out = proj_mccallum(&[p("x^2+y^2-1")], y());
        assert_eq!(out, vec![p("x^2-1")]);
    }

    #[test]
    fn mccallum_crossing_lines() {
        let out = proj_mccallum(&[p("y-x"), p("y+x")], y());
        assert_eq!(out, vec![p("x")]);
    }

    #[test]
    fn mccallum_bare_variable() {
        assert!(proj_mccallum(&[p("y")], y()).is_empty());
    }

    #[test]
    fn collins_contains_mccallum_zero_set_for_circle() {
        let out = proj_collins(&[p("x^2+y^2-1")], y());
        // must contain a polynomial vanishing exactly at x = ±1
        let x = ord().find("x").unwrap();
        let vanishes_at_pm1 = out.iter().any(|q| {
            let at1 = q.substitute(x, &rat_int(1));
            let atm1 = q.substitute(x, &rat_int(-1));
            at1.is_zero() && atm1.is_zero()
        });
        assert!(vanishes_at_pm1, "got {out:?}");
    }

    #[test]
    fn collins_parabola() {
        let out = proj_collins(&[p("y^2-x")], y());
        assert!(out.contains(&p("x")), "got {out:?}");
    }

    #[test]
    fn collins_constant_input() {
        assert!(proj_collins(&[], y()).is_empty());
    }

    #[test]
    fn ec_reduced_smaller_than_full() {
        let ord2 = VarOrder::new(vec!["y", "x"]); // x main, as in the variety examples
        let ec = parse_poly("x^2+y^2-1", &ord2).unwrap();
        let g1 = parse_poly("x*y-1/4", &ord2).unwrap();
        let g2 = parse_poly("x^3-y^2", &ord2).unwrap();
        let input = ECInput {
            ec: ec.clone(),
            others: vec![g1.clone(), g2.clone()],
        };
        let reduced = proj_ec(&input, &ord2).unwrap();
        let full = proj_mccallum(&[ec, g1, g2], ord2.main_var());
        // compare root sets at level 1
        let yv = ord2.find("y").unwrap();
        let roots = |set: &[MultiPoly]| {
            let mut rs = Vec::new();
            for q in set {
                rs.extend(isolate_real_roots(q, yv).unwrap());
            }
            rs.sort();
            rs.dedup();
            rs
        };
        let r_red = roots(&reduced);
        let r_full = roots(&full);
        assert!(r_red.len() < r_full.len(), "{r_red:?} vs {r_full:?}");
        // reduced roots are a subset of the full ones
        assert!(r_red.iter().all(|r| r_full.contains(r)));
    }

    #[test]
    fn ec_without_others_is_plain_mccallum() {
        let ord2 = VarOrder::new(vec!["y", "x"]);
        let ec = parse_poly("x^2+y^2-1", &ord2).unwrap();
        let input = ECInput {
            ec: ec.clone(),
            others: vec![],
        };
        assert_eq!(
            proj_ec(&input, &ord2).unwrap(),
            proj_mccallum(&[ec], ord2.main_var())
        );
    }

    #[test]
    fn ec_factor_not_in_main_variable() {
        let ord2 = VarOrder::new(vec!["y", "x"]);
        // (y-1)*(x-1) has the factor y-1 free of the main variable x
        let ec = parse_poly("(y-1)*(x-1)", &ord2).unwrap();
        let input = ECInput { ec, others: vec![] };
        assert_eq!(proj_ec(&input, &ord2), Err(CadError::ECNotInMainVariable));
    }

    #[test]
    fn phase_circle() {
        let input = ProblemInput::Polys(vec![p("x^2+y^2-1")]);
        let t = projection_phase(&input, &ord(), &ProjOpKind::McCallum).unwrap();
        assert_eq!(t.level(2), &[p("x^2+y^2-1")]);
        assert_eq!(t.level(1), &[p("x^2-1")]);
    }

    #[test]
    fn phase_univariate() {
        let ord1 = VarOrder::new(vec!["x"]);
        let q = parse_poly("x^2-1", &ord1).unwrap();
        let t = projection_phase(&ProblemInput::Polys(vec![q.clone()]), &ord1, &ProjOpKind::McCallum)
            .unwrap();
        assert_eq!(t.levels.len(), 1);
        assert_eq!(t.level(1), &[q]);
    }

    #[test]
    fn phase_five_variables() {
        let ord5 = VarOrder::new(vec!["a", "b", "c", "d", "e"]);
        let f = parse_poly("a*e+b*d+c*e+d+e", &ord5).unwrap();
        let t = projection_phase(
            &ProblemInput::Polys(vec![f.clone()]),
            &ord5,
            &ProjOpKind::McCallum,
        )
        .unwrap();
        assert_eq!(t.levels.len(), 5);
        assert_eq!(t.level(5), &[f]);
        // coefficients split into primitive pieces: {a+c+1} at level 3, {d} at 4, {b+1} at 2
        assert_eq!(t.level(4), &[parse_poly("d", &ord5).unwrap()]);
        assert_eq!(t.level(3), &[parse_poly("a+c+1", &ord5).unwrap()]);
        assert_eq!(t.level(2), &[parse_poly("b+1", &ord5).unwrap()]);
        assert_eq!(t.level(1), &[parse_poly("a+1", &ord5).unwrap()]);
    }

    #[test]
    fn phase_deterministic() {
        let input = ProblemInput::Polys(vec![p("x^2+y^2-1"), p("x*y-1/4"), p("x^3-y^2")]);
        let a = projection_phase(&input, &ord(), &ProjOpKind::McCallum).unwrap();
        let b = projection_phase(&input, &ord(), &ProjOpKind::McCallum).unwrap();
        assert_eq!(a, b);
    }
}
