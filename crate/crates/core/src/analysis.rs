//! Post-hoc tooling: dimension distributions and verification oracles.

use crate::error::{CadError, Result};
use crate::lifting::{Bound, Cell, CoordConstraint, SubCadResult};
use crate::point::{roots_over_sample, sign_at_point, RootsOutcome};
use crate::poly::MultiPoly;
use crate::rat::{integer_above, integer_below, rat, Rational};
use crate::realalg::{separate, AlgebraicNumber};
use crate::var::Var;
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// Histogram of cell dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution {
    pub counts: BTreeMap<usize, usize>,
}

impl Distribution {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn get(&self, dim: usize) -> usize {
        self.counts.get(&dim).copied().unwrap_or(0)
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (dim, count) in self.counts.iter().rev() {
            writeln!(f, "dim {dim}: {count}")?;
        }
        write!(f, "total: {}", self.total())
    }
}

/// Count cells by dimension.
pub fn distribution(result: &SubCadResult) -> Distribution {
    let mut counts = BTreeMap::new();
    for c in &result.cells {
        *counts.entry(c.dimension()).or_insert(0) += 1;
    }
    Distribution { counts }
}

#[derive(Clone, Debug)]
pub struct SignViolation {
    pub cell: Vec<usize>,
    pub trial: usize,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SignInvarianceReport {
    pub cells_checked: usize,
    pub trials: usize,
    pub violations: Vec<SignViolation>,
}

impl SignInvarianceReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check that every polynomial keeps a constant sign on every cell: draws
/// trial points satisfying the cell description (boundary roots re-evaluated
/// over the partially built point, sectors sampled at 1/4, 1/2, 3/4 between
/// bounds, unbounded directions at increasing integer offsets) and compares
/// sign vectors against the cell sample's.
pub fn verify_sign_invariance(
    result: &SubCadResult,
    polys: &[MultiPoly],
    trials: usize,
) -> SignInvarianceReport {
    let mut report = SignInvarianceReport {
        cells_checked: 0,
        trials,
        violations: Vec::new(),
    };
    for cell in &result.cells {
        report.cells_checked += 1;
        let reference: Vec<i8> = polys.iter().map(|p| sign_at_point(p, &cell.sample)).collect();
        for t in 0..trials {
            match trial_point(cell, t) {
                Err(e) => report.violations.push(SignViolation {
                    cell: cell.index.clone(),
                    trial: t,
                    detail: format!("trial point construction failed: {e}"),
                }),
                Ok(point) => {
                    for (p, want) in polys.iter().zip(reference.iter()) {
                        let got = sign_at_point(p, &point);
                        if got != *want {
                            report.violations.push(SignViolation {
                                cell: cell.index.clone(),
                                trial: t,
                                detail: format!("sign {got} != {want} at trial point"),
                            });
                        }
                    }
                }
            }
        }
    }
    report
}

fn reevaluate_bound(b: &Bound, prefix: &[AlgebraicNumber], level: usize) -> Result<AlgebraicNumber> {
    match roots_over_sample(&b.poly, prefix, Var(level))? {
        RootsOutcome::Roots(roots) => roots.get(b.ordinal).cloned().ok_or_else(|| {
            CadError::NotWellOriented {
                cell: vec![],
                poly: "boundary root vanished over trial prefix".into(),
            }
        }),
        RootsOutcome::IdenticallyZero => Err(CadError::NotWellOriented {
            cell: vec![],
            poly: "boundary polynomial vanished over trial prefix".into(),
        }),
    }
}

/// Deterministic point in the cell: sections exactly on the (re-evaluated)
/// root, sectors at rational positions between the re-evaluated bounds.
fn trial_point(cell: &Cell, t: usize) -> Result<Vec<AlgebraicNumber>> {
    let fracs = [rat(1, 4), rat(1, 2), rat(3, 4)];
    let frac = &fracs[t % 3];
    let offset = Rational::from(BigInt::from((t + 1) as u64));
    let mut point: Vec<AlgebraicNumber> = Vec::with_capacity(cell.level());
    for (k, constraint) in cell.constraints.iter().enumerate() {
        let coord = match constraint {
            CoordConstraint::Section { poly, ordinal } => {
                match roots_over_sample(poly, &point, Var(k))? {
                    RootsOutcome::Roots(roots) => {
                        roots.get(*ordinal).cloned().ok_or(CadError::NotWellOriented {
                            cell: cell.index.clone(),
                            poly: "section root vanished over trial prefix".into(),
                        })?
                    }
                    RootsOutcome::IdenticallyZero => {
                        return Err(CadError::NotWellOriented {
                            cell: cell.index.clone(),
                            poly: "section polynomial vanished over trial prefix".into(),
                        })
                    }
                }
            }
            CoordConstraint::Sector { lower, upper } => {
                let lo = lower
                    .as_ref()
                    .map(|b| reevaluate_bound(b, &point, k))
                    .transpose()?;
                let hi = upper
                    .as_ref()
                    .map(|b| reevaluate_bound(b, &point, k))
                    .transpose()?;
                let r = match (lo, hi) {
                    (None, None) => Rational::from(BigInt::from(t as i64)),
                    (Some(l), None) => match l.as_rational() {
                        Some(r) => integer_above(r) + &offset,
                        None => l.hi().ceil() + &offset,
                    },
                    (None, Some(u)) => match u.as_rational() {
                        Some(r) => integer_below(r) - &offset,
                        None => u.lo().floor() - &offset,
                    },
                    (Some(l), Some(u)) => {
                        let (mut ll, mut uu) = (l.clone(), u.clone());
                        while ll.hi() >= uu.lo() {
                            let (a, b) = separate(&ll, &uu);
                            ll = a;
                            uu = b;
                        }
                        let gap = uu.lo() - ll.hi();
                        ll.hi() + gap * frac
                    }
                };
                AlgebraicNumber::from_rational(r)
            }
        };
        point.push(coord);
    }
    Ok(point)
}

/// True iff `sub` equals the dimension filter (`dim > n - ell`) of `full`,
/// index for index.
pub fn check_layer_consistency(
    full: &SubCadResult,
    sub: &SubCadResult,
    ell: usize,
) -> Result<bool> {
    if !full.same_provenance(sub) {
        return Err(CadError::ProvenanceMismatch);
    }
    let n = full.order.len();
    let expected: Vec<&Cell> = full
        .cells
        .iter()
        .filter(|c| c.dimension() as i64 > n as i64 - ell as i64)
        .collect();
    if sub.layers != ell {
        return Ok(false);
    }
    Ok(expected.len() == sub.cells.len()
        && expected
            .iter()
            .zip(sub.cells.iter())
            .all(|(a, b)| a.same_as(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lifting::{cad_full, lcad, vcad, FailurePolicy};
    use crate::parse::parse_poly;
    use crate::projection::{BaseOp, ECInput};
    use crate::var::VarOrder;

    fn ord() -> VarOrder {
        VarOrder::new(vec!["x", "y"])
    }

    fn circle() -> Vec<MultiPoly> {
        vec![parse_poly("x^2+y^2-1", &ord()).unwrap()]
    }

    #[test]
    fn circle_distribution() {
        let full = cad_full(&circle(), &ord(), BaseOp::McCallum, FailurePolicy::Warn).unwrap();
        let d = distribution(&full);
        assert_eq!(d.get(2), 5);
        assert_eq!(d.get(1), 6);
        assert_eq!(d.get(0), 2);
        assert_eq!(d.total(), 13);

        let l1 = lcad(&circle(), &ord(), 1, BaseOp::McCallum, FailurePolicy::Warn).unwrap();
        let d1 = distribution(&l1);
        assert_eq!(d1.counts.len(), 1);
        assert_eq!(d1.get(2), 5);
    }

    #[test]
    fn empty_distribution() {
        let ord2 = VarOrder::new(vec!["y", "x"]);
        let input = ECInput {
            ec: parse_poly("x^2+y^2+1", &ord2).unwrap(),
            others: vec![],
        };
        let v = vcad(&input, &ord2, FailurePolicy::Warn).unwrap();
        assert_eq!(distribution(&v).total(), 0);
    }

    #[test]
    fn sign_invariance_on_circle() {
        let full = cad_full(&circle(), &ord(), BaseOp::McCallum, FailurePolicy::Warn).unwrap();
        let report = verify_sign_invariance(&full, &circle(), 3);
        assert!(report.ok(), "violations: {:?}", report.violations);
        assert_eq!(report.cells_checked, 13);
    }

    #[test]
    fn merged_cells_are_detected() {
        // fixture: a single "cell" spanning the sign change of x-1 at x=1
        let x = parse_poly("x", &ord()).unwrap();
        let xm2 = parse_poly("x-2", &ord()).unwrap();
        let fake = Cell {
            index: vec![1],
            sample: vec![AlgebraicNumber::from_rational(rat(1, 2))],
            constraints: vec![CoordConstraint::Sector {
                lower: Some(Bound {
                    value: AlgebraicNumber::from_int(0),
                    poly: x,
                    ordinal: 0,
                }),
                upper: Some(Bound {
                    value: AlgebraicNumber::from_int(2),
                    poly: xm2,
                    ordinal: 0,
                }),
            }],
        };
        let mut result = cad_full(
            &[parse_poly("x-1", &ord()).unwrap()],
            &VarOrder::new(vec!["x"]),
            BaseOp::McCallum,
            FailurePolicy::Warn,
        )
        .unwrap();
        result.cells = vec![fake];
        let report =
            verify_sign_invariance(&result, &[parse_poly("x-1", &ord()).unwrap()], 3);
        assert!(!report.ok());
    }

    #[test]
    fn layer_consistency_checks() {
        let full = cad_full(&circle(), &ord(), BaseOp::McCallum, FailurePolicy::Warn).unwrap();
        let l1 = lcad(&circle(), &ord(), 1, BaseOp::McCallum, FailurePolicy::Warn).unwrap();
        let l2 = lcad(&circle(), &ord(), 2, BaseOp::McCallum, FailurePolicy::Warn).unwrap();
        assert!(check_layer_consistency(&full, &l1, 1).unwrap());
        assert!(check_layer_consistency(&full, &l2, 2).unwrap());
        assert!(!check_layer_consistency(&full, &l1, 2).unwrap());

        let other = cad_full(
            &[parse_poly("x*y-1/4", &ord()).unwrap()],
            &ord(),
            BaseOp::McCallum,
            FailurePolicy::Warn,
        )
        .unwrap();
        assert_eq!(
            check_layer_consistency(&other, &l1, 1),
            Err(CadError::ProvenanceMismatch)
        );
    }
}
