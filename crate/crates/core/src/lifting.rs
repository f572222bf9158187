//! Stack generation and decomposition construction.
//!
//! Lifting grows the decomposition level by level: the stack over a cell
//! splits the next coordinate axis at the roots of the level's projection
//! polynomials over the cell's sample point. Layered constructions skip
//! bases that cannot reach the requested dimension layers; variety
//! constructions lift the final level against the equational constraint
//! only and keep its sections.

use crate::error::{CadError, Result};
use crate::point::{roots_over_sample, sign_at_point, RootsOutcome};
use crate::poly::MultiPoly;
use crate::projection::{
    ec_basis, projection_phase, BaseOp, ECInput, ProblemInput, ProjOpKind, ProjectionTable,
};
use crate::rat::{integer_above, integer_below, Rational};
use crate::realalg::{compare, rational_between, AlgebraicNumber, SamplePoint};
use crate::var::{Var, VarOrder};
use num_traits::Zero;
use std::cmp::Ordering;

/// Number of odd entries: the dimension of the cell with this index.
pub fn dimension(index: &[usize]) -> usize {
    index.iter().filter(|&&i| i % 2 == 1).count()
}

/// A stack boundary: the `ordinal`-th real root of `poly` over the base
/// (counted from below among that polynomial's own roots). Carrying the
/// polynomial and ordinal lets verification re-evaluate the boundary over a
/// perturbed prefix.
#[derive(Clone, Debug)]
pub struct Bound {
    pub value: AlgebraicNumber,
    pub poly: MultiPoly,
    pub ordinal: usize,
}

/// Constraint on one sample coordinate.
#[derive(Clone, Debug)]
pub enum CoordConstraint {
    /// The coordinate is a root of a stack polynomial over the base.
    Section { poly: MultiPoly, ordinal: usize },
    /// Open band between adjacent roots (`None` = unbounded).
    Sector {
        lower: Option<Bound>,
        upper: Option<Bound>,
    },
}

impl CoordConstraint {
    pub fn is_section(&self) -> bool {
        matches!(self, CoordConstraint::Section { .. })
    }
}

#[derive(Clone, Debug)]
pub struct Cell {
    pub index: Vec<usize>,
    pub sample: SamplePoint,
    pub constraints: Vec<CoordConstraint>,
}

impl Cell {
    pub fn root() -> Self {
        Cell {
            index: vec![],
            sample: vec![],
            constraints: vec![],
        }
    }

    pub fn level(&self) -> usize {
        self.index.len()
    }

    pub fn dimension(&self) -> usize {
        dimension(&self.index)
    }

    /// Structural equality: index, sample values, constraint shape.
    pub fn same_as(&self, other: &Cell) -> bool {
        if self.index != other.index {
            return false;
        }
        if self.sample.len() != other.sample.len() {
            return false;
        }
        for (a, b) in self.sample.iter().zip(other.sample.iter()) {
            if compare(a, b) != Ordering::Equal {
                return false;
            }
        }
        self.constraints.len() == other.constraints.len()
            && self
                .constraints
                .iter()
                .zip(other.constraints.iter())
                .all(|(a, b)| match (a, b) {
                    (
                        CoordConstraint::Section { poly: p, ordinal: i },
                        CoordConstraint::Section { poly: q, ordinal: j },
                    ) => p == q && i == j,
                    (
                        CoordConstraint::Sector { lower: l1, upper: u1 },
                        CoordConstraint::Sector { lower: l2, upper: u2 },
                    ) => {
                        let bound_eq = |x: &Option<Bound>, y: &Option<Bound>| match (x, y) {
                            (None, None) => true,
                            (Some(a), Some(b)) => {
                                a.poly == b.poly
                                    && a.ordinal == b.ordinal
                                    && compare(&a.value, &b.value) == Ordering::Equal
                            }
                            _ => false,
                        };
                        bound_eq(l1, l2) && bound_eq(u1, u2)
                    }
                    _ => false,
                })
    }
}

/// The ordered cells lying over one base cell.
#[derive(Clone, Debug)]
pub struct Stack {
    pub base_index: Vec<usize>,
    pub cells: Vec<Cell>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailurePolicy {
    Warn,
    Err,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NullificationWarning {
    pub cell: Vec<usize>,
    pub poly: MultiPoly,
}

#[derive(Clone, Debug)]
pub struct SubCadResult {
    /// Top-level cells, ordered lexicographically by index.
    pub cells: Vec<Cell>,
    pub operator: ProjOpKind,
    /// Requested layer count; `n + 1` denotes the complete decomposition.
    pub layers: usize,
    /// `discarded[i]` holds the level-`i+1` sections pruned by the layer
    /// checks, the seeds for resuming one layer deeper.
    pub discarded: Vec<Vec<Cell>>,
    pub warnings: Vec<NullificationWarning>,
    pub order: VarOrder,
    pub policy: FailurePolicy,
    pub table: ProjectionTable,
    pub input: ProblemInput,
}

impl SubCadResult {
    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn same_provenance(&self, other: &SubCadResult) -> bool {
        self.order == other.order
            && self.operator == other.operator
            && self.policy == other.policy
            && self.input == other.input
    }

    /// Cell-for-cell structural equality of the cell lists.
    pub fn same_cells(&self, other: &SubCadResult) -> bool {
        self.cells.len() == other.cells.len()
            && self
                .cells
                .iter()
                .zip(other.cells.iter())
                .all(|(a, b)| a.same_as(b))
    }
}

fn integer_below_root(a: &AlgebraicNumber) -> Rational {
    match a.as_rational() {
        Some(r) => integer_below(r),
        None => a.lo().floor(),
    }
}

fn integer_above_root(a: &AlgebraicNumber) -> Rational {
    match a.as_rational() {
        Some(r) => integer_above(r),
        None => a.hi().ceil(),
    }
}

/// Expansion coefficients of `p` in the variables of index `>= j`
/// (polynomials in the variables below `Var(j)`).
fn coeffs_in_prefix(p: &MultiPoly, j: usize) -> Vec<MultiPoly> {
    match p.mvar() {
        Some(v) if v.0 >= j => {
            let mut out = Vec::new();
            for c in p.coeffs_wrt(v) {
                out.extend(coeffs_in_prefix(&c, j));
            }
            out
        }
        _ => vec![p.clone()],
    }
}

/// The lowest-level prefix cell over whose cylinder `p` vanishes
/// identically; `p` is known to vanish over the full base.
fn nullification_cell(p: &MultiPoly, base: &Cell) -> Vec<usize> {
    for j in 1..base.level() {
        let coeffs = coeffs_in_prefix(p, j);
        if coeffs
            .iter()
            .all(|c| sign_at_point(c, &base.sample[..j]) == 0)
        {
            return base.index[..j].to_vec();
        }
    }
    base.index.clone()
}

struct LiftCtx<'a> {
    order: &'a VarOrder,
    policy: FailurePolicy,
    warnings: Vec<NullificationWarning>,
}

impl LiftCtx<'_> {
    fn record_nullification(&mut self, p: &MultiPoly, base: &Cell) -> Result<()> {
        // vanishing over a point is harmless; delineability only fails over
        // positive-dimensional cells
        if base.dimension() == 0 {
            return Ok(());
        }
        let cell = nullification_cell(p, base);
        match self.policy {
            FailurePolicy::Err => Err(CadError::NotWellOriented {
                cell,
                poly: p.display(self.order).to_string(),
            }),
            FailurePolicy::Warn => {
                let w = NullificationWarning {
                    cell,
                    poly: p.clone(),
                };
                if !self.warnings.contains(&w) {
                    self.warnings.push(w);
                }
                Ok(())
            }
        }
    }

    /// Build the stack over `base` from the roots of `polys` in the next
    /// variable.
    fn generate_stack(&mut self, polys: &[MultiPoly], base: &Cell) -> Result<Stack> {
        let level_var = Var(base.level());
        let mut sections: Vec<Bound> = Vec::new();
        for p in polys {
            match roots_over_sample(p, &base.sample, level_var)? {
                RootsOutcome::IdenticallyZero => self.record_nullification(p, base)?,
                RootsOutcome::Roots(roots) => {
                    for (ordinal, r) in roots.into_iter().enumerate() {
                        let pos = sections.binary_search_by(|b| compare(&b.value, &r));
                        match pos {
                            Ok(_) => {} // duplicate root, first owner kept
                            Err(at) => sections.insert(
                                at,
                                Bound {
                                    value: r,
                                    poly: p.clone(),
                                    ordinal,
                                },
                            ),
                        }
                    }
                }
            }
        }
        let mut cells = Vec::with_capacity(2 * sections.len() + 1);
        let extend = |base: &Cell,
                      pos: usize,
                      coord: AlgebraicNumber,
                      constraint: CoordConstraint| {
            let mut index = base.index.clone();
            index.push(pos);
            let mut sample = base.sample.clone();
            sample.push(coord);
            let mut constraints = base.constraints.clone();
            constraints.push(constraint);
            Cell {
                index,
                sample,
                constraints,
            }
        };
        if sections.is_empty() {
            cells.push(extend(
                base,
                1,
                AlgebraicNumber::from_rational(Rational::zero()),
                CoordConstraint::Sector {
                    lower: None,
                    upper: None,
                },
            ));
            return Ok(Stack {
                base_index: base.index.clone(),
                cells,
            });
        }
        for j in 0..sections.len() {
            let root = &sections[j];
            let sector_sample = if j == 0 {
                integer_below_root(&root.value)
            } else {
                rational_between(&sections[j - 1].value, &root.value)
            };
            cells.push(extend(
                base,
                2 * j + 1,
                AlgebraicNumber::from_rational(sector_sample),
                CoordConstraint::Sector {
                    lower: (j > 0).then(|| sections[j - 1].clone()),
                    upper: Some(root.clone()),
                },
            ));
            cells.push(extend(
                base,
                2 * j + 2,
                root.value.clone(),
                CoordConstraint::Section {
                    poly: root.poly.clone(),
                    ordinal: root.ordinal,
                },
            ));
        }
        let last = sections.last().unwrap();
        cells.push(extend(
            base,
            2 * sections.len() + 1,
            AlgebraicNumber::from_rational(integer_above_root(&last.value)),
            CoordConstraint::Sector {
                lower: Some(last.clone()),
                upper: None,
            },
        ));
        Ok(Stack {
            base_index: base.index.clone(),
            cells,
        })
    }
}

/// Standalone stack generation (the lifting step exposed on its own).
pub fn generate_stack(
    polys: &[MultiPoly],
    base: &Cell,
    order: &VarOrder,
    policy: FailurePolicy,
) -> Result<Stack> {
    let mut ctx = LiftCtx {
        order,
        policy,
        warnings: Vec::new(),
    };
    ctx.generate_stack(polys, base)
}

fn sort_cells(cells: &mut [Cell]) {
    cells.sort_by(|a, b| a.index.cmp(&b.index));
}

/// Shared layered lifting engine. `seeds[i]` are extra bases at level `i+1`
/// (used when resuming); a fresh run seeds level 0 with the root cell.
/// The dimension check at level `i` keeps bases with `dim > i - ell - 1`;
/// the final filter keeps `dim > n - ell`.
fn lift_layers(
    table: &ProjectionTable,
    order: &VarOrder,
    policy: FailurePolicy,
    ell: usize,
    seeds: Option<&[Vec<Cell>]>,
    top_override: Option<&[MultiPoly]>,
) -> Result<(Vec<Cell>, Vec<Vec<Cell>>, Vec<NullificationWarning>)> {
    let n = order.len();
    let mut ctx = LiftCtx {
        order,
        policy,
        warnings: Vec::new(),
    };
    let mut discarded: Vec<Vec<Cell>> = vec![Vec::new(); n];
    let mut carry: Vec<Cell> = Vec::new();

    let fresh = seeds.is_none();
    if fresh {
        carry = ctx
            .generate_stack(table.level(1), &Cell::root())?
            .cells;
    }

    for i in 2..=n {
        let mut bases = carry;
        if let Some(seeds) = seeds {
            bases.extend(seeds[i - 2].iter().cloned());
        }
        sort_cells(&mut bases);
        carry = Vec::new();
        let polys = if i == n {
            top_override.unwrap_or_else(|| table.level(i))
        } else {
            table.level(i)
        };
        for c in bases {
            if c.dimension() as i64 > i as i64 - ell as i64 - 1 {
                carry.extend(ctx.generate_stack(polys, &c)?.cells);
            } else {
                discarded[i - 2].push(c);
            }
        }
    }

    let mut cells = Vec::new();
    if let Some(seeds) = seeds {
        // previously pruned top-level cells re-enter directly
        cells.extend(seeds[n - 1].iter().cloned());
    }
    for c in carry {
        if c.dimension() as i64 > n as i64 - ell as i64 {
            cells.push(c);
        } else {
            discarded[n - 1].push(c);
        }
    }
    sort_cells(&mut cells);
    Ok((cells, discarded, ctx.warnings))
}

fn base_op_kind(op: BaseOp) -> ProjOpKind {
    match op {
        BaseOp::Collins => ProjOpKind::Collins,
        BaseOp::McCallum => ProjOpKind::McCallum,
    }
}

/// Complete sign-invariant decomposition.
pub fn cad_full(
    polys: &[MultiPoly],
    order: &VarOrder,
    op: BaseOp,
    policy: FailurePolicy,
) -> Result<SubCadResult> {
    lcad(polys, order, order.len() + 1, op, policy)
}

/// Layered sub-decomposition: the cells of the complete decomposition with
/// dimension above `n - ell`. `ell = n + 1` yields the complete one.
pub fn lcad(
    polys: &[MultiPoly],
    order: &VarOrder,
    ell: usize,
    op: BaseOp,
    policy: FailurePolicy,
) -> Result<SubCadResult> {
    let n = order.len();
    if ell < 1 || ell > n + 1 {
        return Err(CadError::InvalidLayer {
            given: ell,
            max: n + 1,
        });
    }
    let input = ProblemInput::Polys(polys.to_vec());
    let kind = base_op_kind(op);
    let table = projection_phase(&input, order, &kind)?;
    let (cells, discarded, warnings) = lift_layers(&table, order, policy, ell, None, None)?;
    Ok(SubCadResult {
        cells,
        operator: kind,
        layers: ell,
        discarded,
        warnings,
        order: order.clone(),
        policy,
        table,
        input,
    })
}

/// Extend a layered result by one more layer without recomputing the cells
/// already present: lifts over the previously discarded sections only.
pub fn lcad_next_layer(state: &SubCadResult) -> Result<SubCadResult> {
    let n = state.order.len();
    if state.layers >= n + 1 {
        return Ok(state.clone());
    }
    let ell = state.layers + 1;
    let top_override = state.table.final_lift_basis.clone();
    let (new_cells, discarded, mut warnings) = lift_layers(
        &state.table,
        &state.order,
        state.policy,
        ell,
        Some(&state.discarded),
        top_override.as_deref(),
    )?;
    let mut cells = state.cells.clone();
    cells.extend(new_cells);
    sort_cells(&mut cells);
    for w in &state.warnings {
        if !warnings.contains(w) {
            warnings.push(w.clone());
        }
    }
    Ok(SubCadResult {
        cells,
        operator: state.operator.clone(),
        layers: ell,
        discarded,
        warnings,
        order: state.order.clone(),
        policy: state.policy,
        table: state.table.clone(),
        input: state.input.clone(),
    })
}

fn ec_construction(
    input: &ECInput,
    order: &VarOrder,
    policy: FailurePolicy,
) -> Result<SubCadResult> {
    let basis = ec_basis(input, order)?;
    let kind = ProjOpKind::McCallumEc {
        ec_basis: basis.clone(),
    };
    let problem = ProblemInput::Ec(input.clone());
    let table = projection_phase(&problem, order, &kind)?;
    let n = order.len();
    let (cells, discarded, warnings) =
        lift_layers(&table, order, policy, n + 1, None, Some(&basis))?;
    Ok(SubCadResult {
        cells,
        operator: kind,
        layers: n + 1,
        discarded,
        warnings,
        order: order.clone(),
        policy,
        table,
        input: problem,
    })
}

/// Truth-invariant decomposition for a formula with an equational
/// constraint: reduced first projection, final lift against the constraint
/// basis only.
pub fn eccad(input: &ECInput, order: &VarOrder, policy: FailurePolicy) -> Result<SubCadResult> {
    ec_construction(input, order, policy)
}

/// Variety sub-decomposition: only the cells lying on the constraint
/// variety, i.e. the sections of the final lift.
pub fn vcad(input: &ECInput, order: &VarOrder, policy: FailurePolicy) -> Result<SubCadResult> {
    let mut r = ec_construction(input, order, policy)?;
    r.cells.retain(|c| c.index.last().map_or(false, |&i| i % 2 == 0));
    Ok(r)
}

/// Layered variety sub-decomposition: the variety cells in the top `ell`
/// layers of the variety's own dimensions.
pub fn lvcad(
    input: &ECInput,
    order: &VarOrder,
    ell: usize,
    policy: FailurePolicy,
) -> Result<SubCadResult> {
    let n = order.len();
    if ell < 1 || ell > n + 1 {
        return Err(CadError::InvalidLayer {
            given: ell,
            max: n + 1,
        });
    }
    let mut r = vcad(input, order, policy)?;
    r.cells
        .retain(|c| c.dimension() as i64 > n as i64 - 1 - ell as i64);
    r.layers = ell;
    Ok(r)
}
