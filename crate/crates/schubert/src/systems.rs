//! Square systems for Schubert problems: the three Grassmannian primal-dual
//! formulations, the flag-manifold formulation with its reductions, and the
//! overdetermined determinantal formulations used as cross-checks.
//!
//! A square system pairs one primal coordinate pattern M with one dual
//! pattern N_i per remaining condition. Each bilinear block evaluates
//! selected entries of (M L) (R_i N_i) where L and R_i are precomputed
//! parameter matrices; determinant equations stack rows of M L over a fixed
//! parameter block.

use std::sync::{Arc, OnceLock};

use num_complex::Complex64;

use crate::combinatorics::{FlagPermutation, FlagType, SchubertCondition, Space, SchubertProblem};
use crate::error::{Error, Result};
use crate::exact::GaussRat;
use crate::matrix::{to_c64, Mat};
use crate::patterns::{
    m_alpha, m_bi, m_w, n_alpha, n_bi, n_w, CoordinatePattern, FlagMatrix, PatternEntry,
};

/// A parameter matrix kept in float form, with the exact form materialized
/// on first use (certification only).
#[derive(Debug)]
pub struct ParamMatrix {
    float: Mat<Complex64>,
    exact: OnceLock<Mat<GaussRat>>,
    recipe: ParamRecipe,
}

#[derive(Debug, Clone)]
enum ParamRecipe {
    Value(Mat<GaussRat>),
    InverseOf(Mat<GaussRat>),
}

impl Clone for ParamMatrix {
    fn clone(&self) -> Self {
        ParamMatrix {
            float: self.float.clone(),
            exact: match self.exact.get() {
                Some(v) => OnceLock::from(v.clone()),
                None => OnceLock::new(),
            },
            recipe: self.recipe.clone(),
        }
    }
}

impl ParamMatrix {
    pub fn value(exact: Mat<GaussRat>) -> Self {
        ParamMatrix {
            float: to_c64(&exact),
            exact: OnceLock::new(),
            recipe: ParamRecipe::Value(exact),
        }
    }

    pub fn inverse_of(flag: &FlagMatrix) -> Self {
        ParamMatrix {
            float: flag.float_inverse().clone(),
            exact: OnceLock::new(),
            recipe: ParamRecipe::InverseOf(flag.exact().clone()),
        }
    }

    pub fn float(&self) -> &Mat<Complex64> {
        &self.float
    }

    pub fn exact(&self) -> &Mat<GaussRat> {
        self.exact.get_or_init(|| match &self.recipe {
            ParamRecipe::Value(m) => m.clone(),
            ParamRecipe::InverseOf(m) => m.inverse().expect("flag verified nonsingular"),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InstanceField {
    Real,
    Complex,
}

/// A Schubert problem together with one flag matrix per condition.
/// Paired conditions (i, j) share a matrix: flags[j] is exactly the row
/// reversal of flags[i], so the two flags are automatically opposite.
#[derive(Clone, Debug)]
pub struct ProblemInstance {
    pub problem: SchubertProblem,
    pub flags: Vec<FlagMatrix>,
    pub pairing: Vec<(usize, usize)>,
    pub seed: u64,
    pub field: InstanceField,
}

impl ProblemInstance {
    pub fn is_real(&self) -> bool {
        self.flags.iter().all(|f| f.is_real())
    }

    fn require_pair(&self, i: usize, j: usize) -> Result<()> {
        if self.flags[i].is_row_reversal_of(&self.flags[j]) {
            // flags[j] rows reversed give flags[i]? is_row_reversal_of checks
            // self[r] == other[n-1-r]; either orientation certifies the pair.
            return Ok(());
        }
        if self.flags[j].is_row_reversal_of(&self.flags[i]) {
            return Ok(());
        }
        Err(Error::FlagsNotOpposite)
    }
}

/// Which square formulation to build.
#[derive(Clone, PartialEq, Debug)]
pub enum BuildSpec {
    Pdf1,
    Pdf2,
    Pdf3 { trailing_hypersurfaces: usize },
    Flag(ReductionPlan),
}

impl BuildSpec {
    /// Condition index pairs that must share an opposite flag pair.
    pub fn pairing(&self, num_conditions: usize) -> Vec<(usize, usize)> {
        match self {
            BuildSpec::Pdf1 => Vec::new(),
            BuildSpec::Pdf2 => (0..num_conditions / 2).map(|i| (2 * i, 2 * i + 1)).collect(),
            BuildSpec::Pdf3 { trailing_hypersurfaces } => {
                let m = num_conditions.saturating_sub(*trailing_hypersurfaces);
                (0..m / 2).map(|i| (2 * i, 2 * i + 1)).collect()
            }
            BuildSpec::Flag(plan) => plan
                .actions
                .iter()
                .enumerate()
                .filter_map(|(i, a)| match a {
                    ReductionAction::GrassPair { partner, .. } => Some((i, *partner)),
                    _ => None,
                })
                .collect(),
        }
    }
}

/// Per-condition reduction choices for the flag formulation; one action per
/// condition except the last (primal) one.
#[derive(Clone, PartialEq, Debug)]
pub struct ReductionPlan {
    pub actions: Vec<ReductionAction>,
}

#[derive(Clone, PartialEq, Debug)]
pub enum ReductionAction {
    /// Keep the full dual pattern for the permutation.
    Full,
    /// The condition only constrains the subflag of type b: dual over b
    /// with dim(a) - dim(b) fewer equations and variables.
    Subflag { v: FlagPermutation },
    /// The condition is Grassmannian at a: dual over Gr(a, n).
    GrassSingle { alpha: SchubertCondition },
    /// Two Grassmannian conditions at the same a on an opposite flag pair,
    /// recorded on the first member.
    GrassPair { partner: usize, alpha: SchubertCondition, beta: SchubertCondition },
    /// Second member of a pair; contributes no factor of its own.
    PairPartner { leader: usize },
    /// Codimension-one condition: one determinant equation, no dual factor.
    CodimOne { a: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReductionKind {
    Subflag,
    GrassPair,
    CodimOne,
}

impl ReductionPlan {
    pub fn none(num_conditions: usize) -> Self {
        ReductionPlan { actions: vec![ReductionAction::Full; num_conditions - 1] }
    }

    /// Detect every applicable reduction, preferring the single determinant
    /// for codimension-one conditions, then the subflag of least dimension,
    /// pairing Grassmannian conditions at a common a greedily in order.
    pub fn detect(problem: &SchubertProblem) -> Result<Self> {
        let SchubertProblem::Flag { flag_type, conditions } = problem else {
            return Err(Error::Formulation("reduction plans apply to flag problems".into()));
        };
        let s = conditions.len();
        let mut actions: Vec<ReductionAction> = Vec::with_capacity(s - 1);
        for w in conditions.iter().take(s - 1) {
            actions.push(detect_one(w, flag_type));
        }
        // pair Grassmannian candidates with a common a
        for i in 0..actions.len() {
            let ReductionAction::GrassSingle { alpha } = actions[i].clone() else { continue };
            for j in (i + 1)..actions.len() {
                let ReductionAction::GrassSingle { alpha: beta } = actions[j].clone() else {
                    continue;
                };
                if beta.ell() != alpha.ell() {
                    continue;
                }
                if n_bi(&alpha, &beta).is_err() {
                    continue;
                }
                actions[i] = ReductionAction::GrassPair { partner: j, alpha: alpha.clone(), beta };
                actions[j] = ReductionAction::PairPartner { leader: i };
                break;
            }
        }
        Ok(ReductionPlan { actions })
    }
}

fn detect_one(w: &FlagPermutation, flag_type: &FlagType) -> ReductionAction {
    if w.codim() == 1 {
        for &a in flag_type.a_seq() {
            let alpha = w.restriction(a).unwrap();
            if alpha.codim() == 1 {
                if let Ok(lift) = FlagPermutation::lift_condition(&alpha, flag_type) {
                    if &lift == w {
                        return ReductionAction::CodimOne { a };
                    }
                }
            }
        }
    }
    // proper subtypes ordered by dimension
    let a_seq = flag_type.a_seq();
    let t = a_seq.len();
    let mut subtypes: Vec<FlagType> = Vec::new();
    for mask in 1u32..(1 << t) {
        if mask == (1 << t) - 1 {
            continue; // the full type saves nothing
        }
        let b_seq: Vec<usize> =
            (0..t).filter(|&k| mask >> k & 1 == 1).map(|k| a_seq[k]).collect();
        subtypes.push(FlagType::new(flag_type.n(), b_seq).unwrap());
    }
    subtypes.sort_by_key(|b| b.dim());
    for bt in subtypes {
        let v = sort_within_blocks(w, &bt);
        if let Ok(lift) = FlagPermutation::lift_subflag(&v, flag_type) {
            if &lift == w {
                if bt.a_seq().len() == 1 {
                    let alpha = w.restriction(bt.a_seq()[0]).unwrap();
                    return ReductionAction::GrassSingle { alpha };
                }
                return ReductionAction::Subflag { v };
            }
        }
    }
    ReductionAction::Full
}

/// The minimal coset representative: sort values within each block of the
/// subtype.
fn sort_within_blocks(w: &FlagPermutation, bt: &FlagType) -> FlagPermutation {
    let n = bt.n();
    let mut bounds = vec![0usize];
    bounds.extend_from_slice(bt.a_seq());
    bounds.push(n);
    let mut line = w.one_line().to_vec();
    for win in bounds.windows(2) {
        line[win[0]..win[1]].sort_unstable();
    }
    FlagPermutation::new(bt.clone(), line).expect("block-sorted line has descents in the subtype")
}

/// One variable group: a coordinate pattern and its offset in the global
/// variable vector. Group 0 is always the primal pattern.
#[derive(Clone, Debug)]
pub struct VarGroup {
    pub label: String,
    pub pattern: Arc<CoordinatePattern>,
    pub offset: usize,
}

impl VarGroup {
    pub fn size(&self) -> usize {
        self.pattern.var_count()
    }
}

/// A block of bilinear equations: entries (r, c) of (M L)(R N) for the
/// block's dual group, restricted to `eq_indices`.
#[derive(Clone, Debug)]
pub struct BilinearBlock {
    pub dual_group: usize,
    pub right: ParamMatrix,
    pub eq_indices: Vec<(usize, usize)>,
    pub eq_offset: usize,
    pub cond_indices: Vec<usize>,
}

/// det( (first `rows_used` rows of M L) stacked over `psi` ) = 0.
#[derive(Clone, Debug)]
pub struct DetEquation {
    pub rows_used: usize,
    pub psi: ParamMatrix,
    pub eq_offset: usize,
    pub cond_index: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Formulation {
    Pdf1,
    Pdf2,
    Pdf3,
    Flag,
}

impl std::fmt::Display for Formulation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Formulation::Pdf1 => "pdf1",
            Formulation::Pdf2 => "pdf2",
            Formulation::Pdf3 => "pdf3",
            Formulation::Flag => "flag",
        };
        write!(f, "{s}")
    }
}

/// A square system of bilinear blocks plus determinant equations.
#[derive(Clone, Debug)]
pub struct SquareSystem {
    pub space: Space,
    pub formulation: Formulation,
    pub var_groups: Vec<VarGroup>,
    /// Left parameter matrix multiplying the instantiated primal pattern.
    pub left: ParamMatrix,
    pub blocks: Vec<BilinearBlock>,
    pub dets: Vec<DetEquation>,
    pub total_equations: usize,
    pub total_variables: usize,
    pub real_coefficients: bool,
    /// Condition indices covered by the primal chart.
    pub primal_conditions: Vec<usize>,
    pub reduction_savings: Vec<(ReductionKind, usize)>,
}

impl SquareSystem {
    pub fn primal(&self) -> &VarGroup {
        &self.var_groups[0]
    }

    pub fn group_values<'a, T>(&self, point: &'a [T], g: usize) -> &'a [T] {
        let grp = &self.var_groups[g];
        &point[grp.offset..grp.offset + grp.size()]
    }

    /// Total degree of each equation, in system order.
    pub fn equation_degrees(&self) -> Vec<usize> {
        let mut degs = Vec::with_capacity(self.total_equations);
        let primal = &self.var_groups[0].pattern;
        for b in &self.blocks {
            let dual = &self.var_groups[b.dual_group].pattern;
            for &(r, c) in &b.eq_indices {
                let mut d = 0;
                if primal.row_has_var(r) {
                    d += 1;
                }
                if (0..dual.rows).any(|k| matches!(dual.entry(k, c), PatternEntry::Var(_))) {
                    d += 1;
                }
                degs.push(d);
            }
        }
        for det in &self.dets {
            let d = (0..det.rows_used).filter(|&r| primal.row_has_var(r)).count();
            degs.push(d);
        }
        degs
    }

    /// Bilinear equation count (excluding determinants).
    pub fn bilinear_count(&self) -> usize {
        self.blocks.iter().map(|b| b.eq_indices.len()).sum()
    }
}

/// The (r, c) entries constrained by the zero-product condition for a flag
/// type: r < a_k and c < n - a_k for some k. There are exactly dim(a) such
/// entries.
pub fn flag_index_set(a_seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let a_t = *a_seq.last().unwrap();
    for r in 0..a_t {
        // smallest a_k with a_k > r gives the widest column range
        let a_min = a_seq.iter().copied().find(|&a| a > r).unwrap();
        for c in 0..(n - a_min) {
            out.push((r, c));
        }
    }
    out
}

fn assemble(
    space: Space,
    formulation: Formulation,
    var_groups: Vec<VarGroup>,
    left: ParamMatrix,
    blocks: Vec<BilinearBlock>,
    dets: Vec<DetEquation>,
    real: bool,
    primal_conditions: Vec<usize>,
    reduction_savings: Vec<(ReductionKind, usize)>,
) -> SquareSystem {
    let total_variables = var_groups.iter().map(|g| g.size()).sum();
    let total_equations =
        blocks.iter().map(|b| b.eq_indices.len()).sum::<usize>() + dets.len();
    debug_assert_eq!(total_equations, total_variables, "system must be square");
    SquareSystem {
        space,
        formulation,
        var_groups,
        left,
        blocks,
        dets,
        total_equations,
        total_variables,
        real_coefficients: real,
        primal_conditions,
        reduction_savings,
    }
}

/// Primal-dual formulation with the full echelon and dual patterns: one
/// bilinear block of l(n-l) equations per non-primal condition.
pub fn build_pdf1(inst: &ProblemInstance) -> Result<SquareSystem> {
    let SchubertProblem::Grassmannian { n, ell, conditions } = &inst.problem else {
        return Err(Error::Formulation("pdf1 needs a Grassmannian problem".into()));
    };
    inst.problem.validate()?;
    let s = conditions.len();
    if s < 2 {
        return Err(Error::Formulation("pdf1 needs at least two conditions".into()));
    }
    let grid = flag_index_set(&[*ell], *n);
    let mut groups = vec![VarGroup {
        label: "M".into(),
        pattern: m_alpha(&conditions[s - 1]),
        offset: 0,
    }];
    let mut blocks = Vec::new();
    let mut offset = groups[0].size();
    let mut eq_offset = 0;
    for i in 0..s - 1 {
        let pattern = n_alpha(&conditions[i]);
        groups.push(VarGroup { label: format!("N{}", i + 1), pattern, offset });
        offset += groups.last().unwrap().size();
        blocks.push(BilinearBlock {
            dual_group: groups.len() - 1,
            right: ParamMatrix::inverse_of(&inst.flags[i]),
            eq_indices: grid.clone(),
            eq_offset,
            cond_indices: vec![i],
        });
        eq_offset += grid.len();
    }
    Ok(assemble(
        inst.problem.space(),
        Formulation::Pdf1,
        groups,
        ParamMatrix::value(inst.flags[s - 1].exact().clone()),
        blocks,
        Vec::new(),
        inst.is_real(),
        vec![s - 1],
        Vec::new(),
    ))
}

/// Conditions taken in consecutive pairs over opposite flags, using the
/// two-sided echelon patterns. Odd problems are padded with the dense
/// condition. Saves floor(s/2) * l(n-l) equations and variables over pdf1.
pub fn build_pdf2(inst: &ProblemInstance) -> Result<SquareSystem> {
    build_pdf3(inst, 0)
}

/// Like pdf2, but the last `t` conditions must be hypersurface conditions
/// and enter as single determinant equations instead of dual factors.
pub fn build_pdf3(inst: &ProblemInstance, t: usize) -> Result<SquareSystem> {
    let SchubertProblem::Grassmannian { n, ell, conditions } = &inst.problem else {
        return Err(Error::Formulation("pdf2/pdf3 need a Grassmannian problem".into()));
    };
    inst.problem.validate()?;
    let s = conditions.len();
    if t > s {
        return Err(Error::Formulation(format!("t = {t} exceeds the condition count {s}")));
    }
    for cond in &conditions[s - t..] {
        if !cond.is_hypersurface() {
            return Err(Error::Formulation(
                "the trailing t conditions must be hypersurface conditions".into(),
            ));
        }
    }
    // pair up the first s - t conditions, padding with the dense condition
    let mut paired: Vec<SchubertCondition> = conditions[..s - t].to_vec();
    if paired.len() % 2 == 1 {
        paired.push(SchubertCondition::dense(*n, *ell));
    }
    let k = paired.len() / 2;
    if k == 0 {
        return Err(Error::Formulation(
            "pdf3 needs at least one condition pair for the primal chart".into(),
        ));
    }
    for i in 0..k {
        if 2 * i + 1 < s - t {
            inst.require_pair(2 * i, 2 * i + 1)?;
        }
    }

    let grid = flag_index_set(&[*ell], *n);
    let primal_pattern = m_bi(&paired[2 * k - 2], &paired[2 * k - 1])?;
    let mut groups = vec![VarGroup { label: "M".into(), pattern: primal_pattern, offset: 0 }];
    let mut blocks = Vec::new();
    let mut offset = groups[0].size();
    let mut eq_offset = 0;
    for i in 0..k - 1 {
        let pattern = n_bi(&paired[2 * i], &paired[2 * i + 1])?;
        groups.push(VarGroup { label: format!("N{}", i + 1), pattern, offset });
        offset += groups.last().unwrap().size();
        blocks.push(BilinearBlock {
            dual_group: groups.len() - 1,
            right: ParamMatrix::inverse_of(&inst.flags[2 * i]),
            eq_indices: grid.clone(),
            eq_offset,
            cond_indices: vec![2 * i, 2 * i + 1],
        });
        eq_offset += grid.len();
    }
    let mut dets = Vec::new();
    for j in 0..t {
        let cond_index = s - t + j;
        let psi = inst.flags[cond_index].exact().top_rows(n - ell);
        dets.push(DetEquation {
            rows_used: *ell,
            psi: ParamMatrix::value(psi),
            eq_offset: eq_offset + j,
            cond_index,
        });
    }
    let mut primal_conditions = vec![2 * k - 2];
    if 2 * k - 1 < s - t {
        primal_conditions.push(2 * k - 1);
    }
    Ok(assemble(
        inst.problem.space(),
        if t == 0 { Formulation::Pdf2 } else { Formulation::Pdf3 },
        groups,
        ParamMatrix::value(inst.flags[2 * k - 2].exact().clone()),
        blocks,
        dets,
        inst.is_real(),
        primal_conditions,
        Vec::new(),
    ))
}

/// Flag-manifold formulation: the zero-product index set per condition,
/// shrunk by the reductions in the plan.
pub fn build_flag(inst: &ProblemInstance, plan: &ReductionPlan) -> Result<SquareSystem> {
    let SchubertProblem::Flag { flag_type, conditions } = &inst.problem else {
        return Err(Error::Formulation("flag formulation needs a flag problem".into()));
    };
    inst.problem.validate()?;
    let s = conditions.len();
    if s < 2 {
        return Err(Error::Formulation("flag formulation needs at least two conditions".into()));
    }
    if plan.actions.len() != s - 1 {
        return Err(Error::InapplicableReduction(format!(
            "plan covers {} conditions, problem has {} non-primal conditions",
            plan.actions.len(),
            s - 1
        )));
    }
    let n = flag_type.n();
    let dim_a = flag_type.dim();
    let full_grid = flag_index_set(flag_type.a_seq(), n);

    let mut groups = vec![VarGroup {
        label: "M".into(),
        pattern: m_w(&conditions[s - 1]),
        offset: 0,
    }];
    let mut blocks = Vec::new();
    let mut dets = Vec::new();
    let mut offset = groups[0].size();
    let mut eq_offset = 0;
    let mut savings: Vec<(ReductionKind, usize)> = Vec::new();
    let mut add_saving = |savings: &mut Vec<(ReductionKind, usize)>, kind, amount| {
        if let Some(e) = savings.iter_mut().find(|(k, _)| *k == kind) {
            e.1 += amount;
        } else {
            savings.push((kind, amount));
        }
    };

    for (i, action) in plan.actions.iter().enumerate() {
        let w = &conditions[i];
        match action {
            ReductionAction::Full => {
                let pattern = n_w(w);
                groups.push(VarGroup { label: format!("N{}", i + 1), pattern, offset });
                offset += groups.last().unwrap().size();
                blocks.push(BilinearBlock {
                    dual_group: groups.len() - 1,
                    right: ParamMatrix::inverse_of(&inst.flags[i]),
                    eq_indices: full_grid.clone(),
                    eq_offset,
                    cond_indices: vec![i],
                });
                eq_offset += full_grid.len();
            }
            ReductionAction::Subflag { v } => {
                let bt = v.flag_type().clone();
                if !flag_type.contains(&bt)
                    || &FlagPermutation::lift_subflag(v, flag_type)? != w
                {
                    return Err(Error::InapplicableReduction(format!(
                        "condition {i} does not reduce to the subflag {:?}",
                        bt.a_seq()
                    )));
                }
                let grid = flag_index_set(bt.a_seq(), n);
                let pattern = n_w(v);
                groups.push(VarGroup { label: format!("N{}", i + 1), pattern, offset });
                offset += groups.last().unwrap().size();
                blocks.push(BilinearBlock {
                    dual_group: groups.len() - 1,
                    right: ParamMatrix::inverse_of(&inst.flags[i]),
                    eq_indices: grid.clone(),
                    eq_offset,
                    cond_indices: vec![i],
                });
                eq_offset += grid.len();
                add_saving(&mut savings, ReductionKind::Subflag, dim_a - bt.dim());
            }
            ReductionAction::GrassSingle { alpha } => {
                check_grass(w, alpha, flag_type, i)?;
                let a = alpha.ell();
                let grid = flag_index_set(&[a], n);
                let pattern = n_alpha(alpha);
                groups.push(VarGroup { label: format!("N{}", i + 1), pattern, offset });
                offset += groups.last().unwrap().size();
                blocks.push(BilinearBlock {
                    dual_group: groups.len() - 1,
                    right: ParamMatrix::inverse_of(&inst.flags[i]),
                    eq_indices: grid.clone(),
                    eq_offset,
                    cond_indices: vec![i],
                });
                eq_offset += grid.len();
                add_saving(&mut savings, ReductionKind::Subflag, dim_a - a * (n - a));
            }
            ReductionAction::GrassPair { partner, alpha, beta } => {
                check_grass(w, alpha, flag_type, i)?;
                check_grass(&conditions[*partner], beta, flag_type, *partner)?;
                inst.require_pair(i, *partner)?;
                let a = alpha.ell();
                let grid = flag_index_set(&[a], n);
                let pattern = n_bi(alpha, beta)?;
                groups.push(VarGroup { label: format!("N{}", i + 1), pattern, offset });
                offset += groups.last().unwrap().size();
                blocks.push(BilinearBlock {
                    dual_group: groups.len() - 1,
                    right: ParamMatrix::inverse_of(&inst.flags[i]),
                    eq_indices: grid.clone(),
                    eq_offset,
                    cond_indices: vec![i, *partner],
                });
                eq_offset += grid.len();
                add_saving(&mut savings, ReductionKind::GrassPair, 2 * dim_a - a * (n - a));
            }
            ReductionAction::PairPartner { .. } => {}
            ReductionAction::CodimOne { a } => {
                if w.codim() != 1 || !flag_type.a_seq().contains(a) {
                    return Err(Error::InapplicableReduction(format!(
                        "condition {i} is not a hypersurface condition at a = {a}"
                    )));
                }
                let psi = inst.flags[i].exact().top_rows(n - a);
                dets.push(DetEquation {
                    rows_used: *a,
                    psi: ParamMatrix::value(psi),
                    eq_offset,
                    cond_index: i,
                });
                eq_offset += 1;
                add_saving(&mut savings, ReductionKind::CodimOne, dim_a - 1);
            }
        }
    }

    Ok(assemble(
        inst.problem.space(),
        Formulation::Flag,
        groups,
        ParamMatrix::value(inst.flags[s - 1].exact().clone()),
        blocks,
        dets,
        inst.is_real(),
        vec![s - 1],
        savings,
    ))
}

fn check_grass(
    w: &FlagPermutation,
    alpha: &SchubertCondition,
    flag_type: &FlagType,
    idx: usize,
) -> Result<()> {
    let lift = FlagPermutation::lift_condition(alpha, flag_type)?;
    if &lift != w {
        return Err(Error::InapplicableReduction(format!(
            "condition {idx} is not the Grassmannian lift of {:?}",
            alpha.entries()
        )));
    }
    Ok(())
}

/// Dispatch on a build spec.
pub fn build(inst: &ProblemInstance, spec: &BuildSpec) -> Result<SquareSystem> {
    match spec {
        BuildSpec::Pdf1 => build_pdf1(inst),
        BuildSpec::Pdf2 => build_pdf2(inst),
        BuildSpec::Pdf3 { trailing_hypersurfaces } => build_pdf3(inst, *trailing_hypersurfaces),
        BuildSpec::Flag(plan) => build_flag(inst, plan),
    }
}

/// The largest usable t for pdf3 on this problem: trailing hypersurface
/// conditions, reduced so the paired prefix has even length >= 2.
pub fn default_pdf3_t(problem: &SchubertProblem) -> Option<usize> {
    let SchubertProblem::Grassmannian { conditions, .. } = problem else {
        return None;
    };
    let s = conditions.len();
    let trailing = conditions.iter().rev().take_while(|c| c.is_hypersurface()).count();
    let mut t = trailing;
    while t > 0 && (s - t < 2 || (s - t) % 2 == 1) {
        t -= 1;
    }
    if s - t < 2 {
        return None;
    }
    Some(t)
}

/// Net saving of pdf3 over pdf2 from the parity table: a conditions of
/// codimension > 1, b >= 1 hypersurface conditions, nu = l(n-l).
pub fn reduction_savings(a_parity: usize, b: usize, nu: usize) -> Result<i64> {
    if b == 0 {
        return Err(Error::Formulation("the savings table needs b >= 1".into()));
    }
    let nu = nu as i64;
    let b = b as i64;
    let val = match (a_parity % 2, (b % 2) as usize) {
        (0, 0) => (b / 2) * nu - b,
        (0, 1) => ((b + 1) / 2) * nu - b,
        (1, 0) => (b / 2) * nu - b + 1,
        (1, 1) => (b / 2) * nu - b + 1,
        _ => unreachable!(),
    };
    Ok(val)
}

/// Overdetermined determinantal formulations in one of three charts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Chart {
    /// Local coordinates for the whole Grassmannian; every condition is
    /// imposed by minors.
    FullCell,
    /// Local coordinates for the largest-codimension condition's cell.
    OneCondition,
    /// Local coordinates for the intersection of the two largest conditions'
    /// cells with respect to a shared basis of line intersections.
    TwoCondition,
}

/// A family of rank minors imposing one condition row: all minors of size
/// `minor_size` of (chart matrix stacked over `flag_rows` rows of `flag`).
#[derive(Clone, Debug)]
pub struct MinorFamily {
    pub cond_index: usize,
    pub flag_rows: usize,
    pub minor_size: usize,
    pub flag: Mat<Complex64>,
    pub count: u128,
}

#[derive(Clone, Debug)]
pub struct DeterminantalSystem {
    pub chart: Arc<CoordinatePattern>,
    /// Maps standard coordinates into the chart: M ~ H * chart_basis_inv.
    pub chart_basis_inv: Mat<Complex64>,
    pub families: Vec<MinorFamily>,
    pub variables: usize,
    /// Sum of ||alpha|| over the imposed conditions: the number of linear
    /// combinations of minors that suffice to cut out the intersection.
    pub minimal_generators: usize,
    pub total_minors: u128,
    pub imposed: Vec<usize>,
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn build_determinantal(inst: &ProblemInstance, chart: Chart) -> Result<DeterminantalSystem> {
    let SchubertProblem::Grassmannian { n, ell, conditions } = &inst.problem else {
        return Err(Error::Formulation("determinantal charts need a Grassmannian problem".into()));
    };
    inst.problem.validate()?;
    let s = conditions.len();
    // conditions ranked by codimension (desc), ties by index
    let mut order: Vec<usize> = (0..s).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(conditions[i].codim()), i));

    let consumed: Vec<usize> = match chart {
        Chart::FullCell => Vec::new(),
        Chart::OneCondition => vec![order[0]],
        Chart::TwoCondition => {
            if s < 2 {
                return Err(Error::Formulation("two-condition chart needs two conditions".into()));
            }
            vec![order[0], order[1]]
        }
    };
    let imposed: Vec<usize> = (0..s).filter(|i| !consumed.contains(i)).collect();

    let (pattern, basis_inv): (Arc<CoordinatePattern>, Mat<Complex64>) = match chart {
        Chart::FullCell => (
            m_alpha(&SchubertCondition::dense(*n, *ell)),
            Mat::identity(*n),
        ),
        Chart::OneCondition => (
            m_alpha(&conditions[consumed[0]]),
            inst.flags[consumed[0]].float_inverse().clone(),
        ),
        Chart::TwoCondition => {
            let c1 = consumed[0];
            let c2 = consumed[1];
            let basis = line_intersection_basis(
                inst.flags[c1].float(),
                inst.flags[c2].float(),
            )?;
            let pattern = m_bi(&conditions[c1], &conditions[c2])?;
            let inv = basis.inverse().map_err(|_| {
                Error::GeneralPosition("line-intersection basis is singular".into())
            })?;
            (pattern, inv)
        }
    };

    let mut families = Vec::new();
    let mut total: u128 = 0;
    for &i in &imposed {
        let flag = inst.flags[i].float().mul(&basis_inv);
        let alpha = conditions[i].entries();
        for (r, &b) in alpha.iter().enumerate() {
            let size = ell + b - (r + 1) + 1;
            if size > (ell + b).min(*n) {
                continue; // vacuous rank condition
            }
            let count = binom(ell + b, size) * binom(*n, size);
            total += count;
            families.push(MinorFamily {
                cond_index: i,
                flag_rows: b,
                minor_size: size,
                flag: flag.top_rows(b),
                count,
            });
        }
    }
    let minimal_generators = imposed.iter().map(|&i| conditions[i].norm_count()).sum();
    Ok(DeterminantalSystem {
        variables: pattern.var_count(),
        chart: pattern,
        chart_basis_inv: basis_inv,
        families,
        minimal_generators,
        total_minors: total,
        imposed,
    })
}

/// Basis whose i-th row spans the line (row span of the first i rows of
/// `phi1`) intersect (row span of the first n+1-i rows of `phi2`).
fn line_intersection_basis(
    phi1: &Mat<Complex64>,
    phi2: &Mat<Complex64>,
) -> Result<Mat<Complex64>> {
    let n = phi1.rows;
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let a = phi1.top_rows(i);
        let b = phi2.top_rows(n + 1 - i);
        // x = u^T a = v^T b  <=>  [a^T | -b^T] (u; v) = 0
        let mut stacked = Mat::<Complex64>::zeros(n, i + (n + 1 - i));
        for r in 0..n {
            for c in 0..i {
                stacked[(r, c)] = a[(c, r)];
            }
            for c in 0..(n + 1 - i) {
                stacked[(r, i + c)] = -b[(c, r)];
            }
        }
        let ns = stacked.nullspace();
        if ns.len() != 1 {
            return Err(Error::GeneralPosition(format!(
                "flag intersection at level {i} has dimension {}",
                ns.len()
            )));
        }
        let u = &ns[0][..i];
        let row: Vec<Complex64> = (0..phi1.cols)
            .map(|c| (0..i).map(|k| u[k] * a[(k, c)]).sum())
            .collect();
        rows.push(row);
    }
    Ok(Mat::from_rows(rows))
}

impl DeterminantalSystem {
    /// Express a subspace (rows spanning H in standard coordinates) in the
    /// chart, solving for the unique row representative with the pattern's
    /// support.
    pub fn chart_representative(&self, h: &Mat<Complex64>) -> Result<Mat<Complex64>> {
        let hc = h.mul(&self.chart_basis_inv);
        let ell = self.chart.rows;
        let n = self.chart.cols;
        let mut rows = Vec::with_capacity(ell);
        for i in 0..ell {
            let forbidden: Vec<usize> = (0..n)
                .filter(|&c| matches!(self.chart.entry(i, c), PatternEntry::Zero))
                .collect();
            let one_col = (0..n)
                .find(|&c| matches!(self.chart.entry(i, c), PatternEntry::One))
                .expect("chart row has a leading one");
            // x^T hc vanishing on the forbidden columns
            let constraint = hc.select_cols(&forbidden).transpose();
            let ns = constraint.nullspace();
            if ns.len() != 1 {
                return Err(Error::GeneralPosition(format!(
                    "chart representative for row {i} is not unique (nullity {})",
                    ns.len()
                )));
            }
            let x = &ns[0];
            let mut row: Vec<Complex64> = (0..n)
                .map(|c| (0..ell).map(|k| x[k] * hc[(k, c)]).sum())
                .collect();
            let scale = row[one_col];
            if scale.norm() < 1e-300 {
                return Err(Error::GeneralPosition(format!(
                    "chart representative row {i} has a vanishing pivot"
                )));
            }
            for v in row.iter_mut() {
                *v /= scale;
            }
            rows.push(row);
        }
        Ok(Mat::from_rows(rows))
    }

    /// Evaluate every minor at a chart representative; rows of each stacked
    /// matrix are normalized so the residual is scale-free.
    pub fn max_minor_residual(&self, chart_matrix: &Mat<Complex64>) -> f64 {
        let mut worst = 0.0_f64;
        for fam in &self.families {
            let stacked = chart_matrix.vstack(&fam.flag);
            let normalized = normalize_rows(&stacked);
            let k = fam.minor_size;
            let rowsets = subsets(normalized.rows, k);
            let colsets = subsets(normalized.cols, k);
            for rs in &rowsets {
                let sub = normalized.select_rows(rs);
                for cs in &colsets {
                    let minor = sub.select_cols(cs).det();
                    worst = worst.max(minor.norm());
                }
            }
        }
        worst
    }
}

fn normalize_rows(m: &Mat<Complex64>) -> Mat<Complex64> {
    let mut out = m.clone();
    for r in 0..m.rows {
        let norm: f64 = (0..m.cols).map(|c| m[(r, c)].norm_sqr()).sum::<f64>().sqrt();
        if norm > 0.0 {
            for c in 0..m.cols {
                out[(r, c)] /= norm;
            }
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - (k - i) {
                cur[i] += 1;
                for j in (i + 1)..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::random_instance;

    fn cond(n: usize, e: &[usize]) -> SchubertCondition {
        SchubertCondition::new(n, e.to_vec()).unwrap()
    }

    fn ex437_problem() -> SchubertProblem {
        let beta = cond(9, &[4, 8, 9]);
        let hs = SchubertCondition::hypersurface(9, 3);
        let mut conds = vec![beta; 4];
        conds.extend(vec![hs; 6]);
        SchubertProblem::grassmannian(9, 3, conds).unwrap()
    }

    fn flag_example_problem() -> SchubertProblem {
        let ft = FlagType::new(8, vec![2, 4, 5]).unwrap();
        let mk = |w: [usize; 8]| FlagPermutation::new(ft.clone(), w.to_vec()).unwrap();
        let conds = vec![
                mk([4, 8, 5, 7, 3, 1, 2, 6]),
                mk([7, 8, 4, 5, 3, 1, 2, 6]),
                mk([7, 8, 4, 5, 3, 1, 2, 6]),
                mk([6, 8, 5, 7, 4, 1, 2, 3]),
                mk([6, 8, 5, 7, 4, 1, 2, 3]),
                mk([7, 8, 4, 6, 5, 1, 2, 3]),
                mk([7, 8, 4, 6, 5, 1, 2, 3]),
                mk([7, 8, 4, 6, 5, 1, 2, 3]),
                mk([4, 7, 3, 8, 5, 1, 2, 6]),
            ];
        SchubertProblem::flag(ft, conds).unwrap()
    }

    #[test]
    fn formulation_counts_for_the_437_problem() {
        let problem = ex437_problem();
        let inst1 = random_instance(&problem, &[], 11, InstanceField::Complex, 10).unwrap();
        let sys1 = build_pdf1(&inst1).unwrap();
        assert_eq!((sys1.total_equations, sys1.total_variables), (162, 162));

        let spec = BuildSpec::Pdf2;
        let inst2 =
            random_instance(&problem, &spec.pairing(10), 11, InstanceField::Complex, 10).unwrap();
        let sys2 = build_pdf2(&inst2).unwrap();
        assert_eq!((sys2.total_equations, sys2.total_variables), (72, 72));
        assert!(sys2.dets.is_empty());

        let spec = BuildSpec::Pdf3 { trailing_hypersurfaces: 6 };
        assert_eq!(default_pdf3_t(&problem), Some(6));
        let inst3 =
            random_instance(&problem, &spec.pairing(10), 11, InstanceField::Complex, 10).unwrap();
        let sys3 = build_pdf3(&inst3, 6).unwrap();
        assert_eq!((sys3.total_equations, sys3.total_variables), (24, 24));
        assert_eq!(sys3.bilinear_count(), 18);
        assert_eq!(sys3.dets.len(), 6);
        for det in &sys3.dets {
            assert_eq!(det.rows_used + det.psi.float().rows, 9);
        }
        // cubic determinants: three variable-bearing rows each
        let degs = sys3.equation_degrees();
        assert!(degs[18..].iter().all(|&d| d == 3));
    }

    #[test]
    fn determinantal_chart_counts_for_the_437_problem() {
        let problem = ex437_problem();
        let inst = random_instance(&problem, &[], 5, InstanceField::Complex, 10).unwrap();
        let full = build_determinantal(&inst, Chart::FullCell).unwrap();
        assert_eq!((full.variables, full.minimal_generators), (18, 46));
        let one = build_determinantal(&inst, Chart::OneCondition).unwrap();
        assert_eq!((one.variables, one.minimal_generators), (15, 36));
        let two = build_determinantal(&inst, Chart::TwoCondition).unwrap();
        assert_eq!((two.variables, two.minimal_generators), (12, 26));
    }

    #[test]
    fn flag_example_counts_and_savings() {
        let problem = flag_example_problem();
        let plan_none = ReductionPlan::none(9);
        let inst = random_instance(&problem, &[], 3, InstanceField::Complex, 10).unwrap();
        let base = build_flag(&inst, &plan_none).unwrap();
        assert_eq!((base.total_equations, base.total_variables), (184, 184));

        let plan = ReductionPlan::detect(&problem).unwrap();
        let spec = BuildSpec::Flag(plan.clone());
        let pairing = spec.pairing(9);
        assert_eq!(pairing, vec![(1, 2)]);
        let inst = random_instance(&problem, &pairing, 3, InstanceField::Complex, 10).unwrap();
        let reduced = build_flag(&inst, &plan).unwrap();
        assert_eq!(reduced.total_variables, 41);
        assert_eq!(reduced.total_equations, 41);
        assert_eq!(reduced.bilinear_count(), 36);
        assert_eq!(reduced.dets.len(), 5);
        let mut savings = reduced.reduction_savings.clone();
        savings.sort_by_key(|&(_, v)| v);
        assert_eq!(
            savings,
            vec![
                (ReductionKind::Subflag, 2),
                (ReductionKind::GrassPair, 31),
                (ReductionKind::CodimOne, 110),
            ]
        );
        // two quadratic and three quartic determinants
        let degs = reduced.equation_degrees();
        let mut det_degs: Vec<usize> = degs[36..].to_vec();
        det_degs.sort_unstable();
        assert_eq!(det_degs, vec![2, 2, 4, 4, 4]);
    }

    #[test]
    fn detect_identifies_the_flag_example_reductions() {
        let problem = flag_example_problem();
        let plan = ReductionPlan::detect(&problem).unwrap();
        assert!(matches!(&plan.actions[0], ReductionAction::Subflag { v }
            if v.flag_type().a_seq() == [2, 5]));
        assert!(matches!(&plan.actions[1], ReductionAction::GrassPair { partner: 2, alpha, beta }
            if alpha.entries() == [3, 4, 5, 7, 8] && beta.entries() == [3, 4, 5, 7, 8]));
        assert!(matches!(&plan.actions[2], ReductionAction::PairPartner { leader: 1 }));
        for i in 3..8 {
            let expect_a = if i <= 4 { 2 } else { 4 };
            assert!(
                matches!(&plan.actions[i], ReductionAction::CodimOne { a } if *a == expect_a),
                "action {i} was {:?}",
                plan.actions[i]
            );
        }
    }

    #[test]
    fn pdf1_block_structure_small() {
        let b = cond(8, &[4, 8]);
        let problem = SchubertProblem::grassmannian(8, 2, vec![b; 4]).unwrap();
        let inst = random_instance(&problem, &[], 1, InstanceField::Complex, 10).unwrap();
        let sys = build_pdf1(&inst).unwrap();
        assert_eq!((sys.total_equations, sys.total_variables), (36, 36));
        assert_eq!(sys.blocks.len(), 3);
        assert_eq!(sys.var_groups.len(), 4);
    }

    #[test]
    fn pdf2_counts_with_odd_padding() {
        // s = 3 on Gr(2,4): codims 1 + 1 + 2 = 4
        let problem = SchubertProblem::grassmannian(
            4,
            2,
            vec![cond(4, &[2, 4]), cond(4, &[2, 4]), cond(4, &[2, 3])],
        )
        .unwrap();
        let spec = BuildSpec::Pdf2;
        let inst =
            random_instance(&problem, &spec.pairing(3), 9, InstanceField::Complex, 10).unwrap();
        let sys = build_pdf2(&inst).unwrap();
        // ceil(3/2) = 2 pairs after padding: (k-1) nu = 4
        assert_eq!((sys.total_equations, sys.total_variables), (4, 4));
    }

    #[test]
    fn pdf2_on_two_conditions_is_zero_dimensional() {
        // codims 3 + 1 = 4; the chart pins every entry
        let problem = SchubertProblem::grassmannian(
            4,
            2,
            vec![cond(4, &[1, 3]), cond(4, &[2, 4])],
        )
        .unwrap();
        let spec = BuildSpec::Pdf2;
        let inst =
            random_instance(&problem, &spec.pairing(2), 2, InstanceField::Complex, 10).unwrap();
        let sys = build_pdf2(&inst).unwrap();
        assert_eq!((sys.total_equations, sys.total_variables), (0, 0));
    }

    #[test]
    fn four_lines_pdf3_shape() {
        let hs = SchubertCondition::hypersurface(4, 2);
        let problem = SchubertProblem::grassmannian(4, 2, vec![hs; 4]).unwrap();
        assert_eq!(default_pdf3_t(&problem), Some(2));
        let spec = BuildSpec::Pdf3 { trailing_hypersurfaces: 2 };
        let inst =
            random_instance(&problem, &spec.pairing(4), 17, InstanceField::Complex, 10).unwrap();
        let sys = build_pdf3(&inst, 2).unwrap();
        assert_eq!((sys.total_equations, sys.total_variables), (2, 2));
        assert_eq!(sys.blocks.len(), 0);
        assert_eq!(sys.dets.len(), 2);
        assert_eq!(sys.equation_degrees(), vec![2, 2]);
    }

    #[test]
    fn single_block_flag_type_matches_pdf1_counts() {
        let others = vec![cond(6, &[3, 6]); 4];
        let problem = SchubertProblem::grassmannian(6, 2, others.clone()).unwrap();
        let inst = random_instance(&problem, &[], 21, InstanceField::Complex, 10).unwrap();
        let gr_sys = build_pdf1(&inst).unwrap();

        let ft = FlagType::grassmannian(6, 2);
        let perms: Vec<FlagPermutation> = others
            .iter()
            .map(|c| FlagPermutation::lift_condition(c, &ft).unwrap())
            .collect();
        let fl_problem = SchubertProblem::flag(ft, perms).unwrap();
        let fl_inst = random_instance(&fl_problem, &[], 21, InstanceField::Complex, 10).unwrap();
        let fl_sys = build_flag(&fl_inst, &ReductionPlan::none(4)).unwrap();
        assert_eq!(fl_sys.total_equations, gr_sys.total_equations);
        assert_eq!(fl_sys.total_variables, gr_sys.total_variables);
        assert_eq!(fl_sys.bilinear_count(), gr_sys.bilinear_count());
    }

    #[test]
    fn zero_product_index_set_has_flag_dimension() {
        for n in 2..=10usize {
            for mask in 1u32..(1 << (n - 1)) {
                let a_seq: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let ft = FlagType::new(n, a_seq).unwrap();
                assert_eq!(flag_index_set(ft.a_seq(), n).len(), ft.dim(), "a = {:?}", ft.a_seq());
            }
        }
    }

    #[test]
    fn savings_table_values() {
        // even/even checked against the 437 example: 72 - 24 = 48
        assert_eq!(reduction_savings(0, 6, 18).unwrap(), 48);
        // odd/odd with b = 1: no net reduction
        assert_eq!(reduction_savings(1, 1, 18).unwrap(), 0);
        // even/odd
        assert_eq!(reduction_savings(0, 3, 12).unwrap(), 21);
        assert!(reduction_savings(0, 0, 12).is_err());
    }

    #[test]
    fn savings_table_matches_built_systems() {
        // synthetic Gr(2,8) problem with a = 2 conditions of codim 3 and
        // b = 3 hypersurface conditions: 3 + 3 + 3*1 + 3 = 12
        let b = cond(8, &[4, 8]);
        let hs = SchubertCondition::hypersurface(8, 2);
        let mut conds = vec![b.clone(), b.clone(), cond(8, &[4, 8])];
        conds.extend(vec![hs; 3]);
        let problem = SchubertProblem::grassmannian(8, 2, conds).unwrap();
        // a = 3 (odd), b = 3 (odd), nu = 12: predicted saving 12 - 3 + 1 = 10
        let t = default_pdf3_t(&problem).unwrap();
        assert_eq!(t, 2); // one hypersurface joins the pair section
        let s2 = BuildSpec::Pdf2;
        let inst2 =
            random_instance(&problem, &s2.pairing(6), 7, InstanceField::Complex, 10).unwrap();
        let sys2 = build_pdf2(&inst2).unwrap();
        let s3 = BuildSpec::Pdf3 { trailing_hypersurfaces: t };
        let inst3 =
            random_instance(&problem, &s3.pairing(6), 7, InstanceField::Complex, 10).unwrap();
        let sys3 = build_pdf3(&inst3, t).unwrap();
        let predicted = reduction_savings(1, 3, 12).unwrap();
        assert_eq!(
            sys2.total_variables as i64 - sys3.total_variables as i64,
            predicted
        );
    }

    #[test]
    fn pdf2_rejects_unpaired_flags() {
        let b = cond(8, &[4, 8]);
        let problem = SchubertProblem::grassmannian(8, 2, vec![b; 4]).unwrap();
        // no pairing: independent flags are not opposite
        let inst = random_instance(&problem, &[], 13, InstanceField::Complex, 10).unwrap();
        assert!(matches!(build_pdf2(&inst), Err(Error::FlagsNotOpposite)));
    }

    #[test]
    fn infeasible_pair_is_reported() {
        // (1,4) and (2,3) have codims 2 + 2 = 4 but empty cell intersection
        let problem =
            SchubertProblem::grassmannian(4, 2, vec![cond(4, &[1, 4]), cond(4, &[2, 3])]).unwrap();
        let spec = BuildSpec::Pdf2;
        let inst =
            random_instance(&problem, &spec.pairing(2), 3, InstanceField::Complex, 10).unwrap();
        assert!(matches!(build_pdf2(&inst), Err(Error::InfeasiblePair { .. })));
    }
}
