//! Evaluation engine: residuals, Jacobians, and the constant second-derivative
//! bound of square systems, over complex floats or exact Gaussian rationals.
//!
//! Equations are evaluated as structured straight-line programs
//! (matrix products and determinants), never as expanded monomials.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::GaussRat;
use crate::matrix::{Mat, Scalar};
use crate::systems::{ParamMatrix, SquareSystem};

/// Scalars a system can be evaluated over: each picks its form of the
/// parameter matrices.
pub trait SystemScalar: Scalar {
    fn param(p: &ParamMatrix) -> &Mat<Self>;
}

impl SystemScalar for Complex64 {
    fn param(p: &ParamMatrix) -> &Mat<Complex64> {
        p.float()
    }
}

impl SystemScalar for GaussRat {
    fn param(p: &ParamMatrix) -> &Mat<GaussRat> {
        p.exact()
    }
}

/// Residual vector and Jacobian at a point.
pub struct EvalReport<T> {
    pub residual: Vec<T>,
    pub jacobian: Mat<T>,
}

fn instantiate_groups<T: SystemScalar>(sys: &SquareSystem, point: &[T]) -> Result<Vec<Mat<T>>> {
    if point.len() != sys.total_variables {
        return Err(Error::LengthMismatch { got: point.len(), expected: sys.total_variables });
    }
    sys.var_groups
        .iter()
        .enumerate()
        .map(|(g, grp)| grp.pattern.instantiate(sys.group_values(point, g)))
        .collect()
}

/// The n x n matrix of a determinant equation: rows of (M L) stacked over psi.
fn det_stack<T: SystemScalar>(
    a: &Mat<T>,
    det: &crate::systems::DetEquation,
) -> Mat<T> {
    a.top_rows(det.rows_used).vstack(T::param(&det.psi))
}

pub fn evaluate<T: SystemScalar>(sys: &SquareSystem, point: &[T]) -> Result<Vec<T>> {
    let inst = instantiate_groups(sys, point)?;
    let left = T::param(&sys.left);
    let a = inst[0].mul(left);
    let mut residual = vec![T::zero(); sys.total_equations];
    for block in &sys.blocks {
        let w = T::param(&block.right).mul(&inst[block.dual_group]);
        let prod = a.mul(&w);
        for (idx, &(r, c)) in block.eq_indices.iter().enumerate() {
            residual[block.eq_offset + idx] = prod[(r, c)].clone();
        }
    }
    for det in &sys.dets {
        residual[det.eq_offset] = det_stack(&a, det).det();
    }
    Ok(residual)
}

pub fn jacobian<T: SystemScalar>(sys: &SquareSystem, point: &[T]) -> Result<Mat<T>> {
    let inst = instantiate_groups(sys, point)?;
    let left = T::param(&sys.left);
    let a = inst[0].mul(left);
    let primal = &sys.var_groups[0];
    let mut jac = Mat::<T>::zeros(sys.total_equations, sys.total_variables);

    for block in &sys.blocks {
        let right = T::param(&block.right);
        let w = right.mul(&inst[block.dual_group]);
        // d/d(M var at (i,c)) of eq (i,j): (L W)[c, j]
        let lw = left.mul(&w);
        // d/d(N var at (r,j)) of eq (i,j): (A R)[i, r]
        let ar = a.mul(right);
        let dual = &sys.var_groups[block.dual_group];
        for (idx, &(r, c)) in block.eq_indices.iter().enumerate() {
            let eq = block.eq_offset + idx;
            for k in 0..primal.pattern.var_count() {
                let (vr, vc) = primal.pattern.var_position(k);
                if vr == r {
                    jac[(eq, primal.offset + k)] = lw[(vc, c)].clone();
                }
            }
            for k in 0..dual.pattern.var_count() {
                let (ur, uc) = dual.pattern.var_position(k);
                if uc == c {
                    jac[(eq, dual.offset + k)] = ar[(r, ur)].clone();
                }
            }
        }
    }

    for det in &sys.dets {
        let s = det_stack(&a, det);
        let n = s.rows;
        // cofactors of the variable-bearing rows
        for k in 0..primal.pattern.var_count() {
            let (vr, vc) = primal.pattern.var_position(k);
            if vr >= det.rows_used {
                continue;
            }
            // d det / d v = sum_q L[vc, q] * cofactor(vr, q)
            let mut acc = T::zero();
            for q in 0..n {
                let lcq = left[(vc, q)].clone();
                if lcq.is_zero() {
                    continue;
                }
                let minor = delete_row_col(&s, vr, q).det();
                let signed = if (vr + q) % 2 == 0 { minor } else { -minor };
                acc = acc + lcq * signed;
            }
            jac[(det.eq_offset, primal.offset + k)] = acc;
        }
    }
    Ok(jac)
}

fn delete_row_col<T: Scalar>(m: &Mat<T>, row: usize, col: usize) -> Mat<T> {
    Mat::from_fn(m.rows - 1, m.cols - 1, |r, c| {
        let rr = if r < row { r } else { r + 1 };
        let cc = if c < col { c } else { c + 1 };
        m[(rr, cc)].clone()
    })
}

pub fn eval_report<T: SystemScalar>(sys: &SquareSystem, point: &[T]) -> Result<EvalReport<T>> {
    Ok(EvalReport { residual: evaluate(sys, point)?, jacobian: jacobian(sys, point)? })
}

/// Exact square of the constant bound ||D^2 G / 2|| for a purely bilinear
/// system: (1/4) sum over equations of the squared Frobenius norm of the
/// equation's cross-coefficient matrix. Errors with `NotBilinear` if any
/// determinant equation has size above two.
pub fn d2_norm_bound_sq(sys: &SquareSystem) -> Result<BigRational> {
    use num_traits::Zero;
    for det in &sys.dets {
        let size = det.rows_used + det.psi.exact().rows;
        if size > 2 {
            return Err(Error::NotBilinear { size });
        }
    }
    let mut total = BigRational::zero();
    let left = sys.left.exact();
    let primal = &sys.var_groups[0].pattern;
    for block in &sys.blocks {
        let lr = left.mul(block.right.exact());
        let dual = &sys.var_groups[block.dual_group].pattern;
        for &(r, c) in &block.eq_indices {
            for k in 0..primal.var_count() {
                let (vr, vc) = primal.var_position(k);
                if vr != r {
                    continue;
                }
                for u in 0..dual.var_count() {
                    let (ur, uc) = dual.var_position(u);
                    if uc != c {
                        continue;
                    }
                    total += lr[(vc, ur)].norm_sqr();
                }
            }
        }
    }
    for det in &sys.dets {
        // size <= 2; only a full 2x2 of variable rows is quadratic
        if det.rows_used == 2 && det.psi.exact().rows == 0 {
            for k in 0..primal.var_count() {
                let (vr, vc) = primal.var_position(k);
                if vr != 0 {
                    continue;
                }
                for u in 0..primal.var_count() {
                    let (ur2, uc2) = primal.var_position(u);
                    if ur2 != 1 {
                        continue;
                    }
                    // d^2 det / dv du = L[vc,0] L[uc2,1] - L[vc,1] L[uc2,0]
                    let h = left[(vc, 0)].clone() * left[(uc2, 1)].clone()
                        - left[(vc, 1)].clone() * left[(uc2, 0)].clone();
                    total += h.norm_sqr();
                }
            }
        }
    }
    Ok(total / BigRational::from_integer(BigInt::from(4)))
}

/// Float form of the second-derivative bound.
pub fn d2_norm_bound(sys: &SquareSystem) -> Result<f64> {
    use num_traits::ToPrimitive;
    let sq = d2_norm_bound_sq(sys)?;
    Ok(sq.to_f64().unwrap_or(f64::NAN).sqrt())
}
