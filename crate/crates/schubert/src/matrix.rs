//! Dense matrices generic over the two scalar fields used throughout:
//! `Complex64` for numerics and [`GaussRat`] for certification. Pivoted
//! fraction Gaussian elimination covers solve/det/inverse/nullspace in both
//! fields; exact rank uses Bareiss fraction-free elimination over Gaussian
//! integers, float rank uses singular values.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::GaussRat;

/// Scalar operations shared by `Complex64` and `GaussRat`.
pub trait Scalar:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn conjugate(&self) -> Self;
    /// Approximate |x|^2, used only to pick pivots.
    fn pivot_weight(&self) -> f64;
    fn from_int(v: i64) -> Self;
}

impl Scalar for Complex64 {
    fn conjugate(&self) -> Self {
        self.conj()
    }
    fn pivot_weight(&self) -> f64 {
        self.norm_sqr()
    }
    fn from_int(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
}

impl Scalar for GaussRat {
    fn conjugate(&self) -> Self {
        self.conj()
    }
    fn pivot_weight(&self) -> f64 {
        use crate::exact::rat_to_f64;
        rat_to_f64(&self.norm_sqr())
    }
    fn from_int(v: i64) -> Self {
        GaussRat::from_int(v)
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat<T> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Mat::<T>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a.clone() * other[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + t;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conjugate())
    }

    pub fn sub(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() - other[(r, c)].clone()
        })
    }

    /// First `k` rows.
    pub fn top_rows(&self, k: usize) -> Mat<T> {
        assert!(k <= self.rows);
        Mat { rows: k, cols: self.cols, data: self.data[..k * self.cols].to_vec() }
    }

    pub fn vstack(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Columns selected by `idx` (0-based), in order.
    pub fn select_cols(&self, idx: &[usize]) -> Mat<T> {
        Mat::from_fn(self.rows, idx.len(), |r, c| self[(r, idx[c])].clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat<T> {
        Mat::from_fn(idx.len(), self.cols, |r, c| self[(idx[r], c)].clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn frobenius_sq(&self) -> T
    where
        T: Scalar,
    {
        let mut acc = T::zero();
        for v in &self.data {
            acc = acc + v.clone() * v.conjugate();
        }
        acc
    }

    /// Solve A X = B by partially pivoted Gaussian elimination.
    pub fn solve(&self, rhs: &Mat<T>) -> Result<Mat<T>> {
        assert_eq!(self.rows, self.cols, "solve needs a square matrix");
        assert_eq!(self.rows, rhs.rows);
        let n = self.rows;
        let mut a = self.clone();
        let mut b = rhs.clone();
        for k in 0..n {
            let piv = pick_pivot(&a, k)?;
            if piv != k {
                swap_rows(&mut a, k, piv);
                swap_rows(&mut b, k, piv);
            }
            let d = a[(k, k)].clone();
            for i in (k + 1)..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let f = a[(i, k)].clone() / d.clone();
                for j in k..n {
                    let t = f.clone() * a[(k, j)].clone();
                    a[(i, j)] = a[(i, j)].clone() - t;
                }
                for j in 0..b.cols {
                    let t = f.clone() * b[(k, j)].clone();
                    b[(i, j)] = b[(i, j)].clone() - t;
                }
            }
        }
        // back substitution
        let mut x = Mat::<T>::zeros(n, b.cols);
        for j in 0..b.cols {
            for i in (0..n).rev() {
                let mut acc = b[(i, j)].clone();
                for k in (i + 1)..n {
                    let t = a[(i, k)].clone() * x[(k, j)].clone();
                    acc = acc - t;
                }
                x[(i, j)] = acc / a[(i, i)].clone();
            }
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Mat<T>> {
        self.solve(&Mat::identity(self.rows))
    }

    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for k in 0..n {
            let piv = match pick_pivot(&a, k) {
                Ok(p) => p,
                Err(_) => return T::zero(),
            };
            if piv != k {
                swap_rows(&mut a, k, piv);
                det = -det;
            }
            let d = a[(k, k)].clone();
            det = det * d.clone();
            for i in (k + 1)..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let f = a[(i, k)].clone() / d.clone();
                for j in k..n {
                    let t = f.clone() * a[(k, j)].clone();
                    a[(i, j)] = a[(i, j)].clone() - t;
                }
            }
        }
        det
    }

    /// Basis of the right nullspace {x : A x = 0}.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (m, n) = (self.rows, self.cols);
        let mut a = self.clone();
        let mut pivots: Vec<usize> = Vec::new();
        let mut r = 0;
        for c in 0..n {
            // find pivot in column c at or below row r
            let mut best: Option<(usize, f64)> = None;
            for i in r..m {
                if !a[(i, c)].is_zero() {
                    let w = a[(i, c)].pivot_weight();
                    if best.map_or(true, |(_, bw)| w > bw) {
                        best = Some((i, w));
                    }
                }
            }
            let Some((pi, _)) = best else { continue };
            if pi != r {
                swap_rows(&mut a, r, pi);
            }
            let d = a[(r, c)].clone();
            for j in c..n {
                a[(r, j)] = a[(r, j)].clone() / d.clone();
            }
            for i in 0..m {
                if i != r && !a[(i, c)].is_zero() {
                    let f = a[(i, c)].clone();
                    for j in c..n {
                        let t = f.clone() * a[(r, j)].clone();
                        a[(i, j)] = a[(i, j)].clone() - t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m {
                break;
            }
        }
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..n {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![T::zero(); n];
            v[free] = T::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }
}

fn pick_pivot<T: Scalar>(a: &Mat<T>, k: usize) -> Result<usize> {
    let n = a.rows;
    let mut best: Option<(usize, f64)> = None;
    for i in k..n {
        if !a[(i, k)].is_zero() {
            let w = a[(i, k)].pivot_weight();
            if best.map_or(true, |(_, bw)| w > bw) {
                best = Some((i, w));
            }
        }
    }
    best.map(|(i, _)| i).ok_or(Error::SingularJacobian)
}

fn swap_rows<T>(a: &mut Mat<T>, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..a.cols {
        a.data.swap(i * a.cols + c, j * a.cols + c);
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

pub fn to_c64(m: &Mat<GaussRat>) -> Mat<Complex64> {
    m.map(|g| g.to_c64())
}

/// Gaussian integer used by Bareiss elimination.
#[derive(Clone, PartialEq, Debug)]
struct GInt {
    re: BigInt,
    im: BigInt,
}

impl GInt {
    fn zero() -> Self {
        GInt { re: BigInt::zero(), im: BigInt::zero() }
    }
    fn one() -> Self {
        GInt { re: BigInt::one(), im: BigInt::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn mul(&self, o: &GInt) -> GInt {
        GInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn sub(&self, o: &GInt) -> GInt {
        GInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    /// Exact division (caller guarantees divisibility, as Bareiss does).
    fn div_exact(&self, o: &GInt) -> GInt {
        let d = &o.re * &o.re + &o.im * &o.im;
        let num = self.mul(&GInt { re: o.re.clone(), im: -o.im.clone() });
        debug_assert!((&num.re % &d).is_zero() && (&num.im % &d).is_zero());
        GInt { re: num.re / &d, im: num.im / d }
    }
}

/// Exact rank by Bareiss fraction-free elimination. Rows are scaled by their
/// common denominator first (rank is unchanged).
pub fn rank_exact(m: &Mat<GaussRat>) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<GInt>> = (0..rows)
        .map(|i| {
            let mut lcm = BigInt::one();
            for j in 0..cols {
                let g = &m[(i, j)];
                lcm = lcm.lcm(g.re.denom());
                lcm = lcm.lcm(g.im.denom());
            }
            (0..cols)
                .map(|j| {
                    let g = &m[(i, j)];
                    GInt {
                        re: g.re.numer() * (&lcm / g.re.denom()),
                        im: g.im.numer() * (&lcm / g.im.denom()),
                    }
                })
                .collect()
        })
        .collect();

    let mut rank = 0;
    let mut prev = GInt::one();
    let mut row = 0;
    for col in 0..cols {
        // find a nonzero pivot in this column
        let Some(p) = (row..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        for i in (row + 1)..rows {
            for j in (col + 1)..cols {
                let t = a[row][col].mul(&a[i][j]).sub(&a[i][col].mul(&a[row][j]));
                a[i][j] = t.div_exact(&prev);
            }
            a[i][col] = GInt::zero();
        }
        prev = a[row][col].clone();
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Float rank: singular values above `tol_rel` times the largest.
pub fn rank_c64(m: &Mat<Complex64>, tol_rel: f64) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    let dm = nalgebra::DMatrix::from_fn(m.rows, m.cols, |r, c| m[(r, c)]);
    let sv = dm.singular_values();
    let max = sv.iter().cloned().fold(0.0_f64, f64::max);
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > tol_rel * max).count()
}

pub fn max_abs(m: &Mat<Complex64>) -> f64 {
    let mut best = 0.0;
    for r in 0..m.rows {
        for c in 0..m.cols {
            best = f64::max(best, m[(r, c)].norm());
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn gr(v: i64) -> GaussRat {
        GaussRat::from_int(v)
    }

    #[test]
    fn solve_and_inverse_float() {
        let a = Mat::from_rows(vec![
            vec![Complex64::new(2.0, 0.0), Complex64::new(1.0, 1.0)],
            vec![Complex64::new(0.0, -1.0), Complex64::new(3.0, 0.0)],
        ]);
        let inv = a.inverse().unwrap();
        let prod = a.mul(&inv);
        for i in 0..2 {
            for j in 0..2 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((prod[(i, j)] - Complex64::new(want, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn exact_inverse_round_trips() {
        let a = Mat::from_rows(vec![
            vec![gr(2), gr(1), gr(0)],
            vec![gr(1), gr(-1), gr(3)],
            vec![gr(0), gr(5), gr(1)],
        ]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(3));
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let a = Mat::from_rows(vec![
            vec![gr(1), gr(2), gr(3)],
            vec![gr(0), gr(4), gr(5)],
            vec![gr(1), gr(0), gr(6)],
        ]);
        // 1*(24) - 2*(0-5) + 3*(0-4) = 24 + 10 - 12 = 22
        assert_eq!(a.det(), gr(22));
        let singular = Mat::from_rows(vec![vec![gr(1), gr(2)], vec![gr(2), gr(4)]]);
        assert!(singular.det().is_zero());
    }

    #[test]
    fn bareiss_rank_exact_and_float_agree() {
        let a = Mat::from_rows(vec![
            vec![gr(1), gr(2), gr(3), gr(1)],
            vec![gr(2), gr(4), gr(6), gr(2)],
            vec![gr(0), gr(1), gr(-1), gr(7)],
        ]);
        assert_eq!(rank_exact(&a), 2);
        assert_eq!(rank_c64(&to_c64(&a), 1e-8), 2);
        // Hilbert matrix: rational entries, full rank
        let b = Mat::from_fn(3, 3, |r, c| {
            GaussRat::new(
                BigRational::new(BigInt::from(1), BigInt::from((r + c + 1) as i64)),
                BigRational::zero(),
            )
        });
        assert_eq!(rank_exact(&b), 3);
        // scalar multiples of one row collapse to rank 1
        let c = Mat::from_fn(3, 3, |r, c| {
            GaussRat::new(
                BigRational::new(BigInt::from((r + 1) as i64), BigInt::from((c + 2) as i64)),
                BigRational::zero(),
            )
        });
        assert_eq!(rank_exact(&c), 1);
    }

    #[test]
    fn nullspace_of_rank_deficient() {
        let a = Mat::from_rows(vec![
            vec![gr(1), gr(2), gr(3)],
            vec![gr(2), gr(4), gr(6)],
        ]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let x = Mat::from_rows(vec![v.clone()]).transpose();
            let prod = a.mul(&x);
            assert!(prod[(0, 0)].is_zero() && prod[(1, 0)].is_zero());
        }
    }
}
