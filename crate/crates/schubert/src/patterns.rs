//! Coordinate patterns: symbolic matrix templates whose entries are zeros,
//! ones, or indexed variables. The echelon families parametrize Schubert
//! cells by row span; their transposed duals parametrize the annihilator
//! cells by column span. Instantiation substitutes scalar values for the
//! variables.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;

use crate::combinatorics::{FlagPermutation, SchubertCondition};
use crate::error::{Error, Result};
use crate::exact::GaussRat;
use crate::matrix::{rank_exact, to_c64, Mat, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PatternEntry {
    Zero,
    One,
    Var(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    /// The pattern's rows span the subspace.
    RowSpan,
    /// The pattern's columns span a subspace of the dual.
    ColSpan,
}

/// Which family (and parameters) produced a pattern.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum PatternKind {
    /// Echelon matrices with pivots alpha.
    MAlpha(SchubertCondition),
    /// Opposite-flag echelon: leading ones at n+1-beta_(l+1-j).
    MUpper(SchubertCondition),
    /// Two-sided echelon for a pair of conditions on opposite flags.
    MBi(SchubertCondition, SchubertCondition),
    /// Partial echelon for a flag permutation.
    MW(FlagPermutation),
    /// Dual of MAlpha: transpose of MUpper(alpha^perp).
    NAlpha(SchubertCondition),
    /// Dual pair family: transpose of MBi(beta^perp, alpha^perp).
    NBi(SchubertCondition, SchubertCondition),
    /// Flag dual: column-reversed transpose of MW(w0 w w0).
    NW(FlagPermutation),
}

#[derive(Clone, PartialEq, Debug)]
pub struct CoordinatePattern {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<PatternEntry>,
    pub kind: PatternKind,
    pub orientation: Orientation,
    var_count: usize,
    /// Variable index -> (row, col).
    var_positions: Vec<(usize, usize)>,
}

impl CoordinatePattern {
    fn from_grid(
        rows: usize,
        cols: usize,
        entries: Vec<PatternEntry>,
        kind: PatternKind,
        orientation: Orientation,
    ) -> Self {
        let mut var_positions = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if let PatternEntry::Var(k) = entries[r * cols + c] {
                    if k >= var_positions.len() {
                        var_positions.resize(k + 1, (0, 0));
                    }
                    var_positions[k] = (r, c);
                }
            }
        }
        CoordinatePattern {
            rows,
            cols,
            var_count: var_positions.len(),
            entries,
            kind,
            orientation,
            var_positions,
        }
    }

    pub fn entry(&self, r: usize, c: usize) -> PatternEntry {
        self.entries[r * self.cols + c]
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn var_position(&self, k: usize) -> (usize, usize) {
        self.var_positions[k]
    }

    /// Rows (of the stored grid) that carry at least one variable.
    pub fn row_has_var(&self, r: usize) -> bool {
        (0..self.cols).any(|c| matches!(self.entry(r, c), PatternEntry::Var(_)))
    }

    /// Substitute values for variables.
    pub fn instantiate<T: Scalar>(&self, values: &[T]) -> Result<Mat<T>> {
        if values.len() != self.var_count {
            return Err(Error::LengthMismatch { got: values.len(), expected: self.var_count });
        }
        Ok(Mat::from_fn(self.rows, self.cols, |r, c| match self.entry(r, c) {
            PatternEntry::Zero => T::zero(),
            PatternEntry::One => T::one(),
            PatternEntry::Var(k) => values[k].clone(),
        }))
    }

    /// The 0/1 skeleton (all variables set to zero).
    pub fn skeleton<T: Scalar>(&self) -> Mat<T> {
        self.instantiate(&vec![T::zero(); self.var_count]).unwrap()
    }

    /// Grid as strings of '0', '1', '*' for tests and reports.
    pub fn render(&self) -> Vec<String> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| match self.entry(r, c) {
                        PatternEntry::Zero => '0',
                        PatternEntry::One => '1',
                        PatternEntry::Var(_) => '*',
                    })
                    .collect()
            })
            .collect()
    }

    fn rotate180(&self, kind: PatternKind) -> CoordinatePattern {
        let (rows, cols) = (self.rows, self.cols);
        let mut entries = vec![PatternEntry::Zero; rows * cols];
        for r in 0..rows {
            for c in 0..cols {
                entries[(rows - 1 - r) * cols + (cols - 1 - c)] = self.entry(r, c);
            }
        }
        CoordinatePattern::from_grid(rows, cols, reindex(entries), kind, self.orientation)
    }

    fn transpose(&self, kind: PatternKind, orientation: Orientation) -> CoordinatePattern {
        let mut entries = vec![PatternEntry::Zero; self.rows * self.cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                entries[c * self.rows + r] = self.entry(r, c);
            }
        }
        CoordinatePattern::from_grid(self.cols, self.rows, reindex(entries), kind, orientation)
    }

    fn reverse_cols(&self) -> CoordinatePattern {
        let mut entries = vec![PatternEntry::Zero; self.rows * self.cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                entries[r * self.cols + (self.cols - 1 - c)] = self.entry(r, c);
            }
        }
        CoordinatePattern::from_grid(
            self.rows,
            self.cols,
            reindex(entries),
            self.kind.clone(),
            self.orientation,
        )
    }
}

/// Re-number variables densely in row-major order of the given grid.
fn reindex(mut entries: Vec<PatternEntry>) -> Vec<PatternEntry> {
    let mut next = 0;
    for e in entries.iter_mut() {
        if matches!(e, PatternEntry::Var(_)) {
            *e = PatternEntry::Var(next);
            next += 1;
        }
    }
    entries
}

fn cache() -> &'static Mutex<HashMap<PatternKind, Arc<CoordinatePattern>>> {
    static CACHE: OnceLock<Mutex<HashMap<PatternKind, Arc<CoordinatePattern>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(kind: PatternKind, make: impl FnOnce() -> Result<CoordinatePattern>) -> Result<Arc<CoordinatePattern>> {
    if let Some(hit) = cache().lock().unwrap().get(&kind) {
        return Ok(hit.clone());
    }
    let made = Arc::new(make()?);
    cache().lock().unwrap().insert(kind, made.clone());
    Ok(made)
}

/// Echelon matrices with pivots alpha: row i has its pivot 1 in column
/// alpha_i, zeros to the right of the pivot and in the other pivot columns.
/// Free entries number dim(alpha).
pub fn m_alpha(alpha: &SchubertCondition) -> Arc<CoordinatePattern> {
    cached(PatternKind::MAlpha(alpha.clone()), || {
        let (ell, n) = (alpha.ell(), alpha.n());
        let piv = alpha.entries();
        let mut entries = Vec::with_capacity(ell * n);
        let mut next = 0;
        for i in 0..ell {
            for j in 1..=n {
                let e = if j == piv[i] {
                    PatternEntry::One
                } else if j > piv[i] || piv.contains(&j) {
                    PatternEntry::Zero
                } else {
                    let v = PatternEntry::Var(next);
                    next += 1;
                    v
                };
                entries.push(e);
            }
        }
        Ok(CoordinatePattern::from_grid(
            ell,
            n,
            entries,
            PatternKind::MAlpha(alpha.clone()),
            Orientation::RowSpan,
        ))
    })
    .unwrap()
}

/// Opposite-flag echelon: the 180-degree rotation of `m_alpha(beta)`. Row j
/// has its leading 1 in column n+1-beta_(l+1-j), the only nonzero of that
/// column.
pub fn m_upper(beta: &SchubertCondition) -> Arc<CoordinatePattern> {
    cached(PatternKind::MUpper(beta.clone()), || {
        Ok(m_alpha(beta).rotate180(PatternKind::MUpper(beta.clone())))
    })
    .unwrap()
}

/// Two-sided echelon for conditions on opposite flags: row i has its leading
/// 1 in column n+1-beta_(l+1-i) and support up to column alpha_i, with no
/// clearing above the leading ones. Free entries number
/// l(n-l) - |alpha| - |beta|.
pub fn m_bi(alpha: &SchubertCondition, beta: &SchubertCondition) -> Result<Arc<CoordinatePattern>> {
    cached(PatternKind::MBi(alpha.clone(), beta.clone()), || {
        if alpha.n() != beta.n() || alpha.ell() != beta.ell() {
            return Err(Error::SpaceMismatch);
        }
        let (ell, n) = (alpha.ell(), alpha.n());
        let a = alpha.entries();
        let b = beta.entries();
        let mut entries = Vec::with_capacity(ell * n);
        let mut next = 0;
        for i in 0..ell {
            let lead = n + 1 - b[ell - 1 - i];
            if lead > a[i] {
                return Err(Error::InfeasiblePair { row: i + 1 });
            }
            for j in 1..=n {
                let e = if j == lead {
                    PatternEntry::One
                } else if j < lead || j > a[i] {
                    PatternEntry::Zero
                } else {
                    let v = PatternEntry::Var(next);
                    next += 1;
                    v
                };
                entries.push(e);
            }
        }
        Ok(CoordinatePattern::from_grid(
            ell,
            n,
            entries,
            PatternKind::MBi(alpha.clone(), beta.clone()),
            Orientation::RowSpan,
        ))
    })
}

/// Partial echelon matrices for a flag permutation: a_t x n, with
/// m(i, w(i)) = 1, zeros right of the pivot and below earlier pivots, and
/// length(w) free entries.
pub fn m_w(w: &FlagPermutation) -> Arc<CoordinatePattern> {
    cached(PatternKind::MW(w.clone()), || {
        let n = w.flag_type().n();
        let rows = w.flag_type().largest();
        let line = w.one_line();
        let mut entries = Vec::with_capacity(rows * n);
        let mut next = 0;
        for i in 0..rows {
            for j in 1..=n {
                let e = if j == line[i] {
                    PatternEntry::One
                } else if j > line[i] || line[..i].contains(&j) {
                    PatternEntry::Zero
                } else {
                    let v = PatternEntry::Var(next);
                    next += 1;
                    v
                };
                entries.push(e);
            }
        }
        Ok(CoordinatePattern::from_grid(
            rows,
            n,
            entries,
            PatternKind::MW(w.clone()),
            Orientation::RowSpan,
        ))
    })
    .unwrap()
}

/// Dual pattern of `m_alpha(alpha)`: the n x (n-l) transposes of
/// `m_upper(alpha^perp)`, spanning the annihilator cell by columns.
pub fn n_alpha(alpha: &SchubertCondition) -> Arc<CoordinatePattern> {
    cached(PatternKind::NAlpha(alpha.clone()), || {
        Ok(m_upper(&alpha.dual())
            .transpose(PatternKind::NAlpha(alpha.clone()), Orientation::ColSpan))
    })
    .unwrap()
}

/// Dual pattern for a pair of conditions on opposite flags: transposes of
/// `m_bi(beta^perp, alpha^perp)`.
pub fn n_bi(alpha: &SchubertCondition, beta: &SchubertCondition) -> Result<Arc<CoordinatePattern>> {
    cached(PatternKind::NBi(alpha.clone(), beta.clone()), || {
        let src = m_bi(&beta.dual(), &alpha.dual())?;
        Ok(src.transpose(PatternKind::NBi(alpha.clone(), beta.clone()), Orientation::ColSpan))
    })
}

/// Flag dual pattern: column-reverse `m_w(w0 w w0)` and transpose, giving an
/// n x (n - a_1) column-span pattern with length(w) variables.
pub fn n_w(w: &FlagPermutation) -> Arc<CoordinatePattern> {
    cached(PatternKind::NW(w.clone()), || {
        let conj = w.conjugate_w0();
        Ok(m_w(&conj)
            .reverse_cols()
            .transpose(PatternKind::NW(w.clone()), Orientation::ColSpan))
    })
    .unwrap()
}

/// A full-rank n x n matrix representing a complete flag by row spans,
/// kept in exact and floating forms with cached inverses.
#[derive(Debug)]
pub struct FlagMatrix {
    exact: Mat<GaussRat>,
    float: Mat<Complex64>,
    float_inv: Mat<Complex64>,
    exact_inv: OnceLock<Mat<GaussRat>>,
    real: bool,
}

impl Clone for FlagMatrix {
    fn clone(&self) -> Self {
        FlagMatrix {
            exact: self.exact.clone(),
            float: self.float.clone(),
            float_inv: self.float_inv.clone(),
            exact_inv: match self.exact_inv.get() {
                Some(v) => OnceLock::from(v.clone()),
                None => OnceLock::new(),
            },
            real: self.real,
        }
    }
}

impl FlagMatrix {
    pub fn new(exact: Mat<GaussRat>) -> Result<Self> {
        if exact.rows != exact.cols {
            return Err(Error::ShapeMismatch("flag matrix must be square".into()));
        }
        if rank_exact(&exact) != exact.rows {
            return Err(Error::SingularFlag);
        }
        let float = to_c64(&exact);
        let float_inv = float.inverse().map_err(|_| Error::SingularFlag)?;
        let real = (0..exact.rows)
            .all(|r| (0..exact.cols).all(|c| exact[(r, c)].is_real()));
        Ok(FlagMatrix { exact, float, float_inv, exact_inv: OnceLock::new(), real })
    }

    pub fn n(&self) -> usize {
        self.exact.rows
    }

    pub fn is_real(&self) -> bool {
        self.real
    }

    pub fn exact(&self) -> &Mat<GaussRat> {
        &self.exact
    }

    pub fn float(&self) -> &Mat<Complex64> {
        &self.float
    }

    pub fn float_inverse(&self) -> &Mat<Complex64> {
        &self.float_inv
    }

    /// Exact inverse, computed on first use.
    pub fn exact_inverse(&self) -> &Mat<GaussRat> {
        self.exact_inv.get_or_init(|| {
            self.exact.inverse().expect("flag matrix verified nonsingular")
        })
    }

    /// The matrix with rows reversed; its row spans give the opposite flag.
    pub fn reversed_rows(&self) -> Result<FlagMatrix> {
        let n = self.n();
        let exact = Mat::from_fn(n, n, |r, c| self.exact[(n - 1 - r, c)].clone());
        FlagMatrix::new(exact)
    }

    /// Whether `other` is exactly the row reversal of `self`.
    pub fn is_row_reversal_of(&self, other: &FlagMatrix) -> bool {
        let n = self.n();
        if other.n() != n {
            return false;
        }
        (0..n).all(|r| (0..n).all(|c| self.exact[(r, c)] == other.exact[(n - 1 - r, c)]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::conditions;
    use crate::exact::GaussRat;
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};

    fn cond(n: usize, e: &[usize]) -> SchubertCondition {
        SchubertCondition::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn echelon_patterns_match_displayed_templates() {
        let p = m_alpha(&cond(8, &[4, 8]));
        assert_eq!(p.render(), vec!["***10000", "***0***1"]);
        assert_eq!(p.var_count(), 9);
        assert_eq!(p.var_count(), cond(8, &[4, 8]).dim());

        let q = m_alpha(&cond(7, &[2, 4, 5, 7]));
        assert_eq!(q.render(), vec!["*100000", "*0*1000", "*0*0100", "*0*00*1"]);
        assert_eq!(q.var_count(), 8);

        // dense cell: (X : I_l)
        let d = m_alpha(&SchubertCondition::dense(8, 2));
        assert_eq!(d.render(), vec!["******10", "******01"]);
        assert_eq!(d.var_count(), 12);
    }

    #[test]
    fn opposite_echelon_matches_displayed_template() {
        let p = m_upper(&cond(9, &[3, 7, 9]));
        assert_eq!(
            p.render(),
            vec!["1*0***0**", "001***0**", "0000001**"]
        );
        assert_eq!(p.var_count(), 13);
        assert_eq!(p.var_count(), cond(9, &[3, 7, 9]).dim());

        // reversed identity block for the point condition
        let q = m_upper(&cond(5, &[1, 2]));
        assert_eq!(q.var_count(), 0);
        assert_eq!(q.render(), vec!["00010", "00001"]);
    }

    #[test]
    fn rotation_sends_opposite_echelon_back_to_echelon() {
        for n in 2..=8 {
            for ell in 1..n {
                for beta in conditions(n, ell) {
                    let up = m_upper(&beta);
                    let rot = up.rotate180(up.kind.clone());
                    assert_eq!(rot.render(), m_alpha(&beta).render(), "beta = {beta:?}");
                    assert_eq!(up.var_count(), beta.dim());
                }
            }
        }
    }

    #[test]
    fn two_sided_echelon_matches_displayed_template() {
        let p = m_bi(&cond(11, &[6, 8, 10, 11]), &cond(11, &[5, 7, 8, 11])).unwrap();
        assert_eq!(
            p.render(),
            vec![
                "1*****00000",
                "0001****000",
                "00001*****0",
                "0000001****",
            ]
        );
        assert_eq!(p.var_count(), 18);

        // dense/dense: staircase with l(n-l) variables
        let tau = SchubertCondition::dense(6, 2);
        let full = m_bi(&tau, &tau).unwrap();
        assert_eq!(full.render(), vec!["1****0", "01****"]);
        assert_eq!(full.var_count(), 8);

        let q = m_bi(&cond(8, &[4, 8]), &cond(8, &[4, 8])).unwrap();
        assert_eq!(q.var_count(), 6);

        // infeasible pair
        let pt = cond(6, &[1, 2]);
        assert!(matches!(m_bi(&pt, &pt), Err(Error::InfeasiblePair { .. })));
    }

    #[test]
    fn partial_echelon_matches_displayed_templates() {
        use crate::combinatorics::FlagType;
        let ft = FlagType::new(6, vec![2, 4]).unwrap();
        let w = FlagPermutation::new(ft, vec![4, 6, 3, 5, 1, 2]).unwrap();
        let p = m_w(&w);
        assert_eq!(p.render(), vec!["***100", "***0*1", "**1000", "**0010"]);
        assert_eq!(p.var_count(), w.length());

        let ft = FlagType::new(7, vec![2, 5]).unwrap();
        let w = FlagPermutation::new(ft, vec![3, 6, 2, 5, 7, 1, 4]).unwrap();
        let p = m_w(&w);
        assert_eq!(
            p.render(),
            vec!["**10000", "**0**10", "*100000", "*00*100", "*00*001"]
        );
        assert_eq!(p.var_count(), w.length());
    }

    #[test]
    fn dual_pattern_matches_displayed_template() {
        // transposed opposite echelon for (2,4,5,7)^perp = (2,5,7) on Gr(4,7)
        let p = n_alpha(&cond(7, &[2, 4, 5, 7]));
        assert_eq!(p.orientation, Orientation::ColSpan);
        assert_eq!(
            p.render(),
            vec!["100", "*00", "010", "**0", "**0", "001", "***"]
        );
        assert_eq!(p.var_count(), 8);

        // the point condition dualizes to the zero-variable complement block
        let d = n_alpha(&cond(5, &[1, 2]));
        assert_eq!(d.var_count(), 0);
        // while the dense condition keeps a full-dimensional dual cell
        assert_eq!(n_alpha(&SchubertCondition::dense(5, 2)).var_count(), 6);

        let q = n_bi(&cond(8, &[4, 8]), &cond(8, &[4, 8])).unwrap();
        assert_eq!(q.var_count(), 6);
        assert_eq!((q.rows, q.cols), (8, 6));
    }

    #[test]
    fn variable_count_formulas_exhaustive() {
        for n in 2..=8 {
            for ell in 1..n {
                let nu = ell * (n - ell);
                for alpha in conditions(n, ell) {
                    assert_eq!(m_alpha(&alpha).var_count(), alpha.dim());
                    assert_eq!(n_alpha(&alpha).var_count(), nu - alpha.codim());
                    for beta in conditions(n, ell) {
                        if alpha.pair_feasible(&beta).unwrap() {
                            let p = m_bi(&alpha, &beta).unwrap();
                            assert_eq!(p.var_count(), nu - alpha.codim() - beta.codim());
                            let d = n_bi(&alpha, &beta).unwrap();
                            assert_eq!(d.var_count(), nu - alpha.codim() - beta.codim());
                        } else {
                            assert!(m_bi(&alpha, &beta).is_err());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn flag_pattern_variable_counts_exhaustive() {
        use crate::combinatorics::{descent_permutations, FlagType};
        for n in 3..=6 {
            for mask in 1u32..(1 << (n - 1)) {
                let a_seq: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let ft = FlagType::new(n, a_seq).unwrap();
                for w in descent_permutations(&ft) {
                    assert_eq!(m_w(&w).var_count(), w.length());
                    assert_eq!(n_w(&w).var_count(), w.length());
                    assert_eq!(n_w(&w).rows, n);
                    assert_eq!(n_w(&w).cols, n - ft.smallest());
                }
            }
        }
    }

    #[test]
    fn instantiation_is_full_rank() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let alpha = cond(7, &[2, 4, 5, 7]);
        let p = m_alpha(&alpha);
        for _ in 0..100 {
            let vals: Vec<Complex64> = (0..p.var_count())
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let m = p.instantiate(&vals).unwrap();
            assert_eq!(crate::matrix::rank_c64(&m, 1e-10), 4);
        }
        // zero instantiation gives the skeleton
        let skel: Mat<Complex64> = p.skeleton();
        assert_eq!(crate::matrix::rank_c64(&skel, 1e-10), 4);
        assert!(p.instantiate(&vec![Complex64::new(0.0, 0.0); 3]).is_err());
    }

    /// Every entry of the symbolic product of a primal pattern and its dual
    /// is either identically zero or a sum of exactly one primal and one dual
    /// variable (coefficient one, no constant, no bilinear term).
    #[test]
    fn primal_dual_product_is_linear() {
        for n in 2..=8 {
            for ell in 1..n {
                for alpha in conditions(n, ell) {
                    let m = m_alpha(&alpha);
                    let nn = n_alpha(&alpha);
                    for i in 0..m.rows {
                        for j in 0..nn.cols {
                            let mut constant = 0i64;
                            let mut primal = Vec::new();
                            let mut dual = Vec::new();
                            let mut bilinear = 0;
                            for k in 0..n {
                                match (m.entry(i, k), nn.entry(k, j)) {
                                    (PatternEntry::Zero, _) | (_, PatternEntry::Zero) => {}
                                    (PatternEntry::One, PatternEntry::One) => constant += 1,
                                    (PatternEntry::One, PatternEntry::Var(u)) => dual.push(u),
                                    (PatternEntry::Var(v), PatternEntry::One) => primal.push(v),
                                    (PatternEntry::Var(_), PatternEntry::Var(_)) => bilinear += 1,
                                }
                            }
                            let trivial =
                                constant == 0 && primal.is_empty() && dual.is_empty() && bilinear == 0;
                            let linear_pair = constant == 0
                                && bilinear == 0
                                && primal.len() == 1
                                && dual.len() == 1;
                            assert!(
                                trivial || linear_pair,
                                "entry ({i},{j}) of product for alpha={alpha:?}: c={constant} p={primal:?} d={dual:?} b={bilinear}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn flag_matrix_inverses_and_reversal() {
        let m = Mat::from_rows(vec![
            vec![GaussRat::from_int(2), GaussRat::from_int(1), GaussRat::from_int(0)],
            vec![GaussRat::from_int(1), GaussRat::from_int(3), GaussRat::from_int(1)],
            vec![GaussRat::from_int(0), GaussRat::from_int(1), GaussRat::from_int(1)],
        ]);
        let f = FlagMatrix::new(m).unwrap();
        assert!(f.is_real());
        let prod = f.exact().mul(f.exact_inverse());
        assert_eq!(prod, Mat::identity(3));
        let rev = f.reversed_rows().unwrap();
        assert!(rev.is_row_reversal_of(&f));
        assert!(f.is_row_reversal_of(&rev));

        let sing = Mat::from_rows(vec![
            vec![GaussRat::from_int(1), GaussRat::from_int(2)],
            vec![GaussRat::from_int(2), GaussRat::from_int(4)],
        ]);
        assert!(matches!(FlagMatrix::new(sing), Err(Error::SingularFlag)));
    }
}
