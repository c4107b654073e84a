//! Schubert conditions on Grassmannians, flag types, permutations with
//! restricted descents, and Schubert problems.
//!
//! Conditions are strictly increasing subsets of [n] written 1-based;
//! permutations are stored in one-line notation with 1-based values.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An increasing sequence alpha of length `ell` in [1, n], indexing a Schubert
/// variety of Gr(ell, n).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SchubertCondition {
    n: usize,
    entries: Vec<usize>,
}

impl SchubertCondition {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() || entries.len() >= n {
            return Err(Error::InvalidCondition(format!(
                "length {} not in [1, {}]",
                entries.len(),
                n - 1
            )));
        }
        for w in entries.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidCondition(format!("{entries:?} is not increasing")));
            }
        }
        if entries[0] < 1 || *entries.last().unwrap() > n {
            return Err(Error::InvalidCondition(format!("{entries:?} not inside [1, {n}]")));
        }
        Ok(SchubertCondition { n, entries })
    }

    /// The hypersurface condition (n-l, n-l+2, ..., n), cut out by a single
    /// determinant.
    pub fn hypersurface(n: usize, ell: usize) -> Self {
        let mut entries = vec![n - ell];
        entries.extend((n - ell + 2)..=n);
        SchubertCondition { n, entries }
    }

    /// The dense condition (n-l+1, ..., n) of codimension zero.
    pub fn dense(n: usize, ell: usize) -> Self {
        SchubertCondition { n, entries: ((n - ell + 1)..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Cell dimension: sum of (alpha_i - i).
    pub fn dim(&self) -> usize {
        self.entries.iter().enumerate().map(|(i, &a)| a - (i + 1)).sum()
    }

    /// Codimension l(n-l) - dim.
    pub fn codim(&self) -> usize {
        let ell = self.ell();
        ell * (self.n - ell) - self.dim()
    }

    pub fn is_hypersurface(&self) -> bool {
        self.codim() == 1
    }

    pub fn is_dense(&self) -> bool {
        self.codim() == 0
    }

    /// Coordinatewise comparison; requires the same (n, ell).
    pub fn leq(&self, other: &SchubertCondition) -> Result<bool> {
        if self.n != other.n || self.ell() != other.ell() {
            return Err(Error::SpaceMismatch);
        }
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b))
    }

    /// Number of conditions beta with beta not <= alpha, by enumeration.
    pub fn norm_count(&self) -> usize {
        conditions(self.n, self.ell())
            .filter(|beta| !beta.leq(self).unwrap())
            .count()
    }

    /// The dual condition alpha^perp in C([n], n-l):
    /// j is in alpha^perp iff n+1-j is not in alpha.
    pub fn dual(&self) -> SchubertCondition {
        let n = self.n;
        let entries = (1..=n)
            .filter(|&j| !self.entries.contains(&(n + 1 - j)))
            .collect();
        SchubertCondition { n, entries }
    }

    /// Whether the echelon pattern with trailing supports `self` and leading
    /// ones from `other` is nonempty: alpha_i + beta_(l+1-i) >= n+1 for all i.
    pub fn pair_feasible(&self, other: &SchubertCondition) -> Result<bool> {
        if self.n != other.n || self.ell() != other.ell() {
            return Err(Error::SpaceMismatch);
        }
        let ell = self.ell();
        Ok((0..ell).all(|i| self.entries[i] + other.entries[ell - 1 - i] >= self.n + 1))
    }
}

/// All conditions in C([n], ell), lexicographic.
pub fn conditions(n: usize, ell: usize) -> impl Iterator<Item = SchubertCondition> {
    let mut cur: Vec<usize> = (1..=ell).collect();
    let mut done = ell == 0 || ell > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let item = SchubertCondition { n, entries: cur.clone() };
        // advance to the next increasing sequence
        let mut i = ell;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if cur[i] < n - (ell - 1 - i) {
                cur[i] += 1;
                for j in (i + 1)..ell {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(item)
    })
}

/// A strictly increasing dimension vector 0 < a_1 < ... < a_t < n.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct FlagType {
    n: usize,
    a_seq: Vec<usize>,
}

impl FlagType {
    pub fn new(n: usize, a_seq: Vec<usize>) -> Result<Self> {
        if a_seq.is_empty() {
            return Err(Error::InvalidCondition("empty flag type".into()));
        }
        for w in a_seq.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidCondition(format!("{a_seq:?} is not increasing")));
            }
        }
        if a_seq[0] == 0 || *a_seq.last().unwrap() >= n {
            return Err(Error::InvalidCondition(format!("{a_seq:?} not inside (0, {n})")));
        }
        Ok(FlagType { n, a_seq })
    }

    pub fn grassmannian(n: usize, ell: usize) -> Self {
        FlagType { n, a_seq: vec![ell] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a_seq(&self) -> &[usize] {
        &self.a_seq
    }

    pub fn largest(&self) -> usize {
        *self.a_seq.last().unwrap()
    }

    pub fn smallest(&self) -> usize {
        self.a_seq[0]
    }

    /// Manifold dimension: sum over blocks of (a_i - a_(i-1)) (n - a_i).
    pub fn dim(&self) -> usize {
        let mut prev = 0;
        let mut acc = 0;
        for &a in &self.a_seq {
            acc += (a - prev) * (self.n - a);
            prev = a;
        }
        acc
    }

    /// The reversal n-a_t < ... < n-a_1.
    pub fn reversed(&self) -> FlagType {
        let entries = self.a_seq.iter().rev().map(|&a| self.n - a).collect();
        FlagType { n: self.n, a_seq: entries }
    }

    pub fn contains(&self, other: &FlagType) -> bool {
        self.n == other.n && other.a_seq.iter().all(|a| self.a_seq.contains(a))
    }

    /// Position blocks cut out by the type: (0,a_1], (a_1,a_2], ..., (a_t,n].
    fn blocks(&self) -> Vec<(usize, usize)> {
        let mut bounds = vec![0];
        bounds.extend_from_slice(&self.a_seq);
        bounds.push(self.n);
        bounds.windows(2).map(|w| (w[0], w[1])).collect()
    }
}

/// A permutation of [n] in one-line notation whose descents lie in a flag
/// type, indexing a Schubert variety of the flag manifold.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct FlagPermutation {
    flag_type: FlagType,
    w: Vec<usize>,
}

impl FlagPermutation {
    pub fn new(flag_type: FlagType, w: Vec<usize>) -> Result<Self> {
        let n = flag_type.n();
        if w.len() != n {
            return Err(Error::InvalidPermutation(format!("length {} != {}", w.len(), n)));
        }
        let mut seen = vec![false; n + 1];
        for &v in &w {
            if v < 1 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{w:?} is not a bijection of [1,{n}]")));
            }
            seen[v] = true;
        }
        for i in 1..n {
            if w[i - 1] > w[i] && !flag_type.a_seq().contains(&i) {
                return Err(Error::InvalidPermutation(format!(
                    "descent at position {i} outside the flag type {:?}",
                    flag_type.a_seq()
                )));
            }
        }
        Ok(FlagPermutation { flag_type, w })
    }

    pub fn identity(flag_type: FlagType) -> Self {
        let w = (1..=flag_type.n()).collect();
        FlagPermutation { flag_type, w }
    }

    pub fn flag_type(&self) -> &FlagType {
        &self.flag_type
    }

    pub fn one_line(&self) -> &[usize] {
        &self.w
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let w = &self.w;
        let mut acc = 0;
        for i in 0..w.len() {
            for k in (i + 1)..w.len() {
                if w[k] < w[i] {
                    acc += 1;
                }
            }
        }
        acc
    }

    /// Codimension dim(a) - length.
    pub fn codim(&self) -> usize {
        self.flag_type.dim() - self.length()
    }

    /// The value set {w(1), ..., w(a)} as an increasing condition.
    pub fn restriction(&self, a: usize) -> Result<SchubertCondition> {
        if !self.flag_type.a_seq().contains(&a) {
            return Err(Error::InvalidCondition(format!(
                "{a} is not in the flag type {:?}",
                self.flag_type.a_seq()
            )));
        }
        let mut entries: Vec<usize> = self.w[..a].to_vec();
        entries.sort_unstable();
        SchubertCondition::new(self.flag_type.n(), entries)
    }

    /// Conjugation by the longest permutation: (w0 w w0)(i) = n+1 - w(n+1-i),
    /// a permutation over the reversed flag type with the same length.
    pub fn conjugate_w0(&self) -> FlagPermutation {
        let n = self.flag_type.n();
        let w = (1..=n).map(|i| n + 1 - self.w[n - i]).collect();
        FlagPermutation { flag_type: self.flag_type.reversed(), w }
    }

    /// The longest permutation in W^(a) restricting to `alpha` at position
    /// `a = alpha.ell()`, which must belong to the flag type.
    pub fn lift_condition(alpha: &SchubertCondition, flag_type: &FlagType) -> Result<Self> {
        let a = alpha.ell();
        if alpha.n() != flag_type.n() || !flag_type.a_seq().contains(&a) {
            return Err(Error::InvalidCondition(format!(
                "condition of length {a} does not match flag type {:?}",
                flag_type.a_seq()
            )));
        }
        let n = flag_type.n();
        let inside: Vec<usize> = alpha.entries().to_vec();
        let outside: Vec<usize> = (1..=n).filter(|v| !inside.contains(v)).collect();
        let mut w = vec![0; n];
        fill_blocks_longest(&mut w, flag_type, a, &inside, &outside);
        FlagPermutation::new(flag_type.clone(), w)
    }

    /// The longest permutation of the coset v W_(b) lying in W^(a), for
    /// v over a subtype b of a. Codimension is preserved:
    /// dim(a) - length(result) = dim(b) - length(v).
    pub fn lift_subflag(v: &FlagPermutation, flag_type: &FlagType) -> Result<Self> {
        if !flag_type.contains(v.flag_type()) {
            return Err(Error::InvalidCondition(format!(
                "{:?} is not a subtype of {:?}",
                v.flag_type().a_seq(),
                flag_type.a_seq()
            )));
        }
        let mut w = vec![0; flag_type.n()];
        for (lo, hi) in v.flag_type().blocks() {
            // values of v on this block, largest first
            let mut vals: Vec<usize> = v.w[lo..hi].to_vec();
            vals.sort_unstable_by(|x, y| y.cmp(x));
            // distribute over the refining blocks of the target type
            let mut idx = 0;
            for (slo, shi) in flag_type.blocks() {
                if slo < lo || shi > hi {
                    continue;
                }
                let take = shi - slo;
                let mut chunk: Vec<usize> = vals[idx..idx + take].to_vec();
                idx += take;
                chunk.sort_unstable();
                w[slo..shi].copy_from_slice(&chunk);
            }
        }
        FlagPermutation::new(flag_type.clone(), w)
    }
}

/// Greedy filling that maximizes inversions: hand each block, in order, the
/// largest values still available on its side of `a`, sorted within the block.
fn fill_blocks_longest(
    w: &mut [usize],
    flag_type: &FlagType,
    a: usize,
    inside: &[usize],
    outside: &[usize],
) {
    let mut ins: Vec<usize> = inside.to_vec();
    ins.sort_unstable_by(|x, y| y.cmp(x));
    let mut outs: Vec<usize> = outside.to_vec();
    outs.sort_unstable_by(|x, y| y.cmp(x));
    let mut ii = 0;
    let mut oi = 0;
    for (lo, hi) in flag_type.blocks() {
        let take = hi - lo;
        let mut chunk: Vec<usize> = if hi <= a {
            let c = ins[ii..ii + take].to_vec();
            ii += take;
            c
        } else {
            let c = outs[oi..oi + take].to_vec();
            oi += take;
            c
        };
        chunk.sort_unstable();
        w[lo..hi].copy_from_slice(&chunk);
    }
}

/// All permutations of [n] with descents inside the flag type.
pub fn descent_permutations(flag_type: &FlagType) -> Vec<FlagPermutation> {
    let n = flag_type.n();
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(
        flag_type: &FlagType,
        cur: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<FlagPermutation>,
    ) {
        let n = flag_type.n();
        if cur.len() == n {
            out.push(FlagPermutation { flag_type: flag_type.clone(), w: cur.clone() });
            return;
        }
        let pos = cur.len(); // next position is pos+1 (1-based)
        let ascent_needed = pos > 0 && !flag_type.a_seq().contains(&pos);
        for v in 1..=n {
            if used[v] {
                continue;
            }
            if ascent_needed && v < cur[pos - 1] {
                continue;
            }
            used[v] = true;
            cur.push(v);
            rec(flag_type, cur, used, out);
            cur.pop();
            used[v] = false;
        }
    }
    rec(flag_type, &mut cur, &mut used, &mut out);
    out
}

/// The ambient space of a Schubert problem.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Space {
    Grassmannian { n: usize, ell: usize },
    Flag(FlagType),
}

impl Space {
    pub fn n(&self) -> usize {
        match self {
            Space::Grassmannian { n, .. } => *n,
            Space::Flag(ft) => ft.n(),
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            Space::Grassmannian { n, ell } => ell * (n - ell),
            Space::Flag(ft) => ft.dim(),
        }
    }
}

/// A list of conditions whose codimensions sum to the space dimension.
#[derive(Clone, PartialEq, Debug)]
pub enum SchubertProblem {
    Grassmannian {
        n: usize,
        ell: usize,
        conditions: Vec<SchubertCondition>,
    },
    Flag {
        flag_type: FlagType,
        conditions: Vec<FlagPermutation>,
    },
}

impl SchubertProblem {
    pub fn grassmannian(n: usize, ell: usize, conditions: Vec<SchubertCondition>) -> Result<Self> {
        let p = SchubertProblem::Grassmannian { n, ell, conditions };
        p.validate()?;
        Ok(p)
    }

    pub fn flag(flag_type: FlagType, conditions: Vec<FlagPermutation>) -> Result<Self> {
        let p = SchubertProblem::Flag { flag_type, conditions };
        p.validate()?;
        Ok(p)
    }

    pub fn space(&self) -> Space {
        match self {
            SchubertProblem::Grassmannian { n, ell, .. } => Space::Grassmannian { n: *n, ell: *ell },
            SchubertProblem::Flag { flag_type, .. } => Space::Flag(flag_type.clone()),
        }
    }

    pub fn num_conditions(&self) -> usize {
        match self {
            SchubertProblem::Grassmannian { conditions, .. } => conditions.len(),
            SchubertProblem::Flag { conditions, .. } => conditions.len(),
        }
    }

    pub fn codim_sum(&self) -> usize {
        match self {
            SchubertProblem::Grassmannian { conditions, .. } => {
                conditions.iter().map(|c| c.codim()).sum()
            }
            SchubertProblem::Flag { conditions, .. } => conditions.iter().map(|c| c.codim()).sum(),
        }
    }

    /// Accepts iff the codimensions sum to the space dimension.
    pub fn validate(&self) -> Result<()> {
        match self {
            SchubertProblem::Grassmannian { n, ell, conditions } => {
                for c in conditions {
                    if c.n() != *n || c.ell() != *ell {
                        return Err(Error::SpaceMismatch);
                    }
                }
            }
            SchubertProblem::Flag { flag_type, conditions } => {
                for c in conditions {
                    if c.flag_type() != flag_type {
                        return Err(Error::SpaceMismatch);
                    }
                }
            }
        }
        let actual = self.codim_sum();
        let required = self.space().dimension();
        if actual != required {
            return Err(Error::CodimensionMismatch { actual, required });
        }
        Ok(())
    }
}
