//! Exact linear algebra over `GF(q)`: dense matrices, subspaces in
//! canonical reduced row echelon form, and exhaustive enumeration of the
//! Grassmannian.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::gfq::{Fe, FieldCtx, FieldError, FieldSpec};
use crate::qseries::qbinom;

/// Default ceiling on the number of subspaces a single enumeration may visit.
pub const DEFAULT_GUARD: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("operands are over different fields")]
    FieldMismatch,
    #[error("enumeration would visit {count} subspaces, above the guard of {guard}")]
    GuardExceeded { count: BigInt, guard: u64 },
    #[error("invalid dimension: k = {k} for n = {n}")]
    BadDimension { n: usize, k: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("bad matrix file: {0}")]
    File(String),
}

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct MatGF {
    ctx: Arc<FieldCtx>,
    rows: usize,
    cols: usize,
    entries: Vec<Fe>,
}

impl fmt::Debug for MatGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatGF {}x{} over GF({}):", self.rows, self.cols, self.ctx.order())?;
        for r in 0..self.rows {
            let row: Vec<u32> = self.row(r).iter().map(|e| e.index()).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl MatGF {
    pub fn new(ctx: Arc<FieldCtx>, rows: usize, cols: usize, entries: Vec<Fe>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.index() >= ctx.order()) {
            return Err(LinalgError::Shape("entry outside the field".into()));
        }
        Ok(MatGF {
            ctx,
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(ctx: Arc<FieldCtx>, rows: usize, cols: usize) -> Self {
        MatGF {
            ctx,
            rows,
            cols,
            entries: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(ctx: Arc<FieldCtx>, n: usize) -> Self {
        let mut m = MatGF::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        m
    }

    pub fn from_rows(ctx: Arc<FieldCtx>, rows: &[Vec<Fe>]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::Shape("ragged rows".into()));
        }
        MatGF::new(ctx, rows.len(), cols, rows.concat())
    }

    /// Prime-field convenience: entries given as residues.
    pub fn from_ints(ctx: Arc<FieldCtx>, rows: &[&[i64]]) -> Result<Self, LinalgError> {
        let rows: Vec<Vec<Fe>> = rows
            .iter()
            .map(|r| r.iter().map(|&c| ctx.from_int(c)).collect())
            .collect();
        MatGF::from_rows(ctx, &rows)
    }

    /// Uniformly random matrix.
    pub fn random(ctx: Arc<FieldCtx>, rows: usize, cols: usize, rng: &mut impl Rng) -> Self {
        let q = ctx.order();
        let entries = (0..rows * cols)
            .map(|_| ctx.element(rng.random_range(0..q)).unwrap())
            .collect();
        MatGF {
            ctx,
            rows,
            cols,
            entries,
        }
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Fe {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Fe) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Fe] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> MatGF {
        let mut t = MatGF::zeros(self.ctx.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &MatGF) -> Result<MatGF, LinalgError> {
        if self.ctx != rhs.ctx {
            return Err(LinalgError::FieldMismatch);
        }
        if self.cols != rhs.rows {
            return Err(LinalgError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = &*self.ctx;
        let mut out = MatGF::zeros(self.ctx.clone(), self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let v = f.add(out.get(r, c), f.mul(a, rhs.get(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &MatGF) -> Result<MatGF, LinalgError> {
        if self.ctx != other.ctx {
            return Err(LinalgError::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(LinalgError::AmbientMismatch(self.cols, other.cols));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(MatGF {
            ctx: self.ctx.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// In-place Gauss-Jordan elimination; returns the pivot columns.
    fn reduce_in_place(&mut self) -> Vec<usize> {
        let f = self.ctx.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.entries.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form and rank.
    pub fn rref(&self) -> (MatGF, usize) {
        let mut m = self.clone();
        let rank = m.reduce_in_place().len();
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis (as rows) of the null space `{x : self * x = 0}`.
    pub fn kernel(&self) -> MatGF {
        let f = self.ctx.clone();
        let mut m = self.clone();
        let pivots = m.reduce_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = MatGF::zeros(self.ctx.clone(), free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            out.set(b, fc, Fe::ONE);
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(b, pc, f.neg(m.get(r, fc)));
            }
        }
        out
    }

    /// Keep the first `rows` rows.
    fn truncate_rows(mut self, rows: usize) -> MatGF {
        self.entries.truncate(rows * self.cols);
        self.rows = rows;
        self
    }
}

/// A subspace of `GF(q)^n`, identified by its unique RREF basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    basis: MatGF,
}

impl Subspace {
    /// Row space of `m`.
    pub fn span(m: &MatGF) -> Subspace {
        let (r, rank) = m.rref();
        Subspace {
            basis: r.truncate_rows(rank),
        }
    }

    pub fn zero(ctx: Arc<FieldCtx>, n: usize) -> Subspace {
        Subspace {
            basis: MatGF::zeros(ctx, 0, n),
        }
    }

    pub fn full(ctx: Arc<FieldCtx>, n: usize) -> Subspace {
        Subspace {
            basis: MatGF::identity(ctx, n),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols
    }

    pub fn basis(&self) -> &MatGF {
        &self.basis
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.basis.ctx
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ctx() != other.ctx() {
            return Err(LinalgError::FieldMismatch);
        }
        if self.ambient_dim() != other.ambient_dim() {
            return Err(LinalgError::AmbientMismatch(self.ambient_dim(), other.ambient_dim()));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        Ok(Subspace::span(&self.basis.stack(&other.basis)?))
    }

    /// The annihilator in the dual space, returned as a subspace of `GF(q)^n`
    /// under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        Subspace::span(&self.basis.kernel())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let constraints = self.basis.kernel().stack(&other.basis.kernel())?;
        Ok(Subspace::span(&constraints.kernel()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        Ok(self.sum(other)?.dim() == other.dim())
    }

    fn check_operator(&self, t: &MatGF) -> Result<(), LinalgError> {
        if t.ctx != *self.ctx() {
            return Err(LinalgError::FieldMismatch);
        }
        let n = self.ambient_dim();
        if t.rows != n || t.cols != n {
            return Err(LinalgError::Shape(format!(
                "operator is {}x{}, ambient dimension is {n}",
                t.rows, t.cols
            )));
        }
        Ok(())
    }

    /// `T W`. Basis vectors are rows, so the image is the row space of `W T^T`.
    pub fn image(&self, t: &MatGF) -> Result<Subspace, LinalgError> {
        self.check_operator(t)?;
        Ok(Subspace::span(&self.basis.mul(&t.transpose())?))
    }

    /// `T^{-1} W = {v : T v in W}`, the kernel of `ann(W) T`.
    pub fn preimage(&self, t: &MatGF) -> Result<Subspace, LinalgError> {
        self.check_operator(t)?;
        let ann = self.basis.kernel();
        Ok(Subspace::span(&ann.mul(t)?.kernel()))
    }
}

/// `T W` as a free function.
pub fn apply_operator(t: &MatGF, w: &Subspace) -> Result<Subspace, LinalgError> {
    w.image(t)
}

pub fn preimage(t: &MatGF, w: &Subspace) -> Result<Subspace, LinalgError> {
    w.preimage(t)
}

/// Number of `k`-dimensional subspaces of `GF(q)^n`.
pub fn subspace_count(q: u32, n: usize, k: usize) -> BigInt {
    qbinom(n as i64, k as i64).eval(&BigInt::from(q))
}

/// `k`-subsets of `0..n` in colexicographic order.
fn colex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

/// Stream over every `k`-dimensional subspace of `GF(q)^n`.
///
/// Pivot sets are visited in colexicographic order; within a pivot set the
/// free entries of the RREF pattern run through the canonical element order
/// like an odometer whose last position turns fastest.
pub struct SubspaceIter {
    ctx: Arc<FieldCtx>,
    n: usize,
    k: usize,
    pivot_sets: Vec<Vec<usize>>,
    set_idx: usize,
    free: Vec<(usize, usize)>,
    digits: Vec<u32>,
    fresh: bool,
}

impl SubspaceIter {
    fn load_set(&mut self) {
        let pivots = &self.pivot_sets[self.set_idx];
        self.free = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (p + 1..self.n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        self.digits = vec![0; self.free.len()];
        self.fresh = true;
    }

    fn advance(&mut self) -> bool {
        let q = self.ctx.order();
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < q {
                return true;
            }
            *d = 0;
        }
        false
    }

    fn current(&self) -> Subspace {
        let mut m = MatGF::zeros(self.ctx.clone(), self.k, self.n);
        for (r, &p) in self.pivot_sets[self.set_idx].iter().enumerate() {
            m.set(r, p, Fe::ONE);
        }
        for (&(r, c), &d) in self.free.iter().zip(&self.digits) {
            m.set(r, c, self.ctx.element(d).unwrap());
        }
        Subspace { basis: m }
    }
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        loop {
            if self.set_idx >= self.pivot_sets.len() {
                return None;
            }
            if self.fresh {
                self.fresh = false;
                return Some(self.current());
            }
            if self.advance() {
                return Some(self.current());
            }
            self.set_idx += 1;
            if self.set_idx < self.pivot_sets.len() {
                self.load_set();
            }
        }
    }
}

/// Enumerate every `k`-dimensional subspace of `GF(q)^n`, refusing when the
/// count exceeds `guard`.
pub fn enumerate_subspaces(ctx: &Arc<FieldCtx>, n: usize, k: usize, guard: u64) -> Result<SubspaceIter, LinalgError> {
    if k > n {
        return Err(LinalgError::BadDimension { n, k });
    }
    let count = subspace_count(ctx.order(), n, k);
    if count.to_u64().is_none_or(|c| c > guard) {
        return Err(LinalgError::GuardExceeded { count, guard });
    }
    let mut it = SubspaceIter {
        ctx: ctx.clone(),
        n,
        k,
        pivot_sets: colex_subsets(n, k),
        set_idx: 0,
        free: Vec::new(),
        digits: Vec::new(),
        fresh: true,
    };
    it.load_set();
    Ok(it)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum EntryJson {
    Index(u32),
    Coeffs(Vec<u32>),
}

/// On-disk matrix: `{"field": {...}, "entries": [[e, ...], ...]}` where each
/// entry is an integer (canonical index; the residue for prime fields) or an
/// ascending coefficient array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    field: FieldSpec,
    entries: Vec<Vec<EntryJson>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &MatGF) -> MatrixFile {
        let ctx = m.ctx();
        let entries = (0..m.rows())
            .map(|r| {
                m.row(r)
                    .iter()
                    .map(|&e| {
                        if ctx.degree() == 1 {
                            EntryJson::Index(e.index())
                        } else {
                            EntryJson::Coeffs(ctx.coeffs(e))
                        }
                    })
                    .collect()
            })
            .collect();
        MatrixFile {
            field: ctx.spec(),
            entries,
        }
    }

    pub fn to_matrix(&self) -> Result<MatGF, LinalgError> {
        let ctx = Arc::new(self.field.build()?);
        let mut rows = Vec::with_capacity(self.entries.len());
        for (r, row) in self.entries.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (c, e) in row.iter().enumerate() {
                let fe = match e {
                    EntryJson::Index(i) => ctx.element(*i),
                    EntryJson::Coeffs(v) => ctx.from_coeffs(v),
                }
                .map_err(|err| LinalgError::File(format!("entry at row {}, column {}: {err}", r + 1, c + 1)))?;
                out.push(fe);
            }
            rows.push(out);
        }
        let m = MatGF::from_rows(ctx, &rows)?;
        Ok(m)
    }

    pub fn parse(text: &str) -> Result<MatGF, LinalgError> {
        let file: MatrixFile = serde_json::from_str(text)
            .map_err(|e| LinalgError::File(format!("line {}, column {}: {e}", e.line(), e.column())))?;
        file.to_matrix()
    }

    pub fn render(m: &MatGF) -> String {
        serde_json::to_string(&MatrixFile::from_matrix(m)).expect("matrix serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn gf(p: u32, k: usize) -> Arc<FieldCtx> {
        Arc::new(FieldCtx::new(p, k, None).unwrap())
    }

    fn span_ints(ctx: &Arc<FieldCtx>, rows: &[&[i64]]) -> Subspace {
        Subspace::span(&MatGF::from_ints(ctx.clone(), rows).unwrap())
    }

    #[test]
    fn rref_examples() {
        let f2 = gf(2, 1);
        let id = MatGF::identity(f2.clone(), 3);
        assert_eq!(id.rref(), (id.clone(), 3));
        let z = MatGF::zeros(f2.clone(), 2, 3);
        assert_eq!(z.rref(), (z.clone(), 0));
        let m = MatGF::from_ints(f2.clone(), &[&[1, 1], &[1, 1]]).unwrap();
        let expected = MatGF::from_ints(f2, &[&[1, 1], &[0, 0]]).unwrap();
        assert_eq!(m.rref(), (expected, 1));
    }

    #[test]
    fn sum_and_intersection() {
        let f2 = gf(2, 1);
        let a = span_ints(&f2, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = span_ints(&f2, &[&[0, 1, 0], &[0, 0, 1]]);
        let zero = Subspace::zero(f2.clone(), 3);
        assert_eq!(a.sum(&zero).unwrap(), a);
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(a.intersect(&b).unwrap(), span_ints(&f2, &[&[0, 1, 0]]));
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(f2.clone(), 3));
        let other = Subspace::zero(f2, 4);
        assert!(matches!(a.sum(&other), Err(LinalgError::AmbientMismatch(3, 4))));
    }

    #[test]
    fn image_and_preimage() {
        let f2 = gf(2, 1);
        let id = MatGF::identity(f2.clone(), 2);
        let zero_op = MatGF::zeros(f2.clone(), 2, 2);
        let w = span_ints(&f2, &[&[1, 1]]);
        assert_eq!(w.image(&id).unwrap(), w);
        assert_eq!(w.preimage(&id).unwrap(), w);
        assert_eq!(w.image(&zero_op).unwrap().dim(), 0);
        assert_eq!(w.preimage(&zero_op).unwrap(), Subspace::full(f2.clone(), 2));

        let jordan = MatGF::from_ints(f2.clone(), &[&[0, 1], &[0, 0]]).unwrap();
        let e1 = span_ints(&f2, &[&[1, 0]]);
        let e2 = span_ints(&f2, &[&[0, 1]]);
        assert_eq!(e2.image(&jordan).unwrap(), e1);
        assert_eq!(e1.preimage(&jordan).unwrap(), Subspace::full(f2.clone(), 2));
        assert_eq!(apply_operator(&jordan, &e1).unwrap().dim(), 0);
        let big = MatGF::identity(f2, 3);
        assert!(preimage(&big, &e1).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_subspaces(&gf(2, 1), 2, 1, DEFAULT_GUARD).unwrap().count(), 3);
        assert_eq!(enumerate_subspaces(&gf(2, 1), 4, 2, DEFAULT_GUARD).unwrap().count(), 35);
        assert_eq!(enumerate_subspaces(&gf(3, 1), 3, 1, DEFAULT_GUARD).unwrap().count(), 13);
        assert_eq!(
            enumerate_subspaces(&gf(2, 2), 4, 2, DEFAULT_GUARD).unwrap().count(),
            357
        );
        assert_eq!(enumerate_subspaces(&gf(2, 1), 0, 0, DEFAULT_GUARD).unwrap().count(), 1);
    }

    #[test]
    fn enumeration_guard() {
        match enumerate_subspaces(&gf(2, 1), 4, 2, 34) {
            Err(LinalgError::GuardExceeded { count, guard }) => {
                assert_eq!(count, BigInt::from(35));
                assert_eq!(guard, 34);
            }
            _ => panic!("guard should trip"),
        }
        assert!(enumerate_subspaces(&gf(2, 1), 2, 3, 10).is_err());
    }

    #[test]
    fn enumeration_distinct_and_canonical() {
        for ctx in [gf(2, 1), gf(3, 1), gf(2, 2)] {
            for n in 0..=4 {
                for k in 0..=n {
                    let all: Vec<Subspace> = enumerate_subspaces(&ctx, n, k, DEFAULT_GUARD).unwrap().collect();
                    let mut seen = HashSet::new();
                    for w in &all {
                        assert_eq!(w.dim(), k);
                        assert_eq!(Subspace::span(w.basis()), *w);
                        let key: Vec<u32> = w.basis().entries.iter().map(|e| e.index()).collect();
                        assert!(seen.insert(key));
                    }
                    assert_eq!(BigInt::from(all.len()), subspace_count(ctx.order(), n, k));
                }
            }
        }
    }

    #[test]
    fn colex_order() {
        assert_eq!(
            colex_subsets(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn rank_nullity() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for ctx in [gf(2, 1), gf(3, 1), gf(2, 2), gf(5, 1)] {
            for _ in 0..50 {
                let n = rng.random_range(1..=5);
                let t = MatGF::random(ctx.clone(), n, n, &mut rng);
                let ker = t.kernel();
                assert_eq!(t.rank() + ker.rows(), n);
                assert!(t.mul(&ker.transpose()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn modular_law_and_adjunction() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for ctx in [gf(2, 1), gf(3, 1), gf(2, 2)] {
            for _ in 0..60 {
                let n = 4;
                let rand_sub = |rng: &mut rand_chacha::ChaCha8Rng| {
                    let rows = rng.random_range(0..=n);
                    Subspace::span(&MatGF::random(ctx.clone(), rows, n, rng))
                };
                let a = rand_sub(&mut rng);
                let b = rand_sub(&mut rng);
                let c = rand_sub(&mut rng);
                let ac = a.intersect(&c).unwrap();
                let lhs = a.intersect(&b.sum(&ac).unwrap()).unwrap();
                let rhs = a.intersect(&b).unwrap().sum(&ac).unwrap();
                assert_eq!(lhs, rhs);
                assert_eq!(
                    a.sum(&b).unwrap().dim() + a.intersect(&b).unwrap().dim(),
                    a.dim() + b.dim()
                );
                let t = MatGF::random(ctx.clone(), n, n, &mut rng);
                let tw_in_u = a.image(&t).unwrap().is_subspace_of(&b).unwrap();
                let w_in_pre = a.is_subspace_of(&b.preimage(&t).unwrap()).unwrap();
                assert_eq!(tw_in_u, w_in_pre);
                let kernel_dim = n - t.rank();
                assert!(b.preimage(&t).unwrap().dim() + n >= b.dim() + kernel_dim);
            }
        }
    }

    #[test]
    fn matrix_file_round_trip() {
        let f4 = gf(2, 2);
        let t = f4.from_coeffs(&[0, 1]).unwrap();
        let m = MatGF::from_rows(f4.clone(), &[vec![Fe::ONE, t], vec![Fe::ZERO, Fe::ONE]]).unwrap();
        let text = MatrixFile::render(&m);
        assert_eq!(
            text,
            r#"{"field":{"p":2,"k":2,"modulus":[1,1,1]},"entries":[[[1,0],[0,1]],[[0,0],[1,0]]]}"#
        );
        assert_eq!(MatrixFile::parse(&text).unwrap(), m);

        let m2 = MatrixFile::parse(r#"{"field":{"p":3},"entries":[[0,1],[2,0]]}"#).unwrap();
        assert_eq!(m2.get(1, 0), m2.ctx().from_int(2));
    }

    #[test]
    fn matrix_file_errors() {
        let err = MatrixFile::parse(r#"{"field":{"p":2},"entries":[[0,1],[1,0}"#).unwrap_err();
        assert!(err.to_string().contains("line 1, column"), "{err}");
        let err = MatrixFile::parse(r#"{"field":{"p":2},"entries":[[0,1],[1,5]]}"#).unwrap_err();
        assert!(err.to_string().contains("row 2, column 2"), "{err}");
        assert!(MatrixFile::parse(r#"{"field":{"p":4},"entries":[[0]]}"#).is_err());
        assert!(MatrixFile::parse(r#"{"field":{"p":2},"entries":[[0,1],[1]]}"#).is_err());
    }
}
