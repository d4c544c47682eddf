//! Exact dense linear algebra over prime fields F_p, 2 <= p <= 97.
//!
//! Everything is integer arithmetic: entries live in `[0, p)` as bytes,
//! products are reduced with a Barrett-style multiply, and row reduction
//! uses deterministic first-nonzero pivoting so every basis this crate
//! produces is reproducible byte for byte. Elimination over F_2 runs on
//! rows bit-packed into 64-bit words.

use crate::error::{Error, Result};

pub const SUPPORTED_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Arithmetic in F_p. `magic = floor(2^32 / p)` drives a branch-light
/// Barrett reduction for products; sums never leave `[0, 2p)` so they
/// reduce with a single conditional subtract.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
    magic: u64,
}

impl std::fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F{}", self.p)
    }
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !SUPPORTED_PRIMES.contains(&(p.min(u32::MAX as u64) as u32)) {
            return Err(Error::BadCharacteristic(p));
        }
        let p = p as u32;
        Ok(PrimeField {
            p,
            magic: (1u64 << 32) / p as u64,
        })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Reduces any `x < 2^32`; valid in particular for products of two
    /// reduced entries.
    #[inline]
    fn reduce(&self, x: u64) -> u8 {
        let q = (x * self.magic) >> 32;
        let mut r = x - q * self.p as u64;
        if r >= self.p as u64 {
            r -= self.p as u64;
        }
        debug_assert!(r < self.p as u64);
        r as u8
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        let s = a as u32 + b as u32;
        (if s >= self.p { s - self.p } else { s }) as u8
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        let s = a as u32 + self.p - b as u32;
        (if s >= self.p { s - self.p } else { s }) as u8
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            (self.p - a as u32) as u8
        }
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.reduce(a as u64 * b as u64)
    }

    /// Fermat inverse; `a` must be nonzero.
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "inverse of zero");
        let mut acc = 1u8;
        let mut base = a;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element(&self, x: i64) -> u8 {
        let p = self.p as i64;
        (((x % p) + p) % p) as u8
    }
}

/// Dense row-major matrix over a prime field. Entries are kept reduced;
/// constructors validate, arithmetic preserves the invariant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    f: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over F{} [", self.rows, self.cols, self.f.p)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug)]
pub struct Echelon {
    pub mat: Matrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows, strictly increasing.
    pub pivots: Vec<usize>,
}

/// A solution set of `A X = B`: one particular solution plus a basis of
/// `ker A` (columns). The nullspace of the matrix equation itself is the
/// kernel placed independently in each column of `X`, so its dimension
/// is `kernel.cols() * particular.cols()`.
#[derive(Clone, Debug)]
pub struct Solution {
    pub particular: Matrix,
    pub kernel: Matrix,
}

impl Solution {
    pub fn matrix_nullspace_dim(&self) -> usize {
        self.kernel.cols() * self.particular.cols()
    }
}

impl Matrix {
    pub fn zero(f: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            f,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(f: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zero(f, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(f: PrimeField, rows: &[Vec<u8>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimMismatch("ragged rows".into()));
            }
            for &v in row {
                if v as u32 >= f.p {
                    return Err(Error::BadInput(format!(
                        "entry {v} not reduced modulo {}",
                        f.p
                    )));
                }
                data.push(v);
            }
        }
        Ok(Matrix {
            f,
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn from_fn(f: PrimeField, rows: usize, cols: usize, mut g: impl FnMut(usize, usize) -> u8) -> Self {
        let mut m = Matrix::zero(f, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = g(i, j);
                debug_assert!((v as u32) < f.p);
                m.data[i * cols + j] = v;
            }
        }
        m
    }

    /// Columns of the result are the given vectors.
    pub fn from_cols(f: PrimeField, len: usize, cols: &[Vec<u8>]) -> Self {
        let mut m = Matrix::zero(f, len, cols.len());
        for (j, v) in cols.iter().enumerate() {
            assert_eq!(v.len(), len, "column length mismatch");
            for i in 0..len {
                m.data[i * cols.len() + j] = v[i];
            }
        }
        m
    }

    pub fn col_vector(f: PrimeField, v: &[u8]) -> Self {
        Matrix::from_cols(f, v.len(), &[v.to_vec()])
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.f
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        debug_assert!((v as u32) < self.f.p);
        self.data[i * self.cols + j] = v;
    }
    #[inline]
    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn col(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.at(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.f, self.rows)
    }

    /// Row-major flattening, the coordinate convention used for spaces of
    /// maps throughout the crate.
    pub fn flatten(&self) -> Vec<u8> {
        self.data.clone()
    }

    pub fn unflatten(f: PrimeField, rows: usize, cols: usize, data: &[u8]) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix {
            f,
            rows,
            cols,
            data: data.to_vec(),
        }
    }

    fn assert_same_shape(&self, rhs: &Matrix, what: &str) {
        assert!(
            self.f == rhs.f && self.rows == rhs.rows && self.cols == rhs.cols,
            "{what}: shape or field mismatch ({}x{} vs {}x{})",
            self.rows,
            self.cols,
            rhs.rows,
            rhs.cols
        );
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        self.assert_same_shape(rhs, "add");
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&rhs.data) {
            *a = self.f.add(*a, b);
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.assert_same_shape(rhs, "sub");
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&rhs.data) {
            *a = self.f.sub(*a, b);
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = self.f.neg(*a);
        }
        out
    }

    pub fn scale(&self, c: u8) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = self.f.mul(*a, c);
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert!(
            self.f == rhs.f && self.cols == rhs.rows,
            "mul: inner dimension mismatch {}x{} * {}x{}",
            self.rows,
            self.cols,
            rhs.rows,
            rhs.cols
        );
        let mut out = Matrix::zero(self.f, self.rows, rhs.cols);
        // Exact u32 accumulation: inner dims stay far below 2^32 / p^2.
        let mut acc = vec![0u32; rhs.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                let a = a as u32;
                let rrow = rhs.row(k);
                for (j, &b) in rrow.iter().enumerate() {
                    acc[j] += a * b as u32;
                }
            }
            for j in 0..rhs.cols {
                out.data[i * rhs.cols + j] = self.f.reduce(acc[j] as u64);
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.f, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.at(i, j);
            }
        }
        out
    }

    pub fn hstack(parts: &[&Matrix]) -> Matrix {
        assert!(!parts.is_empty());
        let f = parts[0].f;
        let rows = parts[0].rows;
        assert!(parts.iter().all(|m| m.rows == rows && m.f == f));
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zero(f, rows, cols);
        let mut off = 0;
        for m in parts {
            for i in 0..rows {
                out.data[i * cols + off..i * cols + off + m.cols].copy_from_slice(m.row(i));
            }
            off += m.cols;
        }
        out
    }

    pub fn vstack(parts: &[&Matrix]) -> Matrix {
        assert!(!parts.is_empty());
        let f = parts[0].f;
        let cols = parts[0].cols;
        assert!(parts.iter().all(|m| m.cols == cols && m.f == f));
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Matrix::zero(f, rows, cols);
        let mut off = 0;
        for m in parts {
            out.data[off * cols..(off + m.rows) * cols].copy_from_slice(&m.data);
            off += m.rows;
        }
        out
    }

    pub fn block_diag(parts: &[&Matrix]) -> Matrix {
        assert!(!parts.is_empty());
        let f = parts[0].f;
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zero(f, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for m in parts {
            for i in 0..m.rows {
                out.data[(ro + i) * cols + co..(ro + i) * cols + co + m.cols]
                    .copy_from_slice(m.row(i));
            }
            ro += m.rows;
            co += m.cols;
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols, "pow of non-square matrix");
        let mut acc = Matrix::identity(self.f, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Reduced row echelon form with deterministic pivoting: columns are
    /// scanned left to right and the first nonzero entry at or below the
    /// current row becomes the pivot.
    pub fn rref(&self) -> Echelon {
        if self.f.p == 2 {
            self.rref_f2()
        } else {
            self.rref_generic()
        }
    }

    fn rref_generic(&self) -> Echelon {
        let f = self.f;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        // Per-factor multiplication table; p <= 97 keeps it in cache.
        let mut mul_tab = vec![0u8; f.p as usize];
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                let (lo, hi) = a.split_at_mut(pr * cols);
                lo[r * cols..r * cols + cols].swap_with_slice(&mut hi[..cols]);
            }
            let pinv = f.inv(a[r * cols + c]);
            if pinv != 1 {
                for j in c..cols {
                    a[r * cols + j] = f.mul(a[r * cols + j], pinv);
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = a[i * cols + c];
                if factor == 0 {
                    continue;
                }
                for (v, t) in mul_tab.iter_mut().enumerate() {
                    *t = f.mul(factor, v as u8);
                }
                let (prow, irow) = if i < r {
                    let (lo, hi) = a.split_at_mut(r * cols);
                    (&hi[..cols], &mut lo[i * cols..(i + 1) * cols])
                } else {
                    let (lo, hi) = a.split_at_mut(i * cols);
                    (&lo[r * cols..(r + 1) * cols], &mut hi[..cols])
                };
                for (t, &pv) in irow[c..].iter_mut().zip(&prow[c..]) {
                    *t = f.sub(*t, mul_tab[pv as usize]);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon {
            mat: Matrix {
                f,
                rows,
                cols,
                data: a,
            },
            rank: r,
            pivots,
        }
    }

    fn rref_f2(&self) -> Echelon {
        let (rows, cols) = (self.rows, self.cols);
        let w = cols.div_ceil(64).max(1);
        let mut packed = vec![0u64; rows * w];
        for i in 0..rows {
            for j in 0..cols {
                if self.at(i, j) != 0 {
                    packed[i * w + j / 64] |= 1 << (j % 64);
                }
            }
        }
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let (wi, bit) = (c / 64, 1u64 << (c % 64));
            let Some(pr) = (r..rows).find(|&i| packed[i * w + wi] & bit != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..w {
                    packed.swap(r * w + k, pr * w + k);
                }
            }
            for i in 0..rows {
                if i != r && packed[i * w + wi] & bit != 0 {
                    let (lo, hi) = packed.split_at_mut(r.max(i) * w);
                    let (src, dst) = if i < r {
                        (&hi[..w], &mut lo[i * w..(i + 1) * w])
                    } else {
                        let (l2, h2) = lo.split_at_mut(i.min(r) * w + w);
                        let _ = h2;
                        (&l2[r * w..r * w + w], &mut hi[..w])
                    };
                    for k in 0..w {
                        dst[k] ^= src[k];
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let mut mat = Matrix::zero(self.f, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if packed[i * w + j / 64] & (1 << (j % 64)) != 0 {
                    mat.data[i * cols + j] = 1;
                }
            }
        }
        Echelon {
            mat,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{v : A v = 0}` as the columns of the result, one per
    /// non-pivot column, in column order.
    pub fn kernel(&self) -> Matrix {
        let ech = self.rref();
        kernel_from_echelon(&ech, self.cols)
    }

    pub fn kernel_vectors(&self) -> Vec<Vec<u8>> {
        let k = self.kernel();
        (0..k.cols()).map(|j| k.col(j)).collect()
    }

    /// Solves `A X = B`. `Ok(None)` means inconsistent; dimension and
    /// field mismatches are errors.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Solution>> {
        if self.f != b.f || self.rows != b.rows {
            return Err(Error::DimMismatch(format!(
                "solve: {}x{} vs rhs {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        let aug = Matrix::hstack(&[self, b]);
        let ech = aug.rref();
        for (r, &c) in ech.pivots.iter().enumerate() {
            let _ = r;
            if c >= self.cols {
                return Ok(None);
            }
        }
        let mut x = Matrix::zero(self.f, self.cols, b.cols);
        for (r, &c) in ech.pivots.iter().enumerate() {
            for k in 0..b.cols {
                x.set(c, k, ech.mat.at(r, self.cols + k));
            }
        }
        let kernel = kernel_from_echelon(
            &Echelon {
                mat: ech.mat.clone(),
                rank: ech.rank,
                pivots: ech.pivots.clone(),
            },
            self.cols,
        );
        Ok(Some(Solution {
            particular: x,
            kernel,
        }))
    }

    pub fn invert(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let sol = self.solve(&Matrix::identity(self.f, self.rows)).ok()??;
        if sol.kernel.cols() == 0 {
            Some(sol.particular)
        } else {
            None
        }
    }

    /// Basis of the column space, extracted at pivot columns.
    pub fn col_space_basis(&self) -> Matrix {
        let ech = self.rref();
        let cols: Vec<Vec<u8>> = ech.pivots.iter().map(|&c| self.col(c)).collect();
        Matrix::from_cols(self.f, self.rows, &cols)
    }
}

/// Kernel read off an echelon form whose first `ncols` columns are the
/// coefficient block (extra columns, if any, are ignored).
fn kernel_from_echelon(ech: &Echelon, ncols: usize) -> Matrix {
    let f = ech.mat.field();
    let pivset: Vec<Option<usize>> = {
        let mut v = vec![None; ncols];
        for (r, &c) in ech.pivots.iter().enumerate() {
            if c < ncols {
                v[c] = Some(r);
            }
        }
        v
    };
    let free: Vec<usize> = (0..ncols).filter(|&j| pivset[j].is_none()).collect();
    let mut out = Matrix::zero(f, ncols, free.len());
    for (k, &j) in free.iter().enumerate() {
        out.set(j, k, 1);
        for (c, pr) in pivset.iter().enumerate() {
            if let Some(r) = pr {
                out.set(c, k, f.neg(ech.mat.at(*r, j)));
            }
        }
    }
    out
}

/// Factored form of a fixed matrix `A` for repeated solves: T A = R with
/// R in reduced echelon form, so each right-hand side costs one
/// matrix-vector product and a consistency scan.
#[derive(Clone, Debug)]
pub struct SolveCache {
    cols: usize,
    rank: usize,
    pivots: Vec<usize>,
    /// rows x rows transform
    t: Matrix,
    /// kernel of A, columns
    kernel: Matrix,
}

impl SolveCache {
    pub fn new(a: &Matrix) -> Self {
        let f = a.field();
        let aug = Matrix::hstack(&[a, &Matrix::identity(f, a.rows())]);
        let ech = aug.rref();
        let mut pivots = Vec::new();
        for &c in &ech.pivots {
            if c < a.cols() {
                pivots.push(c);
            }
        }
        let rank = pivots.len();
        let mut t = Matrix::zero(f, a.rows(), a.rows());
        for i in 0..a.rows() {
            for j in 0..a.rows() {
                t.set(i, j, ech.mat.at(i, a.cols() + j));
            }
        }
        let kernel = {
            let trimmed = Echelon {
                mat: ech.mat.clone(),
                rank: ech.rank,
                pivots: ech.pivots.clone(),
            };
            kernel_from_echelon(&trimmed, a.cols())
        };
        SolveCache {
            cols: a.cols(),
            rank,
            pivots,
            t,
            kernel,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn kernel(&self) -> &Matrix {
        &self.kernel
    }

    /// One particular solution of `A x = b`, or None if inconsistent.
    pub fn solve_mat(&self, b: &Matrix) -> Option<Matrix> {
        let f = self.t.field();
        let c = self.t.mul(b);
        for i in self.rank..c.rows() {
            if c.row(i).iter().any(|&v| v != 0) {
                return None;
            }
        }
        let mut x = Matrix::zero(f, self.cols, b.cols());
        for (r, &pc) in self.pivots.iter().enumerate() {
            for k in 0..b.cols() {
                x.set(pc, k, c.at(r, k));
            }
        }
        Some(x)
    }

    pub fn solve_col(&self, b: &[u8]) -> Option<Vec<u8>> {
        let bm = Matrix::col_vector(self.t.field(), b);
        self.solve_mat(&bm).map(|x| x.col(0))
    }
}

/// A subspace of F_p^n held in canonical form: the rows of `rows` are a
/// reduced-echelon basis. Membership, dimension, and extension queries
/// are all deterministic.
#[derive(Clone, Debug)]
pub struct Subspace {
    f: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn empty(f: PrimeField, ambient: usize) -> Self {
        Subspace {
            f,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_span(f: PrimeField, ambient: usize, vectors: impl IntoIterator<Item = Vec<u8>>) -> Self {
        let mut s = Subspace::empty(f, ambient);
        for v in vectors {
            s.insert(&v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Canonical residue of `v` modulo the subspace: zero iff contained.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = out[pc];
            if c != 0 {
                for (o, &r) in out.iter_mut().zip(row) {
                    *o = self.f.sub(*o, self.f.mul(c, r));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns true when the dimension grew.
    pub fn insert(&mut self, v: &[u8]) -> bool {
        let mut r = self.reduce(v);
        let Some(pc) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.f.inv(r[pc]);
        if inv != 1 {
            for x in r.iter_mut() {
                *x = self.f.mul(*x, inv);
            }
        }
        // Re-reduce existing rows so the basis stays fully echelonized.
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                for (o, &n) in row.iter_mut().zip(&r) {
                    *o = self.f.sub(*o, self.f.mul(c, n));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, r);
        true
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn field_rejects_non_primes() {
        for bad in [0u64, 1, 4, 6, 9, 91, 98, 101] {
            assert!(PrimeField::new(bad).is_err(), "{bad} accepted");
        }
        for good in [2u64, 3, 5, 97] {
            assert!(PrimeField::new(good).is_ok());
        }
    }

    #[test]
    fn barrett_matches_plain_modulo_exhaustively() {
        for &p in &SUPPORTED_PRIMES {
            let f = f(p as u64);
            for a in 0..p as u64 {
                for b in 0..p as u64 {
                    assert_eq!(f.mul(a as u8, b as u8) as u64, (a * b) % p as u64);
                    assert_eq!(f.add(a as u8, b as u8) as u64, (a + b) % p as u64);
                    assert_eq!(
                        f.sub(a as u8, b as u8) as u64,
                        ((a + p as u64) - b) % p as u64
                    );
                }
                if a != 0 {
                    assert_eq!(f.mul(f.inv(a as u8), a as u8), 1);
                }
            }
        }
    }

    #[test]
    fn rref_rank_one_example() {
        let m = Matrix::from_rows(f(5), &[vec![1, 2], vec![2, 4]]).unwrap();
        let ech = m.rref();
        assert_eq!(ech.rank, 1);
        assert_eq!(ech.pivots, vec![0]);
        assert_eq!(ech.mat.row(0), &[1, 2]);
        assert_eq!(ech.mat.row(1), &[0, 0]);
        let ker = m.kernel();
        assert_eq!(ker.cols(), 1);
        assert_eq!(ker.col(0), vec![3, 1]);
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        let z = Matrix::zero(f(3), 4, 4);
        assert_eq!(z.kernel().cols(), 4);
        assert_eq!(z.kernel(), Matrix::identity(f(3), 4));
        let id = Matrix::identity(f(3), 4);
        assert_eq!(id.kernel().cols(), 0);
    }

    #[test]
    fn solve_underdetermined_f2_matches_enumeration() {
        let a = Matrix::from_rows(f(2), &[vec![1, 1]]).unwrap();
        let b = Matrix::from_rows(f(2), &[vec![1]]).unwrap();
        let sol = a.solve(&b).unwrap().unwrap();
        // Enumerate all of F_2^2 as the oracle.
        let all: Vec<Vec<u8>> = (0..4u8).map(|k| vec![k & 1, k >> 1]).collect();
        let solutions: Vec<&Vec<u8>> = all
            .iter()
            .filter(|v| (v[0] + v[1]) % 2 == 1)
            .collect();
        assert_eq!(solutions.len(), 2);
        assert!(solutions.contains(&&sol.particular.col(0)));
        assert_eq!(sol.kernel.cols(), 1);
        assert_eq!(sol.matrix_nullspace_dim(), 1);
    }

    #[test]
    fn solve_zero_system_reports_full_nullspace() {
        let a = Matrix::zero(f(2), 2, 2);
        let b = Matrix::zero(f(2), 2, 2);
        let sol = a.solve(&b).unwrap().unwrap();
        assert!(sol.particular.is_zero());
        assert_eq!(sol.matrix_nullspace_dim(), 4);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = Matrix::from_rows(f(3), &[vec![1, 1], vec![2, 2]]).unwrap();
        let b = Matrix::from_rows(f(3), &[vec![1], vec![1]]).unwrap();
        assert!(a.solve(&b).unwrap().is_none());
    }

    #[test]
    fn solve_cache_agrees_with_direct_solve() {
        let a = Matrix::from_rows(f(5), &[vec![1, 2, 0], vec![0, 1, 4], vec![1, 3, 4]]).unwrap();
        let cache = SolveCache::new(&a);
        assert_eq!(cache.rank(), a.rank());
        for rhs in [vec![1, 0, 1], vec![2, 3, 0], vec![0, 0, 0]] {
            let direct = a.solve(&Matrix::col_vector(f(5), &rhs)).unwrap();
            let cached = cache.solve_col(&rhs);
            match direct {
                Some(s) => {
                    let x = cached.expect("cache missed a consistent system");
                    let ax = a.mul(&Matrix::col_vector(f(5), &x));
                    assert_eq!(ax.col(0), rhs);
                    let _ = s;
                }
                None => assert!(cached.is_none()),
            }
        }
    }

    #[test]
    fn subspace_membership_and_extension() {
        let mut s = Subspace::empty(f(3), 3);
        assert!(s.insert(&[1, 2, 0]));
        assert!(s.insert(&[0, 1, 1]));
        assert!(!s.insert(&[1, 0, 1])); // (1,2,0) + (0,1,1) = (1,0,1) over F_3
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[2, 2, 1])); // 2*(1,2,0) + (0,1,1)
        assert!(!s.contains(&[0, 0, 1]));
    }

    #[test]
    fn bitpacked_f2_path_matches_generic_path() {
        // Same matrices reduced over F_2 (packed) and F_3 (generic) give
        // structurally consistent results; here we check the F_2 packed
        // path against a slow or-free reference on wide shapes.
        let cols = 130; // forces multi-word rows
        let mut m = Matrix::zero(f(2), 3, cols);
        for j in 0..cols {
            m.set(0, j, (j % 2) as u8);
            m.set(1, j, (j % 3 == 0) as u8);
            m.set(2, j, ((j % 2) ^ (j % 3 == 0) as usize as u8 as usize) as u8);
        }
        let ech = m.rref();
        assert_eq!(ech.rank, 2); // row2 = row0 + row1
        let k = m.kernel();
        assert_eq!(k.cols(), cols - 2);
        for c in 0..k.cols() {
            assert!(m.mul(&Matrix::col_vector(f(2), &k.col(c))).is_zero());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_nullity_and_kernel_annihilation(
            p in prop::sample::select(vec![2u64, 3, 5]),
            rows in 0usize..9,
            cols in 0usize..9,
            seed in any::<u64>(),
        ) {
            let fld = f(p);
            let mut state = seed;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % p as u64) as u8
            };
            let m = Matrix::from_fn(fld, rows, cols, |_, _| next());
            let ech = m.rref();
            let k = m.kernel();
            prop_assert_eq!(ech.rank + k.cols(), cols);
            for c in 0..k.cols() {
                prop_assert!(m.mul(&Matrix::col_vector(fld, &k.col(c))).is_zero());
            }
            // rref is idempotent
            let again = ech.mat.rref();
            prop_assert_eq!(again.mat, ech.mat);
            prop_assert_eq!(again.rank, ech.rank);
        }

        #[test]
        fn solve_recovers_constructed_solutions(
            p in prop::sample::select(vec![2u64, 3, 5]),
            rows in 1usize..7,
            cols in 1usize..7,
            seed in any::<u64>(),
        ) {
            let fld = f(p);
            let mut state = seed;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % p as u64) as u8
            };
            let a = Matrix::from_fn(fld, rows, cols, |_, _| next());
            let x = Matrix::from_fn(fld, cols, 2, |_, _| next());
            let b = a.mul(&x);
            let sol = a.solve(&b).unwrap().expect("constructed system must be solvable");
            prop_assert_eq!(a.mul(&sol.particular), b);
        }
    }
}
