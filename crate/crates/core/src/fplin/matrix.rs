use std::fmt;

use super::field;
use crate::error::{Error, Result};

/// Dense matrix over F_p.
///
/// Rows are bit-packed into `u64` words when p = 2 and stored one residue per
/// byte otherwise. All vector conventions are row vectors: a matrix acts on
/// the right, `v -> v * A`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    stride: usize,
    bits: Vec<u64>,
    bytes: Vec<u8>,
}

#[inline]
fn words_for(cols: usize) -> usize {
    cols.div_ceil(64)
}

impl FpMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        if p == 2 {
            let stride = words_for(cols);
            FpMatrix {
                p,
                rows,
                cols,
                stride,
                bits: vec![0; rows * stride],
                bytes: Vec::new(),
            }
        } else {
            FpMatrix {
                p,
                rows,
                cols,
                stride: cols,
                bits: Vec::new(),
                bytes: vec![0; rows * cols],
            }
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u32, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        field::check_prime(p)?;
        let mut m = Self::zeros(p, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has length {} (expected {cols})",
                    r.len()
                )));
            }
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v % p);
            }
        }
        Ok(m)
    }

    pub fn from_fn(
        p: u32,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u32,
    ) -> Self {
        let mut m = Self::zeros(p, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j) % p;
                if v != 0 {
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    /// Row vector with the given entries.
    pub fn row_vector(p: u32, entries: &[u32]) -> Self {
        let mut m = Self::zeros(p, 1, entries.len());
        for (j, &v) in entries.iter().enumerate() {
            m.set(0, j, v % p);
        }
        m
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
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
    pub fn get(&self, i: usize, j: usize) -> u32 {
        debug_assert!(i < self.rows && j < self.cols);
        if self.p == 2 {
            ((self.bits[i * self.stride + j / 64] >> (j % 64)) & 1) as u32
        } else {
            self.bytes[i * self.stride + j] as u32
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(i < self.rows && j < self.cols);
        if self.p == 2 {
            let w = &mut self.bits[i * self.stride + j / 64];
            if v & 1 == 1 {
                *w |= 1 << (j % 64);
            } else {
                *w &= !(1 << (j % 64));
            }
        } else {
            self.bytes[i * self.stride + j] = (v % self.p) as u8;
        }
    }

    /// Dense copy of row `i` as residues.
    pub fn row(&self, i: usize) -> Vec<u32> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// New 1-row matrix holding row `i`.
    pub fn row_matrix(&self, i: usize) -> FpMatrix {
        self.select_rows(&[i])
    }

    #[inline]
    pub(crate) fn words(&self, i: usize) -> &[u64] {
        &self.bits[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub(crate) fn words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.bits[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    fn bytes_row(&self, i: usize) -> &[u8] {
        &self.bytes[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        if self.p == 2 {
            self.words(i).iter().all(|&w| w == 0)
        } else {
            self.bytes_row(i).iter().all(|&b| b == 0)
        }
    }

    pub fn is_zero(&self) -> bool {
        if self.p == 2 {
            self.bits.iter().all(|&w| w == 0)
        } else {
            self.bytes.iter().all(|&b| b == 0)
        }
    }

    /// Number of nonzero entries in row `i`.
    pub fn row_weight(&self, i: usize) -> usize {
        if self.p == 2 {
            self.words(i).iter().map(|w| w.count_ones() as usize).sum()
        } else {
            self.bytes_row(i).iter().filter(|&&b| b != 0).count()
        }
    }

    /// First column `>= from` with a nonzero entry in row `i`.
    pub fn first_nonzero(&self, i: usize, from: usize) -> Option<usize> {
        if from >= self.cols {
            return None;
        }
        if self.p == 2 {
            let row = self.words(i);
            let mut w = from / 64;
            let mut cur = row[w] & (!0u64 << (from % 64));
            loop {
                if cur != 0 {
                    let c = w * 64 + cur.trailing_zeros() as usize;
                    return if c < self.cols { Some(c) } else { None };
                }
                w += 1;
                if w >= self.stride {
                    return None;
                }
                cur = row[w];
            }
        } else {
            self.bytes_row(i)[from..]
                .iter()
                .position(|&b| b != 0)
                .map(|k| k + from)
        }
    }

    /// `row[dst] += c * row[src]`, touching only columns from `from_col` on.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, c: u32, from_col: usize) {
        if c % self.p == 0 || dst == src {
            if dst == src && c % self.p != 0 {
                self.scale_row(dst, field::add(self.p, 1, c % self.p));
            }
            return;
        }
        let s = self.stride;
        if self.p == 2 {
            let w0 = from_col / 64;
            let (a, b) = if dst < src {
                let (lo, hi) = self.bits.split_at_mut(src * s);
                (&mut lo[dst * s..dst * s + s], &hi[..s])
            } else {
                let (lo, hi) = self.bits.split_at_mut(dst * s);
                (&mut hi[..s], &lo[src * s..src * s + s])
            };
            for k in w0..s {
                a[k] ^= b[k];
            }
        } else {
            let p = self.p;
            let (a, b) = if dst < src {
                let (lo, hi) = self.bytes.split_at_mut(src * s);
                (&mut lo[dst * s..dst * s + s], &hi[..s])
            } else {
                let (lo, hi) = self.bytes.split_at_mut(dst * s);
                (&mut hi[..s], &lo[src * s..src * s + s])
            };
            axpy_bytes(p, &mut a[from_col..], &b[from_col..], c);
        }
    }

    /// `self.row[dst] += c * other.row[src]`.
    pub fn add_row_from(&mut self, dst: usize, other: &FpMatrix, src: usize, c: u32) {
        debug_assert_eq!(self.cols, other.cols);
        if c % self.p == 0 {
            return;
        }
        if self.p == 2 {
            let s = self.stride;
            let a = &mut self.bits[dst * s..dst * s + s];
            let b = other.words(src);
            for k in 0..s {
                a[k] ^= b[k];
            }
        } else {
            let s = self.stride;
            let p = self.p;
            let b = other.bytes_row(src);
            axpy_bytes(p, &mut self.bytes[dst * s..dst * s + s], b, c);
        }
    }

    pub fn scale_row(&mut self, i: usize, c: u32) {
        let c = c % self.p;
        if self.p == 2 {
            if c == 0 {
                self.words_mut(i).fill(0);
            }
        } else {
            let p = self.p;
            let s = self.stride;
            for b in &mut self.bytes[i * s..(i + 1) * s] {
                *b = ((*b as u32 * c) % p) as u8;
            }
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        if self.p == 2 {
            for k in 0..s {
                self.bits.swap(a * s + k, b * s + k);
            }
        } else {
            for k in 0..s {
                self.bytes.swap(a * s + k, b * s + k);
            }
        }
    }

    /// Append a row taken from another matrix of the same width.
    pub fn push_row_from(&mut self, other: &FpMatrix, i: usize) {
        debug_assert_eq!(self.cols, other.cols);
        if self.p == 2 {
            self.bits.extend_from_slice(other.words(i));
        } else {
            self.bytes.extend_from_slice(other.bytes_row(i));
        }
        self.rows += 1;
    }

    pub fn push_zero_row(&mut self) {
        if self.p == 2 {
            self.bits.extend(std::iter::repeat(0).take(self.stride));
        } else {
            self.bytes.extend(std::iter::repeat(0).take(self.stride));
        }
        self.rows += 1;
    }

    pub fn push_row(&mut self, entries: &[u32]) {
        debug_assert_eq!(entries.len(), self.cols);
        self.push_zero_row();
        let r = self.rows - 1;
        for (j, &v) in entries.iter().enumerate() {
            if v % self.p != 0 {
                self.set(r, j, v);
            }
        }
    }

    pub fn truncate_rows(&mut self, n: usize) {
        if n < self.rows {
            self.rows = n;
            if self.p == 2 {
                self.bits.truncate(n * self.stride);
            } else {
                self.bytes.truncate(n * self.stride);
            }
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.p, 0, self.cols);
        for &i in idx {
            m.push_row_from(self, i);
        }
        m
    }

    pub fn select_cols(&self, idx: &[usize]) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.p, self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                let v = self.get(i, j);
                if v != 0 {
                    m.set(i, k, v);
                }
            }
        }
        m
    }

    /// Columns `start..start+len`.
    pub fn col_block(&self, start: usize, len: usize) -> FpMatrix {
        let idx: Vec<usize> = (start..start + len).collect();
        self.select_cols(&idx)
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            if self.p == 2 {
                let mut c = self.first_nonzero(i, 0);
                while let Some(j) = c {
                    t.set(j, i, 1);
                    c = self.first_nonzero(i, j + 1);
                }
            } else {
                for j in 0..self.cols {
                    let v = self.get(i, j);
                    if v != 0 {
                        t.set(j, i, v);
                    }
                }
            }
        }
        t
    }

    fn check_prime(&self, other: &FpMatrix) -> Result<()> {
        if self.p != other.p {
            Err(Error::PrimeMismatch(self.p, other.p))
        } else {
            Ok(())
        }
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.check_prime(other)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = FpMatrix::zeros(self.p, self.rows, other.cols);
        if self.p == 2 {
            let s = out.stride;
            for i in 0..self.rows {
                let mut c = self.first_nonzero(i, 0);
                while let Some(k) = c {
                    let src = other.words(k);
                    let dst = &mut out.bits[i * s..(i + 1) * s];
                    for w in 0..s {
                        dst[w] ^= src[w];
                    }
                    c = self.first_nonzero(i, k + 1);
                }
            }
        } else {
            let p = self.p;
            let n = other.cols;
            let mut acc = vec![0u32; n];
            for i in 0..self.rows {
                acc.iter_mut().for_each(|a| *a = 0);
                let mut pending = 0u32;
                for k in 0..self.cols {
                    let a = self.bytes[i * self.stride + k] as u32;
                    if a == 0 {
                        continue;
                    }
                    let row = other.bytes_row(k);
                    for j in 0..n {
                        acc[j] += a * row[j] as u32;
                    }
                    pending += 1;
                    if pending >= 60000 {
                        acc.iter_mut().for_each(|x| *x %= p);
                        pending = 0;
                    }
                }
                for j in 0..n {
                    out.bytes[i * n + j] = (acc[j] % p) as u8;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.check_prime(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(
                "cannot add matrices of different shapes".into(),
            ));
        }
        let mut out = self.clone();
        if self.p == 2 {
            for (a, b) in out.bits.iter_mut().zip(&other.bits) {
                *a ^= b;
            }
        } else {
            let p = self.p;
            for (a, &b) in out.bytes.iter_mut().zip(&other.bytes) {
                *a = field::add(p, *a as u32, b as u32) as u8;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.add(&other.scaled(self.p - 1))
    }

    pub fn scaled(&self, c: u32) -> FpMatrix {
        let mut out = self.clone();
        for i in 0..out.rows {
            out.scale_row(i, c);
        }
        out
    }

    /// Kronecker product: `(a ⊗ b)` with row index `i * b.rows + k`.
    pub fn kron(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.check_prime(other)?;
        let p = self.p;
        let mut out = FpMatrix::zeros(p, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if b != 0 {
                            out.set(i * other.rows + k, j * other.cols + l, field::mul(p, a, b));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Stack `self` above `other`.
    pub fn vcat(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.check_prime(other)?;
        if self.cols != other.cols {
            return Err(Error::Dimension("vcat with different widths".into()));
        }
        let mut out = self.clone();
        for i in 0..other.rows {
            out.push_row_from(other, i);
        }
        Ok(out)
    }

    /// Place `self` left of `other`.
    pub fn hcat(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.check_prime(other)?;
        if self.rows != other.rows {
            return Err(Error::Dimension("hcat with different heights".into()));
        }
        let mut out = FpMatrix::zeros(self.p, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            out.copy_row_into(i, 0, self, i);
            out.copy_row_into(i, self.cols, other, i);
        }
        Ok(out)
    }

    /// Copy row `src` of `other` into row `dst` of `self` starting at column `offset`.
    pub fn copy_row_into(&mut self, dst: usize, offset: usize, other: &FpMatrix, src: usize) {
        if self.p == 2 && offset % 64 == 0 {
            let w0 = offset / 64;
            let n = other.stride;
            let s = self.stride;
            let srcw = other.words(src);
            let dstw = &mut self.bits[dst * s..(dst + 1) * s];
            for k in 0..n {
                if srcw[k] != 0 {
                    dstw[w0 + k] |= srcw[k];
                }
            }
            return;
        }
        if self.p == 2 {
            let mut c = other.first_nonzero(src, 0);
            while let Some(j) = c {
                self.set(dst, offset + j, 1);
                c = other.first_nonzero(src, j + 1);
            }
        } else {
            for j in 0..other.cols {
                let v = other.get(src, j);
                if v != 0 {
                    self.set(dst, offset + j, v);
                }
            }
        }
    }

    /// In-place reduction to reduced row echelon form. Returns pivot columns;
    /// the first `pivots.len()` rows are the nonzero rows.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        self.rref_limited(self.cols)
    }

    /// Reduced echelon form, choosing pivots only in columns `< limit`.
    pub fn rref_limited(&mut self, limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        let limit = limit.min(self.cols);
        for c in 0..limit {
            if r == self.rows {
                break;
            }
            let mut piv = None;
            for i in r..self.rows {
                if self.get(i, c) != 0 {
                    piv = Some(i);
                    break;
                }
            }
            let Some(pi) = piv else { continue };
            self.swap_rows(r, pi);
            let lead = self.get(r, c);
            if lead != 1 {
                self.scale_row(r, field::inv(self.p, lead));
            }
            for i in 0..self.rows {
                if i != r {
                    let v = self.get(i, c);
                    if v != 0 {
                        self.add_row_multiple(i, r, field::neg(self.p, v), c);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form with pivot columns.
    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place();
        m.truncate_rows(piv.len());
        (m, piv)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the row space, in reduced echelon form.
    pub fn image_basis(&self) -> FpMatrix {
        self.rref().0
    }

    /// Basis (reduced echelon) of the left kernel `{x : x * self = 0}`.
    pub fn kernel_basis(&self) -> FpMatrix {
        let (_, ker) = self.solver_and_kernel();
        ker
    }

    /// Echelonize `[self | I]`: returns a solver for `x * self = y` and the
    /// left kernel in reduced echelon form.
    pub fn solver_and_kernel(&self) -> (Solver, FpMatrix) {
        let n = self.rows;
        let c = self.cols;
        let mut aug = FpMatrix::zeros(self.p, n, c + n);
        for i in 0..n {
            aug.copy_row_into(i, 0, self, i);
            aug.set(i, c + i, 1);
        }
        let pivots = aug.rref_limited(c);
        let rank = pivots.len();
        let mut ker = FpMatrix::zeros(self.p, 0, n);
        for i in rank..n {
            let mut row = FpMatrix::zeros(self.p, 1, n);
            row.copy_cols_from(0, &aug, i, c, n);
            ker.push_row_from(&row, 0);
        }
        ker.rref_in_place();
        aug.truncate_rows(rank);
        (
            Solver {
                p: self.p,
                cols: c,
                unknowns: n,
                aug,
                pivots,
            },
            ker,
        )
    }

    /// Copy `len` columns of `other` row `src` starting at `start` into `self` row `dst`.
    pub(crate) fn copy_cols_from(
        &mut self,
        dst: usize,
        other: &FpMatrix,
        src: usize,
        start: usize,
        len: usize,
    ) {
        if self.p == 2 {
            let mut c = other.first_nonzero(src, start);
            while let Some(j) = c {
                if j >= start + len {
                    break;
                }
                self.set(dst, j - start, 1);
                c = other.first_nonzero(src, j + 1);
            }
        } else {
            for j in 0..len {
                let v = other.get(src, start + j);
                if v != 0 {
                    self.set(dst, j, v);
                }
            }
        }
    }

    /// Some `x` with `x * self = y`, or an error if `y` is not in the row space.
    pub fn solve(&self, y: &FpMatrix) -> Result<FpMatrix> {
        self.solver_and_kernel().0.solve(y)
    }

    pub fn inverse(&self) -> Result<FpMatrix> {
        if self.rows != self.cols {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let (solver, ker) = self.solver_and_kernel();
        if ker.rows() > 0 {
            return Err(Error::Singular);
        }
        solver.solve(&FpMatrix::identity(self.p, n))
    }

    /// Multiply row vector(s) by the matrix; shorthand for `v.mul(self)`.
    pub fn apply(&self, v: &FpMatrix) -> Result<FpMatrix> {
        v.mul(self)
    }

    /// Hex encoding of row `i` (p = 2) or a digit string (odd p).
    pub fn row_to_text(&self, i: usize) -> String {
        if self.p == 2 {
            self.words(i)
                .iter()
                .map(|w| format!("{w:016x}"))
                .collect::<Vec<_>>()
                .join("")
        } else {
            self.bytes_row(i)
                .iter()
                .map(|&b| b.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    pub fn set_row_from_text(&mut self, i: usize, text: &str) -> Result<()> {
        let bad = || Error::Cache(format!("malformed matrix row: {text:.40}"));
        if self.p == 2 {
            if text.len() != self.stride * 16 {
                return Err(bad());
            }
            for k in 0..self.stride {
                let w = u64::from_str_radix(&text[16 * k..16 * k + 16], 16).map_err(|_| bad())?;
                self.bits[i * self.stride + k] = w;
            }
            if self.cols % 64 != 0 && self.stride > 0 {
                let last = self.bits[i * self.stride + self.stride - 1];
                if last >> (self.cols % 64) != 0 {
                    return Err(bad());
                }
            }
        } else {
            let parts: Vec<&str> = if self.cols == 0 {
                Vec::new()
            } else {
                text.split(',').collect()
            };
            if parts.len() != self.cols {
                return Err(bad());
            }
            for (j, s) in parts.iter().enumerate() {
                let v: u32 = s.parse().map_err(|_| bad())?;
                if v >= self.p {
                    return Err(bad());
                }
                self.set(i, j, v);
            }
        }
        Ok(())
    }
}

fn axpy_bytes(p: u32, a: &mut [u8], b: &[u8], c: u32) {
    for (x, &y) in a.iter_mut().zip(b) {
        if y != 0 {
            *x = ((*x as u32 + c * y as u32) % p) as u8;
        }
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix(p={}, {}x{})", self.p, self.rows, self.cols)?;
        for i in 0..self.rows.min(32) {
            let r: Vec<String> = self.row(i).iter().take(64).map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", r.join(" "))?;
        }
        Ok(())
    }
}

/// Precomputed reduction for repeated solves of `x * A = y`.
#[derive(Clone, Debug)]
pub struct Solver {
    p: u32,
    cols: usize,
    unknowns: usize,
    aug: FpMatrix,
    pivots: Vec<usize>,
}

impl Solver {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Solve for each row of `y` independently.
    pub fn solve(&self, y: &FpMatrix) -> Result<FpMatrix> {
        if y.cols() != self.cols {
            return Err(Error::Dimension(format!(
                "right side has {} columns, expected {}",
                y.cols(),
                self.cols
            )));
        }
        let mut out = FpMatrix::zeros(self.p, y.rows(), self.unknowns);
        let mut buf = FpMatrix::zeros(self.p, 1, self.cols + self.unknowns);
        for r in 0..y.rows() {
            if self.p == 2 {
                buf.bits.fill(0);
            } else {
                buf.bytes.fill(0);
            }
            buf.copy_row_into(0, 0, y, r);
            for (k, &c) in self.pivots.iter().enumerate() {
                let v = buf.get(0, c);
                if v != 0 {
                    buf.add_row_from(0, &self.aug, k, field::neg(self.p, v));
                }
            }
            if buf.first_nonzero(0, 0).is_some_and(|c| c < self.cols) {
                return Err(Error::NoSolution("vector is not in the row space".into()));
            }
            let mut z = FpMatrix::zeros(self.p, 1, self.unknowns);
            z.copy_cols_from(0, &buf, 0, self.cols, self.unknowns);
            if self.p != 2 {
                z = z.scaled(self.p - 1);
            }
            out.copy_row_into(r, 0, &z, 0);
        }
        Ok(out)
    }

    /// Whether `y` (one row) lies in the row space.
    pub fn contains(&self, y: &FpMatrix, row: usize) -> bool {
        let mut buf = FpMatrix::zeros(self.p, 1, self.cols + self.unknowns);
        buf.copy_row_into(0, 0, y, row);
        for (k, &c) in self.pivots.iter().enumerate() {
            let v = buf.get(0, c);
            if v != 0 {
                buf.add_row_from(0, &self.aug, k, field::neg(self.p, v));
            }
        }
        !buf.first_nonzero(0, 0).is_some_and(|c| c < self.cols)
    }
}
