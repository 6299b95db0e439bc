use super::field;
use super::matrix::FpMatrix;
use crate::error::{Error, Result};

/// Incrementally grown subspace kept in fully reduced echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    mat: FpMatrix,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(p: u32, cols: usize) -> Self {
        Echelon {
            mat: FpMatrix::zeros(p, 0, cols),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows(m: &FpMatrix) -> Self {
        let mut e = Echelon::new(m.p(), m.cols());
        for i in 0..m.rows() {
            e.insert(m, i);
        }
        e
    }

    /// Wrap rows already in reduced echelon form with their pivots.
    pub fn from_rref(mat: FpMatrix, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(mat.rows(), pivots.len());
        Echelon { mat, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn cols(&self) -> usize {
        self.mat.cols()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &FpMatrix {
        &self.mat
    }

    /// Reduce row `row` of `v` against the subspace, in place.
    pub fn reduce(&self, v: &mut FpMatrix, row: usize) {
        let p = self.mat.p();
        for (k, &c) in self.pivots.iter().enumerate() {
            let x = v.get(row, c);
            if x != 0 {
                v.add_row_from(row, &self.mat, k, field::neg(p, x));
            }
        }
    }

    pub fn contains(&self, v: &FpMatrix, row: usize) -> bool {
        let mut w = v.row_matrix(row);
        self.reduce(&mut w, 0);
        w.row_is_zero(0)
    }

    /// Add a vector; returns the new basis index when it was independent.
    pub fn insert(&mut self, v: &FpMatrix, row: usize) -> Option<usize> {
        let mut w = v.row_matrix(row);
        self.reduce(&mut w, 0);
        self.insert_reduced(w)
    }

    /// Insert a 1-row matrix already reduced against the subspace.
    pub fn insert_reduced(&mut self, mut w: FpMatrix) -> Option<usize> {
        let p = self.mat.p();
        let c = w.first_nonzero(0, 0)?;
        let lead = w.get(0, c);
        if lead != 1 {
            w.scale_row(0, field::inv(p, lead));
        }
        for k in 0..self.mat.rows() {
            let x = self.mat.get(k, c);
            if x != 0 {
                self.mat.add_row_from(k, &w, 0, field::neg(p, x));
            }
        }
        self.mat.push_row_from(&w, 0);
        self.pivots.push(c);
        Some(self.pivots.len() - 1)
    }

    /// Coordinates of `v` (one row) with respect to the stored basis rows.
    pub fn coordinates(&self, v: &FpMatrix, row: usize) -> Result<Vec<u32>> {
        let coords: Vec<u32> = self.pivots.iter().map(|&c| v.get(row, c)).collect();
        let mut w = v.row_matrix(row);
        self.reduce(&mut w, 0);
        if !w.row_is_zero(0) {
            return Err(Error::NoSolution("vector outside subspace".into()));
        }
        Ok(coords)
    }

    /// Coordinates of every row of `v`, as a matrix with `dim` columns.
    pub fn coordinate_matrix(&self, v: &FpMatrix) -> Result<FpMatrix> {
        let p = self.mat.p();
        let mut out = FpMatrix::zeros(p, v.rows(), self.dim());
        for i in 0..v.rows() {
            let c = self.coordinates(v, i)?;
            for (j, x) in c.into_iter().enumerate() {
                if x != 0 {
                    out.set(i, j, x);
                }
            }
        }
        Ok(out)
    }

    /// Basis in reduced echelon form, rows sorted by pivot.
    pub fn to_rref(&self) -> (FpMatrix, Vec<usize>) {
        let mut order: Vec<usize> = (0..self.pivots.len()).collect();
        order.sort_by_key(|&k| self.pivots[k]);
        let piv = order.iter().map(|&k| self.pivots[k]).collect();
        (self.mat.select_rows(&order), piv)
    }
}

/// Subspace of vectors fixed by every matrix in `mats`.
pub fn fixed_subspace(p: u32, dim: usize, mats: &[FpMatrix]) -> Result<FpMatrix> {
    if mats.is_empty() {
        return Ok(FpMatrix::identity(p, dim));
    }
    let id = FpMatrix::identity(p, dim);
    let mut stacked = FpMatrix::zeros(p, dim, 0);
    for m in mats {
        if m.rows() != dim || m.cols() != dim {
            return Err(Error::Dimension(
                "fixed_subspace needs square matrices of the module dimension".into(),
            ));
        }
        stacked = stacked.hcat(&m.sub(&id)?)?;
    }
    Ok(stacked.kernel_basis())
}

/// Intersection of two row spaces of the same width.
pub fn intersect(a: &FpMatrix, b: &FpMatrix) -> Result<FpMatrix> {
    let stacked = a.vcat(b)?;
    let ker = stacked.kernel_basis();
    let left = ker.col_block(0, a.rows());
    Ok(left.mul(a)?.image_basis())
}

/// Matrix of the restriction of `m` to the invariant subspace spanned by the
/// rows of `basis`, in the coordinates of that basis.
pub fn restrict_to_subspace(basis: &FpMatrix, m: &FpMatrix) -> Result<FpMatrix> {
    let e = Echelon::from_rows(basis);
    if e.dim() != basis.rows() {
        return Err(Error::Dimension("subspace basis is not independent".into()));
    }
    let img = basis.mul(m)?;
    let coords_echelon = e.coordinate_matrix(&img)?;
    // express echelon coordinates in terms of the original basis rows
    let change = e.coordinate_matrix(basis)?;
    coords_echelon.mul(&change.inverse()?)
}
