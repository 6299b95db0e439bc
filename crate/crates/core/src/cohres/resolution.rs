use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::fplin::{field, Echelon, FpMatrix, Solver};
use crate::grpcore::GroupRef;

/// Default cap on the width of a flattened boundary matrix.
pub const DEFAULT_DIM_BUDGET: usize = 1 << 15;

/// Minimal free resolution `F_n = F_p[G]^{b_n}` of the trivial module.
///
/// The basis of `F_n` is `e_k g` with flattened index `k |G| + g`. Only the
/// boundaries of the free generators are stored; `d(e_k g) = d(e_k) g`.
#[derive(Debug)]
pub struct Resolution {
    pub group: GroupRef,
    pub p: u32,
    ranks: Vec<usize>,
    /// `boundaries[n]`, for `n >= 1`, has one row per generator of `F_n`.
    boundaries: Vec<FpMatrix>,
    solvers: Vec<OnceLock<Solver>>,
    /// Kernel of the last boundary, kept for extension.
    last_kernel: Option<FpMatrix>,
    /// Right multiplication tables: `perm[g][x] = x g`.
    perm: Vec<Vec<u32>>,
    budget: usize,
    truncated: bool,
}

impl Clone for Resolution {
    fn clone(&self) -> Self {
        Resolution {
            group: self.group.clone(),
            p: self.p,
            ranks: self.ranks.clone(),
            boundaries: self.boundaries.clone(),
            solvers: self
                .solvers
                .iter()
                .map(|s| {
                    let c = OnceLock::new();
                    if let Some(v) = s.get() {
                        let _ = c.set(v.clone());
                    }
                    c
                })
                .collect(),
            last_kernel: self.last_kernel.clone(),
            perm: self.perm.clone(),
            budget: self.budget,
            truncated: self.truncated,
        }
    }
}

/// Right translate of a flattened vector (one row) by a group element.
pub fn translate_row(
    v: &FpMatrix,
    row: usize,
    perm: &[u32],
    order: usize,
    out: &mut FpMatrix,
    out_row: usize,
) {
    let p = v.p();
    let mut c = v.first_nonzero(row, 0);
    while let Some(j) = c {
        let (k, x) = (j / order, j % order);
        let val = if p == 2 { 1 } else { v.get(row, j) };
        out.set(out_row, k * order + perm[x] as usize, val);
        c = v.first_nonzero(row, j + 1);
    }
}

/// All translates `row * g`, one block of `|G|` rows per input row.
pub fn all_translates(v: &FpMatrix, perm: &[Vec<u32>]) -> FpMatrix {
    let order = perm.len();
    let mut out = FpMatrix::zeros(v.p(), v.rows() * order, v.cols());
    for i in 0..v.rows() {
        for (g, pg) in perm.iter().enumerate() {
            translate_row(v, i, pg, order, &mut out, i * order + g);
        }
    }
    out
}

/// Sum of the block `k` coefficients: the augmentation of the `e_k` component.
pub fn augmentation(v: &FpMatrix, row: usize, k: usize, order: usize) -> u32 {
    let p = v.p();
    let mut s = 0;
    for x in 0..order {
        s = field::add(p, s, v.get(row, k * order + x));
    }
    s
}

pub(crate) fn perm_tables(g: &GroupRef) -> Vec<Vec<u32>> {
    let n = g.order();
    (0..n)
        .map(|h| (0..n).map(|x| g.mul(x, h) as u32).collect())
        .collect()
}

impl Resolution {
    pub fn compute(group: &GroupRef, p: u32, max_degree: usize) -> Result<Self> {
        Self::compute_with_budget(group, p, max_degree, DEFAULT_DIM_BUDGET)
    }

    pub fn compute_with_budget(
        group: &GroupRef,
        p: u32,
        max_degree: usize,
        budget: usize,
    ) -> Result<Self> {
        if !group.is_p_group(p) {
            return Err(Error::InvalidGroup(format!(
                "resolutions are built for {p}-groups"
            )));
        }
        let n = group.order();
        // kernel of the augmentation: e_x - e_1
        let mut k0 = FpMatrix::zeros(p, n - 1, n);
        for x in 1..n {
            k0.set(x - 1, x, 1);
            k0.set(x - 1, 0, p - 1);
        }
        let mut res = Resolution {
            group: group.clone(),
            p,
            ranks: vec![1],
            boundaries: vec![FpMatrix::zeros(p, 0, 0)],
            solvers: vec![OnceLock::new()],
            last_kernel: Some(k0),
            perm: perm_tables(group),
            budget,
            truncated: false,
        };
        res.extend_to(max_degree)?;
        Ok(res)
    }

    /// Like [`Resolution::compute_with_budget`], but stops at the last degree
    /// within budget instead of failing; see [`Resolution::is_truncated`].
    pub fn compute_partial(
        group: &GroupRef,
        p: u32,
        max_degree: usize,
        budget: usize,
    ) -> Result<Self> {
        let mut res = Self::compute_with_budget(group, p, 0, budget)?;
        match res.extend_to(max_degree) {
            Ok(()) => Ok(res),
            Err(Error::DimBudget { .. }) => {
                res.truncated = true;
                Ok(res)
            }
            Err(e) => Err(e),
        }
    }

    /// Whether construction stopped early on the dimension budget.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Rebuild from stored generator boundaries (e.g. read from a cache).
    pub fn from_boundaries(
        group: &GroupRef,
        p: u32,
        ranks: Vec<usize>,
        boundaries: Vec<FpMatrix>,
    ) -> Result<Self> {
        let n = group.order();
        if ranks.first() != Some(&1) || boundaries.len() != ranks.len() {
            return Err(Error::Dimension(
                "resolution ranks and boundaries disagree".into(),
            ));
        }
        for d in 1..ranks.len() {
            let b = &boundaries[d];
            if b.rows() != ranks[d] || b.cols() != ranks[d - 1] * n || b.p() != p {
                return Err(Error::Dimension(format!(
                    "boundary {d} has the wrong shape"
                )));
            }
        }
        let solvers = (0..ranks.len()).map(|_| OnceLock::new()).collect();
        Ok(Resolution {
            group: group.clone(),
            p,
            ranks,
            boundaries,
            solvers,
            last_kernel: None,
            perm: perm_tables(group),
            budget: DEFAULT_DIM_BUDGET,
            truncated: false,
        })
    }

    pub fn max_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    /// Betti numbers `b_0, ..., b_D` (the dimensions of `H^n(G; F_p)`).
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks[n]
    }

    pub fn perm(&self) -> &[Vec<u32>] {
        &self.perm
    }

    /// Generator rows of `d_n`.
    pub fn boundary(&self, n: usize) -> &FpMatrix {
        &self.boundaries[n]
    }

    /// Full matrix of `d_n` on the basis `e_k g`.
    pub fn full_boundary(&self, n: usize) -> FpMatrix {
        all_translates(&self.boundaries[n], &self.perm)
    }

    /// Solver for `x d_n = y`.
    pub fn solver(&self, n: usize) -> Result<&Solver> {
        if n == 0 || n > self.max_degree() {
            return Err(Error::DegreeOutOfRange {
                requested: n,
                available: self.max_degree(),
            });
        }
        if let Some(s) = self.solvers[n].get() {
            return Ok(s);
        }
        let (s, _) = self.full_boundary(n).solver_and_kernel();
        let _ = self.solvers[n].set(s);
        Ok(self.solvers[n].get().unwrap())
    }

    /// Every boundary entry lies in the augmentation ideal.
    pub fn is_minimal(&self) -> bool {
        let n = self.group.order();
        (1..=self.max_degree()).all(|d| {
            let b = &self.boundaries[d];
            (0..b.rows()).all(|r| (0..self.ranks[d - 1]).all(|k| augmentation(b, r, k, n) == 0))
        })
    }

    /// `rank d_n + rank d_{n+1} = b_n |G|` for `1 <= n < D`, and `d_1` maps
    /// onto the augmentation kernel.
    pub fn verify_exactness(&self) -> Result<()> {
        let n = self.group.order();
        let ranks: Vec<usize> = (1..=self.max_degree())
            .map(|d| self.full_boundary(d).rank())
            .collect();
        if let Some(&r1) = ranks.first() {
            if r1 != n - 1 {
                return Err(Error::Invariant(format!(
                    "d_1 has rank {r1}, expected {}",
                    n - 1
                )));
            }
        }
        for d in 1..self.max_degree() {
            if ranks[d - 1] + ranks[d] != self.ranks[d] * n {
                return Err(Error::Invariant(format!(
                    "resolution is not exact in degree {d}"
                )));
            }
        }
        Ok(())
    }

    pub fn extend_to(&mut self, max_degree: usize) -> Result<()> {
        let p = self.p;
        let n = self.group.order();
        while self.max_degree() < max_degree {
            let d = self.max_degree();
            let kernel = match self.last_kernel.take() {
                Some(k) => k,
                None => {
                    if d == 0 {
                        let mut k0 = FpMatrix::zeros(p, n - 1, n);
                        for x in 1..n {
                            k0.set(x - 1, x, 1);
                            k0.set(x - 1, 0, p - 1);
                        }
                        k0
                    } else {
                        let (s, k) = self.full_boundary(d).solver_and_kernel();
                        let _ = self.solvers[d].set(s);
                        k
                    }
                }
            };
            let gens = self.minimal_generators(&kernel)?;
            let b = gens.rows();
            let width = b * n;
            if width.max(self.ranks[d] * n) > self.budget {
                return Err(Error::DimBudget {
                    needed: width,
                    limit: self.budget,
                });
            }
            let full = all_translates(&gens, &self.perm);
            let (solver, next_kernel) = full.solver_and_kernel();
            if solver.rank() != kernel.rows() {
                return Err(Error::Invariant(format!(
                    "boundary {} has rank {} but the kernel has dimension {}",
                    d + 1,
                    solver.rank(),
                    kernel.rows()
                )));
            }
            self.ranks.push(b);
            self.boundaries.push(gens);
            let cell = OnceLock::new();
            let _ = cell.set(solver);
            self.solvers.push(cell);
            self.last_kernel = Some(next_kernel);
        }
        Ok(())
    }

    /// Minimal generating set of a submodule given by a spanning set: keep
    /// vectors independent modulo the radical `sum_g K (g - 1)`.
    fn minimal_generators(&self, k: &FpMatrix) -> Result<FpMatrix> {
        let p = self.p;
        let n = self.group.order();
        let cols = k.cols();
        let gens = self.group.generators();
        let mut rad = FpMatrix::zeros(p, k.rows() * gens.len(), cols);
        for (gi, &g) in gens.iter().enumerate() {
            let pg = &self.perm[g];
            for i in 0..k.rows() {
                let r = gi * k.rows() + i;
                translate_row(k, i, pg, n, &mut rad, r);
                rad.add_row_from(r, k, i, p - 1);
            }
        }
        let piv = rad.rref_in_place();
        rad.truncate_rows(piv.len());
        let mut span = Echelon::from_rref(rad, piv);
        let mut out = FpMatrix::zeros(p, 0, cols);
        for i in 0..k.rows() {
            let mut w = k.row_matrix(i);
            span.reduce(&mut w, 0);
            if !w.row_is_zero(0) {
                out.push_row_from(k, i);
                span.insert_reduced(w);
            }
        }
        Ok(out)
    }
}
