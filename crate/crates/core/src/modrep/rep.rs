use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fplin::{field, fixed_subspace, restrict_to_subspace, Echelon, FpMatrix};
use crate::grpcore::{GroupHom, GroupRef, Subgroup};

/// A right F_p[G]-module: one matrix per group generator, acting on row
/// vectors, with `M_{gh} = M_g M_h`.
#[derive(Clone, Debug)]
pub struct FpRep {
    pub group: GroupRef,
    pub p: u32,
    pub dim: usize,
    pub gens: Vec<FpMatrix>,
}

impl FpRep {
    /// Checks every relation of the Cayley graph.
    pub fn new(group: GroupRef, p: u32, gens: Vec<FpMatrix>) -> Result<Self> {
        let rep = Self::trusted(group, p, gens)?;
        rep.validate()?;
        Ok(rep)
    }

    /// Shapes are checked; relations are taken on trust.
    pub fn trusted(group: GroupRef, p: u32, gens: Vec<FpMatrix>) -> Result<Self> {
        if gens.len() != group.generators().len() {
            return Err(Error::InvalidRep(format!(
                "{} matrices for {} generators",
                gens.len(),
                group.generators().len()
            )));
        }
        let dim = gens.first().map_or(0, |m| m.rows());
        for m in &gens {
            if m.rows() != dim || m.cols() != dim || m.p() != p {
                return Err(Error::InvalidRep(
                    "generator matrices of inconsistent shape or prime".into(),
                ));
            }
        }
        Ok(FpRep {
            group,
            p,
            dim,
            gens,
        })
    }

    /// Module of a given dimension; needed when the group has no generators.
    pub fn trusted_with_dim(
        group: GroupRef,
        p: u32,
        dim: usize,
        gens: Vec<FpMatrix>,
    ) -> Result<Self> {
        let mut r = Self::trusted(group, p, gens)?;
        r.dim = dim;
        Ok(r)
    }

    pub fn trivial(group: &GroupRef, p: u32) -> Self {
        let gens = group
            .generators()
            .iter()
            .map(|_| FpMatrix::identity(p, 1))
            .collect();
        FpRep {
            group: group.clone(),
            p,
            dim: 1,
            gens,
        }
    }

    /// Matrices of every element, indexed by element.
    pub fn element_matrices(&self) -> Vec<FpMatrix> {
        let g = &self.group;
        let tree = g.spanning_tree();
        let mut mats: Vec<Option<FpMatrix>> = vec![None; g.order()];
        mats[0] = Some(FpMatrix::identity(self.p, self.dim));
        for &x in g.bfs_order().iter().skip(1) {
            let (pred, k) = tree[x];
            let m = mats[pred]
                .as_ref()
                .unwrap()
                .mul(&self.gens[k])
                .expect("shapes agree");
            mats[x] = Some(m);
        }
        mats.into_iter().map(|m| m.unwrap()).collect()
    }

    /// Matrix of a single element along a word in the generators.
    pub fn matrix_of(&self, x: usize) -> FpMatrix {
        let tree = self.group.spanning_tree();
        let mut word = Vec::new();
        let mut y = x;
        while y != 0 {
            let (pred, k) = tree[y];
            word.push(k);
            y = pred;
        }
        let mut m = FpMatrix::identity(self.p, self.dim);
        for &k in word.iter().rev() {
            m = m.mul(&self.gens[k]).expect("shapes agree");
        }
        m
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        let mats = self.element_matrices();
        for x in 0..g.order() {
            for (k, &s) in g.generators().iter().enumerate() {
                let lhs = mats[x].mul(&self.gens[k])?;
                if lhs != mats[g.mul(x, s)] {
                    return Err(Error::InvalidRep(format!(
                        "M_{x} M_{s} differs from M_{}",
                        g.mul(x, s)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Action restricted to an invariant subspace.
    pub fn subrep(&self, basis: &FpMatrix) -> Result<FpRep> {
        let gens = self
            .gens
            .iter()
            .map(|m| restrict_to_subspace(basis, m))
            .collect::<Result<Vec<_>>>()?;
        FpRep::trusted_with_dim(self.group.clone(), self.p, basis.rows(), gens)
    }

    /// Sub and quotient actions for a submodule with echelon basis `e`.
    pub fn sub_and_quotient(&self, e: &Echelon) -> Result<(FpRep, FpRep)> {
        let p = self.p;
        let n = self.dim;
        let r = e.dim();
        let basis = e.basis();
        let piv = e.pivots();
        let mut is_piv = vec![false; n];
        for &c in piv {
            is_piv[c] = true;
        }
        let nonpiv: Vec<usize> = (0..n).filter(|&c| !is_piv[c]).collect();
        let mut subs = Vec::new();
        let mut quots = Vec::new();
        for a in &self.gens {
            let img = basis.mul(a)?;
            let mut s = FpMatrix::zeros(p, r, r);
            for i in 0..r {
                for (j, &c) in piv.iter().enumerate() {
                    let v = img.get(i, c);
                    if v != 0 {
                        s.set(i, j, v);
                    }
                }
            }
            subs.push(s);
            let mut rows = a.select_rows(&nonpiv);
            for i in 0..rows.rows() {
                for (k, &c) in piv.iter().enumerate() {
                    let v = rows.get(i, c);
                    if v != 0 {
                        rows.add_row_from(i, basis, k, field::neg(p, v));
                    }
                }
            }
            quots.push(rows.select_cols(&nonpiv));
        }
        Ok((
            FpRep::trusted_with_dim(self.group.clone(), p, r, subs)?,
            FpRep::trusted_with_dim(self.group.clone(), p, n - r, quots)?,
        ))
    }

    /// Smallest submodule containing the rows of `v`.
    pub fn spin(&self, v: &FpMatrix) -> Echelon {
        spin(&self.gens, v, self.dim, self.p)
    }

    pub fn is_trivial(&self) -> bool {
        self.dim == 1 && self.gens.iter().all(|m| m.get(0, 0) == 1)
    }
}

/// Smallest subspace containing the rows of `v` and stable under `gens`.
pub fn spin(gens: &[FpMatrix], v: &FpMatrix, dim: usize, p: u32) -> Echelon {
    let mut e = Echelon::new(p, dim);
    let mut queue: Vec<FpMatrix> = Vec::new();
    for i in 0..v.rows() {
        let mut w = v.row_matrix(i);
        e.reduce(&mut w, 0);
        if !w.row_is_zero(0) {
            queue.push(w.clone());
            e.insert_reduced(w);
        }
    }
    let mut k = 0;
    while k < queue.len() {
        if e.dim() == dim {
            break;
        }
        let u = queue[k].clone();
        for a in gens {
            let mut w = u.mul(a).expect("shapes agree");
            e.reduce(&mut w, 0);
            if !w.row_is_zero(0) {
                queue.push(w.clone());
                e.insert_reduced(w);
            }
        }
        k += 1;
    }
    e
}

/// Right cosets `Hx`: coset label per element and the least element of each.
pub fn right_cosets(g: &GroupRef, h: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = g.order();
    let mut label = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if label[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &y in h {
            label[g.mul(y, x)] = id;
        }
    }
    (label, reps)
}

/// `F_p[H\G]` with basis the right cosets of `H`, ordered by least element.
pub fn permutation_module(g: &GroupRef, h: &Subgroup, p: u32) -> FpRep {
    let (label, reps) = right_cosets(g, h.elements());
    let m = reps.len();
    let gens = g
        .generators()
        .iter()
        .map(|&s| {
            let mut a = FpMatrix::zeros(p, m, m);
            for (i, &t) in reps.iter().enumerate() {
                a.set(i, label[g.mul(t, s)], 1);
            }
            a
        })
        .collect();
    FpRep {
        group: g.clone(),
        p,
        dim: m,
        gens,
    }
}

pub fn regular_module(g: &GroupRef, p: u32) -> FpRep {
    permutation_module(g, &Subgroup::trivial(), p)
}

/// Restriction along a homomorphism into the module's group.
pub fn restrict(m: &FpRep, f: &GroupHom) -> Result<FpRep> {
    if !Arc::ptr_eq(&f.codomain, &m.group) && *f.codomain != *m.group {
        return Err(Error::InvalidRep(
            "restriction along a map into a different group".into(),
        ));
    }
    let gens = f
        .domain
        .generators()
        .iter()
        .map(|&s| m.matrix_of(f.apply(s)))
        .collect();
    FpRep::trusted_with_dim(f.domain.clone(), m.p, m.dim, gens)
}

/// Induction from a subgroup given by an injective homomorphism `incl: H -> G`.
pub fn induce(m: &FpRep, incl: &GroupHom) -> Result<FpRep> {
    if !incl.is_injective() {
        return Err(Error::InvalidHom(
            "induction along a non-injective map".into(),
        ));
    }
    let g = &incl.codomain;
    let h_elems: Vec<usize> = incl.images.iter().map(|&x| x as usize).collect();
    let mut back = vec![usize::MAX; g.order()];
    for (i, &x) in h_elems.iter().enumerate() {
        back[x] = i;
    }
    let (label, reps) = right_cosets(g, &h_elems);
    let hm = m.element_matrices();
    let k = reps.len();
    let d = m.dim;
    let p = m.p;
    let mut gens = Vec::new();
    for &s in g.generators() {
        let mut a = FpMatrix::zeros(p, k * d, k * d);
        for (i, &t) in reps.iter().enumerate() {
            let ts = g.mul(t, s);
            let j = label[ts];
            let hh = g.mul(ts, g.inv(reps[j]));
            let mh = &hm[back[hh]];
            for r in 0..d {
                for c in 0..d {
                    let v = mh.get(r, c);
                    if v != 0 {
                        a.set(i * d + r, j * d + c, v);
                    }
                }
            }
        }
        gens.push(a);
    }
    FpRep::trusted_with_dim(g.clone(), p, k * d, gens)
}

pub fn tensor_rep(a: &FpRep, b: &FpRep) -> Result<FpRep> {
    if !Arc::ptr_eq(&a.group, &b.group) && *a.group != *b.group {
        return Err(Error::InvalidRep(
            "tensor of modules over different groups".into(),
        ));
    }
    let gens = a
        .gens
        .iter()
        .zip(&b.gens)
        .map(|(x, y)| x.kron(y))
        .collect::<Result<Vec<_>>>()?;
    FpRep::trusted_with_dim(a.group.clone(), a.p, a.dim * b.dim, gens)
}

/// Contragredient module.
pub fn dual(a: &FpRep) -> Result<FpRep> {
    let gens = a
        .gens
        .iter()
        .map(|m| Ok(m.inverse()?.transpose()))
        .collect::<Result<Vec<_>>>()?;
    FpRep::trusted_with_dim(a.group.clone(), a.p, a.dim, gens)
}

pub fn direct_sum(a: &FpRep, b: &FpRep) -> Result<FpRep> {
    let p = a.p;
    let n = a.dim + b.dim;
    let gens = a
        .gens
        .iter()
        .zip(&b.gens)
        .map(|(x, y)| {
            let mut m = FpMatrix::zeros(p, n, n);
            for i in 0..a.dim {
                for j in 0..a.dim {
                    m.set(i, j, x.get(i, j));
                }
            }
            for i in 0..b.dim {
                for j in 0..b.dim {
                    m.set(a.dim + i, a.dim + j, y.get(i, j));
                }
            }
            m
        })
        .collect();
    FpRep::trusted_with_dim(a.group.clone(), p, n, gens)
}

/// Vectors fixed by the subgroup generated by the given elements.
pub fn invariants(m: &FpRep, elements: &[usize]) -> Result<FpMatrix> {
    let mats: Vec<FpMatrix> = elements.iter().map(|&x| m.matrix_of(x)).collect();
    fixed_subspace(m.p, m.dim, &mats)
}

/// Inflation along a surjection `q: G -> Q` of a module over `Q`.
pub fn inflate(m: &FpRep, q: &GroupHom) -> Result<FpRep> {
    restrict(m, q)
}
