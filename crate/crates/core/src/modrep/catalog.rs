use std::sync::Arc;

use super::meataxe::MeatAxe;
use super::rep::{inflate, regular_module, FpRep};
use crate::error::{Error, Result};
use crate::fplin::FpMatrix;
use crate::grpcore::{o_p, quotient, GroupRef};

/// Basis of `Hom_G(S, M)`: matrices `X` (dim S x dim M) with `S_g X = X M_g`.
pub fn hom_space(s: &FpRep, m: &FpRep) -> Result<Vec<FpMatrix>> {
    let p = s.p;
    let (a, b) = (s.dim, m.dim);
    let k = s.gens.len();
    let unknowns = a * b;
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let mut sys = FpMatrix::zeros(p, unknowns, (unknowns * k).max(1));
    for (g, (sg, mg)) in s.gens.iter().zip(&m.gens).enumerate() {
        let base = g * unknowns;
        // unknown (c, d); equation (i, j): sum_c S[i][c] X[c][j] - sum_d X[i][d] M[d][j]
        for c in 0..a {
            for d in 0..b {
                let u = c * b + d;
                for i in 0..a {
                    let v = sg.get(i, c);
                    if v != 0 {
                        let e = base + i * b + d;
                        sys.set(u, e, (sys.get(u, e) + v) % p);
                    }
                }
                for j in 0..b {
                    let v = mg.get(d, j);
                    if v != 0 {
                        let e = base + c * b + j;
                        sys.set(u, e, (sys.get(u, e) + p - v) % p);
                    }
                }
            }
        }
    }
    let ker = if k == 0 {
        FpMatrix::identity(p, unknowns)
    } else {
        sys.kernel_basis()
    };
    Ok((0..ker.rows())
        .map(|r| FpMatrix::from_fn(p, a, b, |i, j| ker.get(r, i * b + j)))
        .collect())
}

pub fn hom_dim(s: &FpRep, m: &FpRep) -> Result<usize> {
    Ok(hom_space(s, m)?.len())
}

/// Isomorphism test for irreducible modules.
pub fn irreducibles_isomorphic(s: &FpRep, t: &FpRep) -> Result<bool> {
    Ok(s.dim == t.dim && hom_dim(s, t)? > 0)
}

/// The simple F_p[G]-modules up to isomorphism. The trivial module is entry 0.
#[derive(Clone, Debug)]
pub struct IrrCatalog {
    pub group: GroupRef,
    pub p: u32,
    pub irreducibles: Vec<FpRep>,
    /// `dim End_G(S)`.
    pub endo_dims: Vec<usize>,
    /// Multiplicity of each simple module in the regular module.
    pub regular_mults: Vec<usize>,
    /// Dimension of each projective cover.
    pub projective_dims: Vec<usize>,
}

impl IrrCatalog {
    /// Catalog from the regular module of `G/O_p(G)`, inflated to `G`.
    /// Simple modules are trivial on `O_p(G)`, and Brauer characters give
    /// `[F_p G : S] = |O_p(G)| [F_p(G/O_p(G)) : S]`.
    pub fn new(g: &GroupRef, p: u32, seed: u64) -> Result<Self> {
        let op = o_p(g, p);
        if op.order() == 1 {
            return Self::from_regular(g, p, seed);
        }
        let (q, proj) = quotient(g, &op)?;
        let base = Self::from_regular(&q, p, seed)?;
        let irreducibles = base
            .irreducibles
            .iter()
            .map(|s| inflate(s, &proj))
            .collect::<Result<Vec<_>>>()?;
        let regular_mults: Vec<usize> =
            base.regular_mults.iter().map(|&m| m * op.order()).collect();
        let projective_dims = regular_mults
            .iter()
            .zip(&base.endo_dims)
            .map(|(m, e)| m * e)
            .collect();
        Ok(IrrCatalog {
            group: g.clone(),
            p,
            irreducibles,
            endo_dims: base.endo_dims,
            regular_mults,
            projective_dims,
        })
    }

    /// Catalog by chopping the regular module of `G` itself.
    pub fn from_regular(g: &GroupRef, p: u32, seed: u64) -> Result<Self> {
        let reg = regular_module(g, p);
        let mut axe = MeatAxe::new(seed);
        let factors = axe.chop(&reg)?;
        let mut irr: Vec<FpRep> = vec![FpRep::trivial(g, p)];
        let mut mults = vec![0usize];
        for f in factors {
            let mut found = None;
            for (i, s) in irr.iter().enumerate() {
                if irreducibles_isomorphic(s, &f)? {
                    found = Some(i);
                    break;
                }
            }
            match found {
                Some(i) => mults[i] += 1,
                None => {
                    irr.push(f);
                    mults.push(1);
                }
            }
        }
        if mults[0] == 0 {
            return Err(Error::Invariant(
                "trivial module missing from the regular module".into(),
            ));
        }
        // trivial first, then by dimension (stable)
        let mut order: Vec<usize> = (1..irr.len()).collect();
        order.sort_by_key(|&i| irr[i].dim);
        order.insert(0, 0);
        let irreducibles: Vec<FpRep> = order.iter().map(|&i| irr[i].clone()).collect();
        let regular_mults: Vec<usize> = order.iter().map(|&i| mults[i]).collect();
        let endo_dims = irreducibles
            .iter()
            .map(|s| hom_dim(s, s))
            .collect::<Result<Vec<_>>>()?;
        let projective_dims = regular_mults
            .iter()
            .zip(&endo_dims)
            .map(|(m, e)| m * e)
            .collect();
        Ok(IrrCatalog {
            group: g.clone(),
            p,
            irreducibles,
            endo_dims,
            regular_mults,
            projective_dims,
        })
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.irreducibles.iter().map(|s| s.dim).collect()
    }

    /// Index of the catalog entry isomorphic to an irreducible module.
    pub fn identify(&self, s: &FpRep) -> Result<usize> {
        for (i, t) in self.irreducibles.iter().enumerate() {
            if irreducibles_isomorphic(t, s)? {
                return Ok(i);
            }
        }
        Err(Error::CatalogIncomplete)
    }

    /// Composition multiplicities `[M : S_i]`.
    pub fn composition_multiplicities(&self, m: &FpRep, seed: u64) -> Result<Vec<usize>> {
        self.check_group(m)?;
        let mut mults = vec![0; self.len()];
        if m.dim == 0 {
            return Ok(mults);
        }
        let mut axe = MeatAxe::new(seed);
        for f in axe.chop(m)? {
            mults[self.identify(&f)?] += 1;
        }
        Ok(mults)
    }

    /// `dim e_S M = [M : S] dim End(S)`.
    pub fn dim_e(&self, m: &FpRep, seed: u64) -> Result<Vec<usize>> {
        let mults = self.composition_multiplicities(m, seed)?;
        Ok(mults
            .iter()
            .zip(&self.endo_dims)
            .map(|(a, b)| a * b)
            .collect())
    }

    /// Whether irreducible `i` is a composition factor of `m`.
    pub fn occurs(&self, i: usize, m: &FpRep, seed: u64) -> Result<bool> {
        Ok(self
            .composition_multiplicities(m, seed)?
            .get(i)
            .copied()
            .unwrap_or(0)
            > 0)
    }

    /// Whether `S_i` embeds in `M`.
    pub fn occurs_as_submodule(&self, i: usize, m: &FpRep) -> Result<bool> {
        self.check_group(m)?;
        Ok(hom_dim(&self.irreducibles[i], m)? > 0)
    }

    fn check_group(&self, m: &FpRep) -> Result<()> {
        if !Arc::ptr_eq(&m.group, &self.group) && *m.group != *self.group {
            return Err(Error::InvalidRep(
                "module over a different group than the catalog".into(),
            ));
        }
        if m.p != self.p {
            return Err(Error::PrimeMismatch(m.p, self.p));
        }
        Ok(())
    }
}
