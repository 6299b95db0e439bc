use std::collections::HashMap;
use std::rc::Rc;

use super::Stratification;
use crate::autom::Stabilizers;
use crate::error::{Error, Result};
use crate::fplin::{fixed_subspace, restrict_to_subspace, FpMatrix};
use crate::grpcore::{small_generating_set, GroupHom, GroupRef};
use crate::modrep::{induce, permutation_module, FpRep};

/// Objects whose `rho_V`-projection of `e_S R̄_d` is nonzero.
#[derive(Clone, Debug)]
pub struct SupportSet {
    pub irreducible: usize,
    pub d: usize,
    /// Object indices, closed under Aut(P).
    pub members: Vec<usize>,
    pub max_rank: Option<usize>,
    pub caveats: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TotalDimension {
    pub value: Option<usize>,
    /// The filtration was not seen to end by `dmax`.
    pub lower_bound: bool,
}

/// `Ess^d(V)`: primitives killed by `eta_*` into every proper superobject.
#[derive(Clone, Debug)]
pub struct Essential {
    pub object: usize,
    pub d: usize,
    /// Rows in `H^d(C_P(V))`.
    pub basis: FpMatrix,
}

impl Essential {
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
}

/// Data for the occurrence test at a maximal object.
pub(super) struct MaximalData {
    stab: Stabilizers,
    /// `Aut(P,V)/Aut_0(P,V)` as maps on the elements of `V`.
    gl: Vec<Vec<u32>>,
    gl_index: HashMap<Vec<u32>, usize>,
    weyl_gens: Vec<usize>,
    out_pv: GroupRef,
    out_pv_incl: GroupHom,
    lifts: Vec<usize>,
}

impl Stratification {
    fn restriction(&self, a: usize, v: usize) -> Vec<u32> {
        let o = &self.objects[v];
        let map = self.aut.map(a);
        o.incl
            .images
            .iter()
            .map(|&x| o.pos_v[map[x as usize] as usize])
            .collect()
    }

    pub(super) fn maximal_data(&self, v: usize) -> Result<Rc<MaximalData>> {
        if let Some(x) = self.maximal.borrow().get(&v) {
            return Ok(x.clone());
        }
        let stab = self.aut.stabilizers(&self.objects[v].subgroup)?;
        let mut gl = Vec::new();
        let mut gl_index = HashMap::new();
        for &a in &stab.aut_pv {
            let r = self.restriction(a, v);
            if !gl_index.contains_key(&r) {
                gl_index.insert(r.clone(), gl.len());
                gl.push(r);
            }
        }
        let weyl_gens = small_generating_set(&self.group, stab.normalizer.elements())
            .into_iter()
            .map(|x| self.aut.inner_of(x))
            .collect();
        let (out_pv, out_pv_incl) = stab.out_pv.to_group(&self.aut.out, "Out(P,V)")?;
        let lifts = out_pv
            .generators()
            .iter()
            .map(|&o| {
                stab.lift(out_pv_incl.apply(o))
                    .ok_or_else(|| Error::Invariant("outer class without a lift".into()))
            })
            .collect::<Result<_>>()?;
        let data = Rc::new(MaximalData {
            stab,
            gl,
            gl_index,
            weyl_gens,
            out_pv,
            out_pv_incl,
            lifts,
        });
        self.maximal.borrow_mut().insert(v, data.clone());
        Ok(data)
    }

    /// `Ind_{Out(P,V)}^{Out(P)} [F_p[Aut(P,V)/Aut_0(P,V)] (x) M^d(V)]^{W_P(V)}` for a maximal `V`.
    pub fn occurrence_module(&self, v: usize, d: usize) -> Result<FpRep> {
        if !self.is_maximal(v) {
            return Err(Error::Invariant(
                "the occurrence test needs a maximal object".into(),
            ));
        }
        let p = self.p;
        let md = self.maximal_data(v)?;
        let m = self.objects[v].m_dim(d);
        let dim = md.gl.len() * m;
        if dim > self.settings.dim_budget {
            return Err(Error::DimBudget {
                needed: dim,
                limit: self.settings.dim_budget,
            });
        }
        let zero = || {
            FpRep::trusted_with_dim(
                self.aut.out.clone(),
                p,
                0,
                vec![FpMatrix::zeros(p, 0, 0); self.aut.out.generators().len()],
            )
        };
        if dim == 0 {
            return zero();
        }
        let matrix = |a: usize| -> Result<FpMatrix> {
            let r = self.restriction(a, v);
            let k = md.gl.len();
            let mut perm = FpMatrix::zeros(p, k, k);
            for (i, g) in md.gl.iter().enumerate() {
                let moved: Vec<u32> = r.iter().map(|&x| g[x as usize]).collect();
                perm.set(i, md.gl_index[&moved], 1);
            }
            perm.kron(&self.primitive_action(a, v, d)?)
        };
        let weyl: Vec<FpMatrix> = md
            .weyl_gens
            .iter()
            .map(|&a| matrix(a))
            .collect::<Result<_>>()?;
        let fixed = fixed_subspace(p, dim, &weyl)?;
        if fixed.rows() == 0 {
            return zero();
        }
        let gens = md
            .lifts
            .iter()
            .map(|&a| restrict_to_subspace(&fixed, &matrix(a)?))
            .collect::<Result<Vec<_>>>()?;
        let n = FpRep::trusted_with_dim(md.out_pv.clone(), p, fixed.rows(), gens)?;
        induce(&n, &md.out_pv_incl)
    }

    /// `Out_0(P,V)` as a group, with its inclusion into `Out(P)`.
    pub fn out0_group(&self, v: usize) -> Result<(GroupRef, GroupHom)> {
        let md = self.maximal_data(v)?;
        md.stab.out0_pv.to_group(&self.aut.out, "Out0(P,V)")
    }

    /// `M^d(V)^{W_P(V)}` as a module over `Out_0(P,V)` for a maximal `V`.
    pub fn weyl_fixed_module(&self, v: usize, d: usize) -> Result<FpRep> {
        if !self.is_maximal(v) {
            return Err(Error::Invariant(
                "the Weyl-fixed primitives are taken at a maximal object".into(),
            ));
        }
        let p = self.p;
        let md = self.maximal_data(v)?;
        let (grp, incl) = md.stab.out0_pv.to_group(&self.aut.out, "Out0(P,V)")?;
        let m = self.objects[v].m_dim(d);
        let weyl: Vec<FpMatrix> = md
            .weyl_gens
            .iter()
            .map(|&a| self.primitive_action(a, v, d))
            .collect::<Result<_>>()?;
        let fixed = fixed_subspace(p, m, &weyl)?;
        let gens = grp
            .generators()
            .iter()
            .map(|&o| {
                let a = md
                    .stab
                    .lift0(incl.apply(o))
                    .ok_or_else(|| Error::Invariant("outer class without a lift".into()))?;
                if fixed.rows() == 0 {
                    return Ok(FpMatrix::zeros(p, 0, 0));
                }
                restrict_to_subspace(&fixed, &self.primitive_action(a, v, d)?)
            })
            .collect::<Result<Vec<_>>>()?;
        FpRep::trusted_with_dim(grp, p, fixed.rows(), gens)
    }

    /// Composition multiplicities of [`Stratification::occurrence_module`].
    pub fn occurrence(&self, v: usize, d: usize) -> Result<Vec<usize>> {
        let m = self.occurrence_module(v, d)?;
        self.catalog()?
            .composition_multiplicities(&m, self.settings.seed)
    }

    /// Composition multiplicities of the projection of the degree-`n` piece
    /// of `R̄_d` onto the factors of one orbit.
    pub fn projected_multiplicities(&self, orbit: usize, d: usize, n: usize) -> Result<Vec<usize>> {
        let pc = self.piece(d, n)?;
        let cat = self.catalog()?;
        let mut cols = Vec::new();
        for &i in &self.orbits[orbit] {
            let b = pc.blocks[i];
            cols.extend(b.offset..b.offset + b.h * b.m);
        }
        if pc.dim() == 0 || cols.is_empty() {
            return Ok(vec![0; cat.len()]);
        }
        let proj = pc.basis.select_cols(&cols).image_basis();
        if proj.rows() == 0 {
            return Ok(vec![0; cat.len()]);
        }
        let gens = self
            .aut
            .out
            .generators()
            .iter()
            .map(|&o| {
                let a = self.ambient_action(self.aut.out_reps[o], d, n)?;
                restrict_to_subspace(&proj, &a.select_rows(&cols).select_cols(&cols))
            })
            .collect::<Result<Vec<_>>>()?;
        let m = FpRep::trusted_with_dim(self.aut.out.clone(), self.p, proj.rows(), gens)?;
        cat.composition_multiplicities(&m, self.settings.seed)
    }

    /// Whether `eta_*` is injective on `M^d` for the inclusion with this index.
    pub fn eta_star_injective(&self, inc: usize, d: usize) -> Result<bool> {
        let i = &self.inclusions[inc];
        let m = self.objects[i.small].m_dim(d);
        Ok(i.eta_star(&self.objects, d)?.rank() == m)
    }

    /// The `d`-support of every irreducible of F_p[Out(P)], in catalog order.
    pub fn supports(&self, d: usize) -> Result<Rc<Vec<SupportSet>>> {
        if let Some(x) = self.supports.borrow().get(&d) {
            return Ok(x.clone());
        }
        let ns = self.catalog()?.len();
        let n_cut = self.settings.cutoff;
        let mut member = vec![vec![false; self.orbits.len()]; ns];
        let mut caveats: Vec<Vec<String>> = vec![Vec::new(); ns];
        for (k, orb) in self.orbits.iter().enumerate() {
            let v = orb[0];
            if self.is_maximal(v) {
                for (s, &c) in self.occurrence(v, d)?.iter().enumerate() {
                    member[s][k] = c > 0;
                }
                continue;
            }
            for n in d..=n_cut {
                if (0..ns).all(|s| member[s][k]) {
                    break;
                }
                for (s, &c) in self.projected_multiplicities(k, d, n)?.iter().enumerate() {
                    member[s][k] |= c > 0;
                }
            }
            for s in 0..ns {
                if !member[s][k] {
                    caveats[s].push(format!("V{v} excluded up to degree {n_cut}"));
                }
            }
        }
        // monotonicity along inclusions with injective eta_*
        let mut changed = true;
        while changed {
            changed = false;
            for (idx, inc) in self.inclusions.iter().enumerate() {
                let (a, b) = (self.orbit_of(inc.small), self.orbit_of(inc.large));
                if self.objects[inc.small].m_dim(d) == 0 || !self.eta_star_injective(idx, d)? {
                    continue;
                }
                for s in 0..ns {
                    if member[s][a] && !member[s][b] {
                        if self.is_maximal(inc.large) {
                            return Err(Error::Invariant(format!(
                                "support of irreducible {s} in degree {d} is not monotone at V{}",
                                inc.large
                            )));
                        }
                        member[s][b] = true;
                        caveats[s].push(format!("V{} included by monotonicity", inc.large));
                        changed = true;
                    }
                }
            }
        }
        let out: Vec<SupportSet> = (0..ns)
            .map(|s| {
                let mut members: Vec<usize> = (0..self.orbits.len())
                    .filter(|&k| member[s][k])
                    .flat_map(|k| self.orbits[k].clone())
                    .collect();
                members.sort_unstable();
                let max_rank = members.iter().map(|&i| self.objects[i].rank).max();
                SupportSet {
                    irreducible: s,
                    d,
                    members,
                    max_rank,
                    caveats: std::mem::take(&mut caveats[s]),
                }
            })
            .collect();
        let out = Rc::new(out);
        self.supports.borrow_mut().insert(d, out.clone());
        Ok(out)
    }

    pub fn d_support(&self, s: usize, d: usize) -> Result<SupportSet> {
        self.supports(d)?
            .get(s)
            .cloned()
            .ok_or_else(|| Error::InvalidRep(format!("no irreducible with index {s}")))
    }

    /// `dim e_S R̄_d`, or `None` for the zero module.
    pub fn dim_es_stratum(&self, s: usize, d: usize) -> Result<Option<usize>> {
        Ok(self.d_support(s, d)?.max_rank)
    }

    /// `dim e_S R̄_d` for every `d <= dmax` (outer) and irreducible (inner).
    pub fn dim_es_table(&self) -> Result<Vec<Vec<Option<usize>>>> {
        (0..=self.settings.dmax)
            .map(|d| Ok(self.supports(d)?.iter().map(|x| x.max_rank).collect()))
            .collect()
    }

    /// `dim e_S H^*(P)` as the largest stratum dimension over `d <= dmax`.
    pub fn dim_es_total(&self, s: usize) -> Result<TotalDimension> {
        let mut value = None;
        for d in 0..=self.settings.dmax {
            value = value.max(self.dim_es_stratum(s, d)?);
        }
        Ok(TotalDimension {
            value,
            lower_bound: self.strata_vanish_from()?.is_none(),
        })
    }

    /// `dim e_S` of the `d = 0` stratum from the permutation modules
    /// `F_p[Out(P)/Out_0(P,V)]` over maximal `V` alone.
    pub fn r0_dimension(&self) -> Result<Vec<Option<usize>>> {
        let cat = self.catalog()?;
        let mut out = vec![None; cat.len()];
        for orb in &self.orbits {
            let v = orb[0];
            if !self.is_maximal(v) {
                continue;
            }
            let md = self.maximal_data(v)?;
            let dim = self.aut.out.order() / md.stab.out0_pv.order();
            if dim > self.settings.dim_budget {
                return Err(Error::DimBudget {
                    needed: dim,
                    limit: self.settings.dim_budget,
                });
            }
            let perm = permutation_module(&self.aut.out, &md.stab.out0_pv, self.p);
            let rank = self.objects[v].rank;
            for (s, &c) in cat
                .composition_multiplicities(&perm, self.settings.seed)?
                .iter()
                .enumerate()
            {
                if c > 0 {
                    out[s] = out[s].max(Some(rank));
                }
            }
        }
        Ok(out)
    }

    /// `Ess^d(V)`.
    pub fn essential(&self, v: usize, d: usize) -> Result<Essential> {
        let o = &self.objects[v];
        let b = &o.prims.bases[d];
        let mut stacked = FpMatrix::zeros(self.p, b.rows(), 0);
        for inc in self.inclusions.iter().filter(|i| i.small == v) {
            stacked = stacked.hcat(&inc.eta_star(&self.objects, d)?)?;
        }
        let basis = if stacked.cols() == 0 || b.rows() == 0 {
            b.clone()
        } else {
            stacked.kernel_basis().mul(b)?
        };
        Ok(Essential {
            object: v,
            d,
            basis,
        })
    }
}
