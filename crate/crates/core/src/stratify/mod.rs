//! Strata `R̄_d H^*(P)` assembled as equalizers over the category of
//! elementary abelian subgroups containing `C`.
//!
//! A stratum in total degree `n` sits inside the product over all objects
//! `V` of `H^{n-d}(V) (x) M^d(V)`, where `M^d(V) = P_V H^d(C_P(V))`. It is the
//! part fixed by inner automorphisms on which the two maps to
//! `H^{n-d}(V_1) (x) H^d(C_P(V_2))`, one for each proper inclusion
//! `V_1 < V_2`, agree.

mod support;

use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;
use std::rc::Rc;
use std::sync::Arc;

pub use support::{Essential, SupportSet, TotalDimension};

use crate::autom::AutGroup;
use crate::cohres::{
    induced_maps, primitives, Primitives, Resolution, ResolutionCache, DEFAULT_DIM_BUDGET,
};
use crate::error::{Error, Result};
use crate::fplin::{fixed_subspace, restrict_to_subspace, FpMatrix};
use crate::grpcore::{centralizer, GroupHom, GroupRef, QuillenData, Subgroup};
use crate::modrep::{FpRep, IrrCatalog};

#[derive(Clone, Debug)]
pub struct StratSettings {
    /// Highest total degree `N` of a stratum.
    pub cutoff: usize,
    /// Highest filtration index.
    pub dmax: usize,
    /// Consecutive vanishing degrees of all primitives taken to mean the
    /// filtration has ended.
    pub window: usize,
    pub seed: u64,
    pub dim_budget: usize,
}

impl Default for StratSettings {
    fn default() -> Self {
        StratSettings {
            cutoff: 14,
            dmax: 8,
            window: 4,
            seed: 1,
            dim_budget: DEFAULT_DIM_BUDGET,
        }
    }
}

/// One object `V` with its centralizer `K = C_P(V)` and `M^*(V)`.
#[derive(Debug)]
pub struct StratObject {
    pub subgroup: Subgroup,
    pub rank: usize,
    pub group: GroupRef,
    pub incl: GroupHom,
    pub centralizer: Subgroup,
    pub k_group: GroupRef,
    pub k_incl: GroupHom,
    pub res_v: Resolution,
    pub res_k: Arc<Resolution>,
    /// Bases of `M^d(V)` inside `H^d(K)`.
    pub prims: Primitives,
    pos_v: Vec<u32>,
    pos_k: Vec<u32>,
}

impl StratObject {
    pub fn m_dim(&self, d: usize) -> usize {
        self.prims.bases[d].rows()
    }

    pub fn h_dim(&self, n: usize) -> usize {
        self.res_v.rank(n)
    }
}

/// How an automorphism moves one object: cohomology of `V` and primitives.
#[derive(Debug)]
struct ObjAction {
    target: usize,
    /// `H^n(aV) -> H^n(V)`.
    v_maps: Vec<FpMatrix>,
    /// `M^d(aV) -> M^d(V)` in primitive coordinates.
    m_maps: Vec<FpMatrix>,
}

/// Maps attached to a proper inclusion `V_1 < V_2`.
#[derive(Debug)]
pub struct InclusionMaps {
    pub small: usize,
    pub large: usize,
    /// `eta^*: H^n(V_2) -> H^n(V_1)`.
    pub eta: Vec<FpMatrix>,
    /// Restriction `H^d(C_P(V_1)) -> H^d(C_P(V_2))`.
    pub res: Vec<FpMatrix>,
}

impl InclusionMaps {
    /// `eta_*: M^d(V_1) -> P_{V_1} H^d(C_P(V_2))` as rows in `H^d(C_P(V_2))`.
    pub fn eta_star(&self, objects: &[StratObject], d: usize) -> Result<FpMatrix> {
        objects[self.small].prims.bases[d].mul(&self.res[d])
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Block {
    pub object: usize,
    pub offset: usize,
    /// `dim H^{n-d}(V)`.
    pub h: usize,
    /// `dim M^d(V)`.
    pub m: usize,
}

/// Degree-`n` piece of the stratum `R̄_d`.
#[derive(Debug)]
pub struct StratumPiece {
    pub d: usize,
    pub n: usize,
    pub blocks: Vec<Block>,
    pub ambient_dim: usize,
    /// Rows span the piece inside the ambient product.
    pub basis: FpMatrix,
    /// Action of each generator of Out(P) on the piece, in basis coordinates.
    pub out_gens: Vec<FpMatrix>,
}

impl StratumPiece {
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
}

pub struct Stratification {
    pub group: GroupRef,
    pub p: u32,
    pub aut: AutGroup,
    pub quillen: QuillenData,
    pub settings: StratSettings,
    pub objects: Vec<StratObject>,
    /// Orbits of objects under Aut(P).
    pub orbits: Vec<Vec<usize>>,
    pub inclusions: Vec<InclusionMaps>,
    res_p: Arc<Resolution>,
    actions: RefCell<HashMap<usize, Rc<Vec<ObjAction>>>>,
    pieces: RefCell<HashMap<(usize, usize), Rc<StratumPiece>>>,
    catalog: OnceCell<IrrCatalog>,
    supports: RefCell<HashMap<usize, Rc<Vec<SupportSet>>>>,
    maximal: RefCell<HashMap<usize, Rc<support::MaximalData>>>,
}

fn positions(sub: &Subgroup, order: usize) -> Vec<u32> {
    let mut pos = vec![u32::MAX; order];
    for (i, &x) in sub.elements().iter().enumerate() {
        pos[x] = i as u32;
    }
    pos
}

fn place(out: &mut FpMatrix, r0: usize, c0: usize, blk: &FpMatrix) {
    for i in 0..blk.rows() {
        out.copy_row_into(r0 + i, c0, blk, i);
    }
}

/// Coordinates of the rows of `v` in the independent rows of `basis`.
fn coordinates(basis: &FpMatrix, v: &FpMatrix) -> Result<FpMatrix> {
    if basis.rows() == 0 || v.rows() == 0 {
        return Ok(FpMatrix::zeros(v.p(), v.rows(), basis.rows()));
    }
    basis
        .solver_and_kernel()
        .0
        .solve(v)
        .map_err(|_| Error::Invariant("image leaves the primitive subspace".into()))
}

impl Stratification {
    pub fn new(group: &GroupRef, p: u32, aut: AutGroup, settings: StratSettings) -> Result<Self> {
        Self::build(group, p, aut, settings, None)
    }

    pub fn with_cache(
        group: &GroupRef,
        p: u32,
        aut: AutGroup,
        settings: StratSettings,
        cache: &ResolutionCache,
    ) -> Result<Self> {
        Self::build(group, p, aut, settings, Some(cache))
    }

    fn build(
        group: &GroupRef,
        p: u32,
        aut: AutGroup,
        settings: StratSettings,
        cache: Option<&ResolutionCache>,
    ) -> Result<Self> {
        if *aut.group != **group {
            return Err(Error::InvalidGroup(
                "automorphism group belongs to a different group".into(),
            ));
        }
        let quillen = QuillenData::for_group(group, p)?;
        let (n_cut, dmax) = (settings.cutoff, settings.dmax);
        let budget = settings.dim_budget;
        let resolve = |g: &GroupRef, d: usize| -> Result<Resolution> {
            match cache {
                Some(c) => c.load_or_compute(g, p, d),
                None => Resolution::compute_with_budget(g, p, d, budget),
            }
        };
        let res_p = Arc::new(resolve(group, dmax)?);
        let order = group.order();
        let mut objects = Vec::with_capacity(quillen.len());
        for (i, v) in quillen.objects.iter().enumerate() {
            let (vg, incl) = v.to_group(group, format!("V{i}"))?;
            let cent = centralizer(group, v.elements());
            let (kg, k_incl, res_k) = if cent.order() == order {
                (group.clone(), GroupHom::identity(group), res_p.clone())
            } else {
                let (kg, k_incl) = cent.to_group(group, format!("K{i}"))?;
                let r = Arc::new(resolve(&kg, dmax)?);
                (kg, k_incl, r)
            };
            let res_v = resolve(&vg, n_cut.max(dmax))?;
            let pos_k = positions(&cent, order);
            let v_in_k = GroupHom::new(
                vg.clone(),
                kg.clone(),
                incl.images.iter().map(|&x| pos_k[x as usize]).collect(),
            )?;
            let prims = primitives(&res_k, &res_v, &v_in_k, dmax)?;
            objects.push(StratObject {
                pos_v: positions(v, order),
                pos_k,
                subgroup: v.clone(),
                rank: quillen.ranks[i],
                group: vg,
                incl,
                centralizer: cent,
                k_group: kg,
                k_incl,
                res_v,
                res_k,
                prims,
            });
        }
        let orbits = aut.orbits_on(&quillen.objects)?;
        let mut inclusions = Vec::new();
        for &(a, b) in &quillen.inclusions {
            let (sa, sb) = (&objects[a], &objects[b]);
            let eta = GroupHom::new(
                sa.group.clone(),
                sb.group.clone(),
                sa.incl
                    .images
                    .iter()
                    .map(|&x| sb.pos_v[x as usize])
                    .collect(),
            )?;
            // C_P(V_2) <= C_P(V_1)
            let res = GroupHom::new(
                sb.k_group.clone(),
                sa.k_group.clone(),
                sb.k_incl
                    .images
                    .iter()
                    .map(|&x| sa.pos_k[x as usize])
                    .collect(),
            )?;
            inclusions.push(InclusionMaps {
                small: a,
                large: b,
                eta: induced_maps(&eta, &sa.res_v, &sb.res_v, n_cut)?,
                res: induced_maps(&res, &sb.res_k, &sa.res_k, dmax)?,
            });
        }
        Ok(Stratification {
            group: group.clone(),
            p,
            aut,
            quillen,
            settings,
            objects,
            orbits,
            inclusions,
            res_p,
            actions: RefCell::new(HashMap::new()),
            pieces: RefCell::new(HashMap::new()),
            catalog: OnceCell::new(),
            supports: RefCell::new(HashMap::new()),
            maximal: RefCell::new(HashMap::new()),
        })
    }

    pub fn resolution(&self) -> &Resolution {
        &self.res_p
    }

    /// Irreducible F_p[Out(P)]-modules.
    pub fn catalog(&self) -> Result<&IrrCatalog> {
        if let Some(c) = self.catalog.get() {
            return Ok(c);
        }
        let c = IrrCatalog::new(&self.aut.out, self.p, self.settings.seed)?;
        Ok(self.catalog.get_or_init(|| c))
    }

    pub fn orbit_of(&self, i: usize) -> usize {
        self.orbits
            .iter()
            .position(|o| o.contains(&i))
            .expect("every object lies in an orbit")
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.quillen.is_maximal(i)
    }

    fn check_degrees(&self, d: usize, n: usize) -> Result<()> {
        if d > self.settings.dmax {
            return Err(Error::DegreeOutOfRange {
                requested: d,
                available: self.settings.dmax,
            });
        }
        if n > self.settings.cutoff {
            return Err(Error::DegreeOutOfRange {
                requested: n,
                available: self.settings.cutoff,
            });
        }
        Ok(())
    }

    fn action(&self, a: usize) -> Result<Rc<Vec<ObjAction>>> {
        if let Some(x) = self.actions.borrow().get(&a) {
            return Ok(x.clone());
        }
        let map = self.aut.map(a);
        let mut acts = Vec::with_capacity(self.objects.len());
        for u in &self.objects {
            let img = u.subgroup.image(map);
            let t = self.quillen.index_of(&img).ok_or_else(|| {
                Error::Invariant("automorphism moves an object outside the category".into())
            })?;
            let tu = &self.objects[t];
            let fv = GroupHom::new(
                u.group.clone(),
                tu.group.clone(),
                u.incl
                    .images
                    .iter()
                    .map(|&x| tu.pos_v[map[x as usize] as usize])
                    .collect(),
            )?;
            let fk = GroupHom::new(
                u.k_group.clone(),
                tu.k_group.clone(),
                u.k_incl
                    .images
                    .iter()
                    .map(|&x| tu.pos_k[map[x as usize] as usize])
                    .collect(),
            )?;
            let v_maps = induced_maps(&fv, &u.res_v, &tu.res_v, self.settings.cutoff)?;
            let k_maps = induced_maps(&fk, &u.res_k, &tu.res_k, self.settings.dmax)?;
            let mut m_maps = Vec::with_capacity(k_maps.len());
            for (d, f) in k_maps.iter().enumerate() {
                let moved = tu.prims.bases[d].mul(f)?;
                m_maps.push(coordinates(&u.prims.bases[d], &moved)?);
            }
            acts.push(ObjAction {
                target: t,
                v_maps,
                m_maps,
            });
        }
        let acts = Rc::new(acts);
        self.actions.borrow_mut().insert(a, acts.clone());
        Ok(acts)
    }

    /// Object that automorphism `a` sends object `i` to.
    pub fn moves_to(&self, a: usize, i: usize) -> Result<usize> {
        Ok(self.action(a)?[i].target)
    }

    /// Action of automorphism `a` on `M^d` of an object it stabilizes.
    pub fn primitive_action(&self, a: usize, i: usize, d: usize) -> Result<FpMatrix> {
        let act = self.action(a)?;
        if act[i].target != i {
            return Err(Error::Invariant(
                "automorphism does not stabilize the object".into(),
            ));
        }
        Ok(act[i].m_maps[d].clone())
    }

    pub fn blocks(&self, d: usize, n: usize) -> Vec<Block> {
        let mut off = 0;
        self.objects
            .iter()
            .enumerate()
            .map(|(i, o)| {
                let (h, m) = if n >= d {
                    (o.h_dim(n - d), o.m_dim(d))
                } else {
                    (0, 0)
                };
                let b = Block {
                    object: i,
                    offset: off,
                    h,
                    m,
                };
                off += h * m;
                b
            })
            .collect()
    }

    /// Matrix of automorphism `a` on the ambient product in degree `(d, n)`.
    pub fn ambient_action(&self, a: usize, d: usize, n: usize) -> Result<FpMatrix> {
        self.check_degrees(d, n)?;
        let blocks = self.blocks(d, n);
        let dim: usize = blocks.iter().map(|b| b.h * b.m).sum();
        let act = self.action(a)?;
        let mut out = FpMatrix::zeros(self.p, dim, dim);
        if n < d {
            return Ok(out);
        }
        for b in &blocks {
            if b.h * b.m == 0 {
                continue;
            }
            let oa = &act[b.object];
            let t = &blocks[oa.target];
            let k = oa.v_maps[n - d].kron(&oa.m_maps[d])?;
            place(&mut out, t.offset, b.offset, &k);
        }
        Ok(out)
    }

    /// `mu - nu` for every proper inclusion, side by side.
    fn equalizer_matrix(
        &self,
        d: usize,
        n: usize,
        blocks: &[Block],
        dim: usize,
    ) -> Result<FpMatrix> {
        let p = self.p;
        let i = n - d;
        let mut cols = Vec::new();
        for inc in &self.inclusions {
            let (s, l) = (&self.objects[inc.small], &self.objects[inc.large]);
            let width = s.h_dim(i) * l.res_k.rank(d);
            let mut e = FpMatrix::zeros(p, dim, width);
            let (bs, bl) = (&blocks[inc.small], &blocks[inc.large]);
            if bs.h * bs.m > 0 {
                let mu = FpMatrix::identity(p, bs.h).kron(&inc.eta_star(&self.objects, d)?)?;
                place(&mut e, bs.offset, 0, &mu);
            }
            if bl.h * bl.m > 0 {
                let nu = inc.eta[i].kron(&l.prims.bases[d])?.scaled(p - 1);
                let mut tmp = FpMatrix::zeros(p, dim, width);
                place(&mut tmp, bl.offset, 0, &nu);
                e = e.add(&tmp)?;
            }
            cols.push(e);
        }
        let total: usize = cols.iter().map(|c| c.cols()).sum();
        let mut out = FpMatrix::zeros(p, dim, total);
        let mut off = 0;
        for c in cols {
            for r in 0..dim {
                out.copy_row_into(r, off, &c, r);
            }
            off += c.cols();
        }
        Ok(out)
    }

    /// Degree-`n` piece of `R̄_d`, with the Out(P)-action.
    pub fn piece(&self, d: usize, n: usize) -> Result<Rc<StratumPiece>> {
        self.check_degrees(d, n)?;
        if let Some(x) = self.pieces.borrow().get(&(d, n)) {
            return Ok(x.clone());
        }
        let p = self.p;
        let blocks = self.blocks(d, n);
        let dim: usize = blocks.iter().map(|b| b.h * b.m).sum();
        let out_gens_aut: Vec<usize> = self
            .aut
            .out
            .generators()
            .iter()
            .map(|&o| self.aut.out_reps[o])
            .collect();
        let piece = if dim == 0 {
            StratumPiece {
                d,
                n,
                blocks,
                ambient_dim: 0,
                basis: FpMatrix::zeros(p, 0, 0),
                out_gens: out_gens_aut
                    .iter()
                    .map(|_| FpMatrix::zeros(p, 0, 0))
                    .collect(),
            }
        } else {
            let inner: Vec<FpMatrix> = self
                .group
                .generators()
                .iter()
                .map(|&g| self.ambient_action(self.aut.inner_of(g), d, n))
                .collect::<Result<_>>()?;
            let fixed = fixed_subspace(p, dim, &inner)?;
            let e = self.equalizer_matrix(d, n, &blocks, dim)?;
            let basis = if e.cols() == 0 || fixed.rows() == 0 {
                fixed
            } else {
                fixed.mul(&e)?.kernel_basis().mul(&fixed)?.image_basis()
            };
            if e.cols() > 0 && !basis.mul(&e)?.is_zero() {
                return Err(Error::Invariant(format!(
                    "stratum ({d}, {n}) is not equalized"
                )));
            }
            for m in &inner {
                if basis.mul(m)? != basis {
                    return Err(Error::Invariant(format!(
                        "inner automorphism moves stratum ({d}, {n})"
                    )));
                }
            }
            let mut out_gens = Vec::with_capacity(out_gens_aut.len());
            for &a in &out_gens_aut {
                let m = self.ambient_action(a, d, n)?;
                out_gens.push(if basis.rows() == 0 {
                    FpMatrix::zeros(p, 0, 0)
                } else {
                    restrict_to_subspace(&basis, &m)?
                });
            }
            StratumPiece {
                d,
                n,
                blocks,
                ambient_dim: dim,
                basis,
                out_gens,
            }
        };
        let piece = Rc::new(piece);
        self.pieces.borrow_mut().insert((d, n), piece.clone());
        Ok(piece)
    }

    /// The piece as an F_p[Out(P)]-module.
    pub fn piece_module(&self, d: usize, n: usize) -> Result<FpRep> {
        let pc = self.piece(d, n)?;
        FpRep::trusted_with_dim(self.aut.out.clone(), self.p, pc.dim(), pc.out_gens.clone())
    }

    /// Graded dimensions of `R̄_d`, indexed by total degree `0..=N`.
    pub fn stratum_dims(&self, d: usize) -> Result<Vec<usize>> {
        (0..=self.settings.cutoff)
            .map(|n| Ok(if n < d { 0 } else { self.piece(d, n)?.dim() }))
            .collect()
    }

    /// Dimensions of `M^d(V)` for every object.
    pub fn primitive_dims(&self, d: usize) -> Vec<usize> {
        self.objects.iter().map(|o| o.m_dim(d)).collect()
    }

    /// First degree from which every `M^d(V)` vanishes, when the last
    /// `window` degrees up to `dmax` are all zero.
    pub fn primitives_vanish_from(&self) -> Option<usize> {
        self.trailing_zeros(|d| Ok(self.objects.iter().all(|o| o.m_dim(d) == 0)))
            .ok()
            .flatten()
    }

    /// Like [`Stratification::primitives_vanish_from`] for one object.
    pub fn object_vanish_from(&self, i: usize) -> Option<usize> {
        self.trailing_zeros(|d| Ok(self.objects[i].m_dim(d) == 0))
            .ok()
            .flatten()
    }

    /// First `d` from which `R̄_d` vanishes in every degree up to `N`, when
    /// this holds for the last `window` values of `d` up to `dmax`.
    pub fn strata_vanish_from(&self) -> Result<Option<usize>> {
        self.trailing_zeros(|d| Ok(self.stratum_dims(d)?.iter().all(|&x| x == 0)))
    }

    fn trailing_zeros(&self, zero: impl Fn(usize) -> Result<bool>) -> Result<Option<usize>> {
        let (dmax, w) = (self.settings.dmax, self.settings.window);
        if w == 0 || w > dmax + 1 {
            return Ok(None);
        }
        for d in dmax + 1 - w..=dmax {
            if !zero(d)? {
                return Ok(None);
            }
        }
        let mut d = dmax + 1 - w;
        while d > 0 && zero(d - 1)? {
            d -= 1;
        }
        Ok(Some(d))
    }
}
