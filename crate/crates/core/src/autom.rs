//! Automorphism groups by backtracking over images of a minimal generating
//! set, with the inner automorphisms and the outer automorphism group.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grpcore::{
    centralizer, normalizer, quotient, small_generating_set, FiniteGroup, GroupHom, GroupRef,
    Subgroup,
};

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// The automorphism group of a finite group. Automorphisms are stored as
/// full element maps; composition goes through a lookup on generator images.
#[derive(Clone, Debug)]
pub struct AutGroup {
    pub group: GroupRef,
    /// Generating tuple whose images key each automorphism.
    pub gens: Vec<usize>,
    maps: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    /// Sorted indices of the inner automorphisms.
    pub inner: Vec<usize>,
    inner_of: Vec<usize>,
    pub out: GroupRef,
    /// Automorphism index to outer class.
    pub out_proj: Vec<usize>,
    /// Least automorphism index in each outer class.
    pub out_reps: Vec<usize>,
}

/// Invariants preserved by every automorphism.
fn element_signature(g: &FiniteGroup) -> Vec<(usize, usize, usize)> {
    let sizes = g.class_sizes();
    let n = g.order();
    let mut roots = vec![0usize; n];
    for x in 0..n {
        roots[g.mul(x, x)] += 1;
    }
    (0..n)
        .map(|x| (g.element_order(x), sizes[x], roots[x]))
        .collect()
}

struct Search<'a> {
    g: &'a FiniteGroup,
    gens: Vec<usize>,
    cands: Vec<Vec<usize>>,
    found: Vec<Vec<u32>>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Extend the partial map to `<gens[0..=j]>`; `None` on conflict.
    fn extend(&self, images: &[usize]) -> Option<Vec<u32>> {
        let n = self.g.order();
        let k = images.len();
        let mut map = vec![u32::MAX; n];
        let mut used = vec![false; n];
        map[0] = 0;
        used[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let fx = map[x] as usize;
            for i in 0..k {
                let y = self.g.mul(x, self.gens[i]);
                let fy = self.g.mul(fx, images[i]) as u32;
                if map[y] == u32::MAX {
                    if used[fy as usize] {
                        return None;
                    }
                    used[fy as usize] = true;
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        Some(map)
    }

    fn run(&mut self, images: &mut Vec<usize>) -> Result<()> {
        let j = images.len();
        if j == self.gens.len() {
            let map = self.extend(images).expect("checked at previous level");
            self.found.push(map);
            return Ok(());
        }
        for ci in 0..self.cands[j].len() {
            let y = self.cands[j][ci];
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::NodeBudget(self.budget));
            }
            images.push(y);
            if self.extend(images).is_some() {
                self.run(images)?;
            }
            images.pop();
        }
        Ok(())
    }
}

impl AutGroup {
    pub fn new(group: &GroupRef) -> Result<Self> {
        Self::with_budget(group, DEFAULT_NODE_BUDGET)
    }

    pub fn with_budget(group: &GroupRef, budget: u64) -> Result<Self> {
        let g: &FiniteGroup = group;
        let n = g.order();
        let all: Vec<usize> = (0..n).collect();
        let gens = small_generating_set(g, &all);
        let sig = element_signature(g);
        let cands: Vec<Vec<usize>> = gens
            .iter()
            .map(|&x| (0..n).filter(|&y| sig[y] == sig[x]).collect())
            .collect();
        let mut search = Search {
            g,
            gens: gens.clone(),
            cands,
            found: Vec::new(),
            nodes: 0,
            budget,
        };
        search.run(&mut Vec::new())?;
        let mut maps = search.found;
        let key = |m: &Vec<u32>| gens.iter().map(|&x| m[x]).collect::<Vec<u32>>();
        maps.sort_by_key(|m| key(m));
        let id_pos = maps
            .iter()
            .position(|m| m.iter().enumerate().all(|(i, &v)| v as usize == i))
            .ok_or_else(|| Error::Invariant("identity automorphism not found".into()))?;
        maps[..=id_pos].rotate_right(1);
        if cfg!(debug_assertions) && n <= 64 {
            for m in &maps {
                for a in 0..n {
                    for b in 0..n {
                        debug_assert_eq!(
                            m[g.mul(a, b)] as usize,
                            g.mul(m[a] as usize, m[b] as usize)
                        );
                    }
                }
            }
        }
        let index: HashMap<Vec<u32>, usize> =
            maps.iter().enumerate().map(|(i, m)| (key(m), i)).collect();
        let mut aut = AutGroup {
            group: group.clone(),
            gens,
            maps,
            index,
            inner: Vec::new(),
            inner_of: Vec::new(),
            out: group.clone(),
            out_proj: Vec::new(),
            out_reps: Vec::new(),
        };
        aut.build_inner_and_out()?;
        Ok(aut)
    }

    fn build_inner_and_out(&mut self) -> Result<()> {
        let g = self.group.clone();
        let n = g.order();
        let mut inner_of = Vec::with_capacity(n);
        for x in 0..n {
            let img: Vec<u32> = self.gens.iter().map(|&y| g.conj(x, y) as u32).collect();
            let i = *self
                .index
                .get(&img)
                .ok_or_else(|| Error::Invariant("inner automorphism missing".into()))?;
            inner_of.push(i);
        }
        let mut inner = inner_of.clone();
        inner.sort_unstable();
        inner.dedup();
        let na = self.maps.len();
        let mut proj = vec![usize::MAX; na];
        let mut reps = Vec::new();
        for a in 0..na {
            if proj[a] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(a);
            for &c in &inner {
                proj[self.compose(a, c)] = id;
            }
        }
        let m = reps.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                table.push(proj[self.compose(a, b)] as u32);
            }
        }
        let out_tmp =
            FiniteGroup::from_table_unchecked(table, Vec::new(), format!("Out({})", g.name()))?;
        let elements: Vec<usize> = (0..m).collect();
        let out_gens = small_generating_set(&out_tmp, &elements);
        let out = out_tmp.with_generators(out_gens)?;
        self.out = Arc::new(out);
        self.inner = inner;
        self.inner_of = inner_of;
        self.out_proj = proj;
        self.out_reps = reps;
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    pub fn out_order(&self) -> usize {
        self.out_reps.len()
    }

    /// Element map of automorphism `a`.
    pub fn map(&self, a: usize) -> &[u32] {
        &self.maps[a]
    }

    #[inline]
    pub fn apply(&self, a: usize, x: usize) -> usize {
        self.maps[a][x] as usize
    }

    /// Index of `a ∘ b` (apply `b` first).
    pub fn compose(&self, a: usize, b: usize) -> usize {
        let ma = &self.maps[a];
        let mb = &self.maps[b];
        let key: Vec<u32> = self.gens.iter().map(|&x| ma[mb[x] as usize]).collect();
        self.index[&key]
    }

    pub fn inverse(&self, a: usize) -> usize {
        let m = &self.maps[a];
        let mut inv = vec![0u32; m.len()];
        for (x, &y) in m.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        let key: Vec<u32> = self.gens.iter().map(|&x| inv[x]).collect();
        self.index[&key]
    }

    /// Index of an automorphism given by its full map.
    pub fn lookup(&self, map: &[u32]) -> Option<usize> {
        let key: Vec<u32> = self.gens.iter().map(|&x| map[x]).collect();
        self.index.get(&key).copied()
    }

    /// Index of conjugation `x -> g x g^-1`.
    pub fn inner_of(&self, g: usize) -> usize {
        self.inner_of[g]
    }

    pub fn is_inner(&self, a: usize) -> bool {
        self.inner.binary_search(&a).is_ok()
    }

    /// Automorphism as a homomorphism of the group to itself.
    pub fn as_hom(&self, a: usize) -> GroupHom {
        GroupHom {
            domain: self.group.clone(),
            codomain: self.group.clone(),
            images: self.maps[a].clone(),
        }
    }

    /// Lifts of the outer generators together with the inner generators.
    pub fn generators(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .out
            .generators()
            .iter()
            .map(|&o| self.out_reps[o])
            .collect();
        for &x in self.group.generators() {
            v.push(self.inner_of[x]);
        }
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Elements of the subgroup of Aut generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            let a = out[i];
            for &s in gens {
                let b = self.compose(a, s);
                if !seen[b] {
                    seen[b] = true;
                    out.push(b);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// Orbits of the automorphism group on a list of subgroups closed under it.
    pub fn orbits_on(&self, subs: &[Subgroup]) -> Result<Vec<Vec<usize>>> {
        let gens = self.generators();
        let mut orbit_of = vec![usize::MAX; subs.len()];
        let mut orbits = Vec::new();
        for i in 0..subs.len() {
            if orbit_of[i] != usize::MAX {
                continue;
            }
            let mut orb = vec![i];
            orbit_of[i] = orbits.len();
            let mut k = 0;
            while k < orb.len() {
                let v = &subs[orb[k]];
                for &a in &gens {
                    let w = v.image(&self.maps[a]);
                    let j = subs.iter().position(|s| *s == w).ok_or_else(|| {
                        Error::Invariant("subgroup list not closed under Aut".into())
                    })?;
                    if orbit_of[j] == usize::MAX {
                        orbit_of[j] = orbits.len();
                        orb.push(j);
                    }
                }
                k += 1;
            }
            orb.sort_unstable();
            orbits.push(orb);
        }
        Ok(orbits)
    }

    /// Stabilizer data of a subgroup `V`.
    pub fn stabilizers(&self, v: &Subgroup) -> Result<Stabilizers> {
        let g = &self.group;
        let mut aut_pv = Vec::new();
        let mut aut0_pv = Vec::new();
        for a in 0..self.order() {
            let m = &self.maps[a];
            if v.elements().iter().all(|&x| v.contains(m[x] as usize)) {
                aut_pv.push(a);
                if v.elements().iter().all(|&x| m[x] as usize == x) {
                    aut0_pv.push(a);
                }
            }
        }
        let out_pv = Subgroup::from_elements(aut_pv.iter().map(|&a| self.out_proj[a]).collect());
        let out0_pv = Subgroup::from_elements(aut0_pv.iter().map(|&a| self.out_proj[a]).collect());
        let nv = normalizer(g, v);
        let cv = centralizer(g, v.elements());
        let (n_grp, _) = nv.to_group(g, "N(V)")?;
        let c_in_n = Subgroup::from_elements(
            cv.elements()
                .iter()
                .map(|&x| nv.index_of(x).unwrap())
                .collect(),
        );
        let (weyl, _) = quotient(&n_grp, &c_in_n)?;
        let (out_pv_group, _) = out_pv.to_group(&self.out, "Out(P,V)")?;
        let out0_in = Subgroup::from_elements(
            out0_pv
                .elements()
                .iter()
                .map(|&o| out_pv.index_of(o).unwrap())
                .collect(),
        );
        let (gl_pv, _) = quotient(&out_pv_group, &out0_in)?;
        // representatives in Aut for each outer class meeting the stabilizers
        let mut lift_pv = HashMap::new();
        for &a in &aut_pv {
            lift_pv.entry(self.out_proj[a]).or_insert(a);
        }
        let mut lift0_pv = HashMap::new();
        for &a in &aut0_pv {
            lift0_pv.entry(self.out_proj[a]).or_insert(a);
        }
        Ok(Stabilizers {
            aut_pv,
            aut0_pv,
            out_pv,
            out0_pv,
            weyl,
            gl_pv,
            normalizer: nv,
            centralizer: cv,
            lift_pv,
            lift0_pv,
        })
    }
}

/// Stabilizers of a subgroup `V` in Aut and Out.
#[derive(Clone, Debug)]
pub struct Stabilizers {
    /// Automorphisms with `a(V) = V`.
    pub aut_pv: Vec<usize>,
    /// Automorphisms fixing `V` pointwise.
    pub aut0_pv: Vec<usize>,
    pub out_pv: Subgroup,
    pub out0_pv: Subgroup,
    /// `N_P(V)/C_P(V)`.
    pub weyl: GroupRef,
    /// `Out(P,V)/Out_0(P,V)`.
    pub gl_pv: GroupRef,
    pub normalizer: Subgroup,
    pub centralizer: Subgroup,
    lift_pv: HashMap<usize, usize>,
    lift0_pv: HashMap<usize, usize>,
}

impl Stabilizers {
    /// An automorphism stabilizing `V` in the given outer class.
    pub fn lift(&self, out_elem: usize) -> Option<usize> {
        self.lift_pv.get(&out_elem).copied()
    }

    /// An automorphism fixing `V` pointwise in the given outer class.
    pub fn lift0(&self, out_elem: usize) -> Option<usize> {
        self.lift0_pv.get(&out_elem).copied()
    }
}

/// Orders of `Out_0(C_P(V), V)` and `Out_0(P, V)` for a maximal elementary
/// abelian `V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PGroupCriterion {
    pub p: u32,
    pub centralizer_out0: usize,
    pub out0: usize,
    pub centralizer_is_p_group: bool,
    pub is_p_group: bool,
}

/// For odd `p`, `Out_0(C_P(V), V)` a `p`-group forces `Out_0(P, V)` to be
/// one; an instance violating this is reported as an invariant error.
pub fn odd_p_pgroup_criterion(g: &GroupRef, p: u32, v: &Subgroup) -> Result<PGroupCriterion> {
    if !crate::grpcore::is_elementary_abelian(g, v, p) {
        return Err(Error::InvalidGroup("V is not elementary abelian".into()));
    }
    let cent = centralizer(g, v.elements());
    if cent
        .elements()
        .iter()
        .any(|&x| g.element_order(x) == p as usize && !v.contains(x))
    {
        return Err(Error::InvalidGroup(
            "V is not a maximal elementary abelian subgroup".into(),
        ));
    }
    let out0 = AutGroup::new(g)?.stabilizers(v)?.out0_pv.order();
    let centralizer_out0 = if cent.order() == g.order() {
        out0
    } else {
        let (k, _) = cent.to_group(g, "C_P(V)")?;
        let v_in_k = Subgroup::from_elements(
            v.elements()
                .iter()
                .map(|&x| cent.index_of(x).unwrap())
                .collect(),
        );
        AutGroup::new(&k)?.stabilizers(&v_in_k)?.out0_pv.order()
    };
    let is_pg = |n: usize| crate::grpcore::log_p(n, p).is_some();
    let res = PGroupCriterion {
        p,
        centralizer_out0,
        out0,
        centralizer_is_p_group: is_pg(centralizer_out0),
        is_p_group: is_pg(out0),
    };
    if p != 2 && res.centralizer_is_p_group && !res.is_p_group {
        return Err(Error::Invariant(format!(
            "Out0(C_P(V),V) has order {centralizer_out0} but Out0(P,V) has order {out0}"
        )));
    }
    Ok(res)
}
