use std::collections::BTreeSet;

use super::group::{log_p, FiniteGroup};
use super::ops::{center, centralizer, is_elementary_abelian, omega1, order_p_elements};
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

/// The poset of elementary abelian subgroups containing a central
/// elementary abelian subgroup `C`.
#[derive(Clone, Debug)]
pub struct QuillenData {
    pub p: u32,
    pub c: Subgroup,
    pub c_rank: usize,
    /// Sorted by rank, then by element list; `C` is object 0.
    pub objects: Vec<Subgroup>,
    pub ranks: Vec<usize>,
    /// Proper inclusions `(i, j)` meaning `V_i < V_j`.
    pub inclusions: Vec<(usize, usize)>,
    pub maximal: Vec<usize>,
    /// Orbits of objects; conjugacy classes until refined by automorphisms.
    pub orbits: Vec<Vec<usize>>,
    pub rk: usize,
    pub mrk: usize,
}

/// Largest central elementary abelian subgroup, `Omega_1(Z(G))`.
pub fn maximal_central_elementary(g: &FiniteGroup, p: u32) -> Subgroup {
    let z = center(g);
    let gens: Vec<usize> = z
        .elements()
        .iter()
        .copied()
        .filter(|&x| g.element_order(x) == p as usize)
        .collect();
    Subgroup::generated(g, &gens)
}

impl QuillenData {
    pub fn new(g: &FiniteGroup, c: &Subgroup, p: u32) -> Result<Self> {
        if !g.is_p_group(p) {
            return Err(Error::InvalidGroup(format!(
                "group of order {} is not a {p}-group",
                g.order()
            )));
        }
        if !is_elementary_abelian(g, c, p) {
            return Err(Error::InvalidGroup("C is not elementary abelian".into()));
        }
        let z = center(g);
        if !c.is_subset_of(&z) {
            return Err(Error::InvalidGroup("C is not central".into()));
        }
        let order_p = order_p_elements(g, p);
        let mut found: BTreeSet<Subgroup> = BTreeSet::new();
        found.insert(c.clone());
        let mut frontier = vec![c.clone()];
        while let Some(v) = frontier.pop() {
            let cent = centralizer(g, v.elements());
            for &x in &order_p {
                if v.contains(x) || !cent.contains(x) {
                    continue;
                }
                let mut gens: Vec<usize> = v.elements().to_vec();
                gens.push(x);
                let w = Subgroup::generated(g, &gens);
                if found.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        let mut objects: Vec<Subgroup> = found.into_iter().collect();
        objects.sort_by(|a, b| a.order().cmp(&b.order()).then(a.cmp(b)));
        let ranks: Vec<usize> = objects
            .iter()
            .map(|v| log_p(v.order(), p).unwrap())
            .collect();
        let mut inclusions = Vec::new();
        for i in 0..objects.len() {
            for j in 0..objects.len() {
                if ranks[i] < ranks[j] && objects[i].is_subset_of(&objects[j]) {
                    inclusions.push((i, j));
                }
            }
        }
        let maximal: Vec<usize> = (0..objects.len())
            .filter(|&i| !inclusions.iter().any(|&(a, _)| a == i))
            .collect();
        let rk = *ranks.iter().max().unwrap();
        let mrk = maximal.iter().map(|&i| ranks[i]).min().unwrap();
        // conjugacy orbits
        let mut orbit_of = vec![usize::MAX; objects.len()];
        let mut orbits = Vec::new();
        for i in 0..objects.len() {
            if orbit_of[i] != usize::MAX {
                continue;
            }
            let mut orb = vec![i];
            orbit_of[i] = orbits.len();
            let mut k = 0;
            while k < orb.len() {
                let v = objects[orb[k]].clone();
                for &gen in g.generators() {
                    let w = v.conjugate(g, gen);
                    let j = objects
                        .binary_search_by(|o| o.order().cmp(&w.order()).then(o.cmp(&w)))
                        .unwrap();
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
        Ok(QuillenData {
            p,
            c_rank: log_p(c.order(), p).unwrap(),
            c: c.clone(),
            objects,
            ranks,
            inclusions,
            maximal,
            orbits,
            rk,
            mrk,
        })
    }

    /// Quillen data for `C = Omega_1(Z(G))`.
    pub fn for_group(g: &FiniteGroup, p: u32) -> Result<Self> {
        let c = maximal_central_elementary(g, p);
        Self::new(g, &c, p)
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// Index of an object given as a subgroup.
    pub fn index_of(&self, v: &Subgroup) -> Option<usize> {
        self.objects
            .binary_search_by(|o| o.order().cmp(&v.order()).then(o.cmp(v)))
            .ok()
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal.contains(&i)
    }

    pub fn orbit_of(&self, i: usize) -> usize {
        self.orbits.iter().position(|o| o.contains(&i)).unwrap()
    }
}

/// Whether `Omega_1(G)` is central.
pub fn is_p_central(g: &FiniteGroup, p: u32) -> bool {
    let z = center(g);
    omega1(g, p).is_subset_of(&z)
}
