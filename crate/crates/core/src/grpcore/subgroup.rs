use std::collections::BTreeSet;
use std::sync::Arc;

use super::group::{FiniteGroup, GroupRef, INTERNAL_CAP};
use crate::error::{Error, Result};

/// Subgroup of a parent group, as a sorted list of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    /// Trusts the caller that `elements` is closed; sorts and dedups.
    pub fn from_elements(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Subgroup { elements }
    }

    pub fn generated(g: &FiniteGroup, gens: &[usize]) -> Self {
        Subgroup {
            elements: g.closure(gens),
        }
    }

    pub fn trivial() -> Self {
        Subgroup { elements: vec![0] }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup {
            elements: (0..g.order()).collect(),
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Position of `x` inside the element list.
    pub fn index_of(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &x in &self.elements {
            m[x] = true;
        }
        m
    }

    /// Image under conjugation `x -> g x g^-1`.
    pub fn conjugate(&self, g: &FiniteGroup, by: usize) -> Subgroup {
        Subgroup::from_elements(self.elements.iter().map(|&x| g.conj(by, x)).collect())
    }

    /// Image under an arbitrary element map.
    pub fn image(&self, map: &[u32]) -> Subgroup {
        Subgroup::from_elements(self.elements.iter().map(|&x| map[x] as usize).collect())
    }

    /// This subgroup as a group in its own right, with its inclusion.
    pub fn to_group(
        &self,
        parent: &GroupRef,
        name: impl Into<String>,
    ) -> Result<(GroupRef, GroupHom)> {
        let n = self.elements.len();
        let mut pos = vec![u32::MAX; parent.order()];
        for (i, &x) in self.elements.iter().enumerate() {
            pos[x] = i as u32;
        }
        let mut table = Vec::with_capacity(n * n);
        for &a in &self.elements {
            for &b in &self.elements {
                let c = pos[parent.mul(a, b)];
                if c == u32::MAX {
                    return Err(Error::InvalidGroup(
                        "element set is not closed under multiplication".into(),
                    ));
                }
                table.push(c);
            }
        }
        let gens_parent = small_generating_set(parent, &self.elements);
        let gens = gens_parent.iter().map(|&x| pos[x] as usize).collect();
        let g = Arc::new(FiniteGroup::from_table_with_cap(
            table,
            gens,
            name,
            INTERNAL_CAP,
        )?);
        let hom = GroupHom {
            domain: g.clone(),
            codomain: parent.clone(),
            images: self.elements.iter().map(|&x| x as u32).collect(),
        };
        Ok((g, hom))
    }
}

/// Homomorphism between two groups, stored as the full image table.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub domain: GroupRef,
    pub codomain: GroupRef,
    pub images: Vec<u32>,
}

impl GroupHom {
    /// Validates the homomorphism property on all pairs.
    pub fn new(domain: GroupRef, codomain: GroupRef, images: Vec<u32>) -> Result<Self> {
        if images.len() != domain.order() {
            return Err(Error::InvalidHom(format!(
                "{} images for a group of order {}",
                images.len(),
                domain.order()
            )));
        }
        if images.iter().any(|&x| x as usize >= codomain.order()) {
            return Err(Error::InvalidHom("image out of range".into()));
        }
        let h = GroupHom {
            domain,
            codomain,
            images,
        };
        let n = h.domain.order();
        for &g in h.domain.generators() {
            for x in 0..n {
                if h.apply(h.domain.mul(x, g)) != h.codomain.mul(h.apply(x), h.apply(g)) {
                    return Err(Error::InvalidHom(format!("f({x}*{g}) != f({x})*f({g})")));
                }
            }
        }
        Ok(h)
    }

    /// Extend images of the domain's generators to a homomorphism.
    pub fn from_generator_images(
        domain: GroupRef,
        codomain: GroupRef,
        gen_images: &[usize],
    ) -> Result<Self> {
        let gens = domain.generators().to_vec();
        if gens.len() != gen_images.len() {
            return Err(Error::InvalidHom("wrong number of generator images".into()));
        }
        let n = domain.order();
        let mut images = vec![u32::MAX; n];
        images[0] = 0;
        let order = domain.bfs_order();
        let tree = domain.spanning_tree();
        for &x in order.iter().skip(1) {
            let (pred, k) = tree[x];
            images[x] = codomain.mul(images[pred] as usize, gen_images[k]) as u32;
        }
        GroupHom::new(domain, codomain, images)
    }

    pub fn identity(g: &GroupRef) -> Self {
        GroupHom {
            domain: g.clone(),
            codomain: g.clone(),
            images: (0..g.order() as u32).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn compose(&self, after: &GroupHom) -> Result<GroupHom> {
        if !Arc::ptr_eq(&self.codomain, &after.domain) && *self.codomain != *after.domain {
            return Err(Error::InvalidHom("composition of incompatible maps".into()));
        }
        Ok(GroupHom {
            domain: self.domain.clone(),
            codomain: after.codomain.clone(),
            images: self
                .images
                .iter()
                .map(|&x| after.images[x as usize])
                .collect(),
        })
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup::from_elements(
            (0..self.domain.order())
                .filter(|&x| self.images[x] == 0)
                .collect(),
        )
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().order() == 1
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::from_elements(self.images.iter().map(|&x| x as usize).collect())
    }
}

/// A generating set for the subgroup with the given elements. For p-groups
/// the result is a minimal generating set (a basis modulo the Frattini
/// subgroup); otherwise a greedy choice of large-order elements.
pub fn small_generating_set(g: &FiniteGroup, elements: &[usize]) -> Vec<usize> {
    if elements.len() <= 1 {
        return Vec::new();
    }
    let mut n = elements.len();
    let mut p = 0u32;
    for q in 2..=n {
        if n % q == 0 {
            p = q as u32;
            break;
        }
    }
    while n % p as usize == 0 {
        n /= p as usize;
    }
    if n == 1 {
        let phi = frattini_of_elements(g, elements, p);
        let mut chosen: Vec<usize> = Vec::new();
        let mut span: Vec<usize> = phi.clone();
        let mut in_span = vec![false; g.order()];
        for &x in &span {
            in_span[x] = true;
        }
        let mut by_order: Vec<usize> = elements.to_vec();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
        for &x in &by_order {
            if span.len() == elements.len() {
                break;
            }
            if !in_span[x] {
                chosen.push(x);
                let mut gens = phi_generators(g, &phi);
                gens.extend(chosen.iter().copied());
                span = g.closure(&gens);
                in_span.fill(false);
                for &y in &span {
                    in_span[y] = true;
                }
            }
        }
        return chosen;
    }
    let mut chosen: Vec<usize> = Vec::new();
    let mut span: Vec<usize> = vec![0];
    let mut in_span = vec![false; g.order()];
    in_span[0] = true;
    let mut by_order: Vec<usize> = elements.to_vec();
    by_order.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    for &x in &by_order {
        if span.len() == elements.len() {
            break;
        }
        if !in_span[x] {
            chosen.push(x);
            span = g.closure(&chosen);
            in_span.fill(false);
            for &y in &span {
                in_span[y] = true;
            }
        }
    }
    chosen
}

fn phi_generators(g: &FiniteGroup, phi: &[usize]) -> Vec<usize> {
    small_generating_set_plain(g, phi)
}

fn small_generating_set_plain(g: &FiniteGroup, elements: &[usize]) -> Vec<usize> {
    let mut chosen = Vec::new();
    let mut span = vec![0usize];
    for &x in elements.iter().rev() {
        if span.len() == elements.len() {
            break;
        }
        if span.binary_search(&x).is_err() {
            chosen.push(x);
            span = g.closure(&chosen);
        }
    }
    chosen
}

/// Frattini subgroup of a p-group given by its element set: products of
/// commutators and p-th powers.
fn frattini_of_elements(g: &FiniteGroup, elements: &[usize], p: u32) -> Vec<usize> {
    let mut gens: BTreeSet<usize> = BTreeSet::new();
    for &x in elements {
        gens.insert(g.pow(x, p as usize));
        for &y in elements {
            gens.insert(g.commutator(x, y));
        }
    }
    gens.remove(&0);
    let gens: Vec<usize> = gens.into_iter().collect();
    g.closure(&gens)
}
