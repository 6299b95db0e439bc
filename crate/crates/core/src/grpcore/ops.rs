use std::collections::BTreeSet;
use std::sync::Arc;

use super::group::{FiniteGroup, GroupRef, INTERNAL_CAP};

use super::subgroup::{GroupHom, Subgroup};
use crate::error::{Error, Result};

pub fn center(g: &FiniteGroup) -> Subgroup {
    centralizer(g, g.generators())
}

/// Elements commuting with every element of `set`.
pub fn centralizer(g: &FiniteGroup, set: &[usize]) -> Subgroup {
    Subgroup::from_elements(
        (0..g.order())
            .filter(|&x| set.iter().all(|&s| g.mul(x, s) == g.mul(s, x)))
            .collect(),
    )
}

pub fn normalizer(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let mask = h.mask(g.order());
    Subgroup::from_elements(
        (0..g.order())
            .filter(|&x| h.elements().iter().all(|&y| mask[g.conj(x, y)]))
            .collect(),
    )
}

pub fn is_normal(g: &FiniteGroup, h: &Subgroup) -> bool {
    let mask = h.mask(g.order());
    g.generators()
        .iter()
        .all(|&x| h.elements().iter().all(|&y| mask[g.conj(x, y)]))
}

pub fn commutator_subgroup(g: &FiniteGroup) -> Subgroup {
    let n = g.order();
    let mut gens = BTreeSet::new();
    for x in 0..n {
        for y in 0..n {
            gens.insert(g.commutator(x, y));
        }
    }
    gens.remove(&0);
    Subgroup::generated(g, &gens.into_iter().collect::<Vec<_>>())
}

/// Subgroup generated by `[G,G]` and all p-th powers.
pub fn frattini(g: &FiniteGroup, p: u32) -> Subgroup {
    let d = commutator_subgroup(g);
    let mut gens: Vec<usize> = d.elements().to_vec();
    for x in 0..g.order() {
        gens.push(g.pow(x, p as usize));
    }
    gens.sort_unstable();
    gens.dedup();
    Subgroup::generated(g, &gens)
}

/// Subgroup generated by the elements of order p.
pub fn omega1(g: &FiniteGroup, p: u32) -> Subgroup {
    let gens: Vec<usize> = (1..g.order())
        .filter(|&x| g.element_order(x) == p as usize)
        .collect();
    Subgroup::generated(g, &gens)
}

/// Elements of order dividing p.
pub fn order_p_elements(g: &FiniteGroup, p: u32) -> Vec<usize> {
    (1..g.order())
        .filter(|&x| g.element_order(x) == p as usize)
        .collect()
}

/// Quotient by a normal subgroup, with the projection.
pub fn quotient(g: &GroupRef, nsub: &Subgroup) -> Result<(GroupRef, GroupHom)> {
    if !is_normal(g, nsub) {
        return Err(Error::InvalidGroup(
            "quotient by a subgroup that is not normal".into(),
        ));
    }
    let n = g.order();
    let mut label = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if label[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &k in nsub.elements() {
            label[g.mul(x, k)] = id;
        }
    }
    let m = reps.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            table.push(label[g.mul(a, b)] as u32);
        }
    }
    let mut gens: Vec<usize> = g
        .generators()
        .iter()
        .map(|&x| label[x])
        .filter(|&c| c != 0)
        .collect();
    gens.sort_unstable();
    gens.dedup();
    let q = Arc::new(FiniteGroup::from_table_with_cap(
        table,
        gens,
        format!("{}/N{}", g.name(), nsub.order()),
        INTERNAL_CAP,
    )?);
    let proj = GroupHom {
        domain: g.clone(),
        codomain: q.clone(),
        images: label.iter().map(|&c| c as u32).collect(),
    };
    Ok((q, proj))
}

/// Direct product; the pair `(a, b)` has index `a * |H| + b`.
pub fn direct_product(g: &GroupRef, h: &GroupRef, cap: usize) -> Result<GroupRef> {
    let (m, n) = (g.order(), h.order());
    let mut gens: Vec<usize> = g.generators().iter().map(|&a| a * n).collect();
    gens.extend(h.generators().iter().copied());
    let prod = FiniteGroup::from_fn(
        m * n,
        |x, y| g.mul(x / n, y / n) * n + h.mul(x % n, y % n),
        gens,
        format!("{}x{}", g.name(), h.name()),
        cap,
    )?;
    Ok(Arc::new(prod))
}

/// Projections and inclusions for `G x H` built by [`direct_product`].
pub fn product_maps(g: &GroupRef, h: &GroupRef, prod: &GroupRef) -> (GroupHom, GroupHom) {
    let n = h.order();
    let ig = GroupHom {
        domain: g.clone(),
        codomain: prod.clone(),
        images: (0..g.order()).map(|a| (a * n) as u32).collect(),
    };
    let ih = GroupHom {
        domain: h.clone(),
        codomain: prod.clone(),
        images: (0..n as u32).collect(),
    };
    (ig, ih)
}

/// Whether the subgroup is elementary abelian of exponent p.
pub fn is_elementary_abelian(g: &FiniteGroup, h: &Subgroup, p: u32) -> bool {
    let el = h.elements();
    el.iter().skip(1).all(|&x| g.element_order(x) == p as usize)
        && el
            .iter()
            .all(|&x| el.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
}

/// Whether `G` decomposes as a nontrivial direct product `A x B` of normal
/// subgroups.
pub fn is_decomposable(g: &FiniteGroup) -> bool {
    let normals = normal_subgroups(g);
    let n = g.order();
    for a in &normals {
        if a.order() == 1 || a.order() == n {
            continue;
        }
        for b in &normals {
            if a.order() * b.order() != n || a >= b {
                continue;
            }
            let inter = a.elements().iter().filter(|&&x| b.contains(x)).count();
            if inter == 1 {
                return true;
            }
        }
    }
    false
}

/// All normal subgroups, found as normal closures of joins.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let n = g.order();
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    let mut minimal: Vec<Subgroup> = Vec::new();
    for x in 0..n {
        let s = normal_closure(g, &[x]);
        if found.insert(s.clone()) {
            minimal.push(s);
        }
    }
    let mut frontier: Vec<Subgroup> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for b in &minimal {
                if b.is_subset_of(a) {
                    continue;
                }
                let mut gens: Vec<usize> = a.elements().to_vec();
                gens.extend_from_slice(b.elements());
                let s = Subgroup::generated(g, &gens);
                if found.insert(s.clone()) {
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    found.into_iter().collect()
}

pub fn normal_closure(g: &FiniteGroup, set: &[usize]) -> Subgroup {
    let mut gens: Vec<usize> = set.to_vec();
    loop {
        let s = g.closure(&gens);
        let sub = Subgroup::from_elements(s.clone());
        let mut grew = false;
        'outer: for &x in &s {
            for &y in g.generators() {
                let c = g.conj(y, x);
                if !sub.contains(c) {
                    gens.push(c);
                    grew = true;
                    break 'outer;
                }
            }
        }
        if !grew {
            return sub;
        }
    }
}

/// Largest normal p-subgroup: the union of the conjugacy classes whose
/// normal closure is a p-group.
pub fn o_p(g: &FiniteGroup, p: u32) -> Subgroup {
    let n = g.order();
    let mut done = vec![false; n];
    let mut members = Vec::new();
    for x in 0..n {
        if done[x] {
            continue;
        }
        let cls = g.conjugacy_class(x);
        for &y in &cls {
            done[y] = true;
        }
        let nc = normal_closure(g, &[x]);
        if super::group::log_p(nc.order(), p).is_some() {
            members.extend(cls);
        }
    }
    Subgroup::from_elements(members)
}

/// Every subgroup, as joins of cyclic subgroups. Only for small groups.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let n = g.order();
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    let mut cyclic: Vec<(Subgroup, usize)> = Vec::new();
    let mut frontier: Vec<(Subgroup, Vec<usize>)> = Vec::new();
    for x in 0..n {
        let s = Subgroup::generated(g, &[x]);
        if found.insert(s.clone()) {
            cyclic.push((s.clone(), x));
            frontier.push((s, vec![x]));
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (a, gens) in &frontier {
            for (c, x) in &cyclic {
                if c.is_subset_of(a) {
                    continue;
                }
                let mut gg = gens.clone();
                gg.push(*x);
                let s = Subgroup::generated(g, &gg);
                if found.insert(s.clone()) {
                    next.push((s, gg));
                }
            }
        }
        frontier = next;
    }
    found.into_iter().collect()
}
