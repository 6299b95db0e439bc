use std::fmt;
use std::path::{Path, PathBuf};

use crate::autom::AutGroup;
use crate::error::{Error, Result};
use crate::grpcore::grpfile::read_grp;
use crate::grpcore::{
    commutator_subgroup, frattini, maximal_central_elementary, FiniteGroup, GroupRef, QuillenData,
};

/// Isomorphism invariants used to locate a group in a catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: usize,
    pub rank: usize,
    pub center_rank: usize,
    pub frattini_order: usize,
    pub commutator_order: usize,
    pub exponent: usize,
    pub aut_order: Option<usize>,
    pub out_order: Option<usize>,
    /// Ranks of the elementary abelian subgroups containing `C`, sorted.
    pub quillen_ranks: Vec<usize>,
    /// Orders of `C_P(V)` over maximal `V`, sorted.
    pub centralizer_orders: Vec<usize>,
}

impl Fingerprint {
    pub fn of(g: &FiniteGroup, p: u32) -> Result<Self> {
        let q = QuillenData::for_group(g, p)?;
        let c = maximal_central_elementary(g, p);
        let mut quillen_ranks = q.ranks.clone();
        quillen_ranks.sort_unstable();
        let mut centralizer_orders: Vec<usize> = q
            .maximal
            .iter()
            .map(|&i| crate::grpcore::centralizer(g, q.objects[i].elements()).order())
            .collect();
        centralizer_orders.sort_unstable();
        Ok(Fingerprint {
            order: g.order(),
            rank: q.rk,
            center_rank: crate::grpcore::log_p(c.order(), p).unwrap_or(0),
            frattini_order: frattini(g, p).order(),
            commutator_order: commutator_subgroup(g).order(),
            exponent: g.exponent(),
            aut_order: None,
            out_order: None,
            quillen_ranks,
            centralizer_orders,
        })
    }

    /// With `|Aut|` and `|Out|` filled in.
    pub fn with_aut(g: &GroupRef, p: u32, node_budget: u64) -> Result<Self> {
        let mut fp = Self::of(g, p)?;
        let aut = AutGroup::with_budget(g, node_budget)?;
        fp.aut_order = Some(aut.order());
        fp.out_order = Some(aut.out_order());
        Ok(fp)
    }

    /// Equality on the structural fields.
    pub fn matches_structure(&self, other: &Fingerprint) -> bool {
        let strip = |f: &Fingerprint| Fingerprint {
            aut_order: None,
            out_order: None,
            ..f.clone()
        };
        strip(self) == strip(other)
    }

    /// Structural equality, plus `|Aut|` and `|Out|` where both sides know them.
    pub fn matches(&self, other: &Fingerprint) -> bool {
        let agree = |a: Option<usize>, b: Option<usize>| a.zip(b).map_or(true, |(x, y)| x == y);
        self.matches_structure(other)
            && agree(self.aut_order, other.aut_order)
            && agree(self.out_order, other.out_order)
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "order {} rank {} center-rank {} frattini {} commutator {} exponent {}",
            self.order,
            self.rank,
            self.center_rank,
            self.frattini_order,
            self.commutator_order,
            self.exponent
        )?;
        if let Some(a) = self.aut_order {
            write!(f, " aut {a}")?;
        }
        if let Some(o) = self.out_order {
            write!(f, " out {o}")?;
        }
        write!(
            f,
            " quillen {:?} centralizers {:?}",
            self.quillen_ranks, self.centralizer_orders
        )
    }
}

/// `.grp` files of a directory in name order.
pub fn catalog_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<Vec<_>>>()?
        .into_iter()
        .filter(|p| p.extension().is_some_and(|e| e == "grp"))
        .collect();
    files.sort();
    Ok(files)
}

/// Every catalog file whose group matches `fp`. `|Aut|` is computed for
/// structural matches only, and only when `fp` carries it.
pub fn candidates(dir: &Path, fp: &Fingerprint, p: u32, node_budget: u64) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for path in catalog_files(dir)? {
        let g = std::sync::Arc::new(read_grp(&path)?);
        if g.order() != fp.order {
            continue;
        }
        let mut other = Fingerprint::of(&g, p)?;
        if !fp.matches_structure(&other) {
            continue;
        }
        if fp.aut_order.is_some() || fp.out_order.is_some() {
            other = Fingerprint::with_aut(&g, p, node_budget)?;
        }
        if fp.matches(&other) {
            out.push(path);
        }
    }
    Ok(out)
}

/// The unique catalog file matching `fp`.
pub fn identify(dir: &Path, fp: &Fingerprint, p: u32, node_budget: u64) -> Result<PathBuf> {
    let mut found = candidates(dir, fp, p, node_budget)?;
    match found.len() {
        0 => Err(Error::NoMatch(fp.to_string())),
        1 => Ok(found.remove(0)),
        _ => Err(Error::AmbiguousMatch(
            found.iter().map(|p| p.display().to_string()).collect(),
        )),
    }
}
