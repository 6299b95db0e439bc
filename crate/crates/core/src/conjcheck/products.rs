use std::fmt::{self, Write as _};

use super::checks::check_conj_c_group;
use super::{Conjecture, EvidenceRow, Status, Verdict, Witness};
use crate::autom::AutGroup;
use crate::error::{Error, Result};
use crate::grpcore::{
    center, commutator_subgroup, direct_product, frattini, is_decomposable, is_elementary_abelian,
    is_p_central, maximal_central_elementary, omega1, p_prime_part, FiniteGroup, GroupRef,
    Subgroup, ELEMENT_CAP,
};
use crate::stratify::{StratSettings, Stratification};

/// Sufficient conditions for `(P, Q)` to be a good pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GoodPairCondition {
    /// `Z(Q) <= Phi(Q)`.
    A,
    /// `P` elementary abelian.
    B,
    /// `P / [P,P] Omega_1(P)` elementary abelian and `Omega_1(Q) <= Phi(Q)`.
    C,
    /// `Q` cyclic of order `p^t` and `exp(P) | p^t`.
    D,
}

impl fmt::Display for GoodPairCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GoodPairCondition::A => "(a)",
            GoodPairCondition::B => "(b)",
            GoodPairCondition::C => "(c)",
            GoodPairCondition::D => "(d)",
        })
    }
}

const ALL_CONDITIONS: [GoodPairCondition; 4] = [
    GoodPairCondition::A,
    GoodPairCondition::B,
    GoodPairCondition::C,
    GoodPairCondition::D,
];

fn whole(g: &FiniteGroup) -> Subgroup {
    Subgroup::whole(g)
}

fn holds(cond: GoodPairCondition, pg: &FiniteGroup, qg: &FiniteGroup, p: u32) -> bool {
    match cond {
        GoodPairCondition::A => center(qg).is_subset_of(&frattini(qg, p)),
        GoodPairCondition::B => is_elementary_abelian(pg, &whole(pg), p),
        GoodPairCondition::C => {
            let mut gens = commutator_subgroup(pg).elements().to_vec();
            gens.extend_from_slice(omega1(pg, p).elements());
            let n = Subgroup::generated(pg, &gens);
            let quotient_elementary = (0..pg.order()).all(|x| n.contains(pg.pow(x, p as usize)));
            quotient_elementary && omega1(qg, p).is_subset_of(&frattini(qg, p))
        }
        GoodPairCondition::D => {
            let n = qg.order();
            let cyclic = (0..n).any(|x| qg.element_order(x) == n);
            cyclic && n % pg.exponent() == 0
        }
    }
}

fn require_central(g: &FiniteGroup, p: u32) -> Result<()> {
    if !is_p_central(g, p) {
        return Err(Error::InvalidGroup(format!(
            "{} is not {p}-central",
            g.name()
        )));
    }
    Ok(())
}

/// The conditions among (a)-(d) that `(P, Q)` satisfies.
pub fn satisfied_conditions(
    pg: &FiniteGroup,
    qg: &FiniteGroup,
    p: u32,
) -> Result<Vec<GoodPairCondition>> {
    require_central(pg, p)?;
    require_central(qg, p)?;
    Ok(ALL_CONDITIONS
        .iter()
        .copied()
        .filter(|&c| holds(c, pg, qg, p))
        .collect())
}

/// Whether `(P, Q)` is a good pair by one of the sufficient conditions;
/// inconclusive when none applies.
pub fn good_pair(pg: &FiniteGroup, qg: &FiniteGroup, p: u32) -> Result<Verdict> {
    let sat = satisfied_conditions(pg, qg, p)?;
    let mut v = Verdict::new(
        Conjecture::GoodPair,
        format!("({}, {})", pg.name(), qg.name()),
    );
    for c in ALL_CONDITIONS {
        v.evidence.push(EvidenceRow::new(
            None,
            c.to_string(),
            Some(sat.contains(&c) as usize),
        ));
    }
    match sat.first() {
        Some(c) => {
            v.status = Status::Holds;
            v.notes.push(format!("good pair via {c}"));
        }
        None => v.notes.push("no sufficient condition applies".into()),
    }
    Ok(v)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Block {
    Cyclic,
    Other,
    Elementary,
}

fn block_of(g: &FiniteGroup, p: u32) -> Block {
    let n = g.order();
    if is_elementary_abelian(g, &whole(g), p) {
        Block::Elementary
    } else if (0..n).any(|x| g.element_order(x) == n) {
        Block::Cyclic
    } else {
        Block::Other
    }
}

fn combine(a: Status, b: Status) -> Status {
    match (a, b) {
        (Status::Fails, _) | (_, Status::Fails) => Status::Fails,
        (Status::Inconclusive, _) | (_, Status::Inconclusive) => Status::Inconclusive,
        (Status::HoldsUpToCutoff, _) | (_, Status::HoldsUpToCutoff) => Status::HoldsUpToCutoff,
        _ => Status::Holds,
    }
}

/// Conjecture C for a direct product from the factors' verdicts and a chain
/// of good pairs. Cyclic factors come first in increasing order, then
/// noncyclic non-elementary ones, then elementary abelian ones. When the
/// product has order at most `direct_limit` it is also checked directly.
pub fn product_conj_c_closure(
    factors: &[GroupRef],
    p: u32,
    settings: &StratSettings,
    direct_limit: usize,
) -> Result<Verdict> {
    if factors.is_empty() {
        return Err(Error::InvalidGroup("empty product".into()));
    }
    for f in factors {
        require_central(f, p)?;
    }
    let mut ordered: Vec<GroupRef> = factors.to_vec();
    ordered.sort_by_key(|g| {
        (
            block_of(g, p),
            if block_of(g, p) == Block::Cyclic {
                g.order()
            } else {
                0
            },
        )
    });
    let names: Vec<&str> = factors.iter().map(|g| g.name()).collect();
    let mut v = Verdict::new(Conjecture::C, names.join(" x "));

    let mut factor_status = Status::Holds;
    let mut seen: Vec<(GroupRef, Status)> = Vec::new();
    for f in &ordered {
        let st = match seen.iter().find(|(g, _)| **g == **f) {
            Some((_, s)) => *s,
            None => {
                let s = check_conj_c_group(f, p, settings)?.status;
                seen.push((f.clone(), s));
                s
            }
        };
        let mut row = EvidenceRow::new(None, format!("factor {}", f.name()), None);
        row.caveat = st.to_string();
        v.evidence.push(row);
        factor_status = combine(factor_status, st);
    }

    let mut chain_complete = true;
    let mut cur = ordered[0].clone();
    for (k, next) in ordered.iter().enumerate().skip(1) {
        let forward = satisfied_conditions(&cur, next, p)?;
        let backward = satisfied_conditions(next, &cur, p)?;
        let step = if !forward.is_empty() {
            Some((format!("P = {}, Q = {}", cur.name(), next.name()), forward))
        } else if !backward.is_empty() {
            Some((format!("P = {}, Q = {}", next.name(), cur.name()), backward))
        } else {
            None
        };
        match step {
            Some((pair, conds)) => {
                let conds: Vec<String> = conds.iter().map(|c| c.to_string()).collect();
                let conds = conds.join(" ");
                v.notes.push(format!("step {k}: {pair} via {conds}"));
            }
            None => {
                chain_complete = false;
                v.notes.push(format!(
                    "step {k}: no condition for {} with {}",
                    cur.name(),
                    next.name()
                ));
            }
        }
        cur = direct_product(&cur, next, ELEMENT_CAP)?;
    }
    let mut status = if chain_complete {
        factor_status
    } else {
        Status::Inconclusive
    };

    if cur.order() <= direct_limit {
        match check_conj_c_group(&cur, p, settings) {
            Ok(direct) => {
                let mut row = EvidenceRow::new(None, format!("direct {}", cur.order()), None);
                row.caveat = direct.status.to_string();
                v.evidence.push(row);
                v.notes.push(format!(
                    "direct check on the order-{} product: {}",
                    cur.order(),
                    direct.status
                ));
                v.cutoffs = direct.cutoffs;
                v.witnesses.extend(direct.witnesses.iter().cloned());
                if direct.status == Status::Holds
                    || (direct.status.is_positive() && !status.is_positive())
                {
                    status = direct.status;
                }
            }
            Err(e @ (Error::DimBudget { .. } | Error::NodeBudget(_))) => {
                v.notes.push(format!("direct check skipped: {e}"));
            }
            Err(e) => return Err(e),
        }
    } else {
        v.notes.push(format!(
            "order {} above the direct-check limit {direct_limit}",
            cur.order()
        ));
    }
    v.status = status;
    Ok(v)
}

#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub name: String,
    pub order: usize,
    pub p_central: bool,
    pub indecomposable: bool,
    pub out_order: usize,
    pub out_p_prime: usize,
    /// `|Out_0(P, C)|` for the largest central elementary abelian `C`.
    pub out0_order: usize,
    pub out0_p_prime: usize,
    pub conj_c: Option<Status>,
    /// Shape `2^a`, `3 2^a` or `5 2^a` of `|Out_0|`, where asserted.
    pub shape_ok: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub entries: Vec<CensusEntry>,
    pub verdict: Verdict,
}

impl CensusReport {
    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let c = e.conj_c.map_or("-".to_string(), |x| x.to_string());
            let shape = match e.shape_ok {
                Some(true) => "shape ok",
                Some(false) => "shape violated",
                None => "",
            };
            for (field, val, caveat) in [
                ("order", e.order, ""),
                ("2-central", e.p_central as usize, ""),
                ("indecomposable", e.indecomposable as usize, ""),
                ("out", e.out_order, ""),
                ("out p'-part", e.out_p_prime, ""),
                ("out0 p'-part", e.out0_p_prime, shape),
            ] {
                let _ = writeln!(s, "census:{}\t-\t{field}\t{val}\t{caveat}", e.name);
            }
            let _ = writeln!(s, "census:{}\t-\tC\t-\t{c}", e.name);
        }
        let _ = writeln!(s, "census\t-\tverdict\t-\t{}", self.verdict.status);
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "[census] {}", self.verdict.status);
        let _ = writeln!(
            s,
            "  {:<16} {:>5} {:>9} {:>6} {:>7} {:>7} {:>8}  C",
            "group", "order", "central", "indec", "|Out|", "Out p'", "Out0 p'"
        );
        for e in &self.entries {
            let c = e.conj_c.map_or("-".to_string(), |x| x.to_string());
            let _ = writeln!(
                s,
                "  {:<16} {:>5} {:>9} {:>6} {:>7} {:>7} {:>8}  {c}",
                e.name,
                e.order,
                e.p_central,
                e.indecomposable,
                e.out_order,
                e.out_p_prime,
                e.out0_p_prime
            );
        }
        for n in &self.verdict.notes {
            let _ = writeln!(s, "  note: {n}");
        }
        s
    }
}

/// Per-group flags and `p'`-parts of `|Out|` and `|Out_0|`, with
/// Conjecture C on the `p`-central inputs when `with_conj_c` is set.
pub fn census(
    groups: &[GroupRef],
    p: u32,
    settings: &StratSettings,
    with_conj_c: bool,
) -> Result<CensusReport> {
    let mut entries = Vec::with_capacity(groups.len());
    let mut v = Verdict::new(Conjecture::Census, format!("{} groups", groups.len()));
    let mut status = Status::Holds;
    for g in groups {
        let aut = AutGroup::new(g)?;
        let p_central = is_p_central(g, p);
        let indecomposable = !is_decomposable(g);
        let c = maximal_central_elementary(g, p);
        let out0_order = aut.stabilizers(&c)?.out0_pv.order();
        let out0_p_prime = p_prime_part(out0_order, p);
        let shape_ok = (p == 2 && p_central && indecomposable && g.order() <= 64)
            .then(|| matches!(out0_p_prime, 1 | 3 | 5));
        if shape_ok == Some(false) {
            status = Status::Fails;
            v.witnesses.push(Witness {
                irreducible: "-".into(),
                d: 0,
                at: format!("{}: |Out0| has 2'-part {out0_p_prime}", g.name()),
            });
        }
        let out_order = aut.out_order();
        let conj_c = if with_conj_c && p_central {
            let st = Stratification::new(g, p, aut, settings.clone())?;
            let s = super::check_conj_c(&st)?.status;
            status = combine(status, s);
            Some(s)
        } else {
            None
        };
        entries.push(CensusEntry {
            name: g.name().to_string(),
            order: g.order(),
            p_central,
            indecomposable,
            out_order,
            out_p_prime: p_prime_part(out_order, p),
            out0_order,
            out0_p_prime,
            conj_c,
            shape_ok,
        });
    }
    for e in &entries {
        v.evidence.push(EvidenceRow::new(
            None,
            format!("{} out p'-part", e.name),
            Some(e.out_p_prime),
        ));
        v.evidence.push(EvidenceRow::new(
            None,
            format!("{} out0 p'-part", e.name),
            Some(e.out0_p_prime),
        ));
    }
    v.status = status;
    Ok(CensusReport {
        entries,
        verdict: v,
    })
}
