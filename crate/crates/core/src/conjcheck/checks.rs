use super::{irreducible_label, Conjecture, Cutoffs, EvidenceRow, Status, Verdict, Witness};
use crate::autom::AutGroup;
use crate::error::{Error, Result};
use crate::grpcore::{is_p_central, log_p, GroupRef};
use crate::modrep::IrrCatalog;
use crate::stratify::{StratSettings, Stratification};

fn labels(cat: &IrrCatalog) -> Vec<String> {
    cat.dims()
        .iter()
        .enumerate()
        .map(|(i, &d)| irreducible_label(i, d))
        .collect()
}

fn cutoffs(st: &Stratification, vanished_from: Option<usize>) -> Cutoffs {
    let s = &st.settings;
    Cutoffs {
        dmax: s.dmax,
        cutoff: s.cutoff,
        window: s.window,
        vanished_from,
    }
}

/// Every irreducible of F_p[Out(P)] is seen in the `d`-support at an object
/// of rank `rk(P)` for some `d <= dmax`. Cross-checked against the totals
/// `dim e_S H^*(P)`.
pub fn check_conj_a(st: &Stratification) -> Result<Verdict> {
    let cat = st.catalog()?;
    let labels = labels(cat);
    let ns = labels.len();
    let rk = st.quillen.rk;
    let mut v = Verdict::new(Conjecture::A, st.group.name());
    let mut witnessed: Vec<Option<(usize, usize)>> = vec![None; ns];
    for d in 0..=st.settings.dmax {
        for sup in st.supports(d)?.iter() {
            let s = sup.irreducible;
            let mut row = EvidenceRow::new(Some(d), labels[s].clone(), sup.max_rank);
            row.caveat = sup.caveats.join("; ");
            v.evidence.push(row);
            if witnessed[s].is_none() {
                if let Some(&i) = sup.members.iter().find(|&&i| st.objects[i].rank == rk) {
                    witnessed[s] = Some((d, i));
                }
            }
        }
    }
    for s in 0..ns {
        let total = st.dim_es_total(s)?;
        let mut row = EvidenceRow::new(None, format!("dim e_{}", labels[s]), total.value);
        if total.lower_bound {
            row.caveat = "lower bound".into();
        }
        v.evidence.push(row);
        // Krull dimension never exceeds rk(P), so a witness pins the total
        if witnessed[s].is_some() != (total.value == Some(rk)) {
            return Err(Error::Invariant(format!(
                "witness for {} disagrees with dim e_S = {:?}",
                labels[s], total.value
            )));
        }
        match witnessed[s] {
            Some((d, i)) => v.witnesses.push(Witness {
                irreducible: labels[s].clone(),
                d,
                at: format!("V{i} of rank {rk}"),
            }),
            None => v.notes.push(format!(
                "{} not seen at rank {rk} for d <= {}",
                labels[s], st.settings.dmax
            )),
        }
    }
    v.cutoffs = Some(cutoffs(st, st.strata_vanish_from()?));
    v.status = if witnessed.iter().all(Option::is_some) {
        Status::Holds
    } else {
        Status::Inconclusive
    };
    v.notes.push(format!("rk(P) = {rk}"));
    Ok(v)
}

struct Scan {
    witnesses: Vec<Option<usize>>,
    factor_only: Vec<bool>,
}

/// Chop `M^d(V)^{W_P(V)}` over `Out_0(P,V)` for `d <= dmax`; with `submodule`
/// set, a witness must embed and factor-only occurrences are recorded apart.
fn scan(
    st: &Stratification,
    obj: usize,
    submodule: bool,
    v: &mut Verdict,
) -> Result<(Scan, IrrCatalog, usize)> {
    let (out0, _) = st.out0_group(obj)?;
    let cat = IrrCatalog::new(&out0, st.p, st.settings.seed)?;
    let labels = labels(&cat);
    let ns = labels.len();
    let mut sc = Scan {
        witnesses: vec![None; ns],
        factor_only: vec![false; ns],
    };
    for d in 0..=st.settings.dmax {
        let m = st.weyl_fixed_module(obj, d)?;
        let mults = cat.composition_multiplicities(&m, st.settings.seed)?;
        for s in 0..ns {
            let dim_e = mults[s] * cat.endo_dims[s];
            let mut row =
                EvidenceRow::new(Some(d), labels[s].clone(), (dim_e > 0).then_some(dim_e));
            let seen = mults[s] > 0 && (!submodule || cat.occurs_as_submodule(s, &m)?);
            if mults[s] > 0 && !seen {
                row.caveat = "composition factor only".into();
                sc.factor_only[s] = true;
            }
            if seen && sc.witnesses[s].is_none() {
                sc.witnesses[s] = Some(d);
                v.witnesses.push(Witness {
                    irreducible: labels[s].clone(),
                    d,
                    at: format!("V{obj}"),
                });
            }
            v.evidence.push(row);
        }
    }
    Ok((sc, cat, out0.order()))
}

fn status(
    st: &Stratification,
    obj: usize,
    found_all: bool,
    out0_order: usize,
    v: &mut Verdict,
) -> Status {
    let vanish = st.object_vanish_from(obj);
    v.cutoffs = Some(cutoffs(st, vanish));
    let p_group = log_p(out0_order, st.p).is_some();
    if p_group {
        v.notes
            .push(format!("Out0 has order {out0_order}, a {}-group", st.p));
    }
    match (found_all, vanish.is_some() || p_group) {
        (true, true) => Status::Holds,
        (true, false) => {
            v.notes.push(format!(
                "primitives not seen to vanish by d = {}",
                st.settings.dmax
            ));
            Status::HoldsUpToCutoff
        }
        (false, _) => Status::Inconclusive,
    }
}

/// Every irreducible of F_p[Out_0(P,V)] occurs in `P_V H^*(C_P(V))^{W_P(V)}`.
pub fn check_conj_b(st: &Stratification, obj: usize) -> Result<Verdict> {
    if obj >= st.objects.len() || !st.is_maximal(obj) {
        return Err(Error::InvalidGroup(format!(
            "V{obj} is not a maximal elementary abelian subgroup"
        )));
    }
    let mut v = Verdict::new(Conjecture::B, format!("{} V{obj}", st.group.name()));
    let (sc, cat, order) = scan(st, obj, false, &mut v)?;
    for (s, w) in sc.witnesses.iter().enumerate() {
        if w.is_none() {
            v.notes.push(format!(
                "{} not seen for d <= {}",
                irreducible_label(s, cat.dims()[s]),
                st.settings.dmax
            ));
        }
    }
    let found_all = sc.witnesses.iter().all(Option::is_some);
    v.status = status(st, obj, found_all, order, &mut v);
    Ok(v)
}

/// Every irreducible of F_p[Out_0(Q,C)] is a submodule of `P_C H^*(Q)`,
/// tested degree by degree; occurrence as a composition factor is tracked
/// alongside and divergences are noted.
pub fn check_conj_c(st: &Stratification) -> Result<Verdict> {
    if !is_p_central(&st.group, st.p) {
        return Err(Error::InvalidGroup(format!(
            "{} is not {}-central",
            st.group.name(),
            st.p
        )));
    }
    let mut v = Verdict::new(Conjecture::C, st.group.name());
    let (sc, cat, order) = scan(st, 0, true, &mut v)?;
    let labels = labels(&cat);
    for s in 0..labels.len() {
        match (sc.witnesses[s], sc.factor_only[s]) {
            (None, true) => v.notes.push(format!(
                "{} occurs as a composition factor but not as a submodule",
                labels[s]
            )),
            (None, false) => v.notes.push(format!(
                "{} not seen for d <= {}",
                labels[s], st.settings.dmax
            )),
            _ => {}
        }
    }
    let as_factor = sc
        .witnesses
        .iter()
        .zip(&sc.factor_only)
        .all(|(w, &f)| w.is_some() || f);
    if as_factor && sc.factor_only.iter().any(|&f| f) {
        v.notes
            .push("every irreducible occurs as a composition factor".into());
    }
    let found_all = sc.witnesses.iter().all(Option::is_some);
    v.status = status(st, 0, found_all, order, &mut v);
    Ok(v)
}

/// [`check_conj_c`] on a bare group.
pub fn check_conj_c_group(q: &GroupRef, p: u32, settings: &StratSettings) -> Result<Verdict> {
    if !is_p_central(q, p) {
        return Err(Error::InvalidGroup(format!(
            "{} is not {p}-central",
            q.name()
        )));
    }
    let aut = AutGroup::new(q)?;
    let st = Stratification::new(q, p, aut, settings.clone())?;
    check_conj_c(&st)
}

/// The chain C for `C_P(V)` ⇒ B for `(P,V)` ⇒ A for `P`, over pairs
/// `(B(P,V), C(C_P(V)))` with `V` of rank `rk(P)`. A positive verdict on the
/// stronger side must come with a positive one on the weaker side.
pub fn check_implications(a: &Verdict, pairs: &[(Verdict, Option<Verdict>)]) -> Result<()> {
    let violated = |strong: &Verdict, weak: &Verdict| {
        Error::Invariant(format!(
            "{} {} is {} but {} {} is {}",
            strong.conjecture,
            strong.subject,
            strong.status,
            weak.conjecture,
            weak.subject,
            weak.status
        ))
    };
    for (b, c) in pairs {
        if let Some(c) = c {
            if c.status.is_positive() && !b.status.is_positive() {
                return Err(violated(c, b));
            }
        }
        if b.status.is_positive() && !a.status.is_positive() {
            return Err(violated(b, a));
        }
    }
    Ok(())
}
