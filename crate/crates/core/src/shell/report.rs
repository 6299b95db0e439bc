use std::fmt::Write as _;

use crate::conjcheck::{irreducible_label, render_grid, EvidenceRow};
use crate::error::Result;
use crate::stratify::Stratification;

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Quillen data, Out orders, irreducibles, primitives and the table of
/// `dim e_S R̄_d`, as text.
pub fn analyze_text(st: &Stratification) -> Result<String> {
    let g = &st.group;
    let q = &st.quillen;
    let mut s = String::new();
    let _ = writeln!(s, "group {} order {} prime {}", g.name(), g.order(), st.p);
    let _ = writeln!(
        s,
        "|Aut| = {} |Out| = {} Out abelian: {}",
        st.aut.order(),
        st.aut.out_order(),
        if st.aut.out.is_abelian() { "yes" } else { "no" }
    );
    let _ = writeln!(s, "rk = {} mrk = {} c = {}", q.rk, q.mrk, q.c_rank);
    let _ = writeln!(s, "objects:");
    for (i, o) in st.objects.iter().enumerate() {
        let _ = writeln!(
            s,
            "  V{i} rank {} |C_P(V)| = {}{} orbit {}",
            o.rank,
            o.centralizer.order(),
            if st.is_maximal(i) { " maximal" } else { "" },
            st.orbit_of(i)
        );
    }
    let cat = st.catalog()?;
    let dims = cat.dims();
    let labels: Vec<String> = dims
        .iter()
        .enumerate()
        .map(|(i, &d)| irreducible_label(i, d))
        .collect();
    let _ = writeln!(
        s,
        "irreducibles of F_{}[Out(P)]: {}",
        st.p,
        labels.join(" ")
    );
    let _ = writeln!(
        s,
        "H^n(P) n=0..{}: {}",
        st.settings.dmax,
        join(st.resolution().ranks())
    );
    for (i, o) in st.objects.iter().enumerate() {
        let _ = writeln!(
            s,
            "M^d(V{i}) d=0..{}: {}",
            st.settings.dmax,
            join(&o.prims.dims())
        );
    }
    let _ = writeln!(s, "dim e_S R_d:");
    s.push_str(&render_grid(&strata_rows(st)?));
    for (i, l) in labels.iter().enumerate() {
        let t = st.dim_es_total(i)?;
        let v = t.value.map_or("∅".to_string(), |v| v.to_string());
        let _ = writeln!(
            s,
            "dim e_{l} H^*(P) = {v}{}",
            if t.lower_bound { " (lower bound)" } else { "" }
        );
    }
    let r0: Vec<String> = st
        .r0_dimension()?
        .iter()
        .map(|x| x.map_or("∅".into(), |v| v.to_string()))
        .collect();
    let _ = writeln!(s, "R_0 prediction: {}", r0.join(" "));
    Ok(s)
}

fn strata_rows(st: &Stratification) -> Result<Vec<EvidenceRow>> {
    let dims = st.catalog()?.dims();
    let mut rows = Vec::new();
    for d in 0..=st.settings.dmax {
        for sup in st.supports(d)?.iter() {
            let mut r = EvidenceRow::new(
                Some(d),
                irreducible_label(sup.irreducible, dims[sup.irreducible]),
                sup.max_rank,
            );
            r.caveat = sup.caveats.join("; ");
            rows.push(r);
        }
    }
    Ok(rows)
}

/// The analysis as TSV rows.
pub fn analyze_tsv(st: &Stratification) -> Result<String> {
    let subject = st.group.name();
    let mut s = String::new();
    let summary = [
        ("|Aut|", st.aut.order()),
        ("|Out|", st.aut.out_order()),
        ("rk", st.quillen.rk),
        ("mrk", st.quillen.mrk),
    ];
    for (k, v) in summary {
        let _ = writeln!(s, "{subject}\t-\t{k}\t{v}\t");
    }
    for (n, b) in st.resolution().ranks().iter().enumerate() {
        let _ = writeln!(s, "{subject}\t{n}\tH\t{b}\t");
    }
    for (i, o) in st.objects.iter().enumerate() {
        for (d, m) in o.prims.dims().iter().enumerate() {
            let _ = writeln!(s, "{subject}\t{d}\tM(V{i})\t{m}\t");
        }
    }
    for r in strata_rows(st)? {
        let v = r.value.map_or("-".to_string(), |v| v.to_string());
        let _ = writeln!(
            s,
            "{subject}\t{}\t{}\t{v}\t{}",
            r.d.unwrap_or(0),
            r.irreducible,
            r.caveat
        );
    }
    Ok(s)
}

/// Betti numbers as `b_0,b_1,...`.
pub fn dims_text(ranks: &[usize]) -> String {
    join(ranks)
}

pub fn dims_tsv(subject: &str, ranks: &[usize]) -> String {
    let mut s = String::new();
    for (n, b) in ranks.iter().enumerate() {
        let _ = writeln!(s, "{subject}\t{n}\tH\t{b}\t");
    }
    s
}
