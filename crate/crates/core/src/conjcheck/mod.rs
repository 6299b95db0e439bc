//! Checkers for the Krull-dimension conjectures on idempotent summands of
//! `H^*(P)`, the product criteria for 2-central groups, and the unitary
//! Sylow family `G_t`.

mod checks;
pub mod gfq;
mod products;
pub mod su3;

use std::fmt::{self, Write as _};

pub use checks::{
    check_conj_a, check_conj_b, check_conj_c, check_conj_c_group, check_implications,
};
pub use gfq::GFq;
pub use products::{
    census, good_pair, product_conj_c_closure, satisfied_conditions, CensusEntry, CensusReport,
    GoodPairCondition,
};
pub use su3::{su3_sylow, Su3Sylow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conjecture {
    A,
    B,
    C,
    GoodPair,
    Census,
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conjecture::A => "A",
            Conjecture::B => "B",
            Conjecture::C => "C",
            Conjecture::GoodPair => "goodpair",
            Conjecture::Census => "census",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Holds,
    Fails,
    HoldsUpToCutoff,
    Inconclusive,
}

impl Status {
    /// Holds, possibly only up to the cutoffs.
    pub fn is_positive(self) -> bool {
        matches!(self, Status::Holds | Status::HoldsUpToCutoff)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::HoldsUpToCutoff => "holds-up-to-cutoff",
            Status::Inconclusive => "inconclusive",
        })
    }
}

/// Label of irreducible `i` in a catalog: `1` for the trivial module.
pub fn irreducible_label(i: usize, dim: usize) -> String {
    if i == 0 {
        "1".into()
    } else {
        format!("S{i}[{dim}]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub irreducible: String,
    pub d: usize,
    /// Subgroup or condition at which the occurrence was seen.
    pub at: String,
}

/// One cell of the evidence table; `value = None` is the zero module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvidenceRow {
    pub d: Option<usize>,
    pub irreducible: String,
    pub value: Option<usize>,
    pub caveat: String,
}

impl EvidenceRow {
    pub fn new(d: Option<usize>, irreducible: impl Into<String>, value: Option<usize>) -> Self {
        EvidenceRow {
            d,
            irreducible: irreducible.into(),
            value,
            caveat: String::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Cutoffs {
    pub dmax: usize,
    pub cutoff: usize,
    pub window: usize,
    /// Degree from which the relevant primitives were seen to vanish.
    pub vanished_from: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub conjecture: Conjecture,
    pub subject: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub evidence: Vec<EvidenceRow>,
    pub cutoffs: Option<Cutoffs>,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn new(conjecture: Conjecture, subject: impl Into<String>) -> Self {
        Verdict {
            conjecture,
            subject: subject.into(),
            status: Status::Inconclusive,
            witnesses: Vec::new(),
            evidence: Vec::new(),
            cutoffs: None,
            notes: Vec::new(),
        }
    }

    /// Table cell for irreducible `label` in filtration degree `d`.
    pub fn value_at(&self, label: &str, d: usize) -> Option<Option<usize>> {
        self.evidence
            .iter()
            .find(|r| r.d == Some(d) && r.irreducible == label)
            .map(|r| r.value)
    }

    /// Rows `subject, d, irreducible, dimension, caveat`, ending in the status row.
    pub fn tsv_rows(&self) -> Vec<String> {
        let subject = format!("{}:{}", self.conjecture, self.subject);
        let mut out: Vec<String> = self
            .evidence
            .iter()
            .map(|r| {
                let d = r.d.map_or("-".to_string(), |d| d.to_string());
                let v = r.value.map_or("-".to_string(), |v| v.to_string());
                format!("{subject}\t{d}\t{}\t{v}\t{}", r.irreducible, r.caveat)
            })
            .collect();
        out.push(format!("{subject}\t-\tverdict\t-\t{}", self.status));
        out
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        for r in self.tsv_rows() {
            s.push_str(&r);
            s.push('\n');
        }
        s
    }

    /// Text block: degree-indexed rows laid out as a grid with `∅` for zero
    /// modules, other rows as `label: value`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "[{}] {}: {}", self.conjecture, self.subject, self.status);
        s.push_str(&render_grid(&self.evidence));
        for r in self.evidence.iter().filter(|r| r.d.is_none()) {
            let _ = match (r.value, r.caveat.is_empty()) {
                (Some(v), true) => writeln!(s, "  {}: {v}", r.irreducible),
                (Some(v), false) => writeln!(s, "  {}: {v} ({})", r.irreducible, r.caveat),
                (None, _) => writeln!(s, "  {}: {}", r.irreducible, r.caveat),
            };
        }
        let mut caveats: Vec<String> = Vec::new();
        for r in self
            .evidence
            .iter()
            .filter(|r| r.d.is_some() && !r.caveat.is_empty())
        {
            let c = format!("d={} {}: {}", r.d.unwrap(), r.irreducible, r.caveat);
            caveats.push(c);
        }
        for w in &self.witnesses {
            let _ = if w.irreducible == "-" {
                writeln!(s, "  witness: {}", w.at)
            } else {
                writeln!(s, "  witness: {} at d={} ({})", w.irreducible, w.d, w.at)
            };
        }
        if let Some(c) = &self.cutoffs {
            let v = c
                .vanished_from
                .map_or("not seen".to_string(), |d| format!("from d={d}"));
            let _ = writeln!(
                s,
                "  cutoffs: dmax={} N={} window={} vanishing {v}",
                c.dmax, c.cutoff, c.window
            );
        }
        for c in caveats {
            let _ = writeln!(s, "  caveat: {c}");
        }
        for n in &self.notes {
            let _ = writeln!(s, "  note: {n}");
        }
        s
    }
}

/// Degree-indexed rows as a grid, one line per label, `∅` for zero modules.
pub fn render_grid(evidence: &[EvidenceRow]) -> String {
    let mut s = String::new();
    let value_at = |label: &str, d: usize| {
        evidence
            .iter()
            .find(|r| r.d == Some(d) && r.irreducible == label)
            .map(|r| r.value)
    };
    let mut degrees: Vec<usize> = evidence.iter().filter_map(|r| r.d).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut labels: Vec<&str> = Vec::new();
    for r in evidence.iter().filter(|r| r.d.is_some()) {
        if !labels.contains(&r.irreducible.as_str()) {
            labels.push(&r.irreducible);
        }
    }
    if !degrees.is_empty() {
        let w = labels
            .iter()
            .map(|l| l.chars().count())
            .max()
            .unwrap_or(1)
            .max(1);
        let _ = write!(s, "  {:w$}", "d");
        for d in &degrees {
            let _ = write!(s, " {d:>3}");
        }
        s.push('\n');
        for l in &labels {
            let _ = write!(s, "  {l:w$}");
            for &d in &degrees {
                let cell = match value_at(l, d) {
                    Some(Some(v)) => v.to_string(),
                    Some(None) => "∅".to_string(),
                    None => ".".to_string(),
                };
                let _ = write!(s, " {cell:>3}");
            }
            s.push('\n');
        }
    }
    s
}
