//! Plain-text Cayley table files.
//!
//! ```text
//! # comment
//! order 4
//! generators 1 2
//! 0 1 2 3
//! 1 0 3 2
//! 2 3 0 1
//! 3 2 1 0
//! ```

use std::fmt::Write as _;
use std::path::Path;

use super::group::{FiniteGroup, ELEMENT_CAP};
use crate::error::{Error, Result};

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Tokens of a line with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub fn parse_grp(text: &str, name: &str) -> Result<FiniteGroup> {
    let mut order: Option<usize> = None;
    let mut gens: Option<Vec<usize>> = None;
    let mut table: Vec<u32> = Vec::new();
    let mut rows = 0usize;
    let mut last_line = 0;
    for (ln, raw) in text.lines().enumerate() {
        let lineno = ln + 1;
        last_line = lineno;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        if toks.is_empty() {
            continue;
        }
        match (order, &gens) {
            (None, _) => {
                if toks[0].1 != "order" || toks.len() != 2 {
                    return Err(perr(lineno, toks[0].0, "expected `order N`"));
                }
                let n: usize = toks[1]
                    .1
                    .parse()
                    .map_err(|_| perr(lineno, toks[1].0, "order is not an integer"))?;
                if n == 0 {
                    return Err(perr(lineno, toks[1].0, "order must be positive"));
                }
                if n > ELEMENT_CAP {
                    return Err(Error::TooLarge {
                        order: n,
                        cap: ELEMENT_CAP,
                    });
                }
                order = Some(n);
                table.reserve(n * n);
            }
            (Some(n), None) => {
                if toks[0].1 != "generators" {
                    return Err(perr(lineno, toks[0].0, "expected `generators ...`"));
                }
                let mut g = Vec::new();
                for &(col, t) in &toks[1..] {
                    let v: usize = t
                        .parse()
                        .map_err(|_| perr(lineno, col, "generator is not an integer"))?;
                    if v >= n {
                        return Err(perr(
                            lineno,
                            col,
                            format!("generator {v} out of range 0..{n}"),
                        ));
                    }
                    g.push(v);
                }
                gens = Some(g);
            }
            (Some(n), Some(_)) => {
                if rows == n {
                    return Err(perr(lineno, toks[0].0, "extra table row"));
                }
                if toks.len() != n {
                    return Err(perr(
                        lineno,
                        toks.get(n.min(toks.len().saturating_sub(1)))
                            .map_or(1, |t| t.0),
                        format!("row {rows} has {} entries, expected {n}", toks.len()),
                    ));
                }
                for &(col, t) in &toks {
                    let v: usize = t
                        .parse()
                        .map_err(|_| perr(lineno, col, "table entry is not an integer"))?;
                    if v >= n {
                        return Err(perr(
                            lineno,
                            col,
                            format!("table entry {v} out of range 0..{n}"),
                        ));
                    }
                    table.push(v as u32);
                }
                rows += 1;
            }
        }
    }
    let n = order.ok_or_else(|| perr(last_line.max(1), 1, "missing `order` line"))?;
    let gens = gens.ok_or_else(|| perr(last_line.max(1), 1, "missing `generators` line"))?;
    if rows != n {
        return Err(perr(
            last_line.max(1),
            1,
            format!("table has {rows} rows, expected {n}"),
        ));
    }
    // identity check with a table position
    for a in 0..n {
        if table[a] as usize != a {
            return Err(perr(
                table_line(text, 0),
                a + 1,
                "element 0 is not the identity",
            ));
        }
        if table[a * n] as usize != a {
            return Err(perr(
                table_line(text, a),
                1,
                "element 0 is not the identity",
            ));
        }
    }
    FiniteGroup::from_table(table, gens, name)
}

/// Source line of table row `r` (1-based), for error messages.
fn table_line(text: &str, r: usize) -> usize {
    let mut seen = 0;
    let mut header = 0;
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        if header < 2 {
            header += 1;
            continue;
        }
        if seen == r {
            return ln + 1;
        }
        seen += 1;
    }
    1
}

pub fn read_grp(path: &Path) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path)?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    parse_grp(&text, &name)
}

pub fn write_grp(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut s = String::new();
    if !g.name().is_empty() {
        let _ = writeln!(s, "# {}", g.name());
    }
    let _ = writeln!(s, "order {n}");
    let gens: Vec<String> = g.generators().iter().map(|x| x.to_string()).collect();
    let _ = writeln!(s, "generators {}", gens.join(" "));
    let width = (n.saturating_sub(1)).to_string().len();
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| format!("{:>width$}", g.mul(a, b))).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    s
}
