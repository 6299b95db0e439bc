//! Constructor specs: `cyclic:n`, `elab:r` (or `elab:r:p`), `q8`,
//! `quaternion:n`, `dihedral:n`, `su3:t`, and `product:A,B,...` whose
//! arguments may be parenthesized specs.

use crate::conjcheck::su3_sylow;
use crate::error::{Error, Result};
use crate::grpcore::constructors::{cyclic, dihedral, elementary_abelian, product, quaternion};
use crate::grpcore::GroupRef;

fn bad(spec: &str, msg: &str) -> Error {
    Error::Parse {
        line: 1,
        col: 1,
        msg: format!("bad group spec `{spec}`: {msg}"),
    }
}

fn number<T: std::str::FromStr>(spec: &str, s: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| bad(spec, &format!("`{s}` is not a number")))
}

/// Split at commas outside parentheses.
fn split_args(spec: &str, s: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(bad(spec, "unbalanced parentheses"));
        }
        cur.push(ch);
    }
    if depth != 0 {
        return Err(bad(spec, "unbalanced parentheses"));
    }
    out.push(cur);
    Ok(out)
}

fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    if t.starts_with('(') && t.ends_with(')') {
        &t[1..t.len() - 1]
    } else {
        t
    }
}

/// The group named by a constructor spec.
pub fn make(spec: &str) -> Result<GroupRef> {
    let s = strip_parens(spec);
    let (kind, arg) = match s.split_once(':') {
        Some((k, a)) => (k.trim(), Some(a)),
        None => (s, None),
    };
    let need = || arg.ok_or_else(|| bad(spec, &format!("`{kind}` needs an argument")));
    match kind {
        "q8" if arg.is_none() => quaternion(8),
        "quaternion" => quaternion(number(spec, need()?)?),
        "cyclic" => cyclic(number(spec, need()?)?),
        "dihedral" => dihedral(number(spec, need()?)?),
        "su3" => su3_sylow(number(spec, need()?)?),
        "elab" => {
            let a = need()?;
            match a.split_once(':') {
                Some((r, p)) => elementary_abelian(number(spec, r)?, number(spec, p)?),
                None => elementary_abelian(number(spec, a)?, 2),
            }
        }
        "product" => {
            let parts = split_args(spec, need()?)?;
            if parts.len() < 2 {
                return Err(bad(spec, "a product needs at least two factors"));
            }
            let factors = parts.iter().map(|p| make(p)).collect::<Result<Vec<_>>>()?;
            product(&factors)
        }
        _ => Err(bad(spec, "unknown constructor")),
    }
}

/// Factors of a `product:` spec, or the spec itself.
pub fn factor_specs(spec: &str) -> Result<Vec<String>> {
    let s = strip_parens(spec);
    match s.split_once(':') {
        Some(("product", a)) => Ok(split_args(spec, a)?
            .iter()
            .map(|p| strip_parens(p).to_string())
            .collect()),
        _ => Ok(vec![s.to_string()]),
    }
}
