//! On-disk cache of resolutions.
//!
//! One text file per (group, prime):
//!
//! ```text
//! outcoh-resolution 1
//! group <sha256 of the nameless .grp text>
//! prime 2
//! order 8
//! degree 3
//! ranks 1 2 2 1
//! boundary 1
//! <one line per generator row>
//! boundary 2
//! ...
//! ```
//!
//! Rows are hex-packed 64-bit words (least significant bit first) for p = 2
//! and comma-separated residues otherwise.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::resolution::Resolution;
use crate::error::{Error, Result};
use crate::fplin::FpMatrix;
use crate::grpcore::{grpfile::write_grp, GroupRef};

const MAGIC: &str = "outcoh-resolution 1";

/// Hex SHA-256 of the group's `.grp` text without the name comment.
pub fn group_hash(g: &GroupRef) -> String {
    let text = write_grp(&(**g).clone().with_name(""));
    hex::encode(Sha256::digest(text.as_bytes()))
}

#[derive(Clone, Debug)]
pub struct ResolutionCache {
    dir: PathBuf,
}

impl ResolutionCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir)?;
        Ok(ResolutionCache { dir })
    }

    pub fn path_for(&self, g: &GroupRef, p: u32) -> PathBuf {
        self.dir.join(format!("{}-p{p}.res", &group_hash(g)[..32]))
    }

    /// Load a cached resolution, extending and re-saving it when it is too short.
    pub fn load_or_compute(&self, g: &GroupRef, p: u32, d: usize) -> Result<Resolution> {
        let path = self.path_for(g, p);
        if path.exists() {
            let mut res = read_resolution(&path, g)?;
            if res.max_degree() < d {
                res.extend_to(d)?;
                write_resolution(&path, &res)?;
            }
            return Ok(res);
        }
        let res = Resolution::compute(g, p, d)?;
        write_resolution(&path, &res)?;
        Ok(res)
    }
}

pub fn encode_resolution(res: &Resolution) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{MAGIC}");
    let _ = writeln!(s, "group {}", group_hash(&res.group));
    let _ = writeln!(s, "prime {}", res.p);
    let _ = writeln!(s, "order {}", res.group.order());
    let _ = writeln!(s, "degree {}", res.max_degree());
    let ranks: Vec<String> = res.ranks().iter().map(|r| r.to_string()).collect();
    let _ = writeln!(s, "ranks {}", ranks.join(" "));
    for n in 1..=res.max_degree() {
        let _ = writeln!(s, "boundary {n}");
        let b = res.boundary(n);
        for i in 0..b.rows() {
            let _ = writeln!(s, "{}", b.row_to_text(i));
        }
    }
    s
}

pub fn decode_resolution(text: &str, g: &GroupRef) -> Result<Resolution> {
    let bad = |m: &str| Error::Cache(m.to_string());
    let mut lines = text.lines();
    if text.lines().next() != Some(MAGIC) {
        return Err(bad("unknown cache version"));
    }
    field(&mut lines, "outcoh-resolution")?;
    if field(&mut lines, "group")? != group_hash(g) {
        return Err(bad("cache belongs to a different group"));
    }
    let p: u32 = field(&mut lines, "prime")?
        .parse()
        .map_err(|_| bad("bad prime"))?;
    let order: usize = field(&mut lines, "order")?
        .parse()
        .map_err(|_| bad("bad order"))?;
    if order != g.order() {
        return Err(bad("order mismatch"));
    }
    let d: usize = field(&mut lines, "degree")?
        .parse()
        .map_err(|_| bad("bad degree"))?;
    let ranks: Vec<usize> = field(&mut lines, "ranks")?
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| bad("bad rank")))
        .collect::<Result<_>>()?;
    if ranks.len() != d + 1 {
        return Err(bad("rank count does not match degree"));
    }
    let mut bds = vec![FpMatrix::zeros(p, 0, 0)];
    for n in 1..=d {
        if field(&mut lines, "boundary")? != n.to_string() {
            return Err(bad("boundaries out of order"));
        }
        let mut b = FpMatrix::zeros(p, ranks[n], ranks[n - 1] * order);
        for i in 0..ranks[n] {
            let line = lines.next().ok_or_else(|| bad("truncated boundary"))?;
            b.set_row_from_text(i, line)?;
        }
        bds.push(b);
    }
    Resolution::from_boundaries(g, p, ranks, bds)
}

fn field<'a>(lines: &mut impl Iterator<Item = &'a str>, key: &str) -> Result<String> {
    let line = lines
        .next()
        .ok_or_else(|| Error::Cache("truncated header".into()))?;
    line.strip_prefix(key)
        .and_then(|r| r.strip_prefix(' '))
        .map(str::to_string)
        .ok_or_else(|| Error::Cache(format!("expected {key}")))
}

pub fn write_resolution(path: &Path, res: &Resolution) -> Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, encode_resolution(res))?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

pub fn read_resolution(path: &Path, g: &GroupRef) -> Result<Resolution> {
    decode_resolution(&std::fs::read_to_string(path)?, g)
}
