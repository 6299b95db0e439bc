//! Polynomial invariants of general linear groups.
//!
//! Polynomials live in `F_p[x_1, ..., x_r]` with each `x_i` in degree 1.
//! A matrix `g` acts by the substitution `x_i -> sum_j g_ij x_j`, which is a
//! right action.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fplin::{field, FpMatrix};
use crate::grpcore::{small_generating_set, FiniteGroup, GroupRef, INTERNAL_CAP};
use crate::modrep::FpRep;

/// Largest `p^r` for which Dickson invariants are expanded.
pub const MAX_FIELD_SIZE: usize = 125;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    pub p: u32,
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u16>, u32>,
}

impl MPoly {
    pub fn zero(p: u32, nvars: usize) -> Self {
        MPoly {
            p,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(p: u32, nvars: usize, c: u32) -> Self {
        let mut m = Self::zero(p, nvars);
        if c % p != 0 {
            m.terms.insert(vec![0; nvars], c % p);
        }
        m
    }

    pub fn var(p: u32, nvars: usize, i: usize) -> Self {
        let mut e = vec![0u16; nvars];
        e[i] = 1;
        let mut m = Self::zero(p, nvars);
        m.terms.insert(e, 1);
        m
    }

    /// Linear form `sum_i c_i x_i`.
    pub fn linear(p: u32, coeffs: &[u32]) -> Self {
        let n = coeffs.len();
        let mut m = Self::zero(p, n);
        for (i, &c) in coeffs.iter().enumerate() {
            if c % p != 0 {
                let mut e = vec![0u16; n];
                e[i] = 1;
                m.terms.insert(e, c % p);
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<u16>, c: u32) {
        let p = self.p;
        let entry = self.terms.entry(e).or_insert(0);
        *entry = field::add(p, *entry, c % p);
        if *entry == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (e, &c) in &o.terms {
            r.add_term(e.clone(), c);
        }
        r
    }

    pub fn scale(&self, c: u32) -> MPoly {
        let p = self.p;
        let mut r = MPoly::zero(p, self.nvars);
        if c % p == 0 {
            return r;
        }
        for (e, &v) in &self.terms {
            r.terms.insert(e.clone(), field::mul(p, v, c % p));
        }
        r
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        self.add(&o.scale(self.p - 1))
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let p = self.p;
        let mut acc: BTreeMap<Vec<u16>, u32> = BTreeMap::new();
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &o.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let v = acc.entry(e).or_insert(0);
                *v = field::add(p, *v, field::mul(p, c1, c2));
            }
        }
        acc.retain(|_, v| *v != 0);
        MPoly {
            p,
            nvars: self.nvars,
            terms: acc,
        }
    }

    pub fn pow(&self, k: usize) -> MPoly {
        let mut r = MPoly::constant(self.p, self.nvars, 1);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                r = r.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        r
    }

    /// Total degree of the highest term; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self
            .terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum::<usize>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Substitute `x_i -> sum_j s_ij y_j` for an `nvars x m` matrix `s`.
    pub fn substitute(&self, s: &FpMatrix) -> Result<MPoly> {
        if s.rows() != self.nvars {
            return Err(Error::Dimension(format!(
                "substitution has {} rows for {} variables",
                s.rows(),
                self.nvars
            )));
        }
        let m = s.cols();
        let images: Vec<MPoly> = (0..self.nvars)
            .map(|i| MPoly::linear(self.p, &s.row(i)))
            .collect();
        let mut out = MPoly::zero(self.p, m);
        for (e, &c) in &self.terms {
            let mut t = MPoly::constant(self.p, m, c);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul(&images[i].pow(k as usize));
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Right action of a square matrix.
    pub fn act(&self, g: &FpMatrix) -> Result<MPoly> {
        self.substitute(g)
    }

    /// Coefficient vector in the monomial basis of the given degree.
    pub fn coefficients(&self, deg: usize) -> Vec<u32> {
        let mons = monomials(self.nvars, deg);
        mons.iter()
            .map(|m| *self.terms.get(m).unwrap_or(&0))
            .collect()
    }
}

/// Exponent vectors of total degree `deg`, in lexicographic order.
pub fn monomials(nvars: usize, deg: usize) -> Vec<Vec<u16>> {
    fn rec(i: usize, left: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i + 1 == cur.len() {
            cur[i] = left as u16;
            out.push(cur.clone());
            return;
        }
        for k in (0..=left).rev() {
            cur[i] = k as u16;
            rec(i + 1, left - k, cur, out);
        }
    }
    if nvars == 0 {
        return if deg == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(0, deg, &mut vec![0; nvars], &mut out);
    out
}

/// Matrix of the action of `g` on degree-`deg` polynomials.
pub fn graded_action(g: &FpMatrix, deg: usize) -> Result<FpMatrix> {
    let p = g.p();
    let r = g.rows();
    let mons = monomials(r, deg);
    let index: BTreeMap<&Vec<u16>, usize> = mons.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut out = FpMatrix::zeros(p, mons.len(), mons.len());
    for (i, m) in mons.iter().enumerate() {
        let mut f = MPoly::zero(p, r);
        f.terms.insert(m.clone(), 1);
        let img = f.act(g)?;
        for (e, &c) in &img.terms {
            out.set(i, index[e], c);
        }
    }
    Ok(out)
}

/// All invertible `r x r` matrices over F_p, identity first.
pub fn gl_matrices(r: usize, p: u32) -> Result<Vec<FpMatrix>> {
    let q = (p as usize).pow(r as u32);
    let total = q.checked_pow(r as u32).ok_or(Error::TooLarge {
        order: usize::MAX,
        cap: INTERNAL_CAP,
    })?;
    if total > 1 << 20 {
        return Err(Error::TooLarge {
            order: total,
            cap: 1 << 20,
        });
    }
    let mut out = vec![FpMatrix::identity(p, r)];
    for code in 0..total {
        let m = FpMatrix::from_fn(p, r, r, |i, j| {
            ((code / (p as usize).pow((i * r + j) as u32)) % p as usize) as u32
        });
        if m.rank() == r && m != out[0] {
            out.push(m);
        }
    }
    Ok(out)
}

/// `GL_r(F_p)` as a Cayley table, with the matrix of each element.
pub fn gl_group_with_matrices(r: usize, p: u32) -> Result<(GroupRef, Vec<FpMatrix>)> {
    let mats = gl_matrices(r, p)?;
    let n = mats.len();
    if n > INTERNAL_CAP {
        return Err(Error::TooLarge {
            order: n,
            cap: INTERNAL_CAP,
        });
    }
    let index: std::collections::HashMap<FpMatrix, usize> = mats
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut table = Vec::with_capacity(n * n);
    for a in &mats {
        for b in &mats {
            table.push(index[&a.mul(b)?] as u32);
        }
    }
    let tmp = FiniteGroup::from_table_unchecked(table, Vec::new(), format!("GL({r},{p})"))?;
    let all: Vec<usize> = (0..n).collect();
    let gens = small_generating_set(&tmp, &all);
    Ok((Arc::new(tmp.with_generators(gens)?), mats))
}

pub fn gl_group(r: usize, p: u32) -> Result<GroupRef> {
    Ok(gl_group_with_matrices(r, p)?.0)
}

/// The module of degree-`deg` polynomials over `GL_r(F_p)`.
pub fn graded_module(group: &GroupRef, mats: &[FpMatrix], deg: usize) -> Result<FpRep> {
    let p = mats[0].p();
    let gens = group
        .generators()
        .iter()
        .map(|&g| graded_action(&mats[g], deg))
        .collect::<Result<Vec<_>>>()?;
    let dim = monomials(mats[0].rows(), deg).len();
    FpRep::trusted_with_dim(group.clone(), p, dim, gens)
}

fn check_size(r: usize, p: u32) -> Result<()> {
    let q = (p as usize).checked_pow(r as u32).unwrap_or(usize::MAX);
    if q > MAX_FIELD_SIZE || r == 0 {
        return Err(Error::Unsupported(format!(
            "Dickson invariants for r = {r}, p = {p} are outside the supported range"
        )));
    }
    Ok(())
}

/// Dickson invariants `c_{r,i}` for `i = 1..=r`, with `c_{r,i}` of degree
/// `p^r - p^(r-i)`. They are the coefficients of
/// `prod_{v in V^*} (X - v) = X^(p^r) + sum_i (-1)^i c_{r,i} X^(p^(r-i))`.
pub fn dickson_generators(r: usize, p: u32) -> Result<Vec<MPoly>> {
    check_size(r, p)?;
    // coefficients a_j of X^(p^j) in F_k(X), starting from F_0(X) = X
    let mut a: Vec<MPoly> = vec![MPoly::constant(p, r, 1)];
    for k in 1..=r {
        // F_{k-1}(x_k)
        let xk = MPoly::var(p, r, k - 1);
        let mut val = MPoly::zero(p, r);
        for (j, aj) in a.iter().enumerate() {
            val = val.add(&aj.mul(&xk.pow((p as usize).pow(j as u32))));
        }
        let b = val.pow(p as usize - 1);
        let mut next = Vec::with_capacity(k + 1);
        next.push(b.mul(&a[0]).scale(p - 1));
        for j in 1..k {
            next.push(a[j - 1].pow(p as usize).sub(&b.mul(&a[j])));
        }
        next.push(a[k - 1].pow(p as usize));
        a = next;
    }
    // c_{r,i} = (-1)^i a_{r-i}
    Ok((1..=r)
        .map(|i| {
            let f = &a[r - i];
            if i % 2 == 1 {
                f.scale(p - 1)
            } else {
                f.clone()
            }
        })
        .collect())
}

/// Product of all nonzero linear forms, of degree `p^r - 1`.
pub fn top_dickson(r: usize, p: u32) -> Result<MPoly> {
    check_size(r, p)?;
    let q = (p as usize).pow(r as u32);
    let mut acc = MPoly::constant(p, r, 1);
    for code in 1..q {
        let coeffs: Vec<u32> = (0..r)
            .map(|i| ((code / (p as usize).pow(i as u32)) % p as usize) as u32)
            .collect();
        acc = acc.mul(&MPoly::linear(p, &coeffs));
    }
    Ok(acc)
}

/// Restriction along an embedding `U -> V`, given by a matrix whose rows are
/// the images of a basis of `U` in coordinates of `V`.
pub fn restrict_along(f: &MPoly, eta: &FpMatrix) -> Result<MPoly> {
    if eta.cols() != f.nvars {
        return Err(Error::Dimension(
            "embedding has the wrong target dimension".into(),
        ));
    }
    if eta.rank() != eta.rows() {
        return Err(Error::InvalidHom(
            "restriction along a non-injective linear map".into(),
        ));
    }
    f.substitute(&eta.transpose())
}

/// Number of monomials in generators of the given degrees with total degree `n`.
pub fn monomial_count(degs: &[usize], n: usize) -> usize {
    let mut ways = vec![0usize; n + 1];
    ways[0] = 1;
    for &d in degs {
        if d == 0 {
            continue;
        }
        for k in d..=n {
            ways[k] += ways[k - d];
        }
    }
    ways[n]
}
