//! Small families of groups built from explicit multiplication rules.

use std::sync::Arc;

use super::group::{FiniteGroup, GroupRef, ELEMENT_CAP};
use super::ops::direct_product;
use crate::error::{Error, Result};

pub fn cyclic(n: usize) -> Result<GroupRef> {
    if n == 0 {
        return Err(Error::InvalidGroup("cyclic group of order 0".into()));
    }
    let gens = if n > 1 { vec![1] } else { vec![] };
    Ok(Arc::new(FiniteGroup::from_fn(
        n,
        |a, b| (a + b) % n,
        gens,
        format!("C{n}"),
        ELEMENT_CAP,
    )?))
}

/// `(Z/p)^r`, element index read as base-p digits.
pub fn elementary_abelian(r: usize, p: u32) -> Result<GroupRef> {
    let p = p as usize;
    let n = p.checked_pow(r as u32).ok_or(Error::TooLarge {
        order: usize::MAX,
        cap: ELEMENT_CAP,
    })?;
    if n > ELEMENT_CAP {
        return Err(Error::TooLarge {
            order: n,
            cap: ELEMENT_CAP,
        });
    }
    let mul = |a: usize, b: usize| {
        let (mut x, mut y, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..r {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        out
    };
    let gens = (0..r).map(|i| p.pow(i as u32)).collect();
    Ok(Arc::new(FiniteGroup::from_fn(
        n,
        mul,
        gens,
        format!("E{n}"),
        ELEMENT_CAP,
    )?))
}

/// Dihedral group of order `n`: `r^i s^j` has index `i + (n/2) j`.
pub fn dihedral(n: usize) -> Result<GroupRef> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::InvalidGroup(format!(
            "dihedral group needs even order >= 4, got {n}"
        )));
    }
    let m = n / 2;
    let mul = move |a: usize, b: usize| {
        let (i, j) = (a % m, a / m);
        let (k, l) = (b % m, b / m);
        let k = if j == 1 { (m - k) % m } else { k };
        (i + k) % m + m * ((j + l) % 2)
    };
    Ok(Arc::new(FiniteGroup::from_fn(
        n,
        mul,
        vec![1, m],
        format!("D{n}"),
        ELEMENT_CAP,
    )?))
}

/// Generalized quaternion group of order `n = 2^k >= 8`.
pub fn quaternion(n: usize) -> Result<GroupRef> {
    if n < 8 || !n.is_power_of_two() {
        return Err(Error::InvalidGroup(format!(
            "quaternion group needs order 2^k >= 8, got {n}"
        )));
    }
    let m = n / 2;
    let mul = move |a: usize, b: usize| {
        let (i, j) = (a % m, a / m);
        let (k, l) = (b % m, b / m);
        let k = if j == 1 { (m - k) % m } else { k };
        let extra = if j == 1 && l == 1 { m / 2 } else { 0 };
        (i + k + extra) % m + m * ((j + l) % 2)
    };
    Ok(Arc::new(FiniteGroup::from_fn(
        n,
        mul,
        vec![1, m],
        format!("Q{n}"),
        ELEMENT_CAP,
    )?))
}

/// Heisenberg group of upper unitriangular 3x3 matrices over F_p.
pub fn heisenberg(p: u32) -> Result<GroupRef> {
    let p = p as usize;
    let n = p * p * p;
    let dec = move |x: usize| (x % p, (x / p) % p, x / (p * p));
    let mul = move |a: usize, b: usize| {
        let (a1, b1, c1) = dec(a);
        let (a2, b2, c2) = dec(b);
        let a3 = (a1 + a2) % p;
        let b3 = (b1 + b2) % p;
        let c3 = (c1 + c2 + a1 * b2) % p;
        a3 + p * b3 + p * p * c3
    };
    Ok(Arc::new(FiniteGroup::from_fn(
        n,
        mul,
        vec![1, p],
        format!("Heis{p}"),
        ELEMENT_CAP,
    )?))
}

/// Iterated direct product.
pub fn product(factors: &[GroupRef]) -> Result<GroupRef> {
    let mut it = factors.iter();
    let mut acc = it
        .next()
        .ok_or_else(|| Error::InvalidGroup("empty product".into()))?
        .clone();
    for f in it {
        acc = direct_product(&acc, f, ELEMENT_CAP)?;
    }
    Ok(acc)
}
