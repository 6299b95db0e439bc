#![allow(dead_code)]

use outcoh::fplin::FpMatrix;
use outcoh::grpcore::constructors::quaternion;
use outcoh::grpcore::{FiniteGroup, GroupRef, ELEMENT_CAP};
use std::sync::Arc;

/// Order-64 group with `Out` of order 768: triples `(i, j, q)` in
/// `Z/4 x Z/2 x Q8` with `(i,j,q)(i',j',q') = (i+i', j+j', q q' z^{j i'})`.
pub fn group_64_108() -> GroupRef {
    let q8 = quaternion(8).unwrap();
    let z = (1..8).find(|&x| q8.element_order(x) == 2).unwrap();
    let enc = |i: usize, j: usize, q: usize| (i * 2 + j) * 8 + q;
    let mul = |a: usize, b: usize| {
        let (i, j, q) = (a / 16, (a / 8) % 2, a % 8);
        let (i2, j2, q2) = (b / 16, (b / 8) % 2, b % 8);
        let mut r = q8.mul(q, q2);
        if (j * i2) % 2 == 1 {
            r = q8.mul(r, z);
        }
        enc((i + i2) % 4, (j + j2) % 2, r)
    };
    let mut gens = vec![enc(1, 0, 0), enc(0, 1, 0)];
    gens.extend(q8.generators().iter().map(|&q| enc(0, 0, q)));
    Arc::new(FiniteGroup::from_fn(64, mul, gens, "64#108", ELEMENT_CAP).unwrap())
}

/// dim H^n(G; F_p) from normalized bar cochains, for n = 0..=d.
pub fn bar_dims(g: &FiniteGroup, p: u32, d: usize) -> Vec<usize> {
    let m = g.order() - 1;
    let tuples = |n: usize| m.pow(n as u32);
    // element of a normalized tuple coordinate
    let decode = |mut idx: usize, n: usize| -> Vec<usize> {
        let mut t = vec![0; n];
        for k in (0..n).rev() {
            t[k] = idx % m + 1;
            idx /= m;
        }
        t
    };
    let encode = |t: &[usize]| -> Option<usize> {
        let mut idx = 0;
        for &x in t {
            if x == 0 {
                return None;
            }
            idx = idx * m + (x - 1);
        }
        Some(idx)
    };
    let delta = |n: usize| -> FpMatrix {
        let mut a = FpMatrix::zeros(p, tuples(n), tuples(n + 1));
        for s in 0..tuples(n + 1) {
            let t = decode(s, n + 1);
            let mut faces: Vec<(Vec<usize>, u32)> = vec![(t[1..].to_vec(), 1)];
            for i in 0..n {
                let mut f = t[..i].to_vec();
                f.push(g.mul(t[i], t[i + 1]));
                f.extend_from_slice(&t[i + 2..]);
                faces.push((f, if (i + 1) % 2 == 0 { 1 } else { p - 1 }));
            }
            faces.push((t[..n].to_vec(), if (n + 1).is_multiple_of(2) { 1 } else { p - 1 }));
            for (f, c) in faces {
                if let Some(r) = encode(&f) {
                    a.set(r, s, (a.get(r, s) + c) % p);
                }
            }
        }
        a
    };
    let ranks: Vec<usize> = (0..=d).map(|n| delta(n).rank()).collect();
    (0..=d)
        .map(|n| tuples(n) - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 })
        .collect()
}
