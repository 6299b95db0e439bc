use std::collections::HashMap;
use std::sync::Arc;

use super::gfq::GFq;
use crate::error::{Error, Result};
use crate::grpcore::{FiniteGroup, GroupRef, ELEMENT_CAP};

pub type Mat3 = [[u32; 3]; 3];

/// The 2-Sylow subgroup `G_t` of `SU_3(F_{2^t})`: matrices
/// `A(a,b) = [[1, a, b], [0, 1, conj a], [0, 0, 1]]` with `b + conj b = a conj a`.
#[derive(Clone, Debug)]
pub struct Su3Sylow {
    pub field: GFq,
    /// Element `i` is `A(a, b)` for `(a, b) = elements[i]`; `A(0, 0)` first.
    pub elements: Vec<(u32, u32)>,
    index: HashMap<(u32, u32), usize>,
    pub group: GroupRef,
}

pub fn mat_mul(f: &GFq, x: &Mat3, y: &Mat3) -> Mat3 {
    let mut z = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                z[i][j] = f.add(z[i][j], f.mul(x[i][k], y[k][j]));
            }
        }
    }
    z
}

impl Su3Sylow {
    pub fn new(t: u32) -> Result<Self> {
        if !(1..=2).contains(&t) {
            return Err(Error::Unsupported(format!(
                "su3 Sylow subgroup for t = {t}; t must be 1 or 2"
            )));
        }
        let field = GFq::new(t)?;
        let n = field.order();
        let mut elements = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if field.add(b, field.conj(b)) == field.mul(a, field.conj(a)) {
                    elements.push((a, b));
                }
            }
        }
        let index: HashMap<(u32, u32), usize> =
            elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let lookup = |a: u32, b: u32| index[&(a, b)];
        let mul = |i: usize, j: usize| {
            let ((a, b), (a2, b2)) = (elements[i], elements[j]);
            lookup(
                field.add(a, a2),
                field.add(field.add(b, b2), field.mul(a, field.conj(a2))),
            )
        };
        // lifts of an F_2-basis of G/C generate
        let gens: Vec<usize> = (0..2 * t)
            .map(|k| {
                let a = 1 << k;
                elements
                    .iter()
                    .position(|&(x, _)| x == a)
                    .expect("every a has a lift")
            })
            .collect();
        let g = FiniteGroup::from_fn(elements.len(), mul, gens, format!("G{t}"), ELEMENT_CAP)?;
        Ok(Su3Sylow {
            field,
            elements,
            index,
            group: Arc::new(g),
        })
    }

    pub fn index_of(&self, a: u32, b: u32) -> Option<usize> {
        self.index.get(&(a, b)).copied()
    }

    pub fn matrix(&self, i: usize) -> Mat3 {
        let (a, b) = self.elements[i];
        [[1, a, b], [0, 1, self.field.conj(a)], [0, 0, 1]]
    }

    /// Element represented by a matrix, if it has the shape `A(a, b)`.
    pub fn from_matrix(&self, m: &Mat3) -> Option<usize> {
        let f = &self.field;
        let shape = m[0][0] == 1
            && m[1][1] == 1
            && m[2][2] == 1
            && m[1][0] == 0
            && m[2][0] == 0
            && m[2][1] == 0;
        if !shape || m[1][2] != f.conj(m[0][1]) {
            return None;
        }
        self.index_of(m[0][1], m[0][2])
    }

    /// `D(c) = diag(c, conj(c) / c, 1 / conj(c))`.
    pub fn torus(&self, c: u32) -> Result<Mat3> {
        let f = &self.field;
        let cb = f.conj(c);
        Ok([[c, 0, 0], [0, f.mul(cb, f.inv(c)?), 0], [0, 0, f.inv(cb)?]])
    }

    /// `D(c) A D(c)^{-1}` by matrix multiplication.
    pub fn torus_conjugate(&self, c: u32, i: usize) -> Result<usize> {
        let f = &self.field;
        let d = self.torus(c)?;
        let dinv = self.torus(f.inv(c)?)?;
        let m = mat_mul(f, &mat_mul(f, &d, &self.matrix(i)), &dinv);
        self.from_matrix(&m)
            .ok_or_else(|| Error::Invariant("torus conjugate leaves the Sylow subgroup".into()))
    }

    /// `(c^{2-q} a, c^{q+1} b)`.
    pub fn torus_closed_form(&self, c: u32, a: u32, b: u32) -> Result<(u32, u32)> {
        let f = &self.field;
        let q = f.q() as u64;
        let c2q = f.mul(f.pow(c, 2), f.pow(f.inv(c)?, q));
        Ok((f.mul(c2q, a), f.mul(f.pow(c, q + 1), b)))
    }
}

/// `G_t` as a group.
pub fn su3_sylow(t: u32) -> Result<GroupRef> {
    Ok(Su3Sylow::new(t)?.group)
}
