//! Norton's irreducibility test with the Holt-Rees refinement.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::rep::{spin, FpRep};
use crate::error::{Error, Result};
use crate::fplin::{field, poly, Echelon, FpMatrix, Poly};

const MAX_ATTEMPTS: usize = 400;

/// Outcome of one splitting attempt.
#[derive(Debug)]
pub enum Split {
    Irreducible,
    /// Echelon basis of a proper nonzero submodule.
    Reducible(Echelon),
}

pub struct MeatAxe {
    rng: ChaCha8Rng,
}

impl MeatAxe {
    pub fn new(seed: u64) -> Self {
        MeatAxe {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Find a proper submodule or prove irreducibility.
    pub fn split(&mut self, m: &FpRep) -> Result<Split> {
        let n = m.dim;
        let p = m.p;
        if n == 0 {
            return Err(Error::InvalidRep("zero module".into()));
        }
        if n == 1 {
            return Ok(Split::Irreducible);
        }
        let mut pool: Vec<FpMatrix> = m.gens.clone();
        if pool.is_empty() {
            // trivial group: any vector spans a submodule
            let e = spin(&[], &FpMatrix::identity(p, n).row_matrix(0), n, p);
            return Ok(Split::Reducible(e));
        }
        let mut max_deg = 24usize.min(n);
        for attempt in 0..MAX_ATTEMPTS {
            if attempt > 0 && attempt % 40 == 0 {
                max_deg = (max_deg * 2).min(n);
            }
            if pool.len() < 24 {
                let a = self.rng.gen_range(0..pool.len());
                let b = self.rng.gen_range(0..pool.len());
                let w = pool[a].mul(&pool[b])?;
                pool.push(w);
            }
            let mut theta = FpMatrix::zeros(p, n, n);
            for w in &pool {
                if self.rng.gen_bool(0.5) {
                    let c = self.rng.gen_range(1..p.max(2));
                    theta = theta.add(&w.scaled(c))?;
                }
            }
            let pieces = char_poly_pieces(&theta);
            let mut factors = Vec::new();
            for f in &pieces {
                factors.extend(poly::irreducible_factors(f, max_deg, &mut self.rng));
            }
            factors.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.c.cmp(&b.c)));
            factors.dedup();
            for f in factors.iter().take(3) {
                let ft = eval_poly(f, &theta)?;
                let null = ft.kernel_basis();
                if null.rows() == 0 {
                    continue;
                }
                let v = null.row_matrix(0);
                let e = m.spin(&v);
                if e.dim() < n {
                    return Ok(Split::Reducible(e));
                }
                let ftt = ft.transpose();
                let null_t = ftt.kernel_basis();
                let w = null_t.row_matrix(0);
                let gens_t: Vec<FpMatrix> = m.gens.iter().map(|a| a.transpose()).collect();
                let et = spin(&gens_t, &w, n, p);
                if et.dim() < n {
                    let ann = et.basis().transpose().kernel_basis();
                    return Ok(Split::Reducible(Echelon::from_rows(&ann)));
                }
                if null.rows() == f.degree() {
                    return Ok(Split::Irreducible);
                }
            }
        }
        Err(Error::Invariant(format!(
            "MeatAxe gave up on a module of dimension {n}"
        )))
    }

    /// Composition factors, bottom to top.
    pub fn chop(&mut self, m: &FpRep) -> Result<Vec<FpRep>> {
        let mut out = Vec::new();
        self.chop_into(m, &mut out)?;
        Ok(out)
    }

    fn chop_into(&mut self, m: &FpRep, out: &mut Vec<FpRep>) -> Result<()> {
        if m.dim == 0 {
            return Ok(());
        }
        match self.split(m)? {
            Split::Irreducible => out.push(m.clone()),
            Split::Reducible(e) => {
                let (sub, quo) = m.sub_and_quotient(&e)?;
                self.chop_into(&sub, out)?;
                self.chop_into(&quo, out)?;
            }
        }
        Ok(())
    }

    pub fn is_irreducible(&mut self, m: &FpRep) -> Result<bool> {
        Ok(matches!(self.split(m)?, Split::Irreducible))
    }
}

/// `f(A)` by Horner's rule.
pub fn eval_poly(f: &Poly, a: &FpMatrix) -> Result<FpMatrix> {
    let p = a.p();
    let n = a.rows();
    let mut r = FpMatrix::zeros(p, n, n);
    for &c in f.c.iter().rev() {
        r = r.mul(a)?;
        if c != 0 {
            for i in 0..n {
                let v = field::add(p, r.get(i, i), c);
                r.set(i, i, v);
            }
        }
    }
    Ok(r)
}

/// Factors of the characteristic polynomial from a Krylov decomposition:
/// the relative minimal polynomials of successive cyclic subspaces.
pub fn char_poly_pieces(a: &FpMatrix) -> Vec<Poly> {
    let p = a.p();
    let n = a.rows();
    let mut span = Echelon::new(p, n);
    let mut pieces = Vec::new();
    let mut next_unit = 0;
    while span.dim() < n {
        let v = loop {
            let mut u = FpMatrix::zeros(p, 1, n);
            u.set(0, next_unit, 1);
            next_unit += 1;
            if !span.contains(&u, 0) {
                break u;
            }
        };
        let mut rows: Vec<(usize, FpMatrix, Vec<u32>)> = Vec::new();
        let mut w = v.clone();
        let mut k = 0;
        loop {
            let mut t = w.clone();
            span.reduce(&mut t, 0);
            let mut q = vec![0u32; k + 1];
            q[k] = 1;
            for (piv, r, rq) in &rows {
                let c = t.get(0, *piv);
                if c != 0 {
                    let nc = field::neg(p, c);
                    t.add_row_from(0, r, 0, nc);
                    for (i, &x) in rq.iter().enumerate() {
                        q[i] = field::add(p, q[i], field::mul(p, nc, x));
                    }
                }
            }
            match t.first_nonzero(0, 0) {
                None => {
                    pieces.push(Poly::new(p, q));
                    break;
                }
                Some(piv) => {
                    let lead = t.get(0, piv);
                    if lead != 1 {
                        let il = field::inv(p, lead);
                        t.scale_row(0, il);
                        for x in q.iter_mut() {
                            *x = field::mul(p, *x, il);
                        }
                    }
                    rows.push((piv, t, q));
                }
            }
            w = w.mul(a).expect("square");
            k += 1;
        }
        for (_, r, _) in rows {
            let mut rr = r;
            span.reduce(&mut rr, 0);
            span.insert_reduced(rr);
        }
    }
    pieces
}
