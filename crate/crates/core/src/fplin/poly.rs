//! Univariate polynomials over F_p and their factorization.

use rand::Rng;

use super::field;

/// Coefficients from the constant term upward, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    pub p: u32,
    pub c: Vec<u32>,
}

impl Poly {
    pub fn new(p: u32, mut c: Vec<u32>) -> Poly {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly { p, c }
    }

    pub fn zero(p: u32) -> Poly {
        Poly { p, c: Vec::new() }
    }

    pub fn one(p: u32) -> Poly {
        Poly { p, c: vec![1] }
    }

    /// The monomial `x`.
    pub fn x(p: u32) -> Poly {
        Poly { p, c: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lead(&self) -> u32 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.lead() == 1 {
            return self.clone();
        }
        let l = field::inv(self.p, self.lead());
        Poly::new(
            self.p,
            self.c.iter().map(|&a| field::mul(self.p, a, l)).collect(),
        )
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| {
                field::add(
                    self.p,
                    *self.c.get(i).unwrap_or(&0),
                    *o.c.get(i).unwrap_or(&0),
                )
            })
            .collect();
        Poly::new(self.p, v)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| {
                field::sub(
                    self.p,
                    *self.c.get(i).unwrap_or(&0),
                    *o.c.get(i).unwrap_or(&0),
                )
            })
            .collect();
        Poly::new(self.p, v)
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.p);
        }
        let p = self.p;
        let mut v = vec![0u32; self.c.len() + o.c.len() - 1];
        if p == 2 {
            for (i, &a) in self.c.iter().enumerate() {
                if a != 0 {
                    for (j, &b) in o.c.iter().enumerate() {
                        v[i + j] ^= b;
                    }
                }
            }
        } else {
            for (i, &a) in self.c.iter().enumerate() {
                if a != 0 {
                    for (j, &b) in o.c.iter().enumerate() {
                        v[i + j] = (v[i + j] + a * b) % p;
                    }
                }
            }
        }
        Poly::new(p, v)
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let p = self.p;
        if self.c.len() < d.c.len() {
            return (Poly::zero(p), self.clone());
        }
        let mut r = self.c.clone();
        let dl = d.c.len();
        let inv = field::inv(p, d.lead());
        let mut q = vec![0u32; r.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let coef = field::mul(p, r[k + dl - 1], inv);
            if coef == 0 {
                continue;
            }
            q[k] = coef;
            for (j, &b) in d.c.iter().enumerate() {
                r[k + j] = field::sub(p, r[k + j], field::mul(p, coef, b));
            }
        }
        (Poly::new(p, q), Poly::new(p, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let p = self.p;
        let v = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| field::mul(p, a, (i as u32) % p))
            .collect();
        Poly::new(p, v)
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u128, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: u32) -> u32 {
        let p = self.p;
        self.c
            .iter()
            .rev()
            .fold(0, |acc, &a| field::add(p, field::mul(p, acc, x), a))
    }

    /// p-th root of a polynomial whose derivative vanishes.
    fn pth_root(&self) -> Poly {
        let p = self.p as usize;
        let v = self.c.iter().step_by(p).copied().collect();
        Poly::new(self.p, v)
    }
}

/// Square-free decomposition: pairs `(g, e)` with `f = lead * prod g^e`.
pub fn squarefree(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    sqf_rec(&f.monic(), 1, &mut out);
    out
}

fn sqf_rec(f: &Poly, mult: usize, out: &mut Vec<(Poly, usize)>) {
    if f.degree() == 0 {
        return;
    }
    let p = f.p as usize;
    let df = f.derivative();
    if df.is_zero() {
        sqf_rec(&f.pth_root(), mult * p, out);
        return;
    }
    let mut c = f.gcd(&df);
    let mut w = f.divrem(&c).0;
    let mut i = 1;
    while w.degree() > 0 {
        let y = w.gcd(&c);
        let z = w.divrem(&y).0;
        if z.degree() > 0 {
            out.push((z.monic(), i * mult));
        }
        w = y;
        c = c.divrem(&w).0;
        i += 1;
    }
    if c.degree() > 0 {
        sqf_rec(&c.pth_root(), mult * p, out);
    }
}

/// Distinct-degree factorization of a monic square-free polynomial, for
/// degrees up to `max_deg`. Returns `(product of degree-d factors, d)` and
/// the unresolved remainder.
pub fn distinct_degree(f: &Poly, max_deg: usize) -> (Vec<(Poly, usize)>, Poly) {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = Poly::x(p);
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.degree() >= 2 * d && d <= max_deg {
        h = h.powmod(p as u128, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree() > 0 {
            out.push((g.clone(), d));
            rest = rest.divrem(&g).0;
            h = h.rem(&rest);
        }
        d += 1;
    }
    if rest.degree() > 0 && rest.degree() < 2 * d && rest.degree() <= max_deg {
        let dd = rest.degree();
        out.push((rest.clone(), dd));
        rest = Poly::one(p);
    }
    (out, rest)
}

/// Split a product of distinct irreducibles of degree `d` (Cantor-Zassenhaus).
pub fn equal_degree<R: Rng>(f: &Poly, d: usize, rng: &mut R) -> Vec<Poly> {
    if f.degree() == d {
        return vec![f.monic()];
    }
    let p = f.p;
    let n = f.degree();
    loop {
        let a = Poly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree() == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = ((p as u128).pow(d as u32) - 1) / 2;
            a.powmod(e, f).sub(&Poly::one(p))
        };
        let g = f.gcd(&b);
        if g.degree() > 0 && g.degree() < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.divrem(&g).0, d, rng));
            return out;
        }
    }
}

/// Distinct monic irreducible factors of `f` of degree at most `max_deg`.
pub fn irreducible_factors<R: Rng>(f: &Poly, max_deg: usize, rng: &mut R) -> Vec<Poly> {
    let mut out = Vec::new();
    for (g, _) in squarefree(f) {
        let (parts, _) = distinct_degree(&g, max_deg);
        for (h, d) in parts {
            out.extend(equal_degree(&h, d, rng));
        }
    }
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.c.cmp(&b.c)));
    out.dedup();
    out
}
