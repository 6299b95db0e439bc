use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::resolution::{all_translates, augmentation, translate_row, Resolution};
use crate::autom::AutGroup;
use crate::error::{Error, Result};
use crate::fplin::{field, FpMatrix};
use crate::grpcore::{GroupHom, GroupRef};
use crate::modrep::FpRep;

/// A free complex whose boundaries can be pushed into `F_p[H]` along a
/// homomorphism, used as the source of a lifted chain map.
pub trait SourceComplex {
    fn prime(&self) -> u32;
    fn max_degree(&self) -> usize;
    fn src_rank(&self, n: usize) -> usize;
    /// Generator boundaries in degree `n` with coefficients pushed to the
    /// target group: `src_rank(n) x (src_rank(n-1) |H|)`.
    fn pushed_boundary(&self, n: usize) -> Result<FpMatrix>;
}

/// A resolution of `G` viewed through a homomorphism `G -> H`.
pub struct PushedResolution<'a> {
    pub res: &'a Resolution,
    pub images: &'a [u32],
    pub target_order: usize,
}

impl SourceComplex for PushedResolution<'_> {
    fn prime(&self) -> u32 {
        self.res.p
    }

    fn max_degree(&self) -> usize {
        self.res.max_degree()
    }

    fn src_rank(&self, n: usize) -> usize {
        self.res.rank(n)
    }

    fn pushed_boundary(&self, n: usize) -> Result<FpMatrix> {
        let p = self.res.p;
        let g = self.res.group.order();
        let h = self.target_order;
        let b = self.res.boundary(n);
        let mut out = FpMatrix::zeros(p, b.rows(), self.res.rank(n - 1) * h);
        for r in 0..b.rows() {
            let mut c = b.first_nonzero(r, 0);
            while let Some(j) = c {
                let (k, x) = (j / g, j % g);
                let col = k * h + self.images[x] as usize;
                out.set(r, col, field::add(p, out.get(r, col), b.get(r, j)));
                c = b.first_nonzero(r, j + 1);
            }
        }
        Ok(out)
    }
}

/// Cohomology matrices of a chain map lifting the identity of `F_p`, from a
/// source complex into a resolution of `H`. Entry `n` has shape
/// `b_n(H) x src_rank(n)` and maps `x_H` to `x_H F`.
///
/// With `perturb`, every generator image is moved by a random boundary, which
/// must not change the result.
pub fn lift_chain_map(
    src: &dyn SourceComplex,
    target: &Resolution,
    d: usize,
    perturb: Option<u64>,
) -> Result<Vec<FpMatrix>> {
    let p = target.p;
    if src.prime() != p {
        return Err(Error::PrimeMismatch(src.prime(), p));
    }
    let avail = src.max_degree().min(target.max_degree());
    if d > avail {
        return Err(Error::DegreeOutOfRange {
            requested: d,
            available: avail,
        });
    }
    let h = target.group.order();
    let perm = target.perm();
    let mut rng = perturb.map(ChaCha8Rng::seed_from_u64);
    let mut z = FpMatrix::zeros(p, src.src_rank(0), h);
    for k in 0..z.rows() {
        let x = rng.as_mut().map_or(0, |r| r.gen_range(0..h));
        z.set(k, x, 1);
    }
    let mut out = vec![cohomology_matrix(&z, 1, h)];
    for n in 1..=d {
        let phi = all_translates(&z, perm);
        let y = src.pushed_boundary(n)?.mul(&phi)?;
        let mut zn = target
            .solver(n)?
            .solve(&y)
            .map_err(|_| Error::Invariant(format!("chain map does not lift in degree {n}")))?;
        if let Some(r) = rng.as_mut() {
            if n < target.max_degree() {
                perturb_rows(&mut zn, target.boundary(n + 1), perm, r);
            }
        }
        out.push(cohomology_matrix(&zn, target.rank(n), h));
        z = zn;
    }
    Ok(out)
}

fn perturb_rows(z: &mut FpMatrix, next: &FpMatrix, perm: &[Vec<u32>], rng: &mut ChaCha8Rng) {
    let p = z.p();
    let h = perm.len();
    if next.rows() == 0 {
        return;
    }
    let mut buf = FpMatrix::zeros(p, 1, z.cols());
    for k in 0..z.rows() {
        for _ in 0..2 {
            let r = rng.gen_range(0..next.rows());
            let g = rng.gen_range(0..h);
            let c = rng.gen_range(1..p.max(2));
            buf.scale_row(0, 0);
            translate_row(next, r, &perm[g], h, &mut buf, 0);
            z.add_row_from(k, &buf, 0, c);
        }
    }
}

/// `F[l][k]` is the augmentation of the `e_l` component of row `k`.
fn cohomology_matrix(z: &FpMatrix, target_rank: usize, h: usize) -> FpMatrix {
    let mut f = FpMatrix::zeros(z.p(), target_rank, z.rows());
    for k in 0..z.rows() {
        for l in 0..target_rank {
            let a = augmentation(z, k, l, h);
            if a != 0 {
                f.set(l, k, a);
            }
        }
    }
    f
}

/// Map on degree-`d` cohomology induced by a homomorphism, `H^d(target) -> H^d(source)`.
#[derive(Clone, Debug)]
pub struct CohMap {
    pub source: GroupRef,
    pub target: GroupRef,
    pub degree: usize,
    pub matrix: FpMatrix,
}

fn check_res(res: &Resolution, g: &GroupRef) -> Result<()> {
    if *res.group != **g {
        return Err(Error::InvalidHom(
            "resolution is over a different group".into(),
        ));
    }
    Ok(())
}

/// Induced maps in all degrees `0..=d` for `f: G -> H`.
pub fn induced_maps(
    f: &GroupHom,
    res_g: &Resolution,
    res_h: &Resolution,
    d: usize,
) -> Result<Vec<FpMatrix>> {
    check_res(res_g, &f.domain)?;
    check_res(res_h, &f.codomain)?;
    let src = PushedResolution {
        res: res_g,
        images: &f.images,
        target_order: f.codomain.order(),
    };
    lift_chain_map(&src, res_h, d, None)
}

/// Induced maps with a randomly perturbed chain map, for independence checks.
pub fn induced_maps_perturbed(
    f: &GroupHom,
    res_g: &Resolution,
    res_h: &Resolution,
    d: usize,
    seed: u64,
) -> Result<Vec<FpMatrix>> {
    check_res(res_g, &f.domain)?;
    check_res(res_h, &f.codomain)?;
    let src = PushedResolution {
        res: res_g,
        images: &f.images,
        target_order: f.codomain.order(),
    };
    lift_chain_map(&src, res_h, d, Some(seed))
}

pub fn induced_map(
    f: &GroupHom,
    res_g: &Resolution,
    res_h: &Resolution,
    d: usize,
) -> Result<CohMap> {
    let matrix = induced_maps(f, res_g, res_h, d)?
        .pop()
        .expect("degree 0 is always present");
    Ok(CohMap {
        source: f.domain.clone(),
        target: f.codomain.clone(),
        degree: d,
        matrix,
    })
}

/// Out(P) acting on `H^d(P)`, one matrix per generator of `Out(P)`.
/// The row-vector convention gives `M_{ab} = M_a M_b`.
pub fn aut_action_on_hd(aut: &AutGroup, res: &Resolution, d: usize) -> Result<Vec<FpMatrix>> {
    check_res(res, &aut.group)?;
    let id = FpMatrix::identity(res.p, res.rank(d));
    for &x in aut.group.generators() {
        let m = induced_maps(&aut.as_hom(aut.inner_of(x)), res, res, d)?
            .pop()
            .unwrap();
        if m != id {
            return Err(Error::Invariant(format!(
                "inner automorphism acts nontrivially on H^{d}"
            )));
        }
    }
    aut.out
        .generators()
        .iter()
        .map(|&o| {
            Ok(induced_maps(&aut.as_hom(aut.out_reps[o]), res, res, d)?
                .pop()
                .unwrap())
        })
        .collect()
}

/// `H^d(P)` as an `F_p[Out(P)]`-module.
pub fn out_module(aut: &AutGroup, res: &Resolution, d: usize) -> Result<FpRep> {
    let gens = aut_action_on_hd(aut, res, d)?;
    FpRep::trusted_with_dim(aut.out.clone(), res.p, res.rank(d), gens)
}
