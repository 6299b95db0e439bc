use super::chainmap::{lift_chain_map, SourceComplex};
use super::resolution::Resolution;
use crate::error::{Error, Result};
use crate::fplin::{field, FpMatrix};
use crate::grpcore::{direct_product, GroupHom, Subgroup, INTERNAL_CAP};

/// Tensor product `R(A) (x) R(B)` of two resolutions, pushed into `F_p[H]`
/// along element maps `A -> H` and `B -> H` whose images commute.
///
/// Degree-`n` generators are `e_i (x) f_j` with `e_i` in degree `a`, ordered by
/// `a`, then `i`, then `j`.
pub struct TensorSource<'a> {
    pub left: &'a Resolution,
    pub right: &'a Resolution,
    pub left_images: Vec<u32>,
    pub right_images: Vec<u32>,
    pub target_order: usize,
}

impl TensorSource<'_> {
    /// Index of the generator `(a, i; n - a, j)` among degree-`n` generators.
    pub fn generator_index(&self, n: usize, a: usize, i: usize, j: usize) -> usize {
        self.offset(n, a) + i * self.right.rank(n - a) + j
    }

    /// First index of the `H^a (x) H^{n-a}` block.
    pub fn offset(&self, n: usize, a: usize) -> usize {
        (0..a)
            .map(|k| self.left.rank(k) * self.right.rank(n - k))
            .sum()
    }
}

impl SourceComplex for TensorSource<'_> {
    fn prime(&self) -> u32 {
        self.left.p
    }

    fn max_degree(&self) -> usize {
        self.left.max_degree().min(self.right.max_degree())
    }

    fn src_rank(&self, n: usize) -> usize {
        (0..=n)
            .map(|a| self.left.rank(a) * self.right.rank(n - a))
            .sum()
    }

    fn pushed_boundary(&self, n: usize) -> Result<FpMatrix> {
        let p = self.left.p;
        let h = self.target_order;
        let (ga, gb) = (self.left.group.order(), self.right.group.order());
        let mut out = FpMatrix::zeros(p, self.src_rank(n), self.src_rank(n - 1) * h);
        let add = |out: &mut FpMatrix, r: usize, col: usize, v: u32| {
            out.set(r, col, field::add(p, out.get(r, col), v));
        };
        for a in 0..=n {
            let b = n - a;
            let sign = if a % 2 == 0 { 1 } else { p - 1 };
            for i in 0..self.left.rank(a) {
                for j in 0..self.right.rank(b) {
                    let r = self.generator_index(n, a, i, j);
                    if a >= 1 {
                        let bd = self.left.boundary(a);
                        let mut c = bd.first_nonzero(i, 0);
                        while let Some(col) = c {
                            let (t, v) = (col / ga, col % ga);
                            let tgt = self.generator_index(n - 1, a - 1, t, j);
                            add(
                                &mut out,
                                r,
                                tgt * h + self.left_images[v] as usize,
                                bd.get(i, col),
                            );
                            c = bd.first_nonzero(i, col + 1);
                        }
                    }
                    if b >= 1 {
                        let bd = self.right.boundary(b);
                        let mut c = bd.first_nonzero(j, 0);
                        while let Some(col) = c {
                            let (s, q) = (col / gb, col % gb);
                            let tgt = self.generator_index(n - 1, a, i, s);
                            add(
                                &mut out,
                                r,
                                tgt * h + self.right_images[q] as usize,
                                field::mul(p, sign, bd.get(j, col)),
                            );
                            c = bd.first_nonzero(j, col + 1);
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Resolution of `G x H` assembled from resolutions of the factors. The
/// product group uses the element index `g |H| + h`.
pub fn kunneth_resolution(res_g: &Resolution, res_h: &Resolution) -> Result<Resolution> {
    if res_g.p != res_h.p {
        return Err(Error::PrimeMismatch(res_g.p, res_h.p));
    }
    let prod = direct_product(&res_g.group, &res_h.group, INTERNAL_CAP)?;
    let (m, n) = (res_g.group.order(), res_h.group.order());
    let src = TensorSource {
        left: res_g,
        right: res_h,
        left_images: (0..m).map(|g| (g * n) as u32).collect(),
        right_images: (0..n as u32).collect(),
        target_order: m * n,
    };
    let d = src.max_degree();
    let ranks: Vec<usize> = (0..=d).map(|k| src.src_rank(k)).collect();
    let mut bds = vec![FpMatrix::zeros(res_g.p, 0, 0)];
    for k in 1..=d {
        bds.push(src.pushed_boundary(k)?);
    }
    Resolution::from_boundaries(&prod, res_g.p, ranks, bds)
}

/// Primitives `P_V H^n(Q)` for `n = 0..=d`, as row bases inside `H^n(Q)`.
#[derive(Clone, Debug)]
pub struct Primitives {
    pub bases: Vec<FpMatrix>,
}

impl Primitives {
    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(|b| b.rows()).collect()
    }

    pub fn degree(&self, n: usize) -> &FpMatrix {
        &self.bases[n]
    }
}

/// Coaction matrices `m^*: H^n(Q) -> (+)_a H^a(V) (x) H^{n-a}(Q)` for `n = 0..=d`,
/// where `m: V x Q -> Q` is multiplication and `incl` embeds `V` centrally.
pub fn coaction(
    res_q: &Resolution,
    res_v: &Resolution,
    incl: &GroupHom,
    d: usize,
) -> Result<Vec<FpMatrix>> {
    let q = &res_q.group;
    if *incl.codomain != **q || *incl.domain != *res_v.group {
        return Err(Error::InvalidHom(
            "inclusion does not match the resolutions".into(),
        ));
    }
    let img = incl.image();
    for &v in img.elements() {
        for x in 0..q.order() {
            if q.mul(v, x) != q.mul(x, v) {
                return Err(Error::InvalidHom(
                    "subgroup is not central, so multiplication is not a homomorphism".into(),
                ));
            }
        }
    }
    let src = TensorSource {
        left: res_v,
        right: res_q,
        left_images: incl.images.clone(),
        right_images: (0..q.order() as u32).collect(),
        target_order: q.order(),
    };
    lift_chain_map(&src, res_q, d, None)
}

/// `P_V H^n(Q) = {x : m^*(x) = 1 (x) x}` for `n = 0..=d`.
pub fn primitives(
    res_q: &Resolution,
    res_v: &Resolution,
    incl: &GroupHom,
    d: usize,
) -> Result<Primitives> {
    let maps = coaction(res_q, res_v, incl, d)?;
    let p = res_q.p;
    let mut bases = Vec::with_capacity(d + 1);
    for (n, f) in maps.iter().enumerate() {
        let bq = res_q.rank(n);
        // the H^0(V) (x) H^n(Q) block is restriction along q -> (1, q): the identity
        if f.col_block(0, bq) != FpMatrix::identity(p, bq) {
            return Err(Error::Invariant(format!(
                "coaction is not counital in degree {n}"
            )));
        }
        let rest = f.cols() - bq;
        if rest == 0 {
            bases.push(FpMatrix::identity(p, bq));
        } else {
            bases.push(f.col_block(bq, rest).kernel_basis());
        }
    }
    Ok(Primitives { bases })
}

/// Primitives for a subgroup `V` of `Q`, building the resolution of `V`.
pub fn primitives_for_subgroup(res_q: &Resolution, v: &Subgroup, d: usize) -> Result<Primitives> {
    let (vg, incl) = v.to_group(&res_q.group, "V")?;
    let res_v = Resolution::compute(&vg, res_q.p, d)?;
    primitives(res_q, &res_v, &incl, d)
}
