mod common;

use common::bar_dims;
use outcoh::autom::AutGroup;
use outcoh::cohres::cache::{decode_resolution, encode_resolution};
use outcoh::cohres::*;
use outcoh::fplin::FpMatrix;
use outcoh::grpcore::constructors::*;
use outcoh::grpcore::{
    center, direct_product, quotient, GroupHom, GroupRef, QuillenData, Subgroup, INTERNAL_CAP,
};
use outcoh::modrep::{IrrCatalog, MeatAxe};

fn sub_hom(g: &GroupRef, elements: Vec<usize>) -> (GroupRef, GroupHom) {
    Subgroup::from_elements(elements).to_group(g, "H").unwrap()
}

#[test]
fn betti_numbers_of_small_groups() {
    let c2 = cyclic(2).unwrap();
    assert_eq!(Resolution::compute(&c2, 2, 6).unwrap().ranks(), &[1; 7]);
    let e4 = elementary_abelian(2, 2).unwrap();
    assert_eq!(
        Resolution::compute(&e4, 2, 6).unwrap().ranks(),
        &[1, 2, 3, 4, 5, 6, 7]
    );
    let q8 = quaternion(8).unwrap();
    let r = Resolution::compute(&q8, 2, 7).unwrap();
    assert_eq!(r.ranks(), &[1, 2, 2, 1, 1, 2, 2, 1]);
    assert!(r.is_minimal());
    r.verify_exactness().unwrap();
    let c3 = cyclic(3).unwrap();
    assert_eq!(Resolution::compute(&c3, 3, 5).unwrap().ranks(), &[1; 6]);
    let e9 = elementary_abelian(2, 3).unwrap();
    assert_eq!(
        Resolution::compute(&e9, 3, 4).unwrap().ranks(),
        &[1, 2, 3, 4, 5]
    );
}

#[test]
fn resolution_matches_bar_complex() {
    let cases: Vec<(GroupRef, u32, usize)> = vec![
        (quaternion(8).unwrap(), 2, 3),
        (dihedral(8).unwrap(), 2, 3),
        (cyclic(4).unwrap(), 2, 3),
        (heisenberg(3).unwrap(), 3, 2),
        (cyclic(9).unwrap(), 3, 2),
    ];
    for (g, p, d) in cases {
        let res = Resolution::compute(&g, p, d).unwrap();
        assert_eq!(
            res.ranks().to_vec(),
            bar_dims(&g, p, d),
            "group {}",
            g.name()
        );
        assert!(res.is_minimal());
        res.verify_exactness().unwrap();
    }
}

#[test]
fn non_p_group_rejected() {
    let s3 = dihedral(6).unwrap();
    assert!(Resolution::compute(&s3, 2, 2).is_err());
}

#[test]
fn budget_keeps_completed_degrees() {
    let e8 = elementary_abelian(3, 2).unwrap();
    let err = Resolution::compute_with_budget(&e8, 2, 10, 80).unwrap_err();
    assert!(matches!(err, outcoh::Error::DimBudget { .. }));
    let partial = Resolution::compute_partial(&e8, 2, 10, 80).unwrap();
    assert!(partial.is_truncated());
    assert_eq!(partial.ranks(), &[1, 3, 6, 10]);
}

#[test]
fn identity_and_restriction_maps() {
    let q8 = quaternion(8).unwrap();
    let r = Resolution::compute(&q8, 2, 5).unwrap();
    let id = GroupHom::identity(&q8);
    for (n, m) in induced_maps(&id, &r, &r, 5).unwrap().iter().enumerate() {
        assert_eq!(*m, FpMatrix::identity(2, r.rank(n)));
    }
    let z = center(&q8);
    let (zg, incl) = z.to_group(&q8, "Z").unwrap();
    let rz = Resolution::compute(&zg, 2, 5).unwrap();
    let m = induced_map(&incl, &rz, &r, 1).unwrap();
    assert!(m.matrix.is_zero());
    // restriction to the center is onto in degree 4 (periodicity class)
    let m4 = induced_map(&incl, &rz, &r, 4).unwrap();
    assert_eq!(m4.matrix.rank(), 1);
}

#[test]
fn chain_map_independent_of_lift() {
    let q8 = quaternion(8).unwrap();
    let d8 = dihedral(8).unwrap();
    let r = Resolution::compute(&q8, 2, 6).unwrap();
    let rd = Resolution::compute(&d8, 2, 6).unwrap();
    let aut = AutGroup::new(&q8).unwrap();
    for a in [1, 5, 11, aut.order() - 1] {
        let f = aut.as_hom(a);
        let base = induced_maps(&f, &r, &r, 5).unwrap();
        for seed in 0..3 {
            assert_eq!(base, induced_maps_perturbed(&f, &r, &r, 5, seed).unwrap());
        }
    }
    let (cg, incl) = sub_hom(
        &d8,
        Subgroup::generated(&d8, &[d8.generators()[0]])
            .elements()
            .to_vec(),
    );
    let rc = Resolution::compute(&cg, 2, 6).unwrap();
    let base = induced_maps(&incl, &rc, &rd, 5).unwrap();
    assert_eq!(base, induced_maps_perturbed(&incl, &rc, &rd, 5, 9).unwrap());
}

#[test]
fn functoriality_on_composites() {
    let q8 = quaternion(8).unwrap();
    let r = Resolution::compute(&q8, 2, 5).unwrap();
    let aut = AutGroup::new(&q8).unwrap();
    let z = center(&q8);
    let c4 = Subgroup::generated(&q8, &[q8.generators()[0]]);
    let (zg, _) = z.to_group(&q8, "Z").unwrap();
    let (c4g, c4_in) = c4.to_group(&q8, "C4").unwrap();
    let rz = Resolution::compute(&zg, 2, 5).unwrap();
    let rc4 = Resolution::compute(&c4g, 2, 5).unwrap();
    // Z -> C4 -> Q8
    let z_in_c4: Vec<u32> = z
        .elements()
        .iter()
        .map(|&x| c4.index_of(x).unwrap() as u32)
        .collect();
    let f = GroupHom::new(zg.clone(), c4g.clone(), z_in_c4).unwrap();
    let gf = f.compose(&c4_in).unwrap();
    let a = induced_maps(&gf, &rz, &r, 5).unwrap();
    let fa = induced_maps(&f, &rz, &rc4, 5).unwrap();
    let ga = induced_maps(&c4_in, &rc4, &r, 5).unwrap();
    for n in 0..=5 {
        assert_eq!(a[n], ga[n].mul(&fa[n]).unwrap());
    }
    for (x, y) in [(1, 2), (3, 7), (10, 20)] {
        let xy = aut.compose(x, y);
        let mx = induced_maps(&aut.as_hom(x), &r, &r, 3).unwrap();
        let my = induced_maps(&aut.as_hom(y), &r, &r, 3).unwrap();
        let mxy = induced_maps(&aut.as_hom(xy), &r, &r, 3).unwrap();
        for n in 0..=3 {
            assert_eq!(mxy[n], mx[n].mul(&my[n]).unwrap());
        }
    }
}

#[test]
fn kunneth_betti_numbers() {
    let c2 = cyclic(2).unwrap();
    let q8 = quaternion(8).unwrap();
    let r2 = Resolution::compute(&c2, 2, 5).unwrap();
    let rq = Resolution::compute(&q8, 2, 5).unwrap();
    let k = kunneth_resolution(&r2, &r2).unwrap();
    assert_eq!(k.ranks(), &[1, 2, 3, 4, 5, 6]);
    k.verify_exactness().unwrap();
    let kq = kunneth_resolution(&r2, &rq).unwrap();
    let prod = direct_product(&c2, &q8, INTERNAL_CAP).unwrap();
    let direct = Resolution::compute(&prod, 2, 5).unwrap();
    assert_eq!(kq.ranks(), direct.ranks());
    assert_eq!(kq.rank(3), 6);
    assert!(kq.is_minimal());
    kq.verify_exactness().unwrap();
    let triv = cyclic(1).unwrap();
    let rt = Resolution::compute(&triv, 2, 5).unwrap();
    assert_eq!(rt.ranks(), &[1, 0, 0, 0, 0, 0]);
    let kt = kunneth_resolution(&rq, &rt).unwrap();
    assert_eq!(kt.ranks(), rq.ranks());
    assert_eq!(kt.boundary(3), rq.boundary(3));
}

#[test]
fn quaternion_primitives() {
    let q8 = quaternion(8).unwrap();
    let r = Resolution::compute(&q8, 2, 6).unwrap();
    let prim = primitives_for_subgroup(&r, &center(&q8), 6).unwrap();
    assert_eq!(prim.dims(), vec![1, 2, 2, 1, 0, 0, 0]);
    // B^* is the image of inflation from Q8/Z
    let (quo, proj) = quotient(&q8, &center(&q8)).unwrap();
    let rquo = Resolution::compute(&quo, 2, 3).unwrap();
    let inf = induced_maps(&proj, &r, &rquo, 3).unwrap();
    for n in 0..=3 {
        let img = inf[n].image_basis();
        assert_eq!(img, prim.degree(n).image_basis(), "degree {n}");
    }
}

#[test]
fn elementary_abelian_primitives_vanish() {
    for (r, p) in [(1, 2), (2, 2), (1, 3)] {
        let v = elementary_abelian(r, p).unwrap();
        let res = Resolution::compute(&v, p, 4).unwrap();
        let prim = primitives_for_subgroup(&res, &Subgroup::whole(&v), 4).unwrap();
        assert_eq!(prim.dims(), vec![1, 0, 0, 0, 0]);
    }
}

#[test]
fn degree_one_primitives_are_inflated() {
    let groups = vec![
        quaternion(8).unwrap(),
        dihedral(8).unwrap(),
        product(&[quaternion(8).unwrap(), cyclic(2).unwrap()]).unwrap(),
    ];
    for g in groups {
        let q = QuillenData::for_group(&g, 2).unwrap();
        let res = Resolution::compute(&g, 2, 2).unwrap();
        let prim = primitives_for_subgroup(&res, &q.c, 2).unwrap();
        let (quo, _) = quotient(&g, &q.c).unwrap();
        let h1 = Resolution::compute(&quo, 2, 1).unwrap().rank(1);
        assert_eq!(prim.dims()[0], 1);
        assert_eq!(prim.dims()[1], h1, "group {}", g.name());
    }
}

#[test]
fn primitives_of_products_convolve() {
    let q8 = quaternion(8).unwrap();
    let c2 = cyclic(2).unwrap();
    let g = product(&[q8.clone(), c2.clone()]).unwrap();
    // C x D with C = Z(Q8), D = C2
    let zq = center(&q8);
    let cd = Subgroup::generated(&g, &[zq.elements()[1] * 2, 1]);
    let res = Resolution::compute(&g, 2, 4).unwrap();
    let prim = primitives_for_subgroup(&res, &cd, 4).unwrap();
    let a = [1, 2, 2, 1, 0];
    let b = [1, 0, 0, 0, 0];
    let conv: Vec<usize> = (0..=4)
        .map(|n| (0..=n).map(|i| a[i] * b[n - i]).sum())
        .collect();
    assert_eq!(prim.dims(), conv);
}

#[test]
fn noncentral_subgroup_rejected() {
    let d8 = dihedral(8).unwrap();
    let res = Resolution::compute(&d8, 2, 2).unwrap();
    let s = Subgroup::generated(&d8, &[d8.generators()[1]]);
    let s = if s.elements().iter().all(|&x| center(&d8).contains(x)) {
        Subgroup::generated(&d8, &[d8.generators()[0]])
    } else {
        s
    };
    assert!(primitives_for_subgroup(&res, &s, 2).is_err());
}

#[test]
fn out_q8_on_h1_is_the_two_dimensional_simple() {
    let q8 = quaternion(8).unwrap();
    let r = Resolution::compute(&q8, 2, 4).unwrap();
    let aut = AutGroup::new(&q8).unwrap();
    let h1 = out_module(&aut, &r, 1).unwrap();
    h1.validate().unwrap();
    assert_eq!(h1.dim, 2);
    assert!(MeatAxe::new(3).is_irreducible(&h1).unwrap());
    let cat = IrrCatalog::new(&aut.out, 2, 5).unwrap();
    assert_eq!(cat.composition_multiplicities(&h1, 1).unwrap(), vec![0, 1]);
    let h4 = out_module(&aut, &r, 4).unwrap();
    assert!(h4.is_trivial());
}

#[test]
fn trivial_out_gives_identity() {
    let c2 = cyclic(2).unwrap();
    let aut = AutGroup::new(&c2).unwrap();
    let r = Resolution::compute(&c2, 2, 3).unwrap();
    for m in aut_action_on_hd(&aut, &r, 3).unwrap() {
        assert_eq!(m, FpMatrix::identity(2, 1));
    }
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let q8 = quaternion(8).unwrap();
    let cache = ResolutionCache::new(dir.path()).unwrap();
    let r3 = cache.load_or_compute(&q8, 2, 3).unwrap();
    assert_eq!(r3.ranks(), &[1, 2, 2, 1]);
    let r6 = cache.load_or_compute(&q8, 2, 6).unwrap();
    assert_eq!(r6.ranks(), &[1, 2, 2, 1, 1, 2, 2]);
    let again = cache.load_or_compute(&q8, 2, 5).unwrap();
    assert_eq!(again.max_degree(), 6);
    for n in 1..=6 {
        assert_eq!(again.boundary(n), r6.boundary(n));
    }
    again.verify_exactness().unwrap();
    let h9 = heisenberg(3).unwrap();
    let r = Resolution::compute(&h9, 3, 2).unwrap();
    let text = encode_resolution(&r);
    let back = decode_resolution(&text, &h9).unwrap();
    assert_eq!(back.boundary(2), r.boundary(2));
    assert!(decode_resolution(&text, &q8).is_err());
    assert!(decode_resolution(
        &text.replace("outcoh-resolution 1", "outcoh-resolution 0"),
        &h9
    )
    .is_err());
}
