use std::time::Instant;

use outcoh::fplin::FpMatrix;
use outcoh::grpcore::constructors::*;
use outcoh::grpcore::Subgroup;
use outcoh::modrep::*;

#[test]
fn s3_catalogs() {
    let s3 = dihedral(6).unwrap();
    let c2 = IrrCatalog::from_regular(&s3, 2, 1).unwrap();
    assert_eq!(c2.dims(), vec![1, 2]);
    assert_eq!(c2.regular_mults, vec![2, 2]);
    assert_eq!(c2.projective_dims, vec![2, 2]);
    let c3 = IrrCatalog::from_regular(&s3, 3, 1).unwrap();
    assert_eq!(c3.dims(), vec![1, 1]);
    assert_eq!(c3.projective_dims, vec![3, 3]);
    let cq = IrrCatalog::new(&s3, 3, 1).unwrap();
    assert_eq!(cq.projective_dims, vec![3, 3]);
}

#[test]
fn p_group_has_only_trivial() {
    let q8 = quaternion(8).unwrap();
    let c = IrrCatalog::from_regular(&q8, 2, 7).unwrap();
    assert_eq!(c.dims(), vec![1]);
    assert_eq!(c.regular_mults, vec![8]);
}

#[test]
fn induced_and_permutation_modules_agree() {
    let s3 = dihedral(6).unwrap();
    let h = Subgroup::generated(&s3, &[3]);
    let (hg, incl) = h.to_group(&s3, "H").unwrap();
    let triv = FpRep::trivial(&hg, 2);
    let ind = induce(&triv, &incl).unwrap();
    ind.validate().unwrap();
    let perm = permutation_module(&s3, &h, 2);
    perm.validate().unwrap();
    let a = hom_dim(&ind, &perm).unwrap();
    assert!(a >= 1);
    let cat = IrrCatalog::from_regular(&s3, 2, 3).unwrap();
    assert_eq!(
        cat.composition_multiplicities(&ind, 1).unwrap(),
        cat.composition_multiplicities(&perm, 2).unwrap()
    );
}

#[test]
fn char_poly_pieces_multiply_to_degree() {
    let a = FpMatrix::from_rows(3, 3, &[vec![0, 1, 0], vec![0, 0, 1], vec![1, 2, 0]]).unwrap();
    let pieces = meataxe::char_poly_pieces(&a);
    let total: usize = pieces.iter().map(|p| p.degree()).sum();
    assert_eq!(total, 3);
    for f in pieces {
        assert!(meataxe::eval_poly(&f, &a).unwrap().rank() < 3);
    }
}

#[test]
fn gl23_regular_chop() {
    // GL(2,3) has order 48; mod 2 its simple modules have dimensions 1, 2
    let t = Instant::now();
    let g = outcoh::dickson::gl_group(2, 3).unwrap();
    let cat = IrrCatalog::from_regular(&g, 2, 5).unwrap();
    assert_eq!(cat.dims(), vec![1, 2]);
    let total: usize = cat
        .irreducibles
        .iter()
        .zip(&cat.projective_dims)
        .map(|(s, p)| s.dim * p)
        .sum();
    assert_eq!(total, 48);
    let cat3 = IrrCatalog::from_regular(&g, 3, 5).unwrap();
    let total: usize = cat3
        .irreducibles
        .iter()
        .zip(&cat3.projective_dims)
        .map(|(s, p)| s.dim * p)
        .sum();
    assert_eq!(total, 48);
    eprintln!("gl23 chops {:?}", t.elapsed());
}

fn conjugated(m: &FpRep, seed: u64) -> FpRep {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let (b, binv) = loop {
        let b = FpMatrix::from_fn(m.p, m.dim, m.dim, |_, _| rng.gen_range(0..m.p));
        if let Ok(inv) = b.inverse() {
            break (b, inv);
        }
    };
    let gens = m
        .gens
        .iter()
        .map(|g| b.mul(g).unwrap().mul(&binv).unwrap())
        .collect();
    FpRep::new(m.group.clone(), m.p, gens).unwrap()
}

fn sample_modules(g: &outcoh::grpcore::GroupRef, p: u32) -> Vec<FpRep> {
    let mut ms: Vec<FpRep> = outcoh::grpcore::all_subgroups(g)
        .iter()
        .map(|h| permutation_module(g, h, p))
        .collect();
    let cat = IrrCatalog::new(g, p, 1).unwrap();
    for s in &cat.irreducibles {
        ms.push(tensor_rep(&ms[0], s).unwrap());
        ms.push(tensor_rep(s, s).unwrap());
    }
    ms
}

#[test]
fn regular_s3_summand_dimension() {
    let s3 = dihedral(6).unwrap();
    let cat = IrrCatalog::new(&s3, 2, 1).unwrap();
    let reg = regular_module(&s3, 2);
    assert_eq!(cat.dim_e(&reg, 4).unwrap(), vec![2, 2]);
    for (i, s) in cat.irreducibles.iter().enumerate() {
        let e = cat.dim_e(s, 1).unwrap();
        assert_eq!(e[i], cat.endo_dims[i]);
    }
    assert_eq!(cat.dim_e(&FpRep::trivial(&s3, 2), 1).unwrap(), vec![1, 0]);
}

#[test]
fn summand_dimension_via_projective_covers() {
    // F_2[S3/C3] is the projective cover of the trivial module and the
    // two-dimensional simple module is projective
    let s3 = dihedral(6).unwrap();
    let c3 = outcoh::grpcore::all_subgroups(&s3)
        .into_iter()
        .find(|h| h.order() == 3)
        .unwrap();
    let cat = IrrCatalog::new(&s3, 2, 1).unwrap();
    let covers = [permutation_module(&s3, &c3, 2), cat.irreducibles[1].clone()];
    for m in sample_modules(&s3, 2) {
        let e = cat.dim_e(&m, 9).unwrap();
        for (s, cover) in covers.iter().enumerate() {
            assert_eq!(hom_dim(cover, &m).unwrap(), e[s]);
        }
    }
}

/// Perm-lemma chain on every subgroup `H`: `H` a p-group gives every simple
/// module as a submodule of `F_p[H\G]`, which gives every simple as a
/// composition factor; for normal `H` the last forces `H` to be a p-group.
fn perm_lemma_chain(g: &outcoh::grpcore::GroupRef, p: u32) -> usize {
    let cat = IrrCatalog::new(g, p, 1).unwrap();
    let mut converse_witnesses = 0;
    for h in outcoh::grpcore::all_subgroups(g) {
        let m = permutation_module(g, &h, p);
        let sub = (0..cat.len()).all(|i| cat.occurs_as_submodule(i, &m).unwrap());
        let factor = (0..cat.len()).all(|i| cat.occurs(i, &m, 3).unwrap());
        let p_group = outcoh::grpcore::log_p(h.order(), p).is_some();
        if p_group {
            assert!(sub, "H of order {} in {}", h.order(), g.name());
        }
        if sub {
            assert!(factor);
        }
        if outcoh::grpcore::is_normal(g, &h) {
            assert_eq!(factor, p_group, "normal H of order {}", h.order());
            if !p_group {
                converse_witnesses += 1;
            }
        }
    }
    converse_witnesses
}

#[test]
fn perm_lemma_on_s3() {
    let s3 = dihedral(6).unwrap();
    // normal C3 and S3 itself
    assert_eq!(perm_lemma_chain(&s3, 2), 2);
    assert_eq!(perm_lemma_chain(&s3, 3), 1);
    let c3 = outcoh::grpcore::all_subgroups(&s3)
        .into_iter()
        .find(|h| h.order() == 3)
        .unwrap();
    let cat = IrrCatalog::new(&s3, 2, 1).unwrap();
    let m = permutation_module(&s3, &c3, 2);
    assert_eq!(cat.composition_multiplicities(&m, 1).unwrap(), vec![2, 0]);
}

#[test]
fn perm_lemma_on_gl23() {
    let g = outcoh::dickson::gl_group(2, 3).unwrap();
    assert!(perm_lemma_chain(&g, 2) > 0);
}

#[test]
fn permutation_modules_are_self_dual() {
    for (g, p) in [
        (dihedral(6).unwrap(), 2),
        (dihedral(6).unwrap(), 3),
        (outcoh::dickson::gl_group(2, 2).unwrap(), 2),
        (dihedral(10).unwrap(), 2),
    ] {
        let cat = IrrCatalog::new(&g, p, 1).unwrap();
        for h in outcoh::grpcore::all_subgroups(&g) {
            let m = permutation_module(&g, &h, p);
            let d = dual(&m).unwrap();
            d.validate().unwrap();
            assert_eq!(
                cat.composition_multiplicities(&m, 1).unwrap(),
                cat.composition_multiplicities(&d, 2).unwrap()
            );
        }
    }
}

#[test]
fn chop_is_basis_independent() {
    for (g, p) in [
        (dihedral(6).unwrap(), 2),
        (dihedral(10).unwrap(), 2),
        (dihedral(6).unwrap(), 3),
    ] {
        let cat = IrrCatalog::new(&g, p, 1).unwrap();
        for (k, m) in sample_modules(&g, p).iter().enumerate() {
            let base = cat.composition_multiplicities(m, 1).unwrap();
            for s in 0..3 {
                let c = conjugated(m, 100 * k as u64 + s);
                assert_eq!(cat.composition_multiplicities(&c, s + 7).unwrap(), base);
            }
        }
    }
}

#[test]
fn dihedral_ten_mod_two() {
    // one trivial and one four-dimensional simple with End = F_4
    let g = dihedral(10).unwrap();
    let cat = IrrCatalog::new(&g, 2, 1).unwrap();
    assert_eq!(cat.dims(), vec![1, 4]);
    assert_eq!(cat.endo_dims, vec![1, 2]);
    let reg = regular_module(&g, 2);
    let e = cat.dim_e(&reg, 1).unwrap();
    // [F_2 D10 : S] = 2
    assert_eq!(e, vec![2, 4]);
}

#[test]
fn catalog_rejects_foreign_modules() {
    let s3 = dihedral(6).unwrap();
    let cat = IrrCatalog::new(&s3, 2, 1).unwrap();
    let other = FpRep::trivial(&quaternion(8).unwrap(), 2);
    assert!(cat.composition_multiplicities(&other, 1).is_err());
    let wrong_p = FpRep::trivial(&s3, 3);
    assert!(cat.occurs_as_submodule(0, &wrong_p).is_err());
}
