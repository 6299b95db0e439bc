use outcoh::dickson::*;
use outcoh::fplin::{fixed_subspace, FpMatrix};
use outcoh::modrep::IrrCatalog;

/// Every `k x r` matrix of rank `k` over F_p, for `k < r`.
fn proper_embeddings(r: usize, p: u32) -> Vec<FpMatrix> {
    let mut out = Vec::new();
    for k in 1..r {
        let total = (p as usize).pow((k * r) as u32);
        for code in 0..total {
            let m = FpMatrix::from_fn(p, k, r, |i, j| {
                ((code / (p as usize).pow((i * r + j) as u32)) % p as usize) as u32
            });
            if m.rank() == k {
                out.push(m);
            }
        }
    }
    out
}

#[test]
fn top_class_restricts_to_zero_on_proper_subspaces() {
    for (r, p) in [(1, 2), (2, 2), (3, 2), (2, 3)] {
        let c = top_dickson(r, p).unwrap();
        assert_eq!(c.degree(), Some((p as usize).pow(r as u32) - 1));
        let embeddings = proper_embeddings(r, p);
        if r == 2 && p == 2 {
            // the three lines, each from its nonzero vector
            assert_eq!(embeddings.len(), 3);
        }
        for eta in &embeddings {
            assert!(restrict_along(&c, eta).unwrap().is_zero());
        }
        let id = FpMatrix::identity(p, r);
        assert_eq!(restrict_along(&c, &id).unwrap(), c);
    }
}

#[test]
fn degree_two_invariant_on_lines() {
    let gens = dickson_generators(2, 2).unwrap();
    let c21 = &gens[0];
    assert_eq!(c21.degree(), Some(2));
    let y2 = MPoly::var(2, 1, 0).pow(2);
    for u in [vec![1, 0], vec![0, 1], vec![1, 1]] {
        let eta = FpMatrix::from_rows(2, 2, &[u]).unwrap();
        let f = restrict_along(c21, &eta).unwrap();
        assert!(!f.is_zero());
        assert_eq!(f, y2);
    }
}

#[test]
fn generators_are_invariant_with_expected_degrees() {
    for (r, p) in [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)] {
        let gens = dickson_generators(r, p).unwrap();
        let q = (p as usize).pow(r as u32);
        for (i, f) in gens.iter().enumerate() {
            assert_eq!(f.degree(), Some(q - (p as usize).pow((r - i - 1) as u32)));
            assert!(f.is_homogeneous());
            for g in gl_matrices(r, p).unwrap() {
                assert_eq!(&f.act(&g).unwrap(), f);
            }
        }
        // top generator is the product of all nonzero linear forms, up to sign
        let top = top_dickson(r, p).unwrap();
        let last = gens.last().unwrap();
        assert!(*last == top || last.scale(p - 1) == top);
    }
}

#[test]
fn invariant_dimensions_match_the_polynomial_algebra() {
    for (r, p) in [(1, 2), (2, 2), (3, 2), (2, 3)] {
        let (group, mats) = gl_group_with_matrices(r, p).unwrap();
        let degs: Vec<usize> = dickson_generators(r, p)
            .unwrap()
            .iter()
            .map(|f| f.degree().unwrap())
            .collect();
        let top = *degs.last().unwrap();
        for n in 0..=top + 1 {
            let gens: Vec<FpMatrix> = group
                .generators()
                .iter()
                .map(|&g| graded_action(&mats[g], n).unwrap())
                .collect();
            let dim = monomials(r, n).len();
            let fixed = fixed_subspace(p, dim, &gens).unwrap();
            assert_eq!(
                fixed.rows(),
                monomial_count(&degs, n),
                "r = {r}, p = {p}, degree {n}"
            );
        }
    }
}

#[test]
fn graded_modules_are_modules() {
    let (group, mats) = gl_group_with_matrices(2, 3).unwrap();
    for n in 0..5 {
        graded_module(&group, &mats, n).unwrap().validate().unwrap();
    }
}

#[test]
fn every_simple_module_embeds_in_the_symmetric_algebra() {
    for (r, p, window) in [(2, 2, 8), (3, 2, 12), (2, 3, 12)] {
        let (group, mats) = gl_group_with_matrices(r, p).unwrap();
        let cat = IrrCatalog::new(&group, p, 1).unwrap();
        let mut found = vec![None; cat.len()];
        for n in 0..=window {
            if found.iter().all(Option::is_some) {
                break;
            }
            let m = graded_module(&group, &mats, n).unwrap();
            for (i, f) in found.iter_mut().enumerate() {
                if f.is_none() && cat.occurs_as_submodule(i, &m).unwrap() {
                    *f = Some(n);
                }
            }
        }
        assert!(
            found.iter().all(Option::is_some),
            "GL({r},{p}) dims {:?} first degrees {found:?}",
            cat.dims()
        );
    }
}

#[test]
fn size_limits_and_bad_embeddings() {
    assert!(dickson_generators(4, 5).is_err());
    assert!(top_dickson(0, 2).is_err());
    let c = top_dickson(2, 2).unwrap();
    let singular = FpMatrix::from_rows(2, 2, &[vec![1, 1], vec![1, 1]]).unwrap();
    assert!(restrict_along(&c, &singular).is_err());
    let wide = FpMatrix::identity(2, 3);
    assert!(restrict_along(&c, &wide).is_err());
}
