use outcoh::autom::AutGroup;
use outcoh::grpcore::constructors::*;
use outcoh::grpcore::grpfile::{parse_grp, write_grp};
use outcoh::grpcore::*;

/// Every automorphism found by trying all images of the given generators
/// and checking the homomorphism law on all pairs.
fn brute_force_aut_order(g: &FiniteGroup) -> usize {
    let n = g.order();
    let gens = g.generators().to_vec();
    let tree = g.spanning_tree();
    let order = g.bfs_order();
    let mut count = 0;
    let mut tuple = vec![0usize; gens.len()];
    loop {
        let mut map = vec![0usize; n];
        for &x in order.iter().skip(1) {
            let (pred, k) = tree[x];
            map[x] = g.mul(map[pred], tuple[k]);
        }
        let mut ok = true;
        'outer: for a in 0..n {
            for b in 0..n {
                if map[g.mul(a, b)] != g.mul(map[a], map[b]) {
                    ok = false;
                    break 'outer;
                }
            }
        }
        if ok {
            let mut seen = vec![false; n];
            for &y in &map {
                seen[y] = true;
            }
            if seen.iter().all(|&s| s) {
                count += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == tuple.len() {
                return count;
            }
            tuple[i] += 1;
            if tuple[i] < n {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn aut_matches_brute_force() {
    let groups = vec![
        quaternion(8).unwrap(),
        dihedral(8).unwrap(),
        cyclic(8).unwrap(),
        elementary_abelian(3, 2).unwrap(),
        elementary_abelian(2, 3).unwrap(),
        product(&[cyclic(4).unwrap(), cyclic(2).unwrap()]).unwrap(),
        product(&[quaternion(8).unwrap(), cyclic(2).unwrap()]).unwrap(),
        heisenberg(3).unwrap(),
        dihedral(6).unwrap(),
        quaternion(16).unwrap(),
    ];
    for g in groups {
        let a = AutGroup::new(&g).unwrap();
        assert_eq!(a.order(), brute_force_aut_order(&g), "{}", g.name());
        let z = center(&g);
        assert_eq!(a.inner.len() * z.order(), g.order());
        assert_eq!(a.out_order() * a.inner.len(), a.order());
    }
}

#[test]
fn aut_q8() {
    let q8 = quaternion(8).unwrap();
    let a = AutGroup::new(&q8).unwrap();
    assert_eq!(a.order(), 24);
    assert_eq!(a.inner.len(), 4);
    assert_eq!(a.out_order(), 6);
    assert!(!a.out.is_abelian());
}

#[test]
fn aut_composition_is_a_group_law() {
    let g = product(&[quaternion(8).unwrap(), cyclic(2).unwrap()]).unwrap();
    let a = AutGroup::new(&g).unwrap();
    for x in [0, 3, 7, 11] {
        for y in [1, 5, 9] {
            let c = a.compose(x, y);
            for e in 0..g.order() {
                assert_eq!(a.apply(c, e), a.apply(x, a.apply(y, e)));
            }
            assert_eq!(a.compose(x, a.inverse(x)), 0);
        }
    }
}

#[test]
fn structure_of_small_groups() {
    let q8 = quaternion(8).unwrap();
    assert_eq!(center(&q8).order(), 2);
    assert_eq!(commutator_subgroup(&q8).order(), 2);
    assert_eq!(frattini(&q8, 2).order(), 2);
    assert_eq!(omega1(&q8, 2).order(), 2);
    assert_eq!(q8.exponent(), 4);
    let d8 = dihedral(8).unwrap();
    assert_eq!(omega1(&d8, 2).order(), 8);
    assert!(is_p_central(&q8, 2));
    assert!(!is_p_central(&d8, 2));
    let z = center(&q8);
    let (qq, proj) = quotient(&q8, &z).unwrap();
    assert_eq!(qq.order(), 4);
    assert!(qq.is_abelian());
    assert_eq!(proj.kernel(), z);
    assert!(is_decomposable(
        &product(&[q8.clone(), cyclic(2).unwrap()]).unwrap()
    ));
    assert!(!is_decomposable(&q8));
    assert!(!is_decomposable(&cyclic(8).unwrap()));
}

#[test]
fn quillen_enumeration_agrees_with_all_subgroups() {
    for g in [
        dihedral(8).unwrap(),
        product(&[dihedral(8).unwrap(), cyclic(2).unwrap()]).unwrap(),
        quaternion(8).unwrap(),
    ] {
        let qd = QuillenData::for_group(&g, 2).unwrap();
        let brute: Vec<Subgroup> = all_subgroups(&g)
            .into_iter()
            .filter(|s| is_elementary_abelian(&g, s, 2) && qd.c.is_subset_of(s))
            .collect();
        assert_eq!(qd.objects.len(), brute.len());
        for s in &brute {
            assert!(qd.index_of(s).is_some());
        }
    }
    let d8 = dihedral(8).unwrap();
    let qd = QuillenData::for_group(&d8, 2).unwrap();
    assert_eq!(qd.objects.len(), 3);
    assert_eq!(qd.rk, 2);
    assert_eq!(qd.maximal.len(), 2);
}

#[test]
fn grp_file_round_trip_and_errors() {
    let g = product(&[cyclic(4).unwrap(), cyclic(2).unwrap()]).unwrap();
    let text = write_grp(&g);
    let h = parse_grp(&text, "x").unwrap();
    assert_eq!(h.table(), g.table());
    let bad = "order 2\ngenerators 1\n0 1\n1 1\n";
    assert!(parse_grp(bad, "bad").is_err());
    let bad = "order 2\ngenerators 1\n0 1\n1 x\n";
    match parse_grp(bad, "bad") {
        Err(outcoh::Error::Parse { line, col, .. }) => assert_eq!((line, col), (4, 3)),
        other => panic!("{other:?}"),
    }
    let noid = "order 2\ngenerators 0\n1 0\n0 1\n";
    assert!(matches!(
        parse_grp(noid, "bad"),
        Err(outcoh::Error::Parse { .. })
    ));
}

fn sample_two_groups() -> Vec<GroupRef> {
    vec![
        cyclic(2).unwrap(),
        cyclic(4).unwrap(),
        quaternion(8).unwrap(),
        dihedral(8).unwrap(),
        elementary_abelian(3, 2).unwrap(),
        product(&[cyclic(4).unwrap(), cyclic(2).unwrap()]).unwrap(),
        product(&[quaternion(8).unwrap(), cyclic(2).unwrap()]).unwrap(),
        product(&[dihedral(8).unwrap(), cyclic(2).unwrap()]).unwrap(),
        quaternion(16).unwrap(),
        dihedral(16).unwrap(),
        outcoh::conjcheck::su3_sylow(1).unwrap(),
    ]
}

#[test]
fn group_axioms_hold_exhaustively() {
    let mut groups = sample_two_groups();
    groups.push(heisenberg(3).unwrap());
    groups.push(dihedral(10).unwrap());
    groups.push(product(&[quaternion(8).unwrap(), quaternion(8).unwrap()]).unwrap());
    groups.push(outcoh::conjcheck::su3_sylow(2).unwrap());
    for g in groups {
        let n = g.order();
        for a in 0..n {
            assert_eq!(g.mul(0, a), a);
            assert_eq!(g.mul(a, 0), a);
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..n {
                let ab = g.mul(a, b);
                for c in 0..n {
                    assert_eq!(g.mul(ab, c), g.mul(a, g.mul(b, c)));
                }
            }
        }
        assert_eq!(g.closure(g.generators()).len(), n, "{}", g.name());
    }
}

#[test]
fn product_examples() {
    let v4 = product(&[cyclic(2).unwrap(), cyclic(2).unwrap()]).unwrap();
    assert_eq!(v4.order(), 4);
    assert!(is_elementary_abelian(&v4, &Subgroup::whole(&v4), 2));
    let k = product(&[elementary_abelian(2, 2).unwrap(), quaternion(8).unwrap()]).unwrap();
    assert_eq!(k.order(), 32);
    assert!(is_p_central(&k, 2));
    assert_eq!(maximal_central_elementary(&k, 2).order(), 8);
    let q8 = quaternion(8).unwrap();
    let same = product(&[q8.clone(), cyclic(1).unwrap()]).unwrap();
    assert_eq!(same.order(), 8);
    assert_eq!(AutGroup::new(&same).unwrap().order(), 24);
    let big = product(&[q8.clone(), q8.clone(), q8.clone(), cyclic(2).unwrap()]);
    assert!(matches!(big, Err(outcoh::Error::TooLarge { .. })));
}

#[test]
fn p_central_agrees_with_omega_in_center() {
    for g in sample_two_groups() {
        let om = omega1(&g, 2);
        let z = center(&g);
        assert_eq!(is_p_central(&g, 2), om.is_subset_of(&z), "{}", g.name());
        let qd = QuillenData::for_group(&g, 2).unwrap();
        assert!(qd.c_rank <= qd.mrk && qd.mrk <= qd.rk, "{}", g.name());
        assert_eq!(is_p_central(&g, 2), qd.c_rank == qd.rk);
    }
}

/// Automorphisms acting trivially on the quotient by `n`, restricted to a list.
fn trivial_on_quotient(a: &AutGroup, autos: &[usize], n: &Subgroup) -> usize {
    let g = &a.group;
    autos
        .iter()
        .filter(|&&x| (0..g.order()).all(|e| n.contains(g.mul(a.apply(x, e), g.inv(e)))))
        .count()
}

#[test]
fn frattini_kernel_is_a_p_group() {
    for g in sample_two_groups() {
        let a = AutGroup::new(&g).unwrap();
        let all: Vec<usize> = (0..a.order()).collect();
        let k = trivial_on_quotient(&a, &all, &frattini(&g, 2));
        assert!(log_p(k, 2).is_some(), "{}: {k}", g.name());
    }
    let h = heisenberg(3).unwrap();
    let a = AutGroup::new(&h).unwrap();
    let all: Vec<usize> = (0..a.order()).collect();
    assert!(log_p(trivial_on_quotient(&a, &all, &frattini(&h, 3)), 3).is_some());
}

#[test]
fn centralizer_kernel_is_a_p_group() {
    for g in sample_two_groups() {
        let a = AutGroup::new(&g).unwrap();
        let qd = QuillenData::for_group(&g, 2).unwrap();
        for v in &qd.objects {
            let st = a.stabilizers(v).unwrap();
            let cent = centralizer(&g, v.elements());
            let k = st
                .aut_pv
                .iter()
                .filter(|&&x| cent.elements().iter().all(|&e| a.apply(x, e) == e))
                .count();
            assert!(
                log_p(k, 2).is_some(),
                "{} V of order {}",
                g.name(),
                v.order()
            );
        }
    }
}

#[test]
fn omega_kernel_is_a_p_group_for_odd_p() {
    for g in [
        heisenberg(3).unwrap(),
        cyclic(9).unwrap(),
        product(&[cyclic(9).unwrap(), cyclic(3).unwrap()]).unwrap(),
        product(&[cyclic(9).unwrap(), cyclic(9).unwrap()]).unwrap(),
        elementary_abelian(2, 3).unwrap(),
        heisenberg(5).unwrap(),
    ] {
        let p = if g.order() % 5 == 0 { 5 } else { 3 };
        let a = AutGroup::new(&g).unwrap();
        let om = omega1(&g, p);
        let k = (0..a.order())
            .filter(|&x| om.elements().iter().all(|&e| a.apply(x, e) == e))
            .count();
        assert!(log_p(k, p).is_some(), "{}: {k}", g.name());
    }
}

#[test]
fn self_centralizing_objects_have_trivial_out0() {
    for g in sample_two_groups() {
        let qd = QuillenData::for_group(&g, 2).unwrap();
        let all_self_centralizing = qd
            .maximal
            .iter()
            .all(|&i| centralizer(&g, qd.objects[i].elements()) == qd.objects[i]);
        if !all_self_centralizing {
            continue;
        }
        for &i in &qd.maximal {
            let v = &qd.objects[i];
            let (vg, _) = v.to_group(&g, "V").unwrap();
            let out0 = AutGroup::new(&vg)
                .unwrap()
                .stabilizers(&Subgroup::whole(&vg))
                .unwrap()
                .out0_pv
                .order();
            assert_eq!(out0, 1);
        }
    }
}

#[test]
fn odd_p_criterion_on_abelian_groups() {
    for g in [
        cyclic(9).unwrap(),
        product(&[cyclic(9).unwrap(), cyclic(3).unwrap()]).unwrap(),
        product(&[cyclic(9).unwrap(), cyclic(9).unwrap()]).unwrap(),
        elementary_abelian(2, 3).unwrap(),
        product(&[cyclic(27).unwrap(), cyclic(3).unwrap()]).unwrap(),
    ] {
        let c = outcoh::autom::odd_p_pgroup_criterion(&g, 3, &omega1(&g, 3)).unwrap();
        assert!(c.is_p_group && c.centralizer_is_p_group, "{}", g.name());
    }
    let q8 = quaternion(8).unwrap();
    let c =
        outcoh::autom::odd_p_pgroup_criterion(&q8, 2, &maximal_central_elementary(&q8, 2)).unwrap();
    assert_eq!(c.out0, 6);
    assert!(!c.is_p_group);
    let d8 = dihedral(8).unwrap();
    assert!(outcoh::autom::odd_p_pgroup_criterion(&d8, 2, &center(&d8)).is_err());
}

#[test]
fn inner_automorphisms_match_the_center() {
    let g = product(&[dihedral(8).unwrap(), cyclic(2).unwrap()]).unwrap();
    let a = AutGroup::new(&g).unwrap();
    assert_eq!(a.inner.len(), g.order() / center(&g).order());
    for x in 0..g.order() {
        let i = a.inner_of(x);
        assert!(a.is_inner(i));
        for e in 0..g.order() {
            assert_eq!(a.apply(i, e), g.conj(x, e));
        }
    }
    let closed = a.closure(&a.generators());
    assert_eq!(closed.len(), a.order());
}

#[test]
fn node_budget_is_reported() {
    let g = product(&[quaternion(8).unwrap(), quaternion(8).unwrap()]).unwrap();
    assert!(matches!(
        AutGroup::with_budget(&g, 10),
        Err(outcoh::Error::NodeBudget(10))
    ));
}
