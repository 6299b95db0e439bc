mod common;

use std::path::Path;
use std::process::Command;
use std::sync::Arc;

use outcoh::grpcore::grpfile::{read_grp, write_grp};
use outcoh::grpcore::*;
use outcoh::shell::{candidates, identify, make, run, Fingerprint};
use outcoh::Error;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn run_args(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["outcoh"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, g: &FiniteGroup) -> String {
    let path = dir.join(name);
    std::fs::write(&path, write_grp(g)).unwrap();
    path.to_str().unwrap().to_string()
}

/// The same group with its non-identity elements relabeled at random.
fn relabeled(g: &FiniteGroup, seed: u64) -> FiniteGroup {
    let n = g.order();
    let mut perm: Vec<usize> = (1..n).collect();
    perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    perm.insert(0, 0);
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            table[perm[a] * n + perm[b]] = perm[g.mul(a, b)] as u32;
        }
    }
    let gens = g.generators().iter().map(|&x| perm[x]).collect();
    FiniteGroup::from_table(table, gens, format!("{}'", g.name())).unwrap()
}

fn order_eight_catalog(dir: &Path) {
    for spec in [
        "cyclic:8",
        "product:cyclic:4,cyclic:2",
        "elab:3",
        "dihedral:8",
        "q8",
    ] {
        let g = make(spec).unwrap();
        let name = spec.replace([':', ','], "_");
        write(dir, &format!("{name}.grp"), &g);
    }
}

#[test]
fn constructor_specs() {
    let q8 = make("q8").unwrap();
    assert_eq!(q8.order(), 8);
    assert_eq!(center(&q8).order(), 2);
    let k = make("product:elab:2,q8").unwrap();
    assert_eq!(k.order(), 32);
    assert!(is_p_central(&k, 2));
    assert_eq!(maximal_central_elementary(&k, 2).order(), 8);
    let e = make("elab:3").unwrap();
    assert_eq!(e.order(), 8);
    assert!(is_elementary_abelian(&e, &Subgroup::whole(&e), 2));
    assert_eq!(make("elab:2:3").unwrap().order(), 9);
    assert_eq!(make("su3:2").unwrap().order(), 64);
    assert_eq!(
        make("product:(product:q8,cyclic:2),cyclic:4")
            .unwrap()
            .order(),
        64
    );
    assert_eq!(make("dihedral:8").unwrap().order(), 8);
    assert_eq!(make("quaternion:16").unwrap().order(), 16);
    for bad in [
        "bogus",
        "cyclic:x",
        "product:q8",
        "product:(q8,cyclic:2",
        "cyclic",
    ] {
        assert!(matches!(make(bad), Err(Error::Parse { .. })), "{bad}");
    }
    assert!(matches!(
        make("product:su3:2,su3:2"),
        Err(Error::TooLarge { .. })
    ));
}

#[test]
fn fingerprints_are_isomorphism_invariant() {
    for g in [
        make("q8").unwrap(),
        make("dihedral:16").unwrap(),
        common::group_64_108(),
        make("su3:2").unwrap(),
    ] {
        let a = Fingerprint::with_aut(&g, 2, 1 << 30).unwrap();
        for seed in 0..2 {
            let h = Arc::new(relabeled(&g, seed));
            let b = Fingerprint::with_aut(&h, 2, 1 << 30).unwrap();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn identify_in_small_catalogs() {
    let dir = tempfile::tempdir().unwrap();
    order_eight_catalog(dir.path());
    let q = Arc::new(relabeled(&make("q8").unwrap(), 5));
    let fp = Fingerprint::of(&q, 2).unwrap();
    let found = identify(dir.path(), &fp, 2, 1 << 20).unwrap();
    assert_eq!(found.file_name().unwrap(), "q8.grp");

    let empty = tempfile::tempdir().unwrap();
    assert!(matches!(
        identify(empty.path(), &fp, 2, 1 << 20),
        Err(Error::NoMatch(_))
    ));

    write(
        dir.path(),
        "q8_copy.grp",
        &relabeled(&make("q8").unwrap(), 9),
    );
    match identify(dir.path(), &fp, 2, 1 << 20) {
        Err(Error::AmbiguousMatch(v)) => assert_eq!(v.len(), 2),
        other => panic!("{other:?}"),
    }
}

#[test]
fn identify_the_order_768_out_group() {
    let dir = tempfile::tempdir().unwrap();
    for (name, spec) in [
        ("a", "su3:2"),
        ("b", "product:q8,q8"),
        ("c", "product:elab:2,q8,cyclic:2"),
        ("d", "product:cyclic:4,q8,cyclic:2"),
    ] {
        write(dir.path(), &format!("{name}.grp"), &make(spec).unwrap());
    }
    write(dir.path(), "e.grp", &relabeled(&common::group_64_108(), 3));
    let fp = Fingerprint::with_aut(&common::group_64_108(), 2, 1 << 30).unwrap();
    assert_eq!(fp.out_order, Some(768));
    assert_eq!(fp.quillen_ranks, vec![2, 3]);
    let found = candidates(dir.path(), &fp, 2, 1 << 30).unwrap();
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].file_name().unwrap(), "e.grp");
}

#[test]
fn cli_make_dims_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let q8 = dir.path().join("q8.grp");
    let q8s = q8.to_str().unwrap();
    let (code, out, _) = run_args(&["make", "q8", "-o", q8s]);
    assert_eq!(code, 0);
    assert!(out.contains("order 8"));
    assert_eq!(read_grp(&q8).unwrap().order(), 8);

    let (code, out, _) = run_args(&["dims", q8s, "--degree", "7"]);
    assert_eq!((code, out.as_str()), (0, "1,2,2,1,1,2,2,1\n"));
    let (code, out, _) = run_args(&["dims", q8s, "--degree", "3", "--format", "tsv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.split('\t').count() == 5));

    let (code, out, _) = run_args(&[
        "analyze", q8s, "--prime", "2", "--dmax", "6", "--cutoff", "10",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("|Out| = 6"));
    assert!(out.contains("M^d(V0) d=0..6: 1,2,2,1,0,0,0"));
    let (code, out, _) = run_args(&["analyze", q8s, "--dmax", "6", "--format", "tsv"]);
    assert_eq!(code, 0);
    assert!(out.contains("q8\t-\t|Out|\t6\t"));
    assert!(out.lines().all(|l| l.split('\t').count() == 5));
}

#[test]
fn cli_check_table_on_group_64_108() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "64_108.grp", &common::group_64_108());
    let (code, out, _) = run_args(&[
        "check", "A", &f, "--prime", "2", "--dmax", "8", "--cutoff", "12", "--format", "tsv",
    ]);
    assert_eq!(code, 0);
    let rows: Vec<Vec<&str>> = out.lines().map(|l| l.split('\t').collect()).collect();
    assert!(rows.iter().all(|r| r.len() == 5));
    let cell = |d: &str, irr: &str| {
        rows.iter()
            .find(|r| r[1] == d && r[2] == irr)
            .map(|r| r[3])
            .unwrap()
    };
    let e1: Vec<&str> = (0..8).map(|d| cell(&d.to_string(), "1")).collect();
    assert_eq!(e1, ["3", "2", "2", "3", "2", "2", "2", "2"]);
    let es: Vec<&str> = (0..8).map(|d| cell(&d.to_string(), "S1[2]")).collect();
    assert_eq!(es, ["-", "3", "3", "2", "2", "2", "2", "-"]);
    assert_eq!(rows.last().unwrap()[4], "holds");
    assert!(rows.iter().all(|r| r[0] == "A:64_108"));
}

#[test]
fn cli_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let g2 = write(dir.path(), "g2.grp", &make("su3:2").unwrap());
    let q8 = write(dir.path(), "q8.grp", &make("q8").unwrap());
    let d8 = write(dir.path(), "d8.grp", &make("dihedral:8").unwrap());
    assert_eq!(run_args(&["check", "C", &q8, "--dmax", "8"]).0, 0);
    assert_eq!(
        run_args(&["check", "c", &g2, "--dmax", "8", "--cutoff", "8"]).0,
        2
    );
    let (code, _, err) = run_args(&["check", "C", &d8]);
    assert_eq!(code, 3);
    assert!(err.contains("not 2-central"));
    assert_eq!(run_args(&["make", "bogus", "-o", "x.grp"]).0, 3);
    assert_eq!(
        run_args(&["dims", "/nonexistent.grp", "--degree", "2"]).0,
        3
    );
    assert_eq!(run_args(&["frobnicate"]).0, 3);
    assert_eq!(run_args(&["--help"]).0, 0);
    assert_eq!(run_args(&["analyze", &g2, "--budget-nodes", "5"]).0, 4);
    assert_eq!(
        run_args(&["dims", &g2, "--degree", "8", "--budget-dim", "100"]).0,
        4
    );
    let bad = dir.path().join("bad.grp");
    std::fs::write(&bad, "order 2\ngenerators 1\n0 1\n1 x\n").unwrap();
    let (code, _, err) = run_args(&["dims", bad.to_str().unwrap(), "--degree", "1"]);
    assert_eq!(code, 3);
    assert!(err.contains("line 4, column 3"));
}

#[test]
fn cli_census_and_identify() {
    let dir = tempfile::tempdir().unwrap();
    order_eight_catalog(dir.path());
    let (code, out, _) = run_args(&["census", dir.path().to_str().unwrap(), "--format", "tsv"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.split('\t').count() == 5));
    assert!(out.contains("census:q8"));
    let probe = tempfile::tempdir().unwrap();
    let p = write(
        probe.path(),
        "probe.grp",
        &relabeled(&make("q8").unwrap(), 1),
    );
    let (code, out, _) = run_args(&[
        "identify",
        dir.path().to_str().unwrap(),
        "--fingerprint-of",
        &p,
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("q8.grp"));
    let other = tempfile::tempdir().unwrap();
    let z = write(other.path(), "z.grp", &make("cyclic:8").unwrap());
    let (code, _, err) = run_args(&[
        "identify",
        probe.path().to_str().unwrap(),
        "--fingerprint-of",
        &z,
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("no catalog entry matches"));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k.grp", &make("product:q8,cyclic:2").unwrap());
    for args in [
        vec!["analyze", f.as_str(), "--dmax", "6", "--cutoff", "8"],
        vec!["check", "B", f.as_str(), "--dmax", "6", "--format", "tsv"],
        vec!["check", "C", f.as_str(), "--dmax", "6", "--seed", "9"],
    ] {
        let a = run_args(&args);
        let b = run_args(&args);
        assert_eq!(a, b);
    }
}

#[test]
fn cache_hits_match_cold_runs() {
    let dir = tempfile::tempdir().unwrap();
    let cache = tempfile::tempdir().unwrap();
    let c = cache.path().to_str().unwrap();
    let f = write(dir.path(), "q8.grp", &make("q8").unwrap());
    let cold = run_args(&["analyze", &f, "--dmax", "6", "--cutoff", "9"]);
    let first = run_args(&["analyze", &f, "--dmax", "6", "--cutoff", "9", "--cache", c]);
    assert!(std::fs::read_dir(cache.path()).unwrap().count() > 0);
    let hit = run_args(&["analyze", &f, "--dmax", "6", "--cutoff", "9", "--cache", c]);
    assert_eq!(cold, first);
    assert_eq!(cold, hit);
    let d_cold = run_args(&["dims", &f, "--degree", "9"]);
    let d_hit = run_args(&["dims", &f, "--degree", "9", "--cache", c]);
    assert_eq!(d_cold, d_hit);
    // a shorter request is served from the longer cached resolution
    let d_short = run_args(&["dims", &f, "--degree", "4", "--cache", c]);
    assert_eq!(d_short.1, "1,2,2,1,1\n");
}

#[test]
fn binary_reports_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_outcoh");
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("q8.grp");
    let s = Command::new(exe)
        .args(["make", "q8", "-o", out.to_str().unwrap()])
        .status()
        .unwrap();
    assert_eq!(s.code(), Some(0));
    let o = Command::new(exe)
        .args(["dims", out.to_str().unwrap(), "--degree", "3"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "1,2,2,1\n");
    let s = Command::new(exe)
        .args(["make", "nope", "-o", "x"])
        .status()
        .unwrap();
    assert_eq!(s.code(), Some(3));
}
