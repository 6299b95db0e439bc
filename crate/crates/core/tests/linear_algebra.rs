use outcoh::fplin::{fixed_subspace, image_basis, kernel_basis, rank, solve, tensor, FpMatrix};
use outcoh::Error;
use proptest::prelude::*;

fn matrix(p: u32, rows: usize, cols: usize) -> impl Strategy<Value = FpMatrix> {
    prop::collection::vec(0..p, rows * cols)
        .prop_map(move |v| FpMatrix::from_fn(p, rows, cols, |i, j| v[i * cols + j]))
}

fn sized_matrix() -> impl Strategy<Value = FpMatrix> {
    (prop::sample::select(vec![2u32, 3, 5]), 0usize..9, 0usize..9)
        .prop_flat_map(|(p, r, c)| matrix(p, r, c))
}

/// Every vector of F_p^n, as a list of rows.
fn all_vectors(p: u32, n: usize) -> Vec<FpMatrix> {
    let count = (p as usize).pow(n as u32);
    (0..count)
        .map(|mut k| {
            let mut e = vec![0; n];
            for x in e.iter_mut() {
                *x = (k % p as usize) as u32;
                k /= p as usize;
            }
            FpMatrix::row_vector(p, &e)
        })
        .collect()
}

#[test]
fn kernel_of_identity_is_empty() {
    for p in [2, 3, 5] {
        assert_eq!(kernel_basis(&FpMatrix::identity(p, 3)).rows(), 0);
    }
}

#[test]
fn fixed_space_of_identity_is_everything() {
    let f = fixed_subspace(3, 4, &[FpMatrix::identity(3, 4)]).unwrap();
    assert_eq!(f.rows(), 4);
}

#[test]
fn small_kernel_matches_enumeration() {
    // vectors are rows; the kernel of the 2x3 matrix acting on columns is the
    // left kernel of its transpose
    let m = FpMatrix::from_rows(2, 3, &[vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
    let k = kernel_basis(&m.transpose());
    assert_eq!(k.to_rows(), vec![vec![1, 1, 1]]);
    let zero = FpMatrix::zeros(2, 1, 2);
    let brute: Vec<_> = all_vectors(2, 3)
        .into_iter()
        .filter(|v| v.mul(&m.transpose()).unwrap() == zero)
        .collect();
    assert_eq!(brute.len(), 2);
}

#[test]
fn bad_prime_and_shape_errors() {
    assert!(matches!(
        FpMatrix::from_rows(4, 1, &[vec![1]]),
        Err(Error::BadPrime(4))
    ));
    assert!(matches!(
        FpMatrix::from_rows(2, 2, &[vec![1]]),
        Err(Error::Dimension(_))
    ));
    let a = FpMatrix::identity(2, 2);
    let b = FpMatrix::identity(2, 3);
    assert!(matches!(a.mul(&b), Err(Error::Dimension(_))));
    let c = FpMatrix::identity(3, 2);
    assert!(matches!(a.mul(&c), Err(Error::PrimeMismatch(2, 3))));
    assert!(matches!(
        FpMatrix::zeros(3, 2, 2).inverse(),
        Err(Error::Singular)
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in sized_matrix()) {
        prop_assert_eq!(rank(&m) + kernel_basis(&m).rows(), m.rows());
        prop_assert_eq!(rank(&m) + kernel_basis(&m.transpose()).rows(), m.cols());
        prop_assert_eq!(image_basis(&m).rows(), rank(&m));
        let k = kernel_basis(&m);
        if k.rows() > 0 {
            prop_assert!(k.mul(&m).unwrap().is_zero());
        }
    }

    #[test]
    fn rref_is_deterministic_and_spans(m in sized_matrix()) {
        let (r, piv) = m.rref();
        prop_assert_eq!(r.rows(), piv.len());
        for (i, &c) in piv.iter().enumerate() {
            prop_assert_eq!(r.get(i, c), 1);
            for k in 0..r.rows() {
                if k != i {
                    prop_assert_eq!(r.get(k, c), 0);
                }
            }
        }
        let mut perm = m.to_rows();
        perm.reverse();
        let m2 = FpMatrix::from_rows(m.p(), m.cols(), &perm).unwrap();
        prop_assert_eq!(m2.rref().0, r);
    }

    #[test]
    fn solve_against_enumeration(
        (m, y) in (prop::sample::select(vec![2u32, 3]), 1usize..4, 1usize..4)
            .prop_flat_map(|(p, r, c)| (matrix(p, r, c), matrix(p, 1, c)))
    ) {
        let p = m.p();
        let brute = all_vectors(p, m.rows())
            .into_iter()
            .find(|x| x.mul(&m).unwrap() == y);
        match solve(&m, &y) {
            Ok(x) => {
                prop_assert_eq!(x.mul(&m).unwrap(), y);
                prop_assert!(brute.is_some());
            }
            Err(e) => {
                prop_assert!(matches!(e, Error::NoSolution(_)));
                prop_assert!(brute.is_none());
            }
        }
    }

    #[test]
    fn kronecker_mixed_product(
        (a, b, c, d) in (prop::sample::select(vec![2u32, 3, 5]), 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4)
            .prop_flat_map(|(p, i, j, k, l, m, n)| (matrix(p, i, j), matrix(p, k, l), matrix(p, j, m), matrix(p, l, n)))
    ) {
        let lhs = tensor(&a, &b).unwrap().mul(&tensor(&c, &d).unwrap()).unwrap();
        let rhs = tensor(&a.mul(&c).unwrap(), &b.mul(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_round_trip(m in (prop::sample::select(vec![2u32, 3, 5]), 1usize..7).prop_flat_map(|(p, n)| matrix(p, n, n))) {
        match m.inverse() {
            Ok(inv) => prop_assert_eq!(m.mul(&inv).unwrap(), FpMatrix::identity(m.p(), m.rows())),
            Err(_) => prop_assert!(rank(&m) < m.rows()),
        }
    }

    #[test]
    fn fixed_subspace_is_fixed(
        ms in (prop::sample::select(vec![2u32, 3]), 1usize..5)
            .prop_flat_map(|(p, n)| prop::collection::vec(matrix(p, n, n), 1..3))
    ) {
        let n = ms[0].rows();
        let f = fixed_subspace(ms[0].p(), n, &ms).unwrap();
        for m in &ms {
            prop_assert_eq!(f.mul(m).unwrap(), f.clone());
        }
        let brute = all_vectors(ms[0].p(), n)
            .into_iter()
            .filter(|v| ms.iter().all(|m| &v.mul(m).unwrap() == v))
            .count();
        prop_assert_eq!(brute, (ms[0].p() as usize).pow(f.rows() as u32));
    }

    #[test]
    fn text_rows_round_trip(m in sized_matrix()) {
        let mut back = FpMatrix::zeros(m.p(), m.rows(), m.cols());
        for i in 0..m.rows() {
            back.set_row_from_text(i, &m.row_to_text(i)).unwrap();
        }
        prop_assert_eq!(back, m);
    }
}
