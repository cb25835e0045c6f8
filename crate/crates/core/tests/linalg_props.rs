mod common;

use common::matrix;
use proptest::prelude::*;
use reclift::Mat;

/// Rank by brute-force elimination on a copy, independent of `Mat::rref`.
fn oracle_rank(m: &Mat) -> usize {
    let f = m.field();
    let mut rows = m.to_rows();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = f.inv(rows[rank][c]);
        let pivot_row: Vec<u32> = rows[rank].iter().map(|&x| f.mul(x, inv)).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let s = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(s, y));
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_nullity(m in matrix(6, 6)) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn rank_matches_oracle(m in matrix(6, 6)) {
        prop_assert_eq!(m.rank(), oracle_rank(&m));
    }

    #[test]
    fn rref_is_idempotent(m in matrix(5, 7)) {
        let (r, _) = m.rref();
        prop_assert_eq!(r.rref().0, r);
    }

    #[test]
    fn solve_is_exact(a in matrix(5, 5), seed in any::<u64>()) {
        let f = a.field();
        let p = f.modulus() as u64;
        let b: Vec<u32> = (0..a.rows()).map(|i| ((seed >> (i % 60)) % p) as u32).collect();
        let b = Mat::column(f, &b);
        match a.solve(&b).unwrap() {
            Some(x) => prop_assert_eq!(a.mul(&x), b),
            None => {
                let ab = Mat::hstack(f, a.rows(), &[&a, &b]).unwrap();
                prop_assert!(ab.rank() > a.rank());
            }
        }
    }

    #[test]
    fn transpose_preserves_rank(m in matrix(6, 4)) {
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn kron_rank_is_multiplicative(a in matrix(3, 3), b in matrix(3, 3)) {
        prop_assume!(a.field() == b.field());
        prop_assert_eq!(Mat::kron(&a, &b).rank(), a.rank() * b.rank());
    }

    #[test]
    fn vec_of_product(a in matrix(3, 3), seed in any::<u64>()) {
        // vec(A X) = (1 ⊗ A) vec(X)
        let f = a.field();
        let p = f.modulus() as u64;
        let data: Vec<u32> = (0..a.cols() * 2).map(|i| ((seed >> (i % 60)) % p) as u32).collect();
        let x = Mat::from_vec(f, a.cols(), 2, data);
        let lhs = a.mul(&x).vec_col();
        let rhs = Mat::kron(&Mat::identity(f, 2), &a).mul_vec(&x.vec_col());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn inverse_round_trip_small() {
    let f = common::gf(5);
    let m = Mat::from_rows(f, &[vec![1, 2], vec![3, 4]]).unwrap();
    let inv = m.inverse().unwrap();
    assert_eq!(m.mul(&inv), Mat::identity(f, 2));
    // det = -2 = 3 mod 5, inverse = 3^{-1} [[4, -2], [-3, 1]] = 2 [[4, 3], [2, 1]]
    assert_eq!(inv, Mat::from_rows(f, &[vec![3, 1], vec![4, 2]]).unwrap());
}
