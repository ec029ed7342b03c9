mod common;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use panelweb::intlinalg::{smith_normal_form, AbelianInvariants, IntMatrix};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(m, n)| prop::collection::vec(prop::collection::vec(-30i64..=30, n), m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn decomposition_is_valid(rows in matrix()) {
        let a = IntMatrix::from_rows(&rows).unwrap();
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert!(s.u.determinant().abs().is_one());
        prop_assert!(s.v.determinant().abs().is_one());
        let f = s.invariant_factors();
        prop_assert_eq!(f.len(), s.rank);
        prop_assert!(f.iter().all(|x| x.is_positive()));
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert_eq!(f, common::invariant_factors_by_minors(&rows));
    }

    #[test]
    fn unimodular_change_keeps_factors(rows in matrix(), k in 0usize..6, c in -5i64..=5) {
        let a = IntMatrix::from_rows(&rows).unwrap();
        // Add c times row k to another row.
        let m = rows.len();
        let mut e = IntMatrix::identity(m);
        if m > 1 {
            let (i, j) = (k % m, (k + 1) % m);
            e.set(j, i, BigInt::from(c));
        }
        let b = e.mul(&a);
        prop_assert_eq!(smith_normal_form(&a).invariant_factors(), smith_normal_form(&b).invariant_factors());
        prop_assert_eq!(AbelianInvariants::from_relation_matrix(&a), AbelianInvariants::from_relation_matrix(&b));
    }
}

#[test]
fn zero_and_empty_like_inputs() {
    let z = IntMatrix::from_rows(&[vec![0i64, 0], vec![0, 0]]).unwrap();
    let s = smith_normal_form(&z);
    assert_eq!(s.rank, 0);
    assert!(s.invariant_factors().is_empty());
    let one = IntMatrix::from_rows(&[vec![-7i64]]).unwrap();
    assert_eq!(smith_normal_form(&one).invariant_factors(), vec![BigInt::from(7)]);
}
