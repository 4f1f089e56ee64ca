use gspline::basis::{bareiss_determinant, cofactor_determinant, SplineMatrix};
use gspline::ring::{GcdDomain, IntPoly, Integer};
use proptest::prelude::*;

fn int_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<Integer>>> {
    prop::collection::vec(prop::collection::vec((-50i64..50).prop_map(Integer::from), n), n)
}

fn poly_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<IntPoly>>> {
    let entry = prop::collection::vec(-4i64..=4, 0..3).prop_map(|c| IntPoly::from_i64s(&c));
    prop::collection::vec(prop::collection::vec(entry, n), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bareiss_matches_cofactor_int_4(m in int_matrix(4)) {
        prop_assert_eq!(bareiss_determinant(&m), cofactor_determinant(&m));
    }

    #[test]
    fn bareiss_matches_cofactor_int_5(m in int_matrix(5)) {
        prop_assert_eq!(bareiss_determinant(&m), cofactor_determinant(&m));
    }

    #[test]
    fn bareiss_matches_cofactor_poly_4(m in poly_matrix(4)) {
        prop_assert_eq!(bareiss_determinant(&m), cofactor_determinant(&m));
    }

    #[test]
    fn bareiss_matches_cofactor_poly_5(m in poly_matrix(5)) {
        prop_assert_eq!(bareiss_determinant(&m), cofactor_determinant(&m));
    }

    #[test]
    fn row_swap_negates(m in int_matrix(5)) {
        let mut swapped = m.clone();
        swapped.swap(0, 3);
        prop_assert_eq!(bareiss_determinant(&swapped), bareiss_determinant(&m).neg());
    }
}

#[test]
fn triangular_and_identity() {
    let z = Integer::from;
    let cols = vec![
        vec![z(1), z(1), z(1), z(1), z(1)],
        vec![z(0), z(2), z(5), z(7), z(1)],
        vec![z(0), z(0), z(3), z(9), z(4)],
        vec![z(0), z(0), z(0), z(5), z(6)],
        vec![z(0), z(0), z(0), z(0), z(7)],
    ];
    let m = SplineMatrix::from_columns(&cols).unwrap();
    assert_eq!(m.determinant().canonical(), z(210));
    assert_eq!(m.size(), 5);
    let id: Vec<Vec<IntPoly>> = (0..6)
        .map(|i| (0..6).map(|j| if i == j { IntPoly::one() } else { IntPoly::zero() }).collect())
        .collect();
    assert_eq!(bareiss_determinant(&id), IntPoly::one());
    assert!(SplineMatrix::<Integer>::from_columns(&[vec![z(1)], vec![z(1), z(2)]]).is_none());
}
