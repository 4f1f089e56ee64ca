mod common;

use common::*;
use gspline::basis::{check_basis, check_q_divides, flowup_basis, membership, BasisError};
use gspline::prelude::*;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::Rng;

fn oracle(g: &LabeledGraph<Integer>) -> Vec<Vec<Integer>> {
    flowup_basis(g).unwrap().into_iter().map(Spline::into_values).collect()
}

/// Columns times a random determinant-one integer matrix (product of
/// elementary operations).
fn unimodular_mix(rng: &mut StdRng, cols: &[Vec<Integer>]) -> Vec<Vec<Integer>> {
    let n = cols.len();
    let mut out = cols.to_vec();
    for _ in 0..3 * n {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a == b {
            out.swap(0, a);
            continue;
        }
        let k = z(rng.random_range(-3..=3));
        out[a] = out[a].iter().zip(&out[b]).map(|(x, y)| x.add(&y.mul(&k))).collect();
    }
    out
}

fn random_vector(rng: &mut StdRng, n: usize) -> Vec<Integer> {
    (0..n).map(|_| z(rng.random_range(-200..=200))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn oracle_basis_determinant_is_q(seed in any::<u64>(), n in 2usize..=6, density in 0.0f64..1.0) {
        let g = random_connected(&mut rng(seed), n, density, 30);
        let basis = oracle(&g);
        let lcms = vertex_lcms(&g).unwrap();
        for i in 0..n {
            prop_assert!(basis[i][..i].iter().all(GcdDomain::is_zero));
            prop_assert!(basis[i][i].is_associate(&lcms[i]));
        }
        let v = check_basis(&g, &basis).unwrap();
        prop_assert!(v.is_basis);
        prop_assert!(v.determinant.is_associate(&q_g(&g).unwrap()));
    }

    #[test]
    fn q_divides_any_spline_tuple(seed in any::<u64>(), n in 2usize..=6) {
        let mut r = rng(seed);
        let g = random_connected(&mut r, n, 0.5, 30);
        let basis = oracle(&g);
        let tuple: Vec<Vec<Integer>> = (0..n)
            .map(|_| {
                let c: Vec<i64> = (0..n).map(|_| r.random_range(-4..=4)).collect();
                combine(&basis, &c)
            })
            .collect();
        // exact division is checked inside
        let quotient = check_q_divides(&g, &tuple).unwrap();
        let v = check_basis(&g, &tuple).unwrap();
        prop_assert_eq!(v.quotient, Some(quotient));
    }

    #[test]
    fn unimodular_mixes_stay_bases_scalings_do_not(seed in any::<u64>(), n in 2usize..=6) {
        let mut r = rng(seed);
        let g = random_connected(&mut r, n, 0.5, 30);
        let mixed = unimodular_mix(&mut r, &oracle(&g));
        prop_assert!(check_basis(&g, &mixed).unwrap().is_basis);

        let mut scaled = mixed.clone();
        let col = r.random_range(0..n);
        let k = z(r.random_range(2..=5) * if r.random_bool(0.5) { 1 } else { -1 });
        scaled[col] = scaled[col].iter().map(|x| x.mul(&k)).collect();
        let v = check_basis(&g, &scaled).unwrap();
        prop_assert!(!v.is_basis);
        prop_assert!(v.quotient.unwrap().is_associate(&k));
    }

    #[test]
    fn completion_preserves_q_and_splines(seed in any::<u64>(), n in 2usize..=6, density in 0.0f64..1.0) {
        let mut r = rng(seed);
        let g = random_connected(&mut r, n, density, 30);
        let k = g.completion();
        prop_assert!(k.is_complete());
        prop_assert_eq!(q_g(&g).unwrap(), q_g(&k).unwrap());
        let basis = oracle(&g);
        for _ in 0..50 {
            let v = if r.random_bool(0.5) {
                random_vector(&mut r, n)
            } else {
                let c: Vec<i64> = (0..n).map(|_| r.random_range(-3..=3)).collect();
                combine(&basis, &c)
            };
            prop_assert_eq!(is_spline(&g, &v).unwrap(), is_spline(&k, &v).unwrap());
        }
    }

    #[test]
    fn membership_matches_the_edge_conditions(seed in any::<u64>(), n in 2usize..=5) {
        let mut r = rng(seed);
        let g = random_connected(&mut r, n, 0.5, 12);
        let basis = oracle(&g);
        for _ in 0..20 {
            let v = random_vector(&mut r, n);
            let coords = membership(&g, &basis, &v).unwrap();
            prop_assert_eq!(coords.is_some(), is_spline(&g, &v).unwrap());
            if let Some(c) = coords {
                let back: Vec<Integer> = (0..n)
                    .map(|x| (0..n).fold(z(0), |acc, k| acc.add(&basis[k][x].mul(&c[k]))))
                    .collect();
                prop_assert_eq!(back, v);
            }
        }
    }
}

#[test]
fn q_is_invariant_under_vertex_permutation() {
    let mut r = rng(5);
    for _ in 0..60 {
        let n = r.random_range(2..=5);
        let g = random_connected(&mut r, n, 0.5, 30);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, r.random_range(0..=i));
        }
        let p = g.permute_vertices(&perm).unwrap();
        assert!(q_g(&p).unwrap().is_associate(&q_g(&g).unwrap()), "{g:?} {perm:?}");
    }
}

#[test]
fn wrong_candidates_are_errors() {
    let g = diamond();
    assert!(matches!(
        check_basis(&g, &[zs(&[1, 1, 1, 1])]).unwrap_err(),
        BasisError::CandidateCount { .. }
    ));
    let mut cols = diamond_flowups();
    cols[2] = zs(&[0, 0, 8]);
    assert!(matches!(
        check_basis(&g, &cols).unwrap_err(),
        BasisError::CandidateLength { candidate: 3, .. }
    ));
}

#[test]
fn polynomial_triangle_basis() {
    let g = LabeledGraph::new(
        3,
        [(0, 1, poly("x")), (0, 2, poly("x+1")), (1, 2, poly("x(x+1)"))],
    )
    .unwrap();
    let l = poly("x^2 + x");
    assert_eq!(vertex_lcms(&g).unwrap(), vec![IntPoly::one(), l.clone(), l.clone()]);
    assert_eq!(q_g(&g).unwrap(), l.mul(&l));
    let zero = IntPoly::zero;
    let good = vec![
        vec![IntPoly::one(), IntPoly::one(), IntPoly::one()],
        vec![zero(), l.clone(), zero()],
        vec![zero(), zero(), l.clone()],
    ];
    let v = check_basis(&g, &good).unwrap();
    assert!(v.is_basis);
    let mut neg = good.clone();
    neg[1] = neg[1].iter().map(|p| p.neg()).collect();
    assert!(check_basis(&g, &neg).unwrap().is_basis);
    let mut scaled = good.clone();
    scaled[2] = vec![zero(), zero(), l.mul(&poly("x"))];
    let v = check_basis(&g, &scaled).unwrap();
    assert!(!v.is_basis);
    assert!(v.quotient.unwrap().is_associate(&poly("x")));
    let mut doubled = good;
    doubled[2] = vec![zero(), zero(), l.mul(&poly("2"))];
    assert!(!check_basis(&g, &doubled).unwrap().is_basis);
}
