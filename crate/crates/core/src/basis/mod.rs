//! Spline matrices and the determinantal basis criterion.
//!
//! A set of `n` splines is a module basis exactly when the determinant of
//! its spline matrix is a unit multiple of the product of the per-vertex
//! lcm invariants ([`q_g`]). Over the integers the module of splines is
//! also computed directly as a lattice, which gives an independent
//! flow-up basis and exact span membership.

pub mod lattice;
mod matrix;

use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::LabeledGraph;
use crate::ring::{GcdDomain, Integer};
use crate::spline::{first_violation, q_g, vertex_lcms, Spline, SplineError};

pub use matrix::{bareiss_determinant, cofactor_determinant, SplineMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisError {
    #[error(transparent)]
    Spline(#[from] SplineError),
    #[error("expected {expected} candidate splines, found {found}")]
    CandidateCount { expected: usize, found: usize },
    #[error("candidate {candidate} has {found} values, expected {expected}")]
    CandidateLength {
        candidate: usize,
        expected: usize,
        found: usize,
    },
    #[error("candidate {candidate} violates the edge condition on {edge}")]
    NotASpline { candidate: usize, edge: String },
    #[error("internal inconsistency: {q} does not divide determinant {determinant}")]
    Inexact { determinant: String, q: String },
    #[error("basis matrix is singular")]
    Singular,
    #[error("internal inconsistency: flow-up pivot {pivot} at {vertex} is not an associate of {expected}")]
    FlowupMismatch {
        vertex: String,
        pivot: String,
        expected: String,
    },
}

/// Outcome of the determinantal basis test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisVerdict<R> {
    pub determinant: R,
    pub q_g: R,
    /// `determinant / q_g` when the division is exact.
    pub quotient: Option<R>,
    pub is_basis: bool,
}

fn validated_matrix<R: GcdDomain, C: AsRef<[R]>>(
    graph: &LabeledGraph<R>,
    candidates: &[C],
) -> Result<SplineMatrix<R>, BasisError> {
    let n = graph.vertex_count();
    if candidates.len() != n {
        return Err(BasisError::CandidateCount {
            expected: n,
            found: candidates.len(),
        });
    }
    for (k, c) in candidates.iter().enumerate() {
        let values = c.as_ref();
        if values.len() != n {
            return Err(BasisError::CandidateLength {
                candidate: k + 1,
                expected: n,
                found: values.len(),
            });
        }
        if let Some(e) = first_violation(graph, values)? {
            return Err(BasisError::NotASpline {
                candidate: k + 1,
                edge: graph.edge_name(e),
            });
        }
    }
    Ok(SplineMatrix::from_columns(candidates).expect("lengths checked"))
}

/// Determinant of the spline matrix divided by `q_g`. The division is
/// always exact for genuine splines; anything else is reported as an
/// internal inconsistency.
pub fn check_q_divides<R: GcdDomain, C: AsRef<[R]>>(
    graph: &LabeledGraph<R>,
    splines: &[C],
) -> Result<R, BasisError> {
    let det = validated_matrix(graph, splines)?.determinant();
    let q = q_g(graph)?;
    det.checked_div(&q).ok_or_else(|| BasisError::Inexact {
        determinant: det.to_string(),
        q: q.to_string(),
    })
}

/// Applies the basis criterion to `n` candidate splines. Graphs need not be
/// complete: splines and `q_g` are unchanged by completion.
pub fn check_basis<R: GcdDomain, C: AsRef<[R]>>(
    graph: &LabeledGraph<R>,
    candidates: &[C],
) -> Result<BasisVerdict<R>, BasisError> {
    let determinant = validated_matrix(graph, candidates)?.determinant();
    let q = q_g(graph)?;
    if determinant.is_zero() {
        return Ok(BasisVerdict {
            determinant,
            q_g: q,
            quotient: Some(R::zero()),
            is_basis: false,
        });
    }
    let quotient = determinant.checked_div(&q);
    let is_basis = quotient.as_ref().is_some_and(GcdDomain::is_unit);
    Ok(BasisVerdict {
        determinant,
        q_g: q,
        quotient,
        is_basis,
    })
}

/// Builds the integer splines as the projection of the kernel of
/// `F(u) - F(v) - label * s_uv = 0` (one slack per edge), then brings the
/// rank-`n` result to Hermite form so that basis element `i` vanishes on
/// every earlier vertex.
///
/// Each pivot must be an associate of that vertex's lcm invariant; a
/// mismatch is reported as an internal inconsistency.
pub fn flowup_basis(graph: &LabeledGraph<Integer>) -> Result<Vec<Spline<Integer>>, BasisError> {
    let n = graph.vertex_count();
    let m = graph.edge_count();
    let width = n + m;
    let system: Vec<Vec<BigInt>> = graph
        .edges()
        .iter()
        .enumerate()
        .map(|(k, e)| {
            let mut row = vec![BigInt::from(0); width];
            row[e.u] += 1;
            row[e.v] -= 1;
            row[n + k] = -e.label.as_bigint().clone();
            row
        })
        .collect();
    let kernel = lattice::integer_kernel(&system, width);
    let projected: Vec<Vec<BigInt>> = kernel.iter().map(|v| v[..n].to_vec()).collect();
    let hnf = lattice::hermite_normal_form(&projected);
    if hnf.rank() != n || hnf.pivots.iter().enumerate().any(|(k, &p)| k != p) {
        return Err(BasisError::Singular);
    }

    let lcms = vertex_lcms(graph)?;
    let mut basis = Vec::with_capacity(n);
    for (i, row) in hnf.rows.into_iter().take(n).enumerate() {
        let values: Vec<Integer> = row.into_iter().map(Integer::from).collect();
        if !values[i].is_associate(&lcms[i]) {
            return Err(BasisError::FlowupMismatch {
                vertex: graph.name(i).to_string(),
                pivot: values[i].to_string(),
                expected: lcms[i].to_string(),
            });
        }
        basis.push(Spline::new(graph, values)?);
    }
    Ok(basis)
}

/// Integer coordinates of `target` in the span of `basis`, if it lies there.
pub fn membership<C: AsRef<[Integer]>>(
    graph: &LabeledGraph<Integer>,
    basis: &[C],
    target: &[Integer],
) -> Result<Option<Vec<Integer>>, BasisError> {
    let n = graph.vertex_count();
    if basis.len() != n {
        return Err(BasisError::CandidateCount {
            expected: n,
            found: basis.len(),
        });
    }
    if target.len() != n {
        return Err(SplineError::LengthMismatch {
            expected: n,
            found: target.len(),
        }
        .into());
    }
    let rows: Vec<Vec<BigInt>> = basis
        .iter()
        .map(|b| b.as_ref().iter().map(|x| x.as_bigint().clone()).collect())
        .collect();
    let target: Vec<BigInt> = target.iter().map(|x| x.as_bigint().clone()).collect();
    lattice::solve_in_lattice(&rows, &target)
        .map_err(|()| BasisError::Singular)
        .map(|sol| sol.map(|c| c.into_iter().map(Integer::from).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: i64) -> Integer {
        Integer::from(v)
    }

    fn zs(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| z(x)).collect()
    }

    fn diamond() -> LabeledGraph<Integer> {
        LabeledGraph::new(
            4,
            [
                (0, 1, z(5)),
                (0, 2, z(4)),
                (0, 3, z(6)),
                (1, 2, z(2)),
                (1, 3, z(9)),
            ],
        )
        .unwrap()
    }

    fn listed_flowups() -> Vec<Vec<Integer>> {
        vec![
            zs(&[1, 1, 1, 1]),
            zs(&[0, 30, 0, 48]),
            zs(&[0, 0, 8, 0]),
            zs(&[0, 0, 0, 36]),
        ]
    }

    #[test]
    fn listed_flowups_are_not_a_basis() {
        let g = diamond();
        let v = check_basis(&g, &listed_flowups()).unwrap();
        assert_eq!(v.determinant.canonical(), z(8640));
        assert_eq!(v.q_g, z(2160));
        assert_eq!(v.quotient.clone().unwrap().canonical(), z(4));
        assert!(!v.is_basis);
        assert_eq!(check_q_divides(&g, &listed_flowups()).unwrap().canonical(), z(4));
    }

    #[test]
    fn oracle_basis_of_diamond() {
        let g = diamond();
        let basis = flowup_basis(&g).unwrap();
        let diag: Vec<_> = (0..4).map(|i| basis[i].values()[i].clone()).collect();
        assert_eq!(diag, zs(&[1, 30, 4, 18]));
        let v = check_basis(&g, &basis).unwrap();
        assert!(v.is_basis);
        assert!(check_q_divides(&g, &basis).unwrap().is_unit());
    }

    #[test]
    fn single_edge_and_triangle_oracles() {
        let edge = LabeledGraph::new(2, [(0, 1, z(7))]).unwrap();
        let basis: Vec<_> = flowup_basis(&edge).unwrap().into_iter().map(Spline::into_values).collect();
        assert_eq!(basis, vec![zs(&[1, 1]), zs(&[0, 7])]);

        let tri = LabeledGraph::new(3, [(0, 1, z(2)), (0, 2, z(3)), (1, 2, z(6))]).unwrap();
        let basis = flowup_basis(&tri).unwrap();
        let diag: Vec<_> = (0..3).map(|i| basis[i].values()[i].clone()).collect();
        assert_eq!(diag, zs(&[1, 6, 6]));
        assert_eq!(check_basis(&tri, &basis).unwrap().determinant.canonical(), z(36));
    }

    #[test]
    fn repeated_column_is_singular() {
        let g = diamond();
        let mut cols = listed_flowups();
        cols[3] = cols[2].clone();
        assert!(check_q_divides(&g, &cols).unwrap().is_zero());
        let v = check_basis(&g, &cols).unwrap();
        assert_eq!(v.quotient, Some(z(0)));
        assert!(!v.is_basis);
    }

    #[test]
    fn candidate_validation() {
        let g = diamond();
        let mut cols = listed_flowups();
        cols[1] = zs(&[0, 1, 0, 0]);
        assert_eq!(
            check_basis(&g, &cols).unwrap_err(),
            BasisError::NotASpline {
                candidate: 2,
                edge: "v1v2".into()
            }
        );
        assert!(matches!(
            check_basis(&g, &cols[..3]).unwrap_err(),
            BasisError::CandidateCount { expected: 4, found: 3 }
        ));
    }

    #[test]
    fn membership_queries() {
        let g = diamond();
        let listed = listed_flowups();
        assert_eq!(membership(&g, &listed, &zs(&[0, 0, 4, 0])).unwrap(), None);
        assert_eq!(
            membership(&g, &listed, &listed[2]).unwrap(),
            Some(zs(&[0, 0, 1, 0]))
        );
        let basis = flowup_basis(&g).unwrap();
        let target: Vec<Integer> = basis[1]
            .values()
            .iter()
            .zip(basis[3].values())
            .map(|(a, b)| a.mul(&z(2)).add(&b.mul(&z(3))))
            .collect();
        assert_eq!(membership(&g, &basis, &target).unwrap(), Some(zs(&[0, 2, 0, 3])));
        assert_eq!(
            membership(&g, &basis, &zs(&[0, 0, 4, 0])).unwrap(),
            Some(zs(&[0, 0, 1, 0]))
        );
        let mut singular = listed.clone();
        singular[0] = listed[1].clone();
        assert_eq!(
            membership(&g, &singular, &zs(&[0, 0, 4, 0])).unwrap_err(),
            BasisError::Singular
        );
    }
}
