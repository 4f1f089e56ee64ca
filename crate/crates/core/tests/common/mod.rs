#![allow(dead_code)]

use std::collections::BTreeSet;

use gspline::graph::{LabeledGraph, Trail};
use gspline::ring::{GcdDomain, IntPoly, Integer};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn z(v: i64) -> Integer {
    Integer::from(v)
}

pub fn zs(v: &[i64]) -> Vec<Integer> {
    v.iter().map(|&x| z(x)).collect()
}

pub fn poly(s: &str) -> IntPoly {
    IntPoly::parse(s).unwrap()
}

/// Four vertices, edges v1v2:5 v1v3:4 v1v4:6 v2v3:2 v2v4:9.
pub fn diamond() -> LabeledGraph<Integer> {
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

pub fn diamond_flowups() -> Vec<Vec<Integer>> {
    vec![
        zs(&[1, 1, 1, 1]),
        zs(&[0, 30, 0, 48]),
        zs(&[0, 0, 8, 0]),
        zs(&[0, 0, 0, 36]),
    ]
}

/// K4 with edges l1..l6 = v1v2, v2v3, v1v3, v1v4, v2v4, v3v4 (edge index = l - 1).
pub fn k4(labels: [i64; 6]) -> LabeledGraph<Integer> {
    let pairs = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)];
    LabeledGraph::new(4, pairs.iter().zip(labels).map(|(&(u, v), l)| (u, v, z(l)))).unwrap()
}

/// K5 with edges l1..l10 = v1v2, v2v3, v1v3, v1v4, v2v4, v3v4, v1v5, v2v5, v3v5, v4v5.
pub fn k5(labels: [i64; 10]) -> LabeledGraph<Integer> {
    let pairs = [
        (0, 1),
        (1, 2),
        (0, 2),
        (0, 3),
        (1, 3),
        (2, 3),
        (0, 4),
        (1, 4),
        (2, 4),
        (3, 4),
    ];
    LabeledGraph::new(5, pairs.iter().zip(labels).map(|(&(u, v), l)| (u, v, z(l)))).unwrap()
}

pub fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}

/// Connected graph: a random spanning tree plus each remaining pair with
/// probability `density`; labels uniform in `1..=max_label`.
pub fn random_connected(rng: &mut StdRng, n: usize, density: f64, max_label: i64) -> LabeledGraph<Integer> {
    let mut edges = Vec::new();
    let mut present = BTreeSet::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        present.insert((u, v));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !present.contains(&(u, v)) && rng.random_bool(density) {
                present.insert((u, v));
            }
        }
    }
    for (u, v) in present {
        // random orientation so edge documents are not always (low, high)
        let (a, b) = if rng.random_bool(0.5) { (u, v) } else { (v, u) };
        edges.push((a, b, z(rng.random_range(1..=max_label))));
    }
    LabeledGraph::new(n, edges).unwrap()
}

pub fn random_complete(rng: &mut StdRng, n: usize, max_label: i64) -> LabeledGraph<Integer> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v, z(rng.random_range(1..=max_label))));
        }
    }
    LabeledGraph::new(n, edges).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Independent zero-trail oracle: every trail from `vertex` to an earlier
/// vertex, then containment pruning on edge sets (duplicates keep one).
pub fn zero_trail_oracle<R: GcdDomain>(g: &LabeledGraph<R>, vertex: usize) -> BTreeSet<BTreeSet<usize>> {
    let mut all: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for j in 0..vertex {
        for t in g.enumerate_trails(vertex, j).unwrap() {
            all.insert(t.edge_set());
        }
    }
    all.iter()
        .filter(|s| !all.iter().any(|o| o != *s && o.is_subset(s)))
        .cloned()
        .collect()
}

pub fn edge_sets<R>(trails: &[Trail<R>]) -> BTreeSet<BTreeSet<usize>>
where
    R: GcdDomain,
{
    trails.iter().map(Trail::edge_set).collect()
}

/// Integer combination of columns.
pub fn combine(columns: &[Vec<Integer>], coeffs: &[i64]) -> Vec<Integer> {
    let n = columns[0].len();
    (0..n)
        .map(|v| {
            columns
                .iter()
                .zip(coeffs)
                .fold(z(0), |acc, (c, &k)| acc.add(&c[v].mul(&z(k))))
        })
        .collect()
}
