//! Splines, the per-vertex lcm invariants, selections over long zero trails
//! and the constructive splines built from them.
//!
//! Vertex indices are 0-based. Selections exist for the interior vertices
//! `1..=n-2`; the last vertex only has zero edges, and the first vertex has
//! no zero trails at all.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{GraphError, LabeledGraph, Trail};
use crate::ring::{lcm_all, product, GcdDomain};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplineError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex {0} has no trail to an earlier vertex; the graph must be connected")]
    Disconnected(String),
    #[error("selections exist only for interior vertices 2..={max} (1-based), got {index}")]
    SelectionVertex { index: usize, max: usize },
    #[error("expected {expected} chosen edges (one per long zero trail), found {found}")]
    ChoiceCount { expected: usize, found: usize },
    #[error("edge {edge} is not on zero trail #{trail}")]
    EdgeNotOnTrail { edge: String, trail: usize },
    #[error("label set does not form a selection: {0}")]
    Unrealizable(String),
    #[error("graph is not complete")]
    NotComplete,
    #[error("selection is not minimal: edge {0} can be dropped")]
    NotMinimal(String),
    #[error("edge {0} at the selected vertex is not in the selection")]
    IncidentEdgeNotSelected(String),
    #[error("selections belong to different vertices")]
    VertexMismatch,
    #[error("the smaller selection is not contained in the larger one")]
    NotContained,
    #[error("value {value} at {vertex} is neither 0 nor {expected}")]
    UnexpectedValue {
        vertex: String,
        value: String,
        expected: String,
    },
    #[error("constructed labeling violates the edge condition on {0}")]
    ConstructionFailed(String),
    #[error("a selection is required for interior vertex {0}")]
    SelectionRequired(String),
    #[error("selection {id} out of range 1..={count}")]
    SelectionOutOfRange { id: usize, count: usize },
}

/// A vertex labeling satisfying every edge congruence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Spline<R> {
    values: Vec<R>,
}

impl<R: GcdDomain> Spline<R> {
    /// Wraps `values` after checking the edge conditions of `graph`.
    pub fn new(graph: &LabeledGraph<R>, values: Vec<R>) -> Result<Self, SplineError> {
        match first_violation(graph, &values)? {
            None => Ok(Spline { values }),
            Some(e) => Err(SplineError::ConstructionFailed(graph.edge_name(e))),
        }
    }

    pub(crate) fn unchecked(values: Vec<R>) -> Self {
        Spline { values }
    }

    pub fn constant(n: usize, value: R) -> Self {
        Spline {
            values: vec![value; n],
        }
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn into_values(self) -> Vec<R> {
        self.values
    }

    pub fn zero_count(&self) -> usize {
        self.values.iter().filter(|v| v.is_zero()).count()
    }
}

fn check_len<R: GcdDomain>(graph: &LabeledGraph<R>, values: &[R]) -> Result<(), SplineError> {
    if values.len() == graph.vertex_count() {
        Ok(())
    } else {
        Err(SplineError::LengthMismatch {
            expected: graph.vertex_count(),
            found: values.len(),
        })
    }
}

/// Index of the first edge whose label does not divide the difference of
/// its endpoint values.
pub fn first_violation<R: GcdDomain>(
    graph: &LabeledGraph<R>,
    values: &[R],
) -> Result<Option<usize>, SplineError> {
    check_len(graph, values)?;
    Ok(graph
        .edges()
        .iter()
        .position(|e| !e.label.divides(&values[e.u].sub(&values[e.v]))))
}

pub fn is_spline<R: GcdDomain>(graph: &LabeledGraph<R>, values: &[R]) -> Result<bool, SplineError> {
    Ok(first_violation(graph, values)?.is_none())
}

pub fn trail_gcd<R: GcdDomain>(trail: &Trail<R>) -> R {
    trail.gcd().clone()
}

/// lcm over the zero trails of `vertex` of their label gcds; one for vertex 0.
pub fn zero_trail_lcm<R: GcdDomain>(
    graph: &LabeledGraph<R>,
    vertex: usize,
) -> Result<R, SplineError> {
    graph.check_vertex(vertex)?;
    if vertex == 0 {
        return Ok(R::one());
    }
    let trails = graph.zero_trails(vertex)?;
    if trails.is_empty() {
        return Err(SplineError::Disconnected(graph.name(vertex).to_string()));
    }
    Ok(lcm_all(trails.iter().map(Trail::gcd)))
}

/// The lcm invariant of every vertex, in vertex order.
pub fn vertex_lcms<R: GcdDomain>(graph: &LabeledGraph<R>) -> Result<Vec<R>, SplineError> {
    (0..graph.vertex_count())
        .map(|i| zero_trail_lcm(graph, i))
        .collect()
}

/// Product of the per-vertex lcm invariants, canonical.
pub fn q_g<R: GcdDomain>(graph: &LabeledGraph<R>) -> Result<R, SplineError> {
    Ok(product(&vertex_lcms(graph)?).canonical())
}

/// `(0, ..., 0, L_n)`.
pub fn top_spline<R: GcdDomain>(graph: &LabeledGraph<R>) -> Result<Spline<R>, SplineError> {
    let n = graph.vertex_count();
    let mut values = vec![R::zero(); n];
    values[n - 1] = zero_trail_lcm(graph, n - 1)?;
    checked_spline(graph, values)
}

fn checked_spline<R: GcdDomain>(
    graph: &LabeledGraph<R>,
    values: Vec<R>,
) -> Result<Spline<R>, SplineError> {
    match first_violation(graph, &values)? {
        None => Ok(Spline::unchecked(values)),
        Some(e) => Err(SplineError::ConstructionFailed(graph.edge_name(e))),
    }
}

fn check_interior<R: GcdDomain>(graph: &LabeledGraph<R>, vertex: usize) -> Result<(), SplineError> {
    let n = graph.vertex_count();
    if n >= 3 && (1..=n - 2).contains(&vertex) {
        Ok(())
    } else {
        Err(SplineError::SelectionVertex {
            index: vertex + 1,
            max: n.saturating_sub(1),
        })
    }
}

/// Zero trails of `vertex` with more than one edge.
pub fn long_zero_trails<R: GcdDomain>(
    graph: &LabeledGraph<R>,
    vertex: usize,
) -> Result<Vec<Trail<R>>, SplineError> {
    Ok(graph
        .zero_trails(vertex)?
        .into_iter()
        .filter(|t| t.len() > 1)
        .collect())
}

/// Quotients of a long zero trail's labels by the trail gcd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSet<R> {
    pub trail: Trail<R>,
    /// One quotient per edge, in traversal order.
    pub factors: Vec<R>,
}

pub fn factor_sets<R: GcdDomain>(
    graph: &LabeledGraph<R>,
    vertex: usize,
) -> Result<Vec<FactorSet<R>>, SplineError> {
    check_interior(graph, vertex)?;
    Ok(long_zero_trails(graph, vertex)?
        .into_iter()
        .map(|trail| {
            let factors = trail
                .edges()
                .iter()
                .map(|&e| graph.label(e).exact_div(trail.gcd()))
                .collect();
            FactorSet { trail, factors }
        })
        .collect())
}

/// One chosen edge per long zero trail of a vertex.
///
/// The factor contributed by a trail is the chosen label divided by that
/// trail's gcd, so the same edge chosen from two trails contributes twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selection<R> {
    vertex: usize,
    vertex_lcm: R,
    trails: Vec<Trail<R>>,
    choices: Vec<usize>,
    factors: Vec<R>,
    product: R,
}

impl<R: GcdDomain> Selection<R> {
    fn build(
        graph: &LabeledGraph<R>,
        vertex: usize,
        trails: Vec<Trail<R>>,
        choices: Vec<usize>,
    ) -> Result<Self, SplineError> {
        let factors: Vec<R> = trails
            .iter()
            .zip(&choices)
            .map(|(t, &e)| graph.label(e).exact_div(t.gcd()))
            .collect();
        Ok(Selection {
            vertex,
            vertex_lcm: zero_trail_lcm(graph, vertex)?,
            product: product(&factors).canonical(),
            trails,
            choices,
            factors,
        })
    }

    /// Selection with an explicit chosen edge for each long zero trail, in
    /// the order returned by [`long_zero_trails`].
    pub fn from_choices(
        graph: &LabeledGraph<R>,
        vertex: usize,
        choices: Vec<usize>,
    ) -> Result<Self, SplineError> {
        check_interior(graph, vertex)?;
        let trails = long_zero_trails(graph, vertex)?;
        if trails.len() != choices.len() {
            return Err(SplineError::ChoiceCount {
                expected: trails.len(),
                found: choices.len(),
            });
        }
        for (t, (trail, &e)) in trails.iter().zip(&choices).enumerate() {
            if !trail.contains_edge(e) {
                return Err(SplineError::EdgeNotOnTrail {
                    edge: edge_label_name(graph, e),
                    trail: t + 1,
                });
            }
        }
        Self::build(graph, vertex, trails, choices)
    }

    /// Selection whose chosen edges are exactly `label_set`.
    ///
    /// Each trail takes its lowest-indexed edge from the set. If that leaves
    /// some edge of the set unchosen, trails are reassigned through a
    /// matching so that every edge is chosen by at least one trail.
    pub fn from_label_set(
        graph: &LabeledGraph<R>,
        vertex: usize,
        label_set: &BTreeSet<usize>,
    ) -> Result<Self, SplineError> {
        check_interior(graph, vertex)?;
        let trails = long_zero_trails(graph, vertex)?;
        let mut choices = Vec::with_capacity(trails.len());
        for (t, trail) in trails.iter().enumerate() {
            let lowest = trail
                .edges()
                .iter()
                .copied()
                .filter(|e| label_set.contains(e))
                .min()
                .ok_or_else(|| {
                    SplineError::Unrealizable(format!("zero trail #{} is not hit", t + 1))
                })?;
            choices.push(lowest);
        }
        let image: BTreeSet<usize> = choices.iter().copied().collect();
        if &image != label_set {
            let matched = cover_by_distinct_trails(&trails, label_set).ok_or_else(|| {
                SplineError::Unrealizable(
                    "some edges cannot each be chosen by a distinct zero trail".into(),
                )
            })?;
            for (t, e) in matched {
                choices[t] = e;
            }
        }
        Self::build(graph, vertex, trails, choices)
    }

    pub fn vertex(&self) -> usize {
        self.vertex
    }

    pub fn trails(&self) -> &[Trail<R>] {
        &self.trails
    }

    /// Chosen edge index per long zero trail.
    pub fn choices(&self) -> &[usize] {
        &self.choices
    }

    pub fn factors(&self) -> &[R] {
        &self.factors
    }

    /// Canonical product of the per-trail factors.
    pub fn product(&self) -> &R {
        &self.product
    }

    /// The lcm invariant of the selection's vertex.
    pub fn vertex_lcm(&self) -> &R {
        &self.vertex_lcm
    }

    /// Canonical `product * vertex_lcm`, the nonzero value of the
    /// constructed splines.
    pub fn scaled_value(&self) -> R {
        self.product.mul(&self.vertex_lcm).canonical()
    }

    /// Edge indices chosen by at least one trail.
    pub fn label_set(&self) -> BTreeSet<usize> {
        self.choices.iter().copied().collect()
    }

    pub fn is_subset_of(&self, other: &Selection<R>) -> bool {
        self.vertex == other.vertex && self.label_set().is_subset(&other.label_set())
    }

    /// First chosen edge that could be removed with every trail still hit.
    fn redundant_edge(&self) -> Option<usize> {
        let sets: Vec<BTreeSet<usize>> = self.trails.iter().map(Trail::edge_set).collect();
        let chosen = self.label_set();
        chosen
            .iter()
            .copied()
            .find(|&s| !has_private_trail(&sets, &chosen, s))
    }

    pub fn is_minimal(&self) -> bool {
        self.redundant_edge().is_none()
    }
}

fn edge_label_name<R: GcdDomain>(graph: &LabeledGraph<R>, e: usize) -> String {
    format!("{} ({})", graph.edge_name(e), graph.label(e))
}

/// Some trail meets `chosen` only in `edge`.
fn has_private_trail(trails: &[BTreeSet<usize>], chosen: &BTreeSet<usize>, edge: usize) -> bool {
    trails
        .iter()
        .any(|t| t.contains(&edge) && t.intersection(chosen).count() == 1)
}

/// Assigns each edge of `edges` a distinct trail containing it (Kuhn's
/// augmenting paths, edges and trails in index order).
fn cover_by_distinct_trails<R>(
    trails: &[Trail<R>],
    edges: &BTreeSet<usize>,
) -> Option<Vec<(usize, usize)>>
where
    R: GcdDomain,
{
    let edges: Vec<usize> = edges.iter().copied().collect();
    let mut trail_owner: Vec<Option<usize>> = vec![None; trails.len()];

    fn augment<R: GcdDomain>(
        k: usize,
        edges: &[usize],
        trails: &[Trail<R>],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for (t, trail) in trails.iter().enumerate() {
            if seen[t] || !trail.contains_edge(edges[k]) {
                continue;
            }
            seen[t] = true;
            let free = match owner[t] {
                None => true,
                Some(other) => augment(other, edges, trails, owner, seen),
            };
            if free {
                owner[t] = Some(k);
                return true;
            }
        }
        false
    }

    for k in 0..edges.len() {
        let mut seen = vec![false; trails.len()];
        if !augment(k, &edges, trails, &mut trail_owner, &mut seen) {
            return None;
        }
    }
    Some(
        trail_owner
            .iter()
            .enumerate()
            .filter_map(|(t, o)| o.map(|k| (t, edges[k])))
            .collect(),
    )
}

/// All selections of `vertex` whose label sets are inclusion-minimal,
/// ordered by label-set size, then lexicographically by edge index.
///
/// Minimal label sets are the minimal transversals of the long zero trails.
/// The search always branches on the first trail not yet hit and cuts any
/// partial set in which some member has lost every trail it alone hits;
/// adding edges can never give such a member a private trail back.
pub fn minimal_selections<R: GcdDomain>(
    graph: &LabeledGraph<R>,
    vertex: usize,
) -> Result<Vec<Selection<R>>, SplineError> {
    check_interior(graph, vertex)?;
    let trails = long_zero_trails(graph, vertex)?;
    let sets: Vec<Vec<usize>> = trails
        .iter()
        .map(|t| {
            let mut s = t.edges().to_vec();
            s.sort_unstable();
            s
        })
        .collect();
    let mut found = BTreeSet::new();
    let mut current = Vec::new();
    transversals(&sets, &mut current, &mut found);

    let mut label_sets: Vec<Vec<usize>> = found.into_iter().collect();
    label_sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    label_sets
        .into_iter()
        .map(|s| Selection::from_label_set(graph, vertex, &s.into_iter().collect()))
        .collect()
}

fn transversals(sets: &[Vec<usize>], current: &mut Vec<usize>, found: &mut BTreeSet<Vec<usize>>) {
    let Some(unhit) = sets
        .iter()
        .find(|s| !s.iter().any(|e| current.contains(e)))
    else {
        let mut done = current.clone();
        done.sort_unstable();
        found.insert(done);
        return;
    };
    for &e in unhit {
        current.push(e);
        if every_member_critical(sets, current) {
            transversals(sets, current, found);
        }
        current.pop();
    }
}

fn every_member_critical(sets: &[Vec<usize>], current: &[usize]) -> bool {
    current.iter().all(|&s| {
        sets.iter().any(|t| {
            t.contains(&s) && t.iter().filter(|e| current.contains(e)).count() == 1
        })
    })
}

/// The spline that is `scaled_value` at the selection's vertex and zero
/// elsewhere. Requires every edge from that vertex to a later vertex to be
/// selected; edges to earlier vertices can never be selected, and their
/// labels divide the scaled value anyway.
pub fn construct_all_incident<R: GcdDomain>(
    graph: &LabeledGraph<R>,
    selection: &Selection<R>,
) -> Result<Spline<R>, SplineError> {
    let i = selection.vertex();
    let chosen = selection.label_set();
    if let Some(&(e, _)) = graph
        .incident(i)
        .iter()
        .find(|&&(e, w)| w > i && !chosen.contains(&e))
    {
        return Err(SplineError::IncidentEdgeNotSelected(graph.edge_name(e)));
    }
    let mut values = vec![R::zero(); graph.vertex_count()];
    values[i] = selection.scaled_value();
    checked_spline(graph, values)
}

/// Builds the two-valued labeling for a minimal selection on a complete
/// graph and verifies that it is a spline.
pub fn algorithm_construct<R: GcdDomain>(
    complete: &LabeledGraph<R>,
    selection: &Selection<R>,
) -> Result<Spline<R>, SplineError> {
    if !complete.is_complete() {
        return Err(SplineError::NotComplete);
    }
    if let Some(e) = selection.redundant_edge() {
        return Err(SplineError::NotMinimal(edge_label_name(complete, e)));
    }
    algorithm_labeling(complete, selection)
}

/// The labeling steps without the minimality gate. The result is still
/// checked against every edge, so a non-minimal selection either yields a
/// genuine spline or an error.
///
/// Vertices before the selection's vertex `i` get 0 and `i` itself gets the
/// scaled value. Later vertices joined to `i` by an unselected edge form the
/// set `K` and also get the scaled value. A later vertex joined to `i` by a
/// selected edge gets 0 when all its edges to `K` are selected, and the
/// scaled value otherwise.
pub fn algorithm_labeling<R: GcdDomain>(
    complete: &LabeledGraph<R>,
    selection: &Selection<R>,
) -> Result<Spline<R>, SplineError> {
    if !complete.is_complete() {
        return Err(SplineError::NotComplete);
    }
    let n = complete.vertex_count();
    let i = selection.vertex();
    let chosen = selection.label_set();
    let selected = |u: usize, v: usize| {
        let e = complete
            .edge_between(u, v)
            .expect("complete graph has every pair");
        chosen.contains(&e)
    };
    let value = selection.scaled_value();
    let outside: Vec<usize> = ((i + 1)..n).filter(|&k| !selected(i, k)).collect();

    let mut values = vec![R::zero(); n];
    values[i] = value.clone();
    for &k in &outside {
        values[k] = value.clone();
    }
    for (s, slot) in values.iter_mut().enumerate().skip(i + 1) {
        if selected(i, s) && !outside.iter().all(|&k| selected(s, k)) {
            *slot = value.clone();
        }
    }
    checked_spline(complete, values)
}

/// Spline attached to `vertex`: the constant one at the first vertex, the
/// top spline at the last, and for an interior vertex the construction from
/// minimal selection `selection` (1-based, in [`minimal_selections`] order)
/// of the completion of `graph`. The result is checked against `graph`.
pub fn construct_for_vertex<R: GcdDomain>(
    graph: &LabeledGraph<R>,
    vertex: usize,
    selection: Option<usize>,
) -> Result<Spline<R>, SplineError> {
    graph.check_vertex(vertex)?;
    let n = graph.vertex_count();
    let spline = if vertex == 0 {
        Spline::constant(n, R::one())
    } else if vertex == n - 1 {
        top_spline(graph)?
    } else {
        let id = selection
            .ok_or_else(|| SplineError::SelectionRequired(graph.name(vertex).to_string()))?;
        let complete = graph.completion();
        let sels = minimal_selections(&complete, vertex)?;
        let chosen = id
            .checked_sub(1)
            .and_then(|k| sels.get(k))
            .ok_or(SplineError::SelectionOutOfRange {
                id,
                count: sels.len(),
            })?;
        algorithm_construct(&complete, chosen)?
    };
    if let Some(e) = first_violation(graph, spline.values())? {
        return Err(SplineError::ConstructionFailed(graph.edge_name(e)));
    }
    Ok(spline)
}

/// Lifts the spline of `selection` to a larger selection `larger`: every
/// entry equal to `selection.scaled_value()` becomes `larger.scaled_value()`.
pub fn induced_spline<R: GcdDomain>(
    graph: &LabeledGraph<R>,
    spline: &Spline<R>,
    selection: &Selection<R>,
    larger: &Selection<R>,
) -> Result<Spline<R>, SplineError> {
    check_len(graph, spline.values())?;
    if selection.vertex() != larger.vertex() {
        return Err(SplineError::VertexMismatch);
    }
    if !selection.is_subset_of(larger) {
        return Err(SplineError::NotContained);
    }
    let from = selection.scaled_value();
    let to = larger.scaled_value();
    let values = spline
        .values()
        .iter()
        .enumerate()
        .map(|(v, x)| {
            if x.is_zero() {
                Ok(R::zero())
            } else if *x == from {
                Ok(to.clone())
            } else {
                Err(SplineError::UnexpectedValue {
                    vertex: graph.name(v).to_string(),
                    value: x.to_string(),
                    expected: from.to_string(),
                })
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    checked_spline(graph, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{IntPoly, Integer};

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

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    fn label_values(g: &LabeledGraph<Integer>, s: &Selection<Integer>) -> Vec<Integer> {
        s.label_set().iter().map(|&e| g.label(e).clone()).collect()
    }

    #[test]
    fn spline_checks() {
        let g = diamond();
        assert!(is_spline(&g, &zs(&[2, 32, 34, 50])).unwrap());
        assert!(is_spline(&g, &zs(&[7, 7, 7, 7])).unwrap());
        assert!(!is_spline(&g, &zs(&[2, 32, 34, 51])).unwrap());
        assert_eq!(first_violation(&g, &zs(&[2, 32, 34, 51])).unwrap(), Some(2));
        assert_eq!(
            is_spline(&g, &zs(&[1, 2])).unwrap_err(),
            SplineError::LengthMismatch {
                expected: 4,
                found: 2
            }
        );
    }

    #[test]
    fn lcm_invariants_of_diamond() {
        let g = diamond();
        assert_eq!(vertex_lcms(&g).unwrap(), zs(&[1, 30, 4, 18]));
        assert_eq!(q_g(&g).unwrap(), z(2160));
    }

    #[test]
    fn small_invariants() {
        let edge = LabeledGraph::new(2, [(0, 1, z(7))]).unwrap();
        assert_eq!(q_g(&edge).unwrap(), z(7));
        assert_eq!(top_spline(&edge).unwrap().values(), zs(&[0, 7]).as_slice());

        let units = LabeledGraph::new(3, [(0, 1, z(1)), (0, 2, z(-1)), (1, 2, z(1))]).unwrap();
        assert_eq!(q_g(&units).unwrap(), z(1));
        assert_eq!(top_spline(&units).unwrap().values(), zs(&[0, 0, 1]).as_slice());

        let split = LabeledGraph::new(3, [(0, 1, z(2))]).unwrap();
        assert!(matches!(
            q_g(&split).unwrap_err(),
            SplineError::Disconnected(v) if v == "v3"
        ));
    }

    #[test]
    fn trail_gcds() {
        let g = diamond();
        let trails = g.zero_trails(1).unwrap();
        assert_eq!(trail_gcd(&trails[2]), z(3));
        assert_eq!(trail_gcd(&trails[0]), z(5));
        assert_eq!(trail_gcd(&trails[1]), z(2));
    }

    #[test]
    fn top_spline_of_diamond() {
        assert_eq!(top_spline(&diamond()).unwrap().values(), zs(&[0, 0, 0, 18]).as_slice());
    }

    #[test]
    fn diamond_factor_sets() {
        let sets = factor_sets(&diamond(), 1).unwrap();
        let factors: Vec<_> = sets.iter().map(|s| s.factors.clone()).collect();
        assert_eq!(factors, vec![zs(&[1, 2]), zs(&[3, 2])]);
        assert!(factor_sets(&diamond(), 0).is_err());
        assert!(factor_sets(&diamond(), 3).is_err());
    }

    #[test]
    fn diamond_minimal_selections() {
        let g = diamond();
        let sels = minimal_selections(&g, 1).unwrap();
        let labels: Vec<_> = sels.iter().map(|s| label_values(&g, s)).collect();
        // edges: 1 -> 4, 2 -> 6, 3 -> 2, 4 -> 9
        assert_eq!(
            labels,
            vec![zs(&[4, 6]), zs(&[4, 9]), zs(&[6, 2]), zs(&[2, 9])]
        );
        let pick = sels
            .iter()
            .find(|s| s.label_set() == set(&[3, 4]))
            .unwrap();
        assert_eq!(pick.product(), &z(3));
        assert_eq!(pick.factors(), zs(&[1, 3]).as_slice());
    }

    #[test]
    fn empty_selection_when_only_zero_edges() {
        // v2 is adjacent to v1 only through a zero edge and the path to v3 dead-ends
        let g = LabeledGraph::new(3, [(0, 1, z(4)), (1, 2, z(6))]).unwrap();
        let sels = minimal_selections(&g, 1).unwrap();
        assert_eq!(sels.len(), 1);
        assert!(sels[0].label_set().is_empty());
        assert_eq!(sels[0].product(), &z(1));
        assert!(factor_sets(&g, 1).unwrap().is_empty());
    }

    #[test]
    fn explicit_choices_multiply_per_trail() {
        let g = diamond();
        let s = Selection::from_choices(&g, 1, vec![3, 4]).unwrap();
        assert_eq!(s.product(), &z(3));
        assert_eq!(s.scaled_value(), z(90));
        assert!(matches!(
            Selection::from_choices(&g, 1, vec![3]).unwrap_err(),
            SplineError::ChoiceCount { .. }
        ));
        assert!(matches!(
            Selection::from_choices(&g, 1, vec![4, 4]).unwrap_err(),
            SplineError::EdgeNotOnTrail { trail: 1, .. }
        ));
    }

    #[test]
    fn all_incident_construction_on_triangle() {
        let g = LabeledGraph::new(3, [(0, 1, z(2)), (0, 2, z(3)), (1, 2, z(6))]).unwrap();
        // the only long zero trail of v2 is v2-v3-v1 = <6, 3>
        let s = Selection::from_label_set(&g, 1, &set(&[2])).unwrap();
        let f = construct_all_incident(&g, &s).unwrap();
        // product 6/3 = 2, lcm(2, 3) = 6
        assert_eq!(f.values(), &zs(&[0, 12, 0])[..]);
        let other = Selection::from_label_set(&g, 1, &set(&[1])).unwrap();
        assert!(matches!(
            construct_all_incident(&g, &other).unwrap_err(),
            SplineError::IncidentEdgeNotSelected(e) if e == "v2v3"
        ));

        // on K4 with v2's edges to later vertices both selected
        let k = LabeledGraph::new(
            4,
            [
                (0, 1, z(2)),
                (0, 2, z(3)),
                (0, 3, z(5)),
                (1, 2, z(6)),
                (1, 3, z(10)),
                (2, 3, z(15)),
            ],
        )
        .unwrap();
        let sel = minimal_selections(&k, 1)
            .unwrap()
            .into_iter()
            .find(|s| s.label_set() == set(&[3, 4]))
            .unwrap();
        let f = algorithm_construct(&k, &sel).unwrap();
        assert_eq!(f.zero_count(), 3);
        assert!(!f.values()[1].is_zero());
    }

    #[test]
    fn algorithm_rejects_bad_inputs() {
        let g = diamond();
        let s = minimal_selections(&g, 1).unwrap().remove(0);
        assert_eq!(algorithm_construct(&g, &s).unwrap_err(), SplineError::NotComplete);

        let k = g.completion();
        // all four edges off v1: {v2v3, v2v4, v3v4, ...} covers everything but is not minimal
        let big = Selection::from_label_set(&k, 1, &set(&[1, 2, 3, 4])).unwrap();
        assert!(!big.is_minimal());
        assert!(matches!(
            algorithm_construct(&k, &big).unwrap_err(),
            SplineError::NotMinimal(_)
        ));
    }

    #[test]
    fn completed_diamond_constructions_are_splines() {
        let k = diamond().completion();
        for s in minimal_selections(&k, 1).unwrap() {
            let f = algorithm_construct(&k, &s).unwrap();
            assert!(is_spline(&k, f.values()).unwrap());
            assert!(is_spline(&diamond(), f.values()).unwrap());
            assert!(f.zero_count() >= 1);
        }
        for s in minimal_selections(&k, 2).unwrap() {
            let f = algorithm_construct(&k, &s).unwrap();
            assert!(f.zero_count() >= 2);
        }
    }

    #[test]
    fn only_earlier_vertices_are_forced_to_zero() {
        // {v1v3, v1v4} hits every long zero trail of v2 and leaves v3, v4 unselected at v2
        let k = diamond().completion();
        let s = Selection::from_label_set(&k, 1, &set(&[1, 2])).unwrap();
        assert!(s.is_minimal());
        let f = algorithm_construct(&k, &s).unwrap();
        assert_eq!(f.values(), &zs(&[0, 2880, 2880, 2880])[..]);
        assert_eq!(f.zero_count(), 1);
    }

    #[test]
    fn induced_spline_scales_and_checks() {
        let k = diamond().completion();
        let sels = minimal_selections(&k, 1).unwrap();
        let a = &sels[0];
        let f = algorithm_construct(&k, a).unwrap();
        assert_eq!(induced_spline(&k, &f, a, a).unwrap(), f);

        let mut bigger = a.label_set();
        bigger.extend(k.incident(1).iter().map(|&(e, _)| e).filter(|&e| e != 0));
        let a_star = Selection::from_label_set(&k, 1, &bigger).unwrap();
        let lifted = induced_spline(&k, &f, a, &a_star).unwrap();
        assert!(is_spline(&k, lifted.values()).unwrap());

        assert_eq!(
            induced_spline(&k, &f, &a_star, a).unwrap_err(),
            SplineError::NotContained
        );
        let junk = Spline::unchecked(zs(&[0, 1, 0, 0]));
        assert!(matches!(
            induced_spline(&k, &junk, a, a).unwrap_err(),
            SplineError::UnexpectedValue { .. }
        ));
    }

    #[test]
    fn polynomial_triangle_invariants() {
        let p = |s: &str| IntPoly::parse(s).unwrap();
        let g = LabeledGraph::new(3, [(0, 1, p("x")), (0, 2, p("x+1")), (1, 2, p("x^2+x"))]).unwrap();
        let l = vertex_lcms(&g).unwrap();
        assert_eq!(l, vec![IntPoly::one(), p("x^2 + x"), p("x^2 + x")]);
        assert_eq!(q_g(&g).unwrap(), p("x^4 + 2*x^3 + x^2"));
    }
}
