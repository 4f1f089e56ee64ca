//! Edge-labeled simple graphs with a fixed vertex order, and trail enumeration.
//!
//! Vertices are addressed by 0-based position in the vertex order; edges by
//! their index in insertion (document) order. All enumerations iterate
//! adjacency lists in increasing edge index, which makes their output
//! lexicographic in the edge index sequence.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::ring::GcdDomain;

pub const DEFAULT_TRAIL_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("duplicate vertex name {0:?}")]
    DuplicateVertex(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex index {index} out of range for {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(String),
    #[error("duplicate edge {0}{1}")]
    DuplicateEdge(String, String),
    #[error("edge {0}{1} has a zero label")]
    ZeroLabel(String, String),
    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),
    #[error("trail enumeration exceeded the limit of {0} trails")]
    TrailLimitExceeded(usize),
    #[error("trail endpoints must differ")]
    SameEndpoints,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge<R> {
    pub u: usize,
    pub v: usize,
    pub label: R,
}

impl<R> Edge<R> {
    /// The endpoint opposite to `w`.
    pub fn other(&self, w: usize) -> usize {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }
}

/// A finite simple graph whose edges carry nonzero generators of principal ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph<R> {
    names: Vec<String>,
    edges: Vec<Edge<R>>,
    /// Per vertex: `(edge index, neighbour)` sorted by edge index.
    adjacency: Vec<Vec<(usize, usize)>>,
    pairs: HashMap<(usize, usize), usize>,
    trail_limit: usize,
}

fn pair_key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl<R: GcdDomain> LabeledGraph<R> {
    /// Builds a graph on vertices `v1..vn` from `(u, v, label)` triples.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize, R)>,
    ) -> Result<Self, GraphError> {
        let names = (1..=vertex_count).map(|i| format!("v{i}")).collect();
        Self::with_names(names, edges)
    }

    pub fn with_names(
        names: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize, R)>,
    ) -> Result<Self, GraphError> {
        if names.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(GraphError::DuplicateVertex(name.clone()));
            }
        }
        let n = names.len();
        let mut graph = LabeledGraph {
            adjacency: vec![Vec::new(); n],
            names,
            edges: Vec::new(),
            pairs: HashMap::new(),
            trail_limit: DEFAULT_TRAIL_LIMIT,
        };
        for (u, v, label) in edges {
            graph.push_edge(u, v, label)?;
        }
        Ok(graph)
    }

    fn push_edge(&mut self, u: usize, v: usize, label: R) -> Result<(), GraphError> {
        let n = self.names.len();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { index: w, count: n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(self.names[u].clone()));
        }
        let key = pair_key(u, v);
        if self.pairs.contains_key(&key) {
            return Err(GraphError::DuplicateEdge(
                self.names[u].clone(),
                self.names[v].clone(),
            ));
        }
        if label.is_zero() {
            return Err(GraphError::ZeroLabel(
                self.names[u].clone(),
                self.names[v].clone(),
            ));
        }
        let index = self.edges.len();
        self.pairs.insert(key, index);
        self.adjacency[u].push((index, v));
        self.adjacency[v].push((index, u));
        self.edges.push(Edge { u, v, label });
        Ok(())
    }

    pub fn with_trail_limit(mut self, limit: usize) -> Self {
        self.trail_limit = limit;
        self
    }

    pub fn trail_limit(&self) -> usize {
        self.trail_limit
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, vertex: usize) -> &str {
        &self.names[vertex]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn edges(&self) -> &[Edge<R>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &Edge<R> {
        &self.edges[index]
    }

    pub fn label(&self, index: usize) -> &R {
        &self.edges[index].label
    }

    /// Edge index joining `u` and `v`, if any.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.pairs.get(&pair_key(u, v)).copied()
    }

    /// `(edge index, neighbour)` pairs at `vertex`, by increasing edge index.
    pub fn incident(&self, vertex: usize) -> &[(usize, usize)] {
        &self.adjacency[vertex]
    }

    /// Human-readable edge name such as `v1v2`.
    pub fn edge_name(&self, index: usize) -> String {
        let e = &self.edges[index];
        format!("{}{}", self.names[e.u], self.names[e.v])
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edges.len() == n * (n - 1) / 2
    }

    pub fn check_vertex(&self, vertex: usize) -> Result<(), GraphError> {
        if vertex < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                index: vertex,
                count: self.vertex_count(),
            })
        }
    }

    /// Complete graph on the same ordered vertices. Existing edges keep
    /// their index and label; missing pairs are appended with label one in
    /// lexicographic `(u, v)` order.
    pub fn completion(&self) -> Self {
        let n = self.vertex_count();
        let mut out = self.clone();
        for u in 0..n {
            for v in (u + 1)..n {
                if out.edge_between(u, v).is_none() {
                    out.push_edge(u, v, R::one())
                        .expect("completion only adds missing pairs");
                }
            }
        }
        out
    }

    /// Reorders vertices: vertex `old` moves to position `perm[old]`.
    /// Edge indices and labels are preserved.
    pub fn permute_vertices(&self, perm: &[usize]) -> Result<Self, GraphError> {
        let n = self.vertex_count();
        let mut hit = vec![false; n];
        if perm.len() != n {
            return Err(GraphError::InvalidPermutation(n));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut hit[p], true) {
                return Err(GraphError::InvalidPermutation(n));
            }
        }
        let mut names = vec![String::new(); n];
        for (old, &new) in perm.iter().enumerate() {
            names[new] = self.names[old].clone();
        }
        let edges = self
            .edges
            .iter()
            .map(|e| (perm[e.u], perm[e.v], e.label.clone()));
        Ok(Self::with_names(names, edges)?.with_trail_limit(self.trail_limit))
    }

    /// True when every vertex can reach vertex 0.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(w) = stack.pop() {
            for &(_, next) in self.incident(w) {
                if !std::mem::replace(&mut seen[next], true) {
                    stack.push(next);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Builds a [`Trail`] from a start vertex and an edge sequence, checking
    /// that it is a walk with no repeated edge.
    pub fn trail(&self, start: usize, edges: Vec<usize>) -> Option<Trail<R>> {
        if edges.is_empty() || start >= self.vertex_count() {
            return None;
        }
        let mut at = start;
        let mut used = BTreeSet::new();
        for &e in &edges {
            let edge = self.edges.get(e)?;
            if !edge.touches(at) || !used.insert(e) {
                return None;
            }
            at = edge.other(at);
        }
        Some(Trail::new(self, start, at, edges))
    }

    /// All trails from `from` to `to`, in lexicographic order of their edge
    /// index sequences. Trails may pass through `to` and come back.
    pub fn enumerate_trails(&self, from: usize, to: usize) -> Result<Vec<Trail<R>>, GraphError> {
        self.check_vertex(from)?;
        self.check_vertex(to)?;
        if from == to {
            return Err(GraphError::SameEndpoints);
        }
        let mut search = TrailSearch {
            graph: self,
            start: from,
            used: vec![false; self.edge_count()],
            path: Vec::new(),
            out: Vec::new(),
        };
        search.all_trails(from, to)?;
        Ok(search.out)
    }

    /// Zero trails of `vertex`: trails ending at an earlier vertex, keeping
    /// only those whose edge set contains no other zero trail's edge set.
    ///
    /// A trail that revisits a vertex or passes an earlier vertex before its
    /// end has a strictly smaller zero trail inside it, so the surviving
    /// trails are exactly the simple paths whose interior avoids earlier
    /// vertices. The search walks those paths directly.
    pub fn zero_trails(&self, vertex: usize) -> Result<Vec<Trail<R>>, GraphError> {
        self.check_vertex(vertex)?;
        if vertex == 0 {
            return Err(GraphError::VertexOutOfRange {
                index: 0,
                count: self.vertex_count(),
            });
        }
        let mut search = TrailSearch {
            graph: self,
            start: vertex,
            used: vec![false; self.edge_count()],
            path: Vec::new(),
            out: Vec::new(),
        };
        let mut on_path = vec![false; self.vertex_count()];
        on_path[vertex] = true;
        search.zero_paths(vertex, &mut on_path)?;
        Ok(search.out)
    }
}

struct TrailSearch<'g, R> {
    graph: &'g LabeledGraph<R>,
    start: usize,
    used: Vec<bool>,
    path: Vec<usize>,
    out: Vec<Trail<R>>,
}

impl<R: GcdDomain> TrailSearch<'_, R> {
    fn emit(&mut self, end: usize) -> Result<(), GraphError> {
        if self.out.len() >= self.graph.trail_limit {
            return Err(GraphError::TrailLimitExceeded(self.graph.trail_limit));
        }
        self.out
            .push(Trail::new(self.graph, self.start, end, self.path.clone()));
        Ok(())
    }

    fn all_trails(&mut self, at: usize, target: usize) -> Result<(), GraphError> {
        for &(e, next) in self.graph.incident(at) {
            if self.used[e] {
                continue;
            }
            self.used[e] = true;
            self.path.push(e);
            if next == target {
                self.emit(next)?;
            }
            self.all_trails(next, target)?;
            self.path.pop();
            self.used[e] = false;
        }
        Ok(())
    }

    fn zero_paths(&mut self, at: usize, on_path: &mut [bool]) -> Result<(), GraphError> {
        for &(e, next) in self.graph.incident(at) {
            if on_path[next] {
                continue;
            }
            self.path.push(e);
            if next < self.start {
                self.emit(next)?;
            } else {
                on_path[next] = true;
                self.zero_paths(next, on_path)?;
                on_path[next] = false;
            }
            self.path.pop();
        }
        Ok(())
    }
}

/// A walk that repeats no edge, with the gcd of its labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Trail<R> {
    start: usize,
    end: usize,
    edges: Vec<usize>,
    gcd: R,
}

impl<R: GcdDomain> Trail<R> {
    fn new(graph: &LabeledGraph<R>, start: usize, end: usize, edges: Vec<usize>) -> Self {
        let gcd = crate::ring::gcd_all(edges.iter().map(|&e| graph.label(e)));
        Trail {
            start,
            end,
            edges,
            gcd,
        }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    /// Edge indices in traversal order.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Canonical gcd of the labels along the trail.
    pub fn gcd(&self) -> &R {
        &self.gcd
    }

    pub fn edge_set(&self) -> BTreeSet<usize> {
        self.edges.iter().copied().collect()
    }

    pub fn contains_edge(&self, edge: usize) -> bool {
        self.edges.contains(&edge)
    }

    /// Vertex sequence visited, `len() + 1` entries.
    pub fn vertices(&self, graph: &LabeledGraph<R>) -> Vec<usize> {
        let mut at = self.start;
        let mut out = vec![at];
        for &e in &self.edges {
            at = graph.edge(e).other(at);
            out.push(at);
        }
        out
    }

    /// Labels along the trail in traversal order.
    pub fn labels<'g>(&self, graph: &'g LabeledGraph<R>) -> Vec<&'g R> {
        self.edges.iter().map(|&e| graph.label(e)).collect()
    }
}
