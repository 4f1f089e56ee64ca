//! JSON documents for graphs and splines, and the report shapes emitted by
//! the command line.
//!
//! ```json
//! {"domain": "int", "vertices": ["v1", "v2"], "edges": [{"u": "v1", "v": "v2", "label": "7"}]}
//! {"values": ["1", "8"]}
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::basis::BasisVerdict;
use crate::graph::{GraphError, LabeledGraph, Trail};
use crate::ring::{Domain, GcdDomain, IntPoly, Integer, ParseError};
use crate::spline::Selection;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("label of edge {edge}: {source}")]
    Label { edge: String, source: ParseError },
    #[error("value {index}: {source}")]
    Value { index: usize, source: ParseError },
    #[error("document domain is {found}, expected {expected}")]
    DomainMismatch { expected: Domain, found: Domain },
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        DocumentError::Json(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDocument {
    pub u: String,
    pub v: String,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub domain: Domain,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDocument>,
}

impl GraphDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_graph<R: GcdDomain>(graph: &LabeledGraph<R>) -> Self {
        GraphDocument {
            domain: R::DOMAIN,
            vertices: graph.names().to_vec(),
            edges: graph
                .edges()
                .iter()
                .map(|e| EdgeDocument {
                    u: graph.name(e.u).to_string(),
                    v: graph.name(e.v).to_string(),
                    label: e.label.to_string(),
                })
                .collect(),
        }
    }

    /// Graph over the statically chosen domain `R`.
    pub fn to_graph<R: GcdDomain>(&self) -> Result<LabeledGraph<R>, DocumentError> {
        if self.domain != R::DOMAIN {
            return Err(DocumentError::DomainMismatch {
                expected: R::DOMAIN,
                found: self.domain,
            });
        }
        let index = |name: &str| {
            self.vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
        };
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let label = R::parse(&e.label).map_err(|source| DocumentError::Label {
                edge: format!("{}{}", e.u, e.v),
                source,
            })?;
            edges.push((index(&e.u)?, index(&e.v)?, label));
        }
        Ok(LabeledGraph::with_names(self.vertices.clone(), edges)?)
    }

    pub fn to_any_graph(&self) -> Result<AnyGraph, DocumentError> {
        Ok(match self.domain {
            Domain::Int => AnyGraph::Int(self.to_graph()?),
            Domain::IntPoly => AnyGraph::Poly(self.to_graph()?),
        })
    }
}

/// A graph whose domain is only known at run time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Int(LabeledGraph<Integer>),
    Poly(LabeledGraph<IntPoly>),
}

impl AnyGraph {
    pub fn domain(&self) -> Domain {
        match self {
            AnyGraph::Int(_) => Domain::Int,
            AnyGraph::Poly(_) => Domain::IntPoly,
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            AnyGraph::Int(g) => g.vertex_count(),
            AnyGraph::Poly(g) => g.vertex_count(),
        }
    }

    pub fn with_trail_limit(self, limit: usize) -> Self {
        match self {
            AnyGraph::Int(g) => AnyGraph::Int(g.with_trail_limit(limit)),
            AnyGraph::Poly(g) => AnyGraph::Poly(g.with_trail_limit(limit)),
        }
    }
}

/// Parses a graph document straight from JSON text.
pub fn load_graph(text: &str) -> Result<AnyGraph, DocumentError> {
    GraphDocument::from_json(text)?.to_any_graph()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplineDocument {
    pub values: Vec<String>,
}

impl SplineDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_values<R: GcdDomain>(values: &[R]) -> Self {
        SplineDocument {
            values: values.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn parse_values<R: GcdDomain>(&self) -> Result<Vec<R>, DocumentError> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, s)| {
                R::parse(s).map_err(|source| DocumentError::Value {
                    index: i + 1,
                    source,
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub determinant: String,
    pub q_g: String,
    pub quotient: Option<String>,
    pub is_basis: bool,
}

impl<R: GcdDomain> From<&BasisVerdict<R>> for BasisReport {
    fn from(v: &BasisVerdict<R>) -> Self {
        BasisReport {
            determinant: v.determinant.to_string(),
            q_g: v.q_g.to_string(),
            quotient: v.quotient.as_ref().map(ToString::to_string),
            is_basis: v.is_basis,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrailReport {
    pub vertices: Vec<String>,
    pub labels: Vec<String>,
    pub gcd: String,
}

impl TrailReport {
    pub fn new<R: GcdDomain>(graph: &LabeledGraph<R>, trail: &Trail<R>) -> Self {
        TrailReport {
            vertices: trail
                .vertices(graph)
                .into_iter()
                .map(|v| graph.name(v).to_string())
                .collect(),
            labels: trail.labels(graph).iter().map(ToString::to_string).collect(),
            gcd: trail.gcd().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRef {
    pub edge: String,
    pub label: String,
}

impl EdgeRef {
    pub fn new<R: GcdDomain>(graph: &LabeledGraph<R>, edge: usize) -> Self {
        EdgeRef {
            edge: graph.edge_name(edge),
            label: graph.label(edge).to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoiceReport {
    pub trail: TrailReport,
    pub chosen: EdgeRef,
    pub factor: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelectionReport {
    pub id: usize,
    /// 1-based vertex position.
    pub vertex: usize,
    pub label_set: Vec<EdgeRef>,
    pub assignment: Vec<ChoiceReport>,
    pub product: String,
    pub value: String,
}

impl SelectionReport {
    pub fn new<R: GcdDomain>(graph: &LabeledGraph<R>, id: usize, selection: &Selection<R>) -> Self {
        SelectionReport {
            id,
            vertex: selection.vertex() + 1,
            label_set: selection
                .label_set()
                .into_iter()
                .map(|e| EdgeRef::new(graph, e))
                .collect(),
            assignment: selection
                .trails()
                .iter()
                .zip(selection.choices())
                .zip(selection.factors())
                .map(|((t, &e), f)| ChoiceReport {
                    trail: TrailReport::new(graph, t),
                    chosen: EdgeRef::new(graph, e),
                    factor: f.to_string(),
                })
                .collect(),
            product: selection.product().to_string(),
            value: selection.scaled_value().to_string(),
        }
    }
}
