//! Generalized splines on edge-labeled graphs over GCD domains.
//!
//! A spline on a graph whose edges carry ring elements is a vertex labeling
//! whose values differ, across every edge, by a multiple of that edge's
//! label. This crate computes
//!
//! * the per-vertex lcm invariants of zero trails and their product
//!   [`q_g`](spline::q_g),
//! * selections over long zero trails and the two-valued splines they
//!   induce on complete graphs ([`spline::algorithm_construct`]),
//! * the determinantal basis criterion ([`basis::check_basis`]), and
//! * over the integers, an independent flow-up basis computed as an integer
//!   lattice ([`basis::flowup_basis`]).
//!
//! ```
//! use gspline::prelude::*;
//!
//! let z = Integer::from;
//! let g = LabeledGraph::new(2, [(0, 1, z(7))]).unwrap();
//! assert_eq!(q_g(&g).unwrap(), z(7));
//! assert!(is_spline(&g, &[z(1), z(8)]).unwrap());
//! ```

pub mod basis;
pub mod cli;
pub mod document;
pub mod graph;
pub mod ring;
pub mod spline;

pub mod prelude {
    pub use crate::basis::{check_basis, check_q_divides, flowup_basis, membership, BasisVerdict};
    pub use crate::graph::{LabeledGraph, Trail};
    pub use crate::ring::{GcdDomain, IntPoly, Integer};
    pub use crate::spline::{
        algorithm_construct, is_spline, minimal_selections, q_g, top_spline, vertex_lcms,
        zero_trail_lcm, Selection, Spline,
    };
}
