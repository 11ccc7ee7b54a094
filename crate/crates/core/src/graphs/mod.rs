//! Directed multigraphs, weighted Laplacians, spanning trees, cut sets and
//! graphical Green's functions.

mod catalog;
mod cuts;
mod laplacian;
mod linalg;

pub use catalog::connected_multigraphs;
pub use cuts::{cut_sets, green_function_by_cuts, laplacian_inverse_by_cuts};
pub use laplacian::{
    full_laplacian, green_function, kirchhoff_det, laplacian_inverse, tree_polynomial, weighted_laplacian,
};
pub use linalg::{determinant, invert, RatMatrix};

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::exactalg::{parse_rational, Poly, RatFun, Rational, Var};
use crate::{Error, Result};

/// An edge with an explicit identifier and orientation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: String,
    pub tail: String,
    pub head: String,
}

/// A directed multigraph. Vertex and edge orders are significant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectedGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl DirectedGraph {
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>) -> Result<DirectedGraph> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut ids = BTreeSet::new();
        for e in &edges {
            if !ids.insert(e.id.as_str()) {
                return Err(Error::DuplicateEdge(e.id.clone()));
            }
            for end in [&e.tail, &e.head] {
                if !seen.contains(end.as_str()) {
                    return Err(Error::MissingVertex(end.clone()));
                }
            }
            if e.tail == e.head {
                return Err(Error::SelfLoop(e.tail.clone()));
            }
        }
        Ok(DirectedGraph { vertices, edges })
    }

    /// Convenience constructor from `(id, tail, head)` triples.
    pub fn from_triples(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<DirectedGraph> {
        DirectedGraph::new(
            vertices.iter().map(|v| v.to_string()).collect(),
            edges
                .iter()
                .map(|(id, t, h)| Edge { id: id.to_string(), tail: t.to_string(), head: h.to_string() })
                .collect(),
        )
    }

    pub fn from_json(text: &str) -> Result<DirectedGraph> {
        let raw: DirectedGraph = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        DirectedGraph::new(raw.vertices, raw.edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_index(&self, v: &str) -> Option<usize> {
        self.vertices.iter().position(|w| w == v)
    }

    fn endpoints(&self, k: usize) -> (usize, usize) {
        let e = &self.edges[k];
        (self.vertex_index(&e.tail).expect("validated"), self.vertex_index(&e.head).expect("validated"))
    }

    /// `ρ[e][i]`: `+1` at the tail, `−1` at the head.
    pub fn incidence_matrix(&self) -> Vec<Vec<i32>> {
        (0..self.edges.len())
            .map(|k| {
                let (t, h) = self.endpoints(k);
                let mut row = vec![0; self.vertices.len()];
                row[t] = 1;
                row[h] = -1;
                row
            })
            .collect()
    }

    /// Number of connected components of the spanning subgraph whose edges
    /// are selected by `mask`, together with the component label of each
    /// vertex.
    pub(crate) fn components(&self, mask: u64) -> (usize, Vec<usize>) {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for k in 0..self.edges.len() {
            if mask >> k & 1 == 1 {
                let (t, h) = self.endpoints(k);
                let (a, b) = (find(&mut parent, t), find(&mut parent, h));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut labels = vec![0; n];
        let mut roots: BTreeMap<usize, usize> = BTreeMap::new();
        for (v, label) in labels.iter_mut().enumerate() {
            let r = find(&mut parent, v);
            let next = roots.len();
            *label = *roots.entry(r).or_insert(next);
        }
        (roots.len(), labels)
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.edges.len() >= 64 {
            u64::MAX
        } else {
            (1u64 << self.edges.len()) - 1
        }
    }

    pub fn is_connected(&self) -> bool {
        self.vertices.is_empty() || self.components(self.full_mask()).0 == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::DisconnectedGraph)
        }
    }

    /// All spanning trees as edge-id sets, as masks in increasing order.
    pub(crate) fn spanning_tree_masks(&self) -> Result<Vec<u64>> {
        self.require_connected()?;
        let n = self.vertices.len();
        let m = self.edges.len();
        assert!(m < 64, "edge count too large for subset enumeration");
        let mut out = Vec::new();
        for mask in 0..(1u64 << m) {
            if mask.count_ones() as usize + 1 == n && self.components(mask).0 == 1 {
                out.push(mask);
            }
        }
        Ok(out)
    }

    pub fn spanning_trees(&self) -> Result<Vec<BTreeSet<String>>> {
        Ok(self.spanning_tree_masks()?.into_iter().map(|m| self.mask_to_ids(m)).collect())
    }

    pub(crate) fn mask_to_ids(&self, mask: u64) -> BTreeSet<String> {
        (0..self.edges.len()).filter(|k| mask >> k & 1 == 1).map(|k| self.edges[k].id.clone()).collect()
    }
}

// ============================================================================
// Edge weights
// ============================================================================

/// A single edge weight: a positive rational or the symbol `t_e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Weight {
    Value(Rational),
    Symbolic,
}

/// Weights for every edge of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeWeights {
    weights: BTreeMap<String, Weight>,
}

impl EdgeWeights {
    /// Every edge gets its own symbol `t_e`.
    pub fn symbolic(g: &DirectedGraph) -> EdgeWeights {
        EdgeWeights { weights: g.edges.iter().map(|e| (e.id.clone(), Weight::Symbolic)).collect() }
    }

    pub fn uniform(g: &DirectedGraph, value: Rational) -> Result<EdgeWeights> {
        EdgeWeights::new(g, g.edges.iter().map(|e| (e.id.clone(), Weight::Value(value.clone()))).collect())
    }

    pub fn new(g: &DirectedGraph, weights: BTreeMap<String, Weight>) -> Result<EdgeWeights> {
        for e in &g.edges {
            match weights.get(&e.id) {
                None => {
                    return Err(Error::InvalidWeight { edge: e.id.clone(), reason: "missing".into() });
                }
                Some(Weight::Value(r)) if *r <= Rational::from_integer(0.into()) => {
                    return Err(Error::InvalidWeight { edge: e.id.clone(), reason: "must be positive".into() });
                }
                _ => {}
            }
        }
        for id in weights.keys() {
            if !g.edges.iter().any(|e| &e.id == id) {
                return Err(Error::InvalidWeight { edge: id.clone(), reason: "no such edge".into() });
            }
        }
        Ok(EdgeWeights { weights })
    }

    /// Parses `{"e1":"3/2","e2":"t"}`.
    pub fn from_json(g: &DirectedGraph, text: &str) -> Result<EdgeWeights> {
        let raw: BTreeMap<String, String> = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        let mut weights = BTreeMap::new();
        for (edge, value) in raw {
            let w = if value.trim() == "t" {
                Weight::Symbolic
            } else {
                Weight::Value(parse_rational(&value).ok_or_else(|| Error::InvalidWeight {
                    edge: edge.clone(),
                    reason: format!("cannot parse {value:?}"),
                })?)
            };
            weights.insert(edge, w);
        }
        EdgeWeights::new(g, weights)
    }

    /// The weight as a polynomial: a constant or the variable `t_e`.
    pub fn poly(&self, edge: &str) -> Poly {
        match &self.weights[edge] {
            Weight::Value(r) => Poly::constant(r.clone()),
            Weight::Symbolic => Poly::var(Var::t(edge)),
        }
    }

    /// `1 / t_e` as a rational function.
    pub fn reciprocal(&self, edge: &str) -> RatFun {
        RatFun::new(Poly::one(), [(self.poly(edge), 1)])
    }

    /// Substitution sending every symbolic `t_e` to a rational value.
    pub fn symbol_values(&self, values: &BTreeMap<String, Rational>) -> BTreeMap<Var, Rational> {
        values.iter().map(|(e, r)| (Var::t(e), r.clone())).collect()
    }
}
